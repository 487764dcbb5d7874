#pragma once

// Brute-force reference models used only by the tests. Nothing here shares code with the
// library: rings are plain integer vectors, determinants are Leibniz sums over permutations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Elem = std::vector<long>;

inline long mod(long a, long m) { return ((a % m) + m) % m; }

/// Z/N with single-entry elements.
struct IntegerRing {
  long N;
  long p;  // the prime with N = p^e

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (long a = 0; a < N; ++a) out.push_back({a});
    return out;
  }
  Elem zero() const { return {0}; }
  Elem one() const { return {1 % N}; }
  Elem add(const Elem& a, const Elem& b) const { return {mod(a[0] + b[0], N)}; }
  Elem neg(const Elem& a) const { return {mod(-a[0], N)}; }
  Elem mul(const Elem& a, const Elem& b) const { return {mod(a[0] * b[0], N)}; }
  int valuation(const Elem& a) const {
    if (a[0] == 0) return exponent();
    int s = 0;
    for (long x = a[0]; x % p == 0; x /= p) ++s;
    return s;
  }
  int exponent() const {
    int e = 0;
    for (long x = N; x > 1; x /= p) ++e;
    return e;
  }
};

/// Polynomials of degree < r with coefficients mod m, reduced by a monic polynomial of degree r.
/// With m = p this is F_{p^r}; with m = p^e and a lifted irreducible it is GR(p^e, r).
struct PolyQuotient {
  long m;
  long p;
  std::vector<long> modulus;  // low first, length r + 1, leading 1

  std::size_t r() const { return modulus.size() - 1; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    long total = 1;
    for (std::size_t i = 0; i < r(); ++i) total *= m;
    for (long k = 0; k < total; ++k) {
      Elem a(r());
      long x = k;
      for (auto& c : a) {
        c = x % m;
        x /= m;
      }
      out.push_back(a);
    }
    return out;
  }
  Elem zero() const { return Elem(r(), 0); }
  Elem one() const {
    Elem a(r(), 0);
    a[0] = 1 % m;
    return a;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c(r());
    for (std::size_t i = 0; i < r(); ++i) c[i] = mod(a[i] + b[i], m);
    return c;
  }
  Elem neg(const Elem& a) const {
    Elem c(r());
    for (std::size_t i = 0; i < r(); ++i) c[i] = mod(-a[i], m);
    return c;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<long> prod(2 * r(), 0);
    for (std::size_t i = 0; i < r(); ++i)
      for (std::size_t j = 0; j < r(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], m);
    for (std::size_t k = prod.size(); k-- > r();) {
      const long c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= r(); ++i) prod[k - r() + i] = mod(prod[k - r() + i] - c * modulus[i], m);
    }
    return Elem(prod.begin(), prod.begin() + static_cast<long>(r()));
  }
  /// p-adic valuation of the element (min over coefficients); meaningful for Galois rings.
  int valuation(const Elem& a) const {
    int e = 0;
    for (long x = m; x > 1; x /= p) ++e;
    int best = e;
    for (long c : a) {
      if (c == 0) continue;
      int s = 0;
      for (long x = c; x % p == 0; x /= p) ++s;
      best = std::min(best, s);
    }
    return best;
  }
};

/// Monic polynomials over F_p of degree r with no factor of lower degree, by trial multiplication.
inline std::vector<long> some_irreducible(long p, std::size_t r) {
  auto all_monic = [p](std::size_t d) {
    std::vector<std::vector<long>> out;
    long total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (long k = 0; k < total; ++k) {
      std::vector<long> f(d + 1, 0);
      long x = k;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = x % p;
        x /= p;
      }
      f[d] = 1;
      out.push_back(f);
    }
    return out;
  };
  auto multiply = [p](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p);
    return c;
  };
  for (const auto& f : all_monic(r)) {
    bool reducible = false;
    for (std::size_t d = 1; d <= r / 2 && !reducible; ++d) {
      for (const auto& g : all_monic(d)) {
        for (const auto& h : all_monic(r - d)) {
          if (multiply(g, h) == f) {
            reducible = true;
            break;
          }
        }
        if (reducible) break;
      }
    }
    if (!reducible) return f;
  }
  return {};
}

/// F[u]/(u^e) over a field model F, elements as e stacked field elements.
template <class Field>
struct TruncatedPoly {
  Field field;
  int e;

  std::size_t width() const { return field.zero().size(); }
  Elem slot(const Elem& a, int i) const {
    return Elem(a.begin() + static_cast<long>(i * width()), a.begin() + static_cast<long>((i + 1) * width()));
  }
  void put(Elem& a, int i, const Elem& v) const { std::copy(v.begin(), v.end(), a.begin() + static_cast<long>(i * width())); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out{Elem{}};
    const auto base = field.elements();
    for (int i = 0; i < e; ++i) {
      std::vector<Elem> next;
      for (const auto& prefix : out)
        for (const auto& c : base) {
          Elem a = prefix;
          a.insert(a.end(), c.begin(), c.end());
          next.push_back(a);
        }
      out = std::move(next);
    }
    return out;
  }
  Elem zero() const { return Elem(width() * e, 0); }
  Elem one() const {
    Elem a = zero();
    put(a, 0, field.one());
    return a;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < e; ++i) put(c, i, field.add(slot(a, i), slot(b, i)));
    return c;
  }
  Elem neg(const Elem& a) const {
    Elem c = zero();
    for (int i = 0; i < e; ++i) put(c, i, field.neg(slot(a, i)));
    return c;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < e; ++i)
      for (int j = 0; i + j < e; ++j) put(c, i + j, field.add(slot(c, i + j), field.mul(slot(a, i), slot(b, j))));
    return c;
  }
  int valuation(const Elem& a) const {
    for (int i = 0; i < e; ++i)
      if (slot(a, i) != field.zero()) return i;
    return e;
  }
};

/// Leibniz expansion: sum over all permutations with explicit sign.
template <class Ring>
Elem leibniz_det(const Ring& R, const std::vector<std::vector<Elem>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Elem total = R.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Elem term = R.one();
    for (std::size_t i = 0; i < n; ++i) term = R.mul(term, m[i][perm[i]]);
    total = R.add(total, inversions % 2 ? R.neg(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

enum class Shape { Diagonal, Circulant };

/// det -> number of matrices of the shape with that determinant.
template <class Ring>
std::map<Elem, std::uint64_t> tally(const Ring& R, std::size_t n, Shape shape) {
  const auto elems = R.elements();
  std::map<Elem, std::uint64_t> out;
  for (const auto& a : elems) out[a] = 0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n, R.zero()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (shape == Shape::Circulant) {
          m[i][j] = elems[idx[(j + n - i) % n]];
        } else if (i == j) {
          m[i][j] = elems[idx[i]];
        }
      }
    }
    ++out[leibniz_det(R, m)];
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == elems.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

/// For each valuation s, the sorted list of counts over elements of valuation s.
template <class Ring>
std::map<int, std::vector<std::uint64_t>> counts_by_valuation(const Ring& R, const std::map<Elem, std::uint64_t>& t) {
  std::map<int, std::vector<std::uint64_t>> out;
  for (const auto& [a, c] : t) out[R.valuation(a)].push_back(c);
  for (auto& [s, v] : out) std::sort(v.begin(), v.end());
  return out;
}

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace oracle
