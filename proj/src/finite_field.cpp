#include "chainring/finite_field.hpp"

#include <numeric>

#include "chainring/error.hpp"
#include "chainring/number_theory.hpp"

namespace chainring {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      auto& c = a[shift + i];
      c = static_cast<std::uint32_t>((c + (p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return out;
}

Poly code_to_poly(std::uint64_t code, std::uint32_t p, unsigned len) {
  Poly out(len);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "irreducibility test needs a monic polynomial of degree >= 1");
  }
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = code_to_poly(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "field degree must be >= 1");
  auto q = pow_within(p, r, kMaxOrder);
  if (!q) {
    throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(r) + " exceeds the field size bound");
  }

  FiniteField f;
  f.p_ = static_cast<std::uint32_t>(p);
  f.r_ = r;
  f.q_ = static_cast<std::uint32_t>(*q);

  // Least monic irreducible, ordered by the code of its lower coefficients.
  const std::uint64_t candidates = *q;
  for (std::uint64_t low = 0; low < candidates; ++low) {
    Poly m = code_to_poly(low, f.p_, r);
    m.push_back(1);
    if (is_irreducible_mod_p(m, f.p_)) {
      f.modulus_ = std::move(m);
      break;
    }
  }
  if (f.modulus_.empty()) throw Error(ErrorCode::InternalConsistency, "no irreducible modulus found");

  auto slow_mul = [&](Code a, Code b) {
    Poly prod = poly_mod(poly_mul(code_to_poly(a, f.p_, r), code_to_poly(b, f.p_, r), f.p_), f.modulus_, f.p_);
    return f.from_digits(prod);
  };

  // Smallest code whose order is exactly q - 1.
  const std::uint64_t group = f.q_ - 1;
  const auto group_primes = prime_factors(group);
  auto slow_pow = [&](Code a, std::uint64_t e) {
    Code result = 1, base = a;
    while (e) {
      if (e & 1) result = slow_mul(result, base);
      base = slow_mul(base, base);
      e >>= 1;
    }
    return result;
  };
  for (Code g = 1; g < f.q_; ++g) {
    bool primitive = true;
    for (auto l : group_primes) {
      if (slow_pow(g, group / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.generator_ = g;
      break;
    }
  }
  if (f.generator_ == 0) throw Error(ErrorCode::InternalConsistency, "no primitive element found");

  f.exp_.resize(2 * group);
  f.log_.assign(f.q_, 0);
  Code power = 1;
  for (std::uint64_t k = 0; k < group; ++k) {
    f.exp_[k] = power;
    f.exp_[k + group] = power;
    f.log_[power] = static_cast<std::uint32_t>(k);
    power = slow_mul(power, f.generator_);
  }
  if (power != 1) throw Error(ErrorCode::InternalConsistency, "generator order mismatch");
  return f;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (r_ == 1) {
    const Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Code out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Code out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::NotAUnit, "0 has no inverse in F_" + std::to_string(q_));
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

std::uint64_t FiniteField::multiplicative_order(Code a) const {
  if (a == 0) throw Error(ErrorCode::NotAUnit, "0 has no multiplicative order");
  const std::uint64_t group = q_ - 1;
  const std::uint64_t l = log_[a];
  return group / std::gcd(group, l == 0 ? group : l);
}

FiniteField::Code FiniteField::from_integer(std::int64_t k) const {
  std::int64_t m = k % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Code>(m);
}

std::vector<std::uint32_t> FiniteField::digits(Code a) const { return code_to_poly(a, p_, r_); }

FiniteField::Code FiniteField::from_digits(const std::vector<std::uint32_t>& digits) const {
  Code out = 0, scale = 1;
  for (unsigned i = 0; i < r_; ++i) {
    const std::uint32_t d = i < digits.size() ? digits[i] % p_ : 0;
    out += d * scale;
    scale *= p_;
  }
  return out;
}

FiniteField::Code FiniteField::encode(const FieldElement& x) const {
  if (x.coefficients.size() > r_) throw Error(ErrorCode::InvalidArgument, "too many field coefficients");
  for (auto c : x.coefficients) {
    if (c >= p_) throw Error(ErrorCode::InvalidArgument, "field coefficient out of range");
  }
  return from_digits(x.coefficients);
}

std::string FiniteField::to_string(Code a) const {
  if (r_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::string out;
  for (unsigned i = 0; i < r_; ++i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace chainring
