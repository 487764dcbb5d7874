#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chainring {

/// A commutative ring whose elements are small integer codes (ChainRing, ProductRing).
template <class R>
concept CodeRing = requires(const R& ring, typename R::Code a) {
  { ring.add(a, a) } -> std::same_as<typename R::Code>;
  { ring.sub(a, a) } -> std::same_as<typename R::Code>;
  { ring.mul(a, a) } -> std::same_as<typename R::Code>;
  { ring.neg(a) } -> std::same_as<typename R::Code>;
  { ring.zero_code() } -> std::same_as<typename R::Code>;
  { ring.one_code() } -> std::same_as<typename R::Code>;
};

/// Laplace expansion along successive rows, memoized over column subsets: O(n 2^n) ring ops,
/// no division. `memo` is scratch space reused across calls.
template <CodeRing R>
typename R::Code subset_determinant(const R& ring, std::span<const typename R::Code> m, std::size_t n,
                                    std::vector<typename R::Code>& memo) {
  using Code = typename R::Code;
  const std::size_t full = std::size_t{1} << n;
  memo.resize(full);
  memo[0] = ring.one_code();
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Code acc = ring.zero_code();
    std::size_t pos = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const Code term = ring.mul(m[row * n + col], memo[mask & ~(std::size_t{1} << col)]);
      acc = ((row + pos) & 1) ? ring.sub(acc, term) : ring.add(acc, term);
      ++pos;
    }
    memo[mask] = acc;
  }
  return memo[full - 1];
}

/// Berkowitz characteristic-polynomial recurrence: O(n^4) ring ops, no division.
template <CodeRing R>
typename R::Code berkowitz_determinant(const R& ring, std::span<const typename R::Code> m, std::size_t n) {
  using Code = typename R::Code;
  auto at = [&](std::size_t i, std::size_t j) { return m[i * n + j]; };
  std::vector<Code> coeffs{ring.one_code(), ring.neg(at(0, 0))};
  std::vector<Code> toeplitz, column, next;
  for (std::size_t r = 1; r < n; ++r) {
    toeplitz.assign(r + 2, ring.zero_code());
    toeplitz[0] = ring.one_code();
    toeplitz[1] = ring.neg(at(r, r));
    // column runs through A_r^k S, where S is the new column above the diagonal.
    column.resize(r);
    for (std::size_t i = 0; i < r; ++i) column[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Code dot = ring.zero_code();
      for (std::size_t j = 0; j < r; ++j) dot = ring.add(dot, ring.mul(at(r, j), column[j]));
      toeplitz[k + 2] = ring.neg(dot);
      if (k + 1 < r) {
        next.assign(r, ring.zero_code());
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] = ring.add(next[i], ring.mul(at(i, j), column[j]));
        }
        column.swap(next);
      }
    }
    next.assign(r + 2, ring.zero_code());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        next[i] = ring.add(next[i], ring.mul(toeplitz[i - j], coeffs[j]));
      }
    }
    coeffs.swap(next);
  }
  return (n & 1) ? ring.neg(coeffs[n]) : coeffs[n];
}

inline constexpr std::size_t kSubsetDeterminantMaxN = 8;

template <CodeRing R>
typename R::Code determinant(const R& ring, std::span<const typename R::Code> m, std::size_t n) {
  if (n <= kSubsetDeterminantMaxN) {
    std::vector<typename R::Code> memo;
    return subset_determinant(ring, m, n, memo);
  }
  return berkowitz_determinant(ring, m, n);
}

}  // namespace chainring
