#include "chainring/number_theory.hpp"

#include <numeric>

#include "chainring/error.hpp"

namespace chainring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  PrimePower pp{factors.front(), 0};
  while (n > 1) {
    n /= pp.p;
    ++pp.k;
  }
  return pp;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  auto r = pow_within(base, exp, UINT64_MAX);
  if (!r) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(base) + "^" + std::to_string(exp) + " overflows 64 bits");
  }
  return *r;
}

std::optional<std::uint64_t> pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
    if (result == 0) return 0;
  }
  if (result > limit) return std::nullopt;
  return result;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "divisors of 0");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      low.push_back(d);
      if (d != n / d) high.push_back(n / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi(0)");
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t mult_order(std::uint64_t q, std::uint64_t d) {
  if (d == 0 || std::gcd(q, d) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "ord_" + std::to_string(d) + "(" + std::to_string(q) + ") needs gcd(q, d) = 1");
  }
  if (d == 1) return 1;
  // ord divides phi(d): strip prime factors while the power stays 1.
  std::uint64_t order = euler_phi(d);
  for (auto p : prime_factors(order)) {
    while (order % p == 0 && pow_mod(q, order / p, d) == 1) order /= p;
  }
  return order;
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    result *= a + 1 - i;
    result /= i;
  }
  return result;
}

}  // namespace chainring
