#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainring {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
};

bool is_prime(std::uint64_t n);

/// Decomposes n = p^k with k >= 1; empty when n is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp; throws TooLarge when the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> pow_within(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// nt_divisors / nt_euler_phi / nt_mult_order / nt_binomial
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Least k >= 1 with q^k == 1 (mod d). Throws NotCoprime when gcd(q, d) != 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t d);

BigInt binomial(std::uint64_t a, std::uint64_t b);

}  // namespace chainring
