#include <doctest.h>

#include <numeric>

#include "chainring/error.hpp"
#include "chainring/number_theory.hpp"

using namespace chainring;

TEST_CASE("primes and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(4294967291ULL));

  auto pp = as_prime_power(27);
  REQUIRE(pp);
  CHECK(pp->p == 3);
  CHECK(pp->k == 3);
  CHECK_FALSE(as_prime_power(12));
  CHECK_FALSE(as_prime_power(1));
  CHECK(as_prime_power(2)->k == 1);

  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("divisors, totient and multiplicative order agree with brute force") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::vector<std::uint64_t> divs;
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k == 0) divs.push_back(k);
      if (std::gcd(k, n) == 1) ++phi;
    }
    CHECK(divisors(n) == divs);
    CHECK(euler_phi(n) == phi);
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    for (std::uint64_t d = 1; d <= 60; ++d) {
      if (std::gcd(q, d) != 1) {
        CHECK_THROWS_AS(mult_order(q, d), Error);
        continue;
      }
      std::uint64_t k = 1, v = q % d;
      while (v != 1 % d) {
        v = v * q % d;
        ++k;
      }
      CHECK(mult_order(q, d) == k);
    }
  }
  CHECK(mult_order(3, 2) == 1);
  CHECK(mult_order(2, 7) == 3);
  CHECK(euler_phi(3) == 2);
}

TEST_CASE("binomial matches Pascal's triangle") {
  std::vector<std::vector<BigInt>> pascal(61);
  for (std::size_t a = 0; a <= 60; ++a) {
    pascal[a].assign(a + 1, 1);
    for (std::size_t b = 1; b < a; ++b) pascal[a][b] = pascal[a - 1][b - 1] + pascal[a - 1][b];
  }
  for (std::uint64_t a = 0; a <= 60; ++a) {
    for (std::uint64_t b = 0; b <= a; ++b) CHECK(binomial(a, b) == pascal[a][b]);
    CHECK(binomial(a, a + 1) == 0);
  }
  CHECK(binomial(2, 1) == 2);
}

TEST_CASE("powers") {
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
  CHECK(pow_within(10, 6, 1'000'000) == 1'000'000u);
  CHECK_FALSE(pow_within(10, 7, 1'000'000));
  CHECK(big_pow(2, 100) == (BigInt(1) << 100));
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(3, 4, 5) == 1);
  CHECK(pow_mod(0xFFFFFFFFFFFFFFC5ULL - 1, 2, 0xFFFFFFFFFFFFFFC5ULL) == 1);
}
