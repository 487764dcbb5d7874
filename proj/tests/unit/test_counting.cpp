#include <doctest.h>

#include "../support/oracles.hpp"
#include "chainring/counting.hpp"
#include "chainring/error.hpp"

using namespace chainring;

namespace {

BigInt d(std::uint64_t q, unsigned e, unsigned n, DetClass c) { return *d_count({q, e, n, c}).value; }

CountResult c(std::uint64_t q, unsigned e, unsigned n, DetClass cls) { return c_count({q, e, n, cls}); }

const std::vector<std::uint64_t> kPrimePowers = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

// F_q[u]/u^e as an oracle ring; q = p^r.
auto naive_chain_ring(long p, int r, int e) {
  oracle::PolyQuotient field{p, p, oracle::some_irreducible(p, static_cast<std::size_t>(r))};
  return oracle::TruncatedPoly<oracle::PolyQuotient>{field, e};
}

}  // namespace

TEST_CASE("determinant classes") {
  CHECK(to_string(DetClass::gamma_pow(2)) == "gamma^2");
  CHECK(parse_det_class("gamma^3") == DetClass::gamma_pow(3));
  CHECK(parse_det_class("unit") == DetClass::unit());
  CHECK(parse_det_class("zero") == DetClass::zero());
  CHECK_THROWS_AS(parse_det_class("gamma^0"), Error);
  CHECK_THROWS_AS(parse_det_class("gamma"), Error);
  CHECK(DetClass::of_valuation(0, 3) == DetClass::unit());
  CHECK(DetClass::of_valuation(3, 3) == DetClass::zero());
  CHECK(DetClass::unit() < DetClass::gamma_pow(1));
  CHECK(DetClass::gamma_pow(1) < DetClass::gamma_pow(2));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(d_count({12, 1, 2, DetClass::unit()}), Error);
  try {
    d_count({12, 1, 2, DetClass::unit()});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimePower);
  }
  CHECK_THROWS_AS(d_count({4, 2, 2, DetClass::gamma_pow(2)}), Error);
  CHECK_THROWS_AS(d_count({4, 0, 2, DetClass::unit()}), Error);
  CHECK_THROWS_AS(d_count({4, 1, 0, DetClass::unit()}), Error);
}

TEST_CASE("diagonal closed forms: worked values") {
  CHECK(d(2, 2, 2, DetClass::zero()) == 8);
  CHECK(d(2, 3, 2, DetClass::gamma_pow(1)) == 8);
  CHECK(d(2, 3, 2, DetClass::zero()) == 20);
  CHECK(d(2, 2, 3, DetClass::unit()) == 4);
  CHECK(d(3, 1, 2, DetClass::unit()) == 2);
  CHECK(d(2, 2, 2, DetClass::gamma_pow(1)) == 4);
  for (auto q : kPrimePowers)
    for (unsigned e = 1; e <= 4; ++e) CHECK(d(q, e, 1, DetClass::zero()) == 1);

  CHECK(d_zero_recursive(2, 2, 2) == 8);
  CHECK(d_zero_recursive(3, 1, 2) == 5);
  CHECK(d_zero_recursive(7, 3, 1) == 1);

  CHECK(nsd_count(3, 1, 2) == 4);
  CHECK(nsd_count(2, 2, 2) == 4);
  for (auto q : kPrimePowers)
    for (unsigned e = 1; e <= 3; ++e) CHECK(nsd_count(q, e, 1) == unit_count(q, e));
}

TEST_CASE("diagonal closed forms match brute force over Z/p^e") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {2, 4}}) {
    const long N = oracle::ipow(p, e);
    const oracle::IntegerRing Z{N, p};
    for (std::size_t n = 1; n <= 3 && oracle::ipow(N, static_cast<int>(n)) <= 5000; ++n) {
      const auto t = oracle::tally(Z, n, oracle::Shape::Diagonal);
      for (const auto& [a, count] : t) {
        const auto cls = DetClass::of_valuation(static_cast<unsigned>(Z.valuation(a)), static_cast<unsigned>(e));
        CHECK(d(static_cast<std::uint64_t>(p), static_cast<unsigned>(e), static_cast<unsigned>(n), cls) == count);
      }
    }
  }
}

TEST_CASE("diagonal closed forms match brute force over F_q[u]/u^e with q composite") {
  for (auto [p, r, e] : {std::tuple{2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}}) {
    const auto R = naive_chain_ring(p, r, e);
    const std::uint64_t q = static_cast<std::uint64_t>(oracle::ipow(p, r));
    for (std::size_t n = 1; n <= 3 && oracle::ipow(static_cast<long>(q), e * static_cast<int>(n)) <= 5000; ++n) {
      const auto by_val = oracle::counts_by_valuation(R, oracle::tally(R, n, oracle::Shape::Diagonal));
      for (const auto& [s, counts] : by_val) {
        const BigInt expected = d(q, static_cast<unsigned>(e), static_cast<unsigned>(n),
                                  DetClass::of_valuation(static_cast<unsigned>(s), static_cast<unsigned>(e)));
        for (auto count : counts) CHECK(expected == count);
      }
    }
  }
}

TEST_CASE("recursion agrees with the closed form") {
  for (auto q : kPrimePowers)
    for (unsigned e = 1; e <= 6; ++e)
      for (unsigned n = 1; n <= 12; ++n) CHECK(d_zero_recursive(q, e, n) == d(q, e, n, DetClass::zero()));
}

TEST_CASE("partition identities") {
  for (auto q : kPrimePowers) {
    for (unsigned e = 1; e <= 4; ++e) {
      for (unsigned n = 1; n <= 6; ++n) {
        BigInt total = 0;
        BigInt circ_total = 0;
        bool circ_known = (q - 1) % n == 0;
        for (unsigned s = 0; s <= e; ++s) {
          const auto cls = DetClass::of_valuation(s, e);
          total += class_size(q, e, cls) * d(q, e, n, cls);
          const auto cr = c(q, e, n, cls);
          if (circ_known) {
            REQUIRE(cr.applicable);
            circ_total += class_size(q, e, cls) * *cr.value;
          }
        }
        CHECK(total == big_pow(q, std::uint64_t{e} * n));
        if (circ_known) CHECK(circ_total == big_pow(q, std::uint64_t{e} * n));
        CHECK(d(q, e, n, DetClass::unit()) * unit_count(q, e) == nsd_count(q, e, n));
        if (e == 1) {
          CHECK(d(q, 1, n, DetClass::unit()) == big_pow(q - 1, n - 1));
          CHECK(nsd_count(q, 1, n) == big_pow(q - 1, n));
        }
      }
    }
  }
}

TEST_CASE("circulant unit counts") {
  CHECK(nsc_count_field(3, 2) == 4);
  CHECK(nsc_count_field(2, 4) == 8);
  CHECK(nsc_count_field(4, 3) == 27);
  CHECK(nsc_count_ring(3, 1, 2) == 4);
  CHECK(nsc_count_ring(3, 2, 2) == 36);
  CHECK(nsc_count_ring(2, 2, 3) == 24);
  CHECK_THROWS_AS(nsc_count_ring(2, 2, 2), Error);

  CHECK(*c(3, 1, 2, DetClass::unit()).value == 2);
  CHECK(*c(3, 1, 2, DetClass::zero()).value == 5);
  CHECK(*c(4, 1, 3, DetClass::unit()).value == 9);
  const auto open = c(2, 2, 2, DetClass::gamma_pow(1));
  CHECK_FALSE(open.applicable);
  CHECK_FALSE(open.value);
  CHECK(open.reason.starts_with("open problem"));
  CHECK_FALSE(c(2, 2, 2, DetClass::unit()).applicable);

  for (auto q : kPrimePowers) {
    for (unsigned e = 1; e <= 3; ++e) {
      for (unsigned n = 1; n <= 8; ++n) {
        if (std::gcd(std::uint64_t{n}, q) != 1) continue;
        const auto u = c(q, e, n, DetClass::unit());
        REQUIRE(u.applicable);
        CHECK(*u.value * unit_count(q, e) == nsc_count_ring(q, e, n));
      }
    }
  }
}

TEST_CASE("units of F_q[X]/(X^n - 1) by brute force") {
  // Count circulants over F_q with unit determinant, for gcd(n, q) both 1 and not.
  for (auto [p, r] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto F = naive_chain_ring(p, r, 1);
    const std::uint64_t q = static_cast<std::uint64_t>(oracle::ipow(p, r));
    for (std::size_t n = 1; n <= 4 && oracle::ipow(static_cast<long>(q), static_cast<int>(n)) <= 1000; ++n) {
      const auto t = oracle::tally(F, n, oracle::Shape::Circulant);
      std::uint64_t units = 0;
      for (const auto& [a, count] : t)
        if (F.valuation(a) == 0) units += count;
      CHECK(nsc_count_field(q, static_cast<unsigned>(n)) == units);
    }
  }
}

TEST_CASE("circulant closed forms match brute force where they apply") {
  for (auto [p, r, e] : {std::tuple{2, 1, 2}, {3, 1, 1}, {3, 1, 2}, {5, 1, 1}, {2, 2, 1}, {2, 1, 3}}) {
    const auto R = naive_chain_ring(p, r, e);
    const std::uint64_t q = static_cast<std::uint64_t>(oracle::ipow(p, r));
    for (std::size_t n = 1; n <= 4 && oracle::ipow(static_cast<long>(q), e * static_cast<int>(n)) <= 4096; ++n) {
      const auto by_val = oracle::counts_by_valuation(R, oracle::tally(R, n, oracle::Shape::Circulant));
      for (const auto& [s, counts] : by_val) {
        const auto res = c(q, static_cast<unsigned>(e), static_cast<unsigned>(n),
                           DetClass::of_valuation(static_cast<unsigned>(s), static_cast<unsigned>(e)));
        if (!res.applicable) continue;
        for (auto count : counts) CHECK(*res.value == count);
      }
    }
  }
  // 3x3 invertible circulants over Z/4
  const oracle::IntegerRing Z4{4, 2};
  const auto t = oracle::tally(Z4, 3, oracle::Shape::Circulant);
  CHECK(t.at({1}) + t.at({3}) == 24);
}

TEST_CASE("quotient reduction identity") {
  CHECK(d_quotient_reduction_check(2, 2, 1, 2, 1));
  CHECK(d_quotient_reduction_check(3, 2, 2, 2, 1));
  for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (unsigned e = 2; e <= 3; ++e)
      for (unsigned f = 0; f <= 3; ++f)
        for (unsigned n = 1; n <= 6; ++n)
          for (unsigned s = 1; s < e; ++s) CHECK(d_quotient_reduction_check(q, e, f, n, s));
  CHECK_THROWS_AS(d_quotient_reduction_check(2, 1, 1, 2, 1), Error);
  CHECK_THROWS_AS(d_quotient_reduction_check(2, 3, 1, 2, 3), Error);
}
