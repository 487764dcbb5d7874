#include <doctest.h>

#include "chainring/error.hpp"
#include "chainring/product_ring.hpp"

using namespace chainring;

namespace {

RingPtr Z(std::uint64_t p, unsigned e) { return ring_make(Family::IntegerModPE, p, e); }

}  // namespace

TEST_CASE("projection") {
  const auto f2u = ring_make(Family::PolyU, 2, 2);
  const auto R = ProductRing::make({Z(2, 2), f2u});
  CHECK(R->order() == 16);
  CHECK(R->name() == "Z/4 x F2[u]/u^2");
  const auto x = R->from_components({Z(2, 2)->element(1), f2u->gamma()});
  CHECK(project(x, 1) == Z(2, 2)->element(1));
  CHECK(project(x, 2) == f2u->gamma());
  const auto zero = R->element(0);
  CHECK(project(zero, 1).is_zero());
  CHECK(project(zero, 2).is_zero());
  const auto y = R->from_components({Z(2, 2)->element(3), f2u->one() + f2u->gamma()});
  CHECK(project(y, 2) == f2u->one() + f2u->gamma());
  CHECK(y.to_string() == "(3, 1+u)");
  CHECK_THROWS_AS(project(x, 0), Error);
  CHECK_THROWS_AS(project(x, 3), Error);
}

TEST_CASE("projections are ring homomorphisms") {
  const auto R = ProductRing::make({Z(2, 2), Z(3, 1), ring_make(Family::PolyU, 2, 2)});
  for (ProductRing::Code a = 0; a < R->order(); ++a) {
    for (ProductRing::Code b = 0; b < R->order(); b += 5) {
      const auto x = R->element(a), y = R->element(b);
      for (std::size_t i = 1; i <= 3; ++i) {
        CHECK(project(x + y, i) == project(x, i) + project(y, i));
        CHECK(project(x * y, i) == project(x, i) * project(y, i));
      }
    }
  }
  CHECK(R->element(R->one_code()).components() ==
        std::vector<RingElement>{Z(2, 2)->one(), Z(3, 1)->one(), ring_make(Family::PolyU, 2, 2)->one()});
}

TEST_CASE("product counts") {
  const auto R = ProductRing::make({Z(2, 2), Z(3, 1)});
  CHECK(d_count_product(*R, 2, R->from_components({Z(2, 2)->one(), Z(3, 1)->one()})) == 4);
  CHECK(d_count_product(*R, 2, R->element(0)) == 40);
  const auto single = ProductRing::make({Z(2, 3)});
  for (ChainRing::Code a = 0; a < 8; ++a) {
    const auto ring = Z(2, 3);
    const unsigned s = ring->valuation(a);
    CHECK(d_count_product(*single, 3, single->element(a)) == *d_count({2, 3, 3, DetClass::of_valuation(s, 3)}).value);
  }
  const auto open = c_count_product(*R, 2, R->from_components({Z(2, 2)->one(), Z(3, 1)->one()}));
  CHECK_FALSE(open.applicable);
  CHECK(open.reason.starts_with("factor 1:"));
  const auto closed = c_count_product(*ProductRing::make({Z(3, 1), Z(5, 1)}), 2,
                                      ProductRing::make({Z(3, 1), Z(5, 1)})->element(0));
  CHECK(closed.applicable);
  CHECK(*closed.value == 5 * 9);
}

TEST_CASE("direct product tallies factor") {
  for (auto factors : {std::vector<RingPtr>{Z(2, 2), Z(2, 1)}, std::vector<RingPtr>{Z(2, 1), Z(2, 1)},
                       std::vector<RingPtr>{Z(2, 2), ring_make(Family::PolyU, 2, 2)}, std::vector<RingPtr>{Z(3, 1)}}) {
    const auto R = ProductRing::make(factors);
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto v = product_verify(R, n, {Shape::Diagonal, Shape::Circulant});
      CHECK(v.elementwise_match);
      for (const auto& cell : v.report.cells) {
        CHECK_FALSE(cell.falsified());
        CHECK(cell.q.size() == factors.size());
      }
    }
  }
  const auto R = ProductRing::make({Z(2, 2), Z(2, 1)});
  const auto direct = enumerate_product_tally(R, 2, Shape::Diagonal);
  std::uint64_t total = 0;
  for (auto v : direct.by_element) total += v;
  CHECK(total == 64);
}

TEST_CASE("product ring errors") {
  CHECK_THROWS_AS(ProductRing::make({}), Error);
  const auto R = ProductRing::make({Z(2, 2), Z(2, 1)});
  CHECK_THROWS_AS(R->from_components({Z(2, 2)->one()}), Error);
  CHECK_THROWS_AS(R->from_components({Z(2, 1)->one(), Z(2, 1)->one()}), Error);
  const auto other = ProductRing::make({Z(3, 1)});
  CHECK_THROWS_AS((void)(R->element(1) + other->element(1)), Error);
}
