#include <doctest.h>

#include "chainring/error.hpp"
#include "chainring/product_ring.hpp"
#include "chainring/report.hpp"

using namespace chainring;

namespace {

VerificationReport sample_report() {
  auto report = verify({GridCell{ring_make(Family::IntegerModPE, 2, 2), 2}, GridCell{ring_make(Family::PolyU, 3, 1), 2},
                        GridCell{ring_make(Family::IntegerModPE, 5, 3), 4}},
                       {Shape::Diagonal, Shape::Circulant}, {2000, 1, false});
  const auto product = product_verify(ProductRing::make({ring_make(Family::IntegerModPE, 2, 2), ring_make(Family::PolyU, 2, 1)}),
                                      2, {Shape::Circulant});
  report.cells.insert(report.cells.end(), product.report.cells.begin(), product.report.cells.end());
  VerificationCell odd = report.cells.front();
  odd.ring = "weird, \"quoted\"\nring";
  odd.oracle = {OracleEntry::State::Varies, 17, {}};
  odd.formula = {FormulaEntry::State::Skipped, 0, "not requested"};
  odd.match = false;
  report.cells.push_back(odd);
  report.cells.back().formula = {FormulaEntry::State::Value, BigInt("123456789012345678901234567890"), {}};
  report.wall_seconds = 0.1 + 0.2;
  return report;
}

}  // namespace

TEST_CASE("verification reports round trip") {
  const auto report = sample_report();
  CHECK(verification_from_csv(to_csv(report)) == report);
  CHECK(verification_from_json(to_json(report)) == report);
  auto untimed = report;
  untimed.wall_seconds.reset();
  CHECK(verification_from_csv(to_csv(untimed)) == untimed);
  CHECK(verification_from_json(to_json(untimed)) == untimed);
  CHECK(to_csv(untimed).starts_with("ring,q,e,n,shape,class,formula,oracle,applicable,match\n"));
}

TEST_CASE("cell column formats") {
  CHECK(format_formula({FormulaEntry::State::Open, 0, "x"}) == "open: x");
  CHECK(format_formula({FormulaEntry::State::Value, 42, {}}) == "42");
  CHECK(format_formula({}) == "");
  CHECK(format_oracle({}) == "skipped");
  CHECK(format_oracle({OracleEntry::State::Skipped, 0, "too large"}) == "skipped: too large");
  CHECK(format_oracle({OracleEntry::State::Varies, 3, {}}) == "varies: 3");
  CHECK(parse_oracle("9") == OracleEntry{OracleEntry::State::Uniform, 9, {}});
  CHECK_THROWS_AS(parse_formula("12a"), Error);
}

TEST_CASE("conjecture reports round trip") {
  const std::vector<GridCell> grid = {{ring_make(Family::IntegerModPE, 2, 2), 2}, {ring_make(Family::IntegerModPE, 3, 1), 2},
                                      {ring_make(Family::IntegerModPE, 2, 3), 9}};
  auto report = conjecture_scan(Conjecture::OrbitWithoutGcd, grid, {1000, 1, false});
  report.entries.push_back({"Z/4", 2, 2, 2, ScanStatus::Counterexample, "valuation 0: c(1) = 4, c(3) = \"5\""});
  CHECK(conjecture_from_csv(to_csv(report)) == report);
  CHECK(conjecture_from_json(to_json(report)) == report);
}

TEST_CASE("det-image reports round trip") {
  const auto ring = ring_make(Family::PolyU, 2, 2, 2);
  const auto image = det_image(ring, 2, Shape::Circulant, ImageMode::Full);
  const auto report = make_det_image_report(ring, 2, Shape::Circulant, ImageMode::Full, image);
  CHECK(report.coords.size() == image.size());
  CHECK(det_image_from_csv(to_csv(report)) == report);
  CHECK(det_image_from_json(to_json(report)) == report);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(verification_from_csv("a,b\n"), Error);
  CHECK_THROWS_AS(verification_from_json("{"), Error);
  CHECK_THROWS_AS(verification_from_json(R"({"report":"conjecture"})"), Error);
  CHECK_THROWS_AS(csv_parse("\"open"), Error);
  CHECK(csv_parse("a,\"b,c\"\n\"d\"\"e\",f\n") ==
        std::vector<std::vector<std::string>>{{"a", "b,c"}, {"d\"e", "f"}});
}
