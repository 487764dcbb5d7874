#include <doctest.h>

#include "chainring/error.hpp"
#include "chainring/ring_spec.hpp"

using namespace chainring;

TEST_CASE("single rings") {
  auto z8 = parse_chain_ring("Z/8");
  CHECK(z8->family() == Family::IntegerModPE);
  CHECK(z8->order() == 8);
  auto f9 = parse_chain_ring("F9[u]/u^2");
  CHECK(f9->family() == Family::PolyU);
  CHECK(f9->q() == 9);
  CHECK(f9->e() == 2);
  auto gr = parse_chain_ring("GR(4,2)");
  CHECK(gr->family() == Family::GaloisRing);
  CHECK(gr->q() == 4);
  CHECK(gr->e() == 2);
  for (const char* text : {"Z/8", "Z/27", "GR(9,2)", "F4[u]/u^3", "F2[u]/u^1"}) {
    CHECK(parse_chain_ring(text)->name() == text);
  }
  CHECK(parse_chain_ring("  Z/5 ")->name() == "Z/5");
}

TEST_CASE("products") {
  auto ring = parse_ring_spec("Z/4 x F2[u]/u^2");
  REQUIRE(std::holds_alternative<ProductRingPtr>(ring));
  const auto& product = std::get<ProductRingPtr>(ring);
  CHECK(product->size() == 2);
  CHECK(ring_name(ring) == "Z/4 x F2[u]/u^2");
  CHECK(std::get<ProductRingPtr>(parse_ring_spec("Z/2 x Z/2 x GR(4,2)"))->size() == 3);
  CHECK_THROWS_AS(parse_chain_ring("Z/2 x Z/3"), Error);
}

TEST_CASE("parse errors carry position and expectation") {
  struct Case {
    const char* text;
    std::size_t position;
    const char* expected;
  };
  for (const auto& c : {Case{"Q/8", 0, "'Z/', 'GR(' or 'F'"}, Case{"Z/", 2, "integer"},
                        Case{"GR(4;2)", 4, "','"}, Case{"F4[u]/u", 2, "'[u]/u^'"}, Case{"F2", 2, "'[u]/u^'"},
                        Case{"Z/4 x", 5, "'Z/', 'GR(' or 'F'"}, Case{"Z/4 y Z/2", 4, "' x ' or end of input"},
                        Case{"Z/4x Z/2", 3, "' x ' or end of input"}, Case{"Z/99999999999", 2, "integer below 2^31"}}) {
    CAPTURE(c.text);
    try {
      parse_ring_spec(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(e.position() == c.position);
      CHECK(e.expected() == c.expected);
    }
  }
}

TEST_CASE("semantic errors") {
  auto code = [](const char* text) {
    try {
      parse_ring_spec(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalConsistency;
  };
  CHECK(code("Z/12") == ErrorCode::NotPrimePower);
  CHECK(code("Z/1") == ErrorCode::NotPrimePower);
  CHECK(code("F6[u]/u^2") == ErrorCode::NotPrimePower);
  CHECK(code("GR(10,2)") == ErrorCode::NotPrimePower);
  CHECK(code("F4[u]/u^0") == ErrorCode::InvalidArgument);
  CHECK(code("GR(4,0)") == ErrorCode::InvalidArgument);
}

TEST_CASE("ring lists") {
  CHECK(split_ring_list("Z/4,F2[u]/u^2") == std::vector<std::string>{"Z/4", "F2[u]/u^2"});
  CHECK(split_ring_list("GR(4,2), Z/9 ,Z/2 x Z/2") == std::vector<std::string>{"GR(4,2)", "Z/9", "Z/2 x Z/2"});
  CHECK_THROWS_AS(split_ring_list("Z/4,,Z/2"), ParseError);
}
