#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chainring/census.hpp"

namespace chainring {

/// Attained determinants of one (ring, n, shape, mode) query.
struct DetImageReport {
  std::string ring;
  unsigned n = 0;
  Shape shape = Shape::Circulant;
  ImageMode mode = ImageMode::Full;
  std::vector<std::vector<std::uint32_t>> coords;  // gamma-adic coordinates, in code order
  std::vector<std::string> text;                   // same elements, formatted

  friend bool operator==(const DetImageReport&, const DetImageReport&) = default;
};

DetImageReport make_det_image_report(const RingPtr& ring, std::size_t n, Shape shape, ImageMode mode,
                                     const std::vector<RingElement>& image);

// Cell columns shared by CSV and JSON.
std::string format_formula(const FormulaEntry& f);
FormulaEntry parse_formula(std::string_view text);
std::string format_oracle(const OracleEntry& o);
OracleEntry parse_oracle(std::string_view text);

/// ring,q,e,n,shape,class,formula,oracle,applicable,match. A leading "# wall_seconds=" line is
/// written only when the report carries a wall time.
std::string to_csv(const VerificationReport& report);
std::string to_json(const VerificationReport& report);
VerificationReport verification_from_csv(std::string_view text);
VerificationReport verification_from_json(std::string_view text);

/// conjecture,ring,q,e,n,status,detail.
std::string to_csv(const ConjectureReport& report);
std::string to_json(const ConjectureReport& report);
ConjectureReport conjecture_from_csv(std::string_view text);
ConjectureReport conjecture_from_json(std::string_view text);

/// ring,n,shape,mode,coords,element; one row per attained determinant.
std::string to_csv(const DetImageReport& report);
std::string to_json(const DetImageReport& report);
DetImageReport det_image_from_csv(std::string_view text);
DetImageReport det_image_from_json(std::string_view text);

/// RFC 4180 style: fields with a comma, quote or newline are quoted, quotes doubled.
std::string csv_escape(std::string_view field);
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

}  // namespace chainring
