#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chainring/number_theory.hpp"

namespace chainring {

/// Determinant class of a = gamma^s b: Unit (s = 0), GammaPow(s) for 1 <= s < e, Zero (s = e).
struct DetClass {
  enum class Kind { Unit, GammaPow, Zero };

  Kind kind = Kind::Unit;
  unsigned s = 0;  // meaningful for GammaPow only

  static DetClass unit() { return {Kind::Unit, 0}; }
  static DetClass gamma_pow(unsigned s) { return {Kind::GammaPow, s}; }
  static DetClass zero() { return {Kind::Zero, 0}; }

  /// The class of an element of valuation s in a ring of nilpotency index e.
  static DetClass of_valuation(unsigned s, unsigned e);

  /// Valuation of the class members (e for Zero).
  unsigned valuation(unsigned e) const;

  friend bool operator==(const DetClass&, const DetClass&) = default;
  friend std::strong_ordering operator<=>(const DetClass& a, const DetClass& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.s <=> b.s;
  }
};

/// "unit", "zero", "gamma^s".
std::string to_string(const DetClass& c);
/// Inverse of to_string. Throws InvalidArgument.
DetClass parse_det_class(std::string_view text);

/// Throws NotPrimePower, InvalidArgument (e, n or s out of range).
struct CountQuery {
  std::uint64_t q = 0;
  unsigned e = 0;
  unsigned n = 0;
  DetClass det_class;

  void validate() const;
};

enum class CountMethod { Formula, Recursion, Enumeration };

std::string_view to_string(CountMethod m);

/// Value present only when the closed form applies; otherwise `reason` explains which open
/// problem the query falls into.
struct CountResult {
  std::optional<BigInt> value;
  CountMethod method = CountMethod::Formula;
  bool applicable = false;
  std::string reason;

  static CountResult formula(BigInt v) { return {std::move(v), CountMethod::Formula, true, {}}; }
  static CountResult open(std::string why) { return {std::nullopt, CountMethod::Formula, false, std::move(why)}; }
};

/// |U(R)| = (q-1) q^{e-1}.
BigInt unit_count(std::uint64_t q, unsigned e);
/// Number of ring elements in the class: (q-1)q^{e-1-s} for valuation s < e, 1 for zero.
BigInt class_size(std::uint64_t q, unsigned e, const DetClass& c);

/// d_n(R, a) for a in the queried class.
CountResult d_count(const CountQuery& query);

/// d_n(R, 0) through the (n, e) recursion; independent of the closed form.
BigInt d_zero_recursive(std::uint64_t q, unsigned e, unsigned n);

/// Nonsingular diagonal matrices: (q-1)^n q^{(e-1)n}.
BigInt nsd_count(std::uint64_t q, unsigned e, unsigned n);

/// Units of F_q[X]/(X^n - 1), any n: q^{n-n'} prod_{d | n'} (q^{ord_d q} - 1)^{phi(d)/ord_d q}
/// where n = n' p^k with p not dividing n'.
BigInt nsc_count_field(std::uint64_t q, unsigned n);

/// q^{(e-1)n} * nsc_count_field(q, n). Throws NotCoprime unless gcd(n, q) = 1.
BigInt nsc_count_ring(std::uint64_t q, unsigned e, unsigned n);

/// c_n(R, a) for a in the queried class, when a closed form is known.
CountResult c_count(const CountQuery& query);

/// d over nilpotency e+f at gamma^s equals q^{f(n-1)} times d over nilpotency e at gamma^s.
/// Throws InvalidArgument unless e >= 2 and 1 <= s < e.
bool d_quotient_reduction_check(std::uint64_t q, unsigned e, unsigned f, unsigned n, unsigned s);

}  // namespace chainring
