#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chainring/finite_field.hpp"

namespace chainring {

/// The three concrete families used to realize every (q, e) pair.
enum class Family {
  IntegerModPE,  // Z/p^e, gamma = p, V = {0, ..., p-1}
  GaloisRing,    // GR(p^e, r) = (Z/p^e)[x]/(m(x)), gamma = p, V = Teichmueller set
  PolyU,         // F_q[u]/(u^e), gamma = u, V = F_q
};

std::string_view to_string(Family family);

class ChainRing;
class RingElement;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Commutative finite chain ring with residue field F_q and nilpotency index e.
///
/// Every element has a unique gamma-adic expansion a_0 + a_1 g + ... + a_{e-1} g^{e-1}
/// with a_i drawn from the representative set V, and V is indexed by the residue field
/// codes 0..q-1. The element code is sum(index(a_i) * q^i), so codes run over
/// [0, q^e), the valuation is the number of trailing zero base-q digits, and the
/// quotient map onto R / g^i R is reduction of the code modulo q^i.
///
/// Rings are immutable once built and are shared through RingPtr.
class ChainRing : public std::enable_shared_from_this<ChainRing> {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 30;
  /// Rings at most this large get precomputed addition and multiplication tables.
  static constexpr std::uint64_t kTableOrder = 1024;

  /// Throws NotPrime, UnsupportedCombination (r > 1 for Z/p^e), InvalidArgument (e = 0 or r = 0)
  /// or TooLarge.
  static RingPtr make(Family family, std::uint64_t p, unsigned e, unsigned r = 1);

  Family family() const { return family_; }
  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned r() const { return r_; }
  std::uint32_t q() const { return q_; }
  std::uint64_t order() const { return order_; }
  const FiniteField& residue_field() const { return field_; }

  /// Canonical ring-spec text: "Z/8", "GR(4,2)", "F9[u]/u^2".
  std::string name() const;

  /// Same family and invariants. Rings built from equal descriptors are interchangeable.
  bool same_as(const ChainRing& other) const {
    return family_ == other.family_ && p_ == other.p_ && e_ == other.e_ && r_ == other.r_;
  }

  RingElement element(Code code) const;
  RingElement from_coords(std::span<const std::uint32_t> coords) const;
  RingElement from_integer(std::int64_t k) const;
  RingElement zero() const;
  RingElement one() const;
  RingElement gamma() const;

  /// Representative set V; entry i is the representative whose residue has field code i.
  std::vector<RingElement> representatives() const;
  /// The unique element of {0} union (roots of unity of order dividing q-1) above x.
  RingElement teichmuller(FiniteField::Code x) const;

  // Code-level arithmetic used by the enumeration kernels.
  Code add(Code a, Code b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[std::size_t{a} * order_ + b];
  }
  Code mul(Code a, Code b) const {
    return mul_table_.empty() ? mul_slow(a, b) : mul_table_[std::size_t{a} * order_ + b];
  }
  Code neg(Code a) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code pow(Code a, std::uint64_t exp) const;
  Code zero_code() const { return 0; }
  Code one_code() const { return 1; }

  bool is_unit(Code a) const { return a % q_ != 0; }
  /// Least s with a in g^s R; e for zero.
  unsigned valuation(Code a) const;
  /// Throws NotAUnit.
  Code inverse(Code a) const;
  FiniteField::Code residue(Code a) const { return a % q_; }

  std::vector<std::uint32_t> coords(Code a) const;
  Code code_of(std::span<const std::uint32_t> coords) const;
  std::string format(Code a) const;

  /// Throws BadIndex unless code < order().
  void check_code(Code a) const;

 private:
  ChainRing() = default;

  using Native = std::vector<std::uint64_t>;

  Code add_slow(Code a, Code b) const;
  Code mul_slow(Code a, Code b) const;

  // Galois ring: elements as r coefficients modulo p^e in the basis 1, x, ..., x^{r-1}.
  Native gr_decode(Code a) const;
  Code gr_encode(Native a) const;
  Native gr_mul(const Native& a, const Native& b) const;
  Native gr_pow(Native a, std::uint64_t exp) const;

  Family family_ = Family::IntegerModPE;
  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  unsigned r_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t char_modulus_ = 0;  // p^e for Z/p^e and GR
  FiniteField field_;
  Native gr_modulus_;                  // lifted monic modulus, low first, length r + 1
  std::vector<Native> gr_teichmuller_; // Teichmueller lift per residue code
  std::vector<Code> add_table_;
  std::vector<Code> mul_table_;
};

/// Element of a ChainRing in canonical form. Equality is equality of gamma-adic coordinates.
class RingElement {
 public:
  using Code = ChainRing::Code;

  RingElement(RingPtr ring, Code code);

  const RingPtr& ring() const { return ring_; }
  Code code() const { return code_; }

  /// gamma-adic coordinates (a_0, ..., a_{e-1}) as indices into V.
  std::vector<std::uint32_t> coords() const { return ring_->coords(code_); }
  std::string to_string() const { return ring_->format(code_); }
  bool is_zero() const { return code_ == 0; }
  RingElement pow(std::uint64_t exp) const { return {ring_, ring_->pow(code_, exp)}; }

  friend bool operator==(const RingElement& x, const RingElement& y);
  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x);

 private:
  RingPtr ring_;
  Code code_;
};

/// Throws RingMismatch unless both elements live in the same ring.
void require_same_ring(const RingElement& x, const RingElement& y);
void require_same_ring(const ChainRing& x, const ChainRing& y);

/// x = gamma^s * unit_part, with s = e and no unit part exactly when x = 0.
struct ValUnitDecomposition {
  unsigned s = 0;
  std::optional<RingElement> unit_part;
};

// ring_make
inline RingPtr ring_make(Family family, std::uint64_t p, unsigned e, unsigned r = 1) {
  return ChainRing::make(family, p, e, r);
}

bool is_unit(const RingElement& x);
/// Newton iteration y <- y(2 - xy) from the residue-field inverse. Throws NotAUnit.
RingElement inverse(const RingElement& x);
ValUnitDecomposition valuation(const RingElement& x);
FieldElement residue(const RingElement& x);

/// Default cap on how many elements (or matrix candidates) a stream may produce.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Every element once, in code order. Throws TooLarge when |R| > cap.
inline auto enumerate(const RingPtr& ring, std::uint64_t cap = kDefaultEnumerationCap);
/// Units of R, (q-1)q^{e-1} of them.
inline auto units(const RingPtr& ring, std::uint64_t cap = kDefaultEnumerationCap);

/// Projection R -> R / gamma^i R, truncating the gamma-adic expansion to i coordinates.
class QuotientMap {
 public:
  QuotientMap(RingPtr source, RingPtr target);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  RingElement operator()(const RingElement& x) const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::uint64_t modulus_;
};

/// Throws BadIndex unless 1 <= i <= e.
QuotientMap quotient(const RingPtr& ring, unsigned i);

/// Element of order exactly n taken from the Teichmueller set. Throws NoRoot if n does not divide q-1.
RingElement root_of_unity(const RingPtr& ring, std::uint64_t n);

std::uint64_t multiplicative_order(const RingElement& x);

// -- inline definitions ----------------------------------------------------------------

void enforce_enumeration_cap(const ChainRing& ring, std::uint64_t cap);

inline auto enumerate(const RingPtr& ring, std::uint64_t cap) {
  enforce_enumeration_cap(*ring, cap);
  return std::views::iota(ChainRing::Code{0}, static_cast<ChainRing::Code>(ring->order())) |
         std::views::transform([ring](ChainRing::Code c) { return RingElement(ring, c); });
}

inline auto units(const RingPtr& ring, std::uint64_t cap) {
  enforce_enumeration_cap(*ring, cap);
  return std::views::iota(ChainRing::Code{0}, static_cast<ChainRing::Code>(ring->order())) |
         std::views::filter([ring](ChainRing::Code c) { return ring->is_unit(c); }) |
         std::views::transform([ring](ChainRing::Code c) { return RingElement(ring, c); });
}

}  // namespace chainring
