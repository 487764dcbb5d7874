#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chainring {

/// Element of F_q in the polynomial basis: coefficients[i] multiplies x^i, each in [0, p).
struct FieldElement {
  std::vector<std::uint32_t> coefficients;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// F_q = F_p[x]/(m(x)) where m is the lexicographically least monic irreducible of degree r.
///
/// Elements are handled internally as codes sum(c_i * p^i) in [0, q). Multiplication goes
/// through discrete log tables built from the primitive generator, so construction is O(q).
class FiniteField {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Throws NotPrime when p is composite and TooLarge when p^r exceeds kMaxOrder.
  static FiniteField make(std::uint64_t p, unsigned r);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return r_; }
  std::uint32_t order() const { return q_; }

  /// Monic modulus, low coefficient first, length r + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }

  Code zero() const { return 0; }
  Code one() const { return 1; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t exp) const;
  std::uint64_t multiplicative_order(Code a) const;

  /// Image of the integer k under Z -> F_q.
  Code from_integer(std::int64_t k) const;

  std::vector<std::uint32_t> digits(Code a) const;
  Code from_digits(const std::vector<std::uint32_t>& digits) const;

  FieldElement element(Code a) const { return FieldElement{digits(a)}; }
  Code encode(const FieldElement& x) const;

  /// "2" for prime fields, otherwise a polynomial in `a` such as "1+2a".
  std::string to_string(Code a) const;

  friend bool operator==(const FiniteField& x, const FiniteField& y) {
    return x.p_ == y.p_ && x.r_ == y.r_;
  }

 private:
  friend class ChainRing;
  FiniteField() = default;

  std::uint32_t p_ = 0;
  unsigned r_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Code generator_ = 0;
  std::vector<Code> exp_;            // exp_[k] = g^k for k in [0, 2(q-1))
  std::vector<std::uint32_t> log_;   // log_[a] for a != 0
};

// ff_make
inline FiniteField ff_make(std::uint64_t p, unsigned r) { return FiniteField::make(p, r); }

/// Trial division by every monic polynomial of degree <= deg/2 over F_p.
/// `poly` is given low coefficient first and must be monic.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace chainring
