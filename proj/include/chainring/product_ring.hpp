#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chainring/census.hpp"
#include "chainring/chain_ring.hpp"
#include "chainring/counting.hpp"

namespace chainring {

class ProductRing;
class ProductElement;
using ProductRingPtr = std::shared_ptr<const ProductRing>;

/// R_1 x ... x R_m with component-wise operations.
///
/// Elements are tuples of factor codes packed in mixed radix with factor 1 least significant.
/// The packing is only an index for tallies; it is never a CRT recombination.
class ProductRing : public std::enable_shared_from_this<ProductRing> {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 26;

  /// Throws InvalidArgument for an empty factor list and TooLarge above kMaxOrder.
  static ProductRingPtr make(std::vector<RingPtr> factors);

  const std::vector<RingPtr>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  /// "Z/4 x F2[u]/u^2".
  std::string name() const;

  Code add(Code a, Code b) const;
  Code mul(Code a, Code b) const;
  Code neg(Code a) const;
  Code sub(Code a, Code b) const;
  Code zero_code() const { return 0; }
  Code one_code() const { return one_; }

  /// Component i (0-based) of a packed code.
  ChainRing::Code component(Code a, std::size_t i) const {
    return static_cast<ChainRing::Code>((a / stride_[i]) % factors_[i]->order());
  }
  Code pack(std::span<const ChainRing::Code> components) const;
  std::vector<ChainRing::Code> unpack(Code a) const;

  ProductElement element(Code a) const;
  /// Throws SizeMismatch or RingMismatch when the components do not fit the factors.
  ProductElement from_components(std::vector<RingElement> components) const;

 private:
  ProductRing() = default;

  std::vector<RingPtr> factors_;
  std::vector<std::uint64_t> stride_;
  std::uint64_t order_ = 1;
  Code one_ = 0;
};

class ProductElement {
 public:
  ProductElement(ProductRingPtr ring, ProductRing::Code code) : ring_(std::move(ring)), code_(code) {}

  const ProductRingPtr& ring() const { return ring_; }
  ProductRing::Code code() const { return code_; }
  std::vector<RingElement> components() const;
  /// "(1, u)".
  std::string to_string() const;

  friend bool operator==(const ProductElement& x, const ProductElement& y);
  friend ProductElement operator+(const ProductElement& x, const ProductElement& y);
  friend ProductElement operator*(const ProductElement& x, const ProductElement& y);

 private:
  ProductRingPtr ring_;
  ProductRing::Code code_;
};

/// phi_i, 1-based. Throws BadIndex unless 1 <= i <= m.
RingElement project(const ProductElement& x, std::size_t i);

/// Product of the per-factor counts for one class per factor. Inapplicable when any factor is,
/// with the failing factor named in the reason.
CountResult product_count(Shape shape, unsigned n, const std::vector<CountQuery>& factor_queries);

BigInt d_count_product(const ProductRing& ring, unsigned n, const ProductElement& r);
CountResult c_count_product(const ProductRing& ring, unsigned n, const ProductElement& r);

struct ProductTally {
  ProductRingPtr ring;
  std::size_t n = 0;
  Shape shape = Shape::Diagonal;
  std::vector<std::uint64_t> by_element;  // indexed by packed code
};

/// Direct enumeration with component-wise arithmetic. Throws TooLarge.
ProductTally enumerate_product_tally(const ProductRingPtr& ring, std::size_t n, Shape shape,
                                     const EnumerationOptions& options = {});

struct ProductVerification {
  /// One cell per tuple of factor classes.
  VerificationReport report;
  /// Direct tally equals the product of factor tallies at every element.
  bool elementwise_match = true;
  std::string first_mismatch;
};

ProductVerification product_verify(const ProductRingPtr& ring, std::size_t n, const std::vector<Shape>& shapes,
                                   const EnumerationOptions& options = {});

}  // namespace chainring
