#include "chainring/product_ring.hpp"

#include <chrono>

#include "chainring/enumeration.hpp"
#include "chainring/error.hpp"

namespace chainring {

ProductRingPtr ProductRing::make(std::vector<RingPtr> factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "a product ring needs at least one factor");
  auto ring = std::shared_ptr<ProductRing>(new ProductRing());
  for (const auto& f : factors) {
    if (!f) throw Error(ErrorCode::InvalidArgument, "null factor ring");
    ring->stride_.push_back(ring->order_);
    ring->one_ += static_cast<Code>(ring->order_);
    ring->order_ *= f->order();
    if (ring->order_ > kMaxOrder) throw Error(ErrorCode::TooLarge, "product ring order exceeds 2^26");
  }
  ring->factors_ = std::move(factors);
  return ring;
}

std::string ProductRing::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " x ";
    out += factors_[i]->name();
  }
  return out;
}

namespace {

template <class Op>
ProductRing::Code componentwise(const ProductRing& ring, ProductRing::Code a, ProductRing::Code b, Op op) {
  std::uint64_t out = 0;
  std::uint64_t stride = 1;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const ChainRing& f = *ring.factors()[i];
    out += std::uint64_t{op(f, ring.component(a, i), ring.component(b, i))} * stride;
    stride *= f.order();
  }
  return static_cast<ProductRing::Code>(out);
}

}  // namespace

ProductRing::Code ProductRing::add(Code a, Code b) const {
  return componentwise(*this, a, b, [](const ChainRing& f, auto x, auto y) { return f.add(x, y); });
}

ProductRing::Code ProductRing::mul(Code a, Code b) const {
  return componentwise(*this, a, b, [](const ChainRing& f, auto x, auto y) { return f.mul(x, y); });
}

ProductRing::Code ProductRing::sub(Code a, Code b) const {
  return componentwise(*this, a, b, [](const ChainRing& f, auto x, auto y) { return f.sub(x, y); });
}

ProductRing::Code ProductRing::neg(Code a) const { return sub(0, a); }

ProductRing::Code ProductRing::pack(std::span<const ChainRing::Code> components) const {
  if (components.size() != factors_.size()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(factors_.size()) + " components");
  }
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i]->check_code(components[i]);
    out += components[i] * stride_[i];
  }
  return static_cast<Code>(out);
}

std::vector<ChainRing::Code> ProductRing::unpack(Code a) const {
  std::vector<ChainRing::Code> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = component(a, i);
  return out;
}

ProductElement ProductRing::element(Code a) const {
  if (a >= order_) throw Error(ErrorCode::BadIndex, "code " + std::to_string(a) + " out of range for " + name());
  return {shared_from_this(), a};
}

ProductElement ProductRing::from_components(std::vector<RingElement> components) const {
  if (components.size() != factors_.size()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(factors_.size()) + " components");
  }
  std::vector<ChainRing::Code> codes;
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_ring(*components[i].ring(), *factors_[i]);
    codes.push_back(components[i].code());
  }
  return {shared_from_this(), pack(codes)};
}

std::vector<RingElement> ProductElement::components() const {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < ring_->size(); ++i) out.emplace_back(ring_->factors()[i], ring_->component(code_, i));
  return out;
}

std::string ProductElement::to_string() const {
  std::string out = "(";
  const auto parts = components();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i].to_string();
  }
  return out + ")";
}

namespace {

void require_same_product(const ProductElement& x, const ProductElement& y) {
  const auto& a = x.ring()->factors();
  const auto& b = y.ring()->factors();
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i]->same_as(*b[i]);
  if (!same) throw Error(ErrorCode::RingMismatch, x.ring()->name() + " vs " + y.ring()->name());
}

}  // namespace

bool operator==(const ProductElement& x, const ProductElement& y) {
  require_same_product(x, y);
  return x.code_ == y.code_;
}

ProductElement operator+(const ProductElement& x, const ProductElement& y) {
  require_same_product(x, y);
  return {x.ring_, x.ring_->add(x.code_, y.code_)};
}

ProductElement operator*(const ProductElement& x, const ProductElement& y) {
  require_same_product(x, y);
  return {x.ring_, x.ring_->mul(x.code_, y.code_)};
}

RingElement project(const ProductElement& x, std::size_t i) {
  const std::size_t m = x.ring()->size();
  if (i < 1 || i > m) {
    throw Error(ErrorCode::BadIndex, "projection index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  }
  return {x.ring()->factors()[i - 1], x.ring()->component(x.code(), i - 1)};
}

CountResult product_count(Shape shape, unsigned n, const std::vector<CountQuery>& factor_queries) {
  if (factor_queries.empty()) throw Error(ErrorCode::InvalidArgument, "no factors");
  BigInt value = 1;
  for (std::size_t i = 0; i < factor_queries.size(); ++i) {
    CountQuery query = factor_queries[i];
    query.n = n;
    const CountResult part = shape == Shape::Diagonal ? d_count(query) : c_count(query);
    if (!part.applicable || !part.value) {
      return CountResult::open("factor " + std::to_string(i + 1) + ": " + part.reason);
    }
    value *= *part.value;
  }
  return CountResult::formula(std::move(value));
}

namespace {

std::vector<CountQuery> factor_queries(const ProductRing& ring, unsigned n, const ProductElement& r) {
  std::vector<CountQuery> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const ChainRing& f = *ring.factors()[i];
    out.push_back({f.q(), f.e(), n, DetClass::of_valuation(f.valuation(ring.component(r.code(), i)), f.e())});
  }
  return out;
}

}  // namespace

BigInt d_count_product(const ProductRing& ring, unsigned n, const ProductElement& r) {
  return *product_count(Shape::Diagonal, n, factor_queries(ring, n, r)).value;
}

CountResult c_count_product(const ProductRing& ring, unsigned n, const ProductElement& r) {
  return product_count(Shape::Circulant, n, factor_queries(ring, n, r));
}

ProductTally enumerate_product_tally(const ProductRingPtr& ring, std::size_t n, Shape shape,
                                     const EnumerationOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  candidate_count(ring->order(), n, options.cap);
  const ProductRing& r = *ring;
  ProductTally tally{ring, n, shape, {}};
  if (shape == Shape::Diagonal) {
    tally.by_element = parallel_tally<ProductRing::Code>(r.order(), n, options.threads,
                                                         [&r] { return DiagonalDet<ProductRing>(r); });
  } else {
    tally.by_element = parallel_tally<ProductRing::Code>(r.order(), n, options.threads,
                                                         [&r, n] { return CirculantDet<ProductRing>(r, n); });
  }
  return tally;
}

namespace {

std::vector<DetClass> classes_of(unsigned e) {
  std::vector<DetClass> out{DetClass::unit()};
  for (unsigned s = 1; s < e; ++s) out.push_back(DetClass::gamma_pow(s));
  out.push_back(DetClass::zero());
  return out;
}

ChainRing::Code class_representative(const ChainRing& ring, unsigned s) {
  ChainRing::Code v = 1;
  for (unsigned i = 0; i < s; ++i) v *= ring.q();
  return s >= ring.e() ? 0 : v;
}

std::vector<VerificationCell> class_cells(const ProductTally& tally) {
  const ProductRing& ring = *tally.ring;
  const std::size_t m = ring.size();
  std::vector<std::vector<DetClass>> options;
  for (const auto& f : ring.factors()) options.push_back(classes_of(f->e()));

  // valuation tuple of every element, computed once
  std::vector<std::vector<unsigned>> vals(ring.order(), std::vector<unsigned>(m));
  for (ProductRing::Code c = 0; c < ring.order(); ++c) {
    for (std::size_t i = 0; i < m; ++i) vals[c][i] = ring.factors()[i]->valuation(ring.component(c, i));
  }

  std::vector<VerificationCell> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    VerificationCell cell;
    cell.ring = ring.name();
    cell.n = static_cast<unsigned>(tally.n);
    cell.shape = tally.shape;
    std::vector<CountQuery> queries;
    std::vector<unsigned> target(m);
    std::vector<ChainRing::Code> rep(m);
    BigInt members = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const ChainRing& f = *ring.factors()[i];
      const DetClass cls = options[i][pick[i]];
      cell.q.push_back(f.q());
      cell.e.push_back(f.e());
      cell.det_class.push_back(cls);
      queries.push_back({f.q(), f.e(), cell.n, cls});
      target[i] = cls.valuation(f.e());
      rep[i] = class_representative(f, target[i]);
      members *= class_size(f.q(), f.e(), cls);
    }
    cell.formula = formula_entry(product_count(tally.shape, cell.n, queries));
    const std::uint64_t rep_count = tally.by_element[ring.pack(rep)];
    bool uniform = true;
    std::uint64_t sum = 0;
    for (ProductRing::Code c = 0; c < ring.order(); ++c) {
      if (vals[c] != target) continue;
      uniform = uniform && tally.by_element[c] == rep_count;
      sum += tally.by_element[c];
    }
    cell.oracle = {uniform ? OracleEntry::State::Uniform : OracleEntry::State::Varies, rep_count, {}};
    settle_match(cell);
    if (cell.match && BigInt(sum) != members * cell.formula.value) cell.match = false;
    out.push_back(std::move(cell));

    std::size_t k = m;
    while (k > 0) {
      --k;
      if (++pick[k] < options[k].size()) break;
      pick[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace

ProductVerification product_verify(const ProductRingPtr& ring, std::size_t n, const std::vector<Shape>& shapes,
                                   const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ProductVerification result;
  for (Shape shape : shapes) {
    const ProductTally direct = enumerate_product_tally(ring, n, shape, options);
    std::vector<DetTally> parts;
    for (const auto& f : ring->factors()) parts.push_back(enumerate_tally(f, n, shape, options));
    for (ProductRing::Code c = 0; c < ring->order() && result.elementwise_match; ++c) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < parts.size(); ++i) expected *= parts[i].by_element[ring->component(c, i)];
      if (expected != direct.by_element[c]) {
        result.elementwise_match = false;
        result.first_mismatch = std::string(to_string(shape)) + " n=" + std::to_string(n) + " at " +
                                ring->element(c).to_string() + ": direct " + std::to_string(direct.by_element[c]) +
                                ", factor product " + std::to_string(expected);
      }
    }
    auto cells = class_cells(direct);
    result.report.cells.insert(result.report.cells.end(), cells.begin(), cells.end());
  }
  result.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace chainring
