#include "chainring/chain_ring.hpp"

#include "chainring/error.hpp"
#include "chainring/number_theory.hpp"

namespace chainring {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::IntegerModPE: return "IntegerModPE";
    case Family::GaloisRing: return "GaloisRing";
    case Family::PolyU: return "PolyU";
  }
  return "Unknown";
}

RingPtr ChainRing::make(Family family, std::uint64_t p, unsigned e, unsigned r) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "nilpotency index must be >= 1");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "residue degree must be >= 1");
  if (family == Family::IntegerModPE && r != 1) {
    throw Error(ErrorCode::UnsupportedCombination, "Z/p^e has residue degree 1");
  }
  auto q = pow_within(p, r, FiniteField::kMaxOrder);
  if (!q) throw Error(ErrorCode::TooLarge, "residue field too large");
  auto order = pow_within(*q, e, kMaxOrder);
  if (!order) throw Error(ErrorCode::TooLarge, "ring order q^e exceeds " + std::to_string(kMaxOrder));

  // make_shared cannot reach the private constructor.
  std::shared_ptr<ChainRing> ring(new ChainRing());
  ring->family_ = family;
  ring->p_ = static_cast<std::uint32_t>(p);
  ring->e_ = e;
  ring->r_ = r;
  ring->q_ = static_cast<std::uint32_t>(*q);
  ring->order_ = *order;
  ring->field_ = FiniteField::make(p, r);
  if (family != Family::PolyU) ring->char_modulus_ = checked_pow(p, e);

  if (family == Family::GaloisRing) {
    ring->gr_modulus_.assign(ring->field_.modulus().begin(), ring->field_.modulus().end());
    // Teichmueller lift: iterate x -> x^q from the naive lift until it stops moving.
    ring->gr_teichmuller_.resize(ring->q_);
    for (FiniteField::Code x = 0; x < ring->q_; ++x) {
      const auto digits = ring->field_.digits(x);
      Native v(digits.begin(), digits.end());
      bool fixed = false;
      for (unsigned step = 0; step <= e && !fixed; ++step) {
        Native next = ring->gr_pow(v, ring->q_);
        fixed = next == v;
        v = std::move(next);
      }
      if (!fixed) throw Error(ErrorCode::InternalConsistency, "Teichmueller iteration did not converge");
      ring->gr_teichmuller_[x] = std::move(v);
    }
  }

  if (*order <= kTableOrder) {
    const std::size_t n = *order;
    ring->add_table_.resize(n * n);
    ring->mul_table_.resize(n * n);
    for (Code a = 0; a < n; ++a) {
      for (Code b = 0; b < n; ++b) {
        ring->add_table_[a * n + b] = ring->add_slow(a, b);
        ring->mul_table_[a * n + b] = ring->mul_slow(a, b);
      }
    }
  }
  return ring;
}

std::string ChainRing::name() const {
  switch (family_) {
    case Family::IntegerModPE: return "Z/" + std::to_string(char_modulus_);
    case Family::GaloisRing: return "GR(" + std::to_string(char_modulus_) + "," + std::to_string(r_) + ")";
    case Family::PolyU: return "F" + std::to_string(q_) + "[u]/u^" + std::to_string(e_);
  }
  return "?";
}

void ChainRing::check_code(Code a) const {
  if (a >= order_) {
    throw Error(ErrorCode::BadIndex, "code " + std::to_string(a) + " out of range for " + name());
  }
}

RingElement ChainRing::element(Code code) const {
  check_code(code);
  return RingElement(shared_from_this(), code);
}

RingElement ChainRing::from_coords(std::span<const std::uint32_t> coords) const {
  return RingElement(shared_from_this(), code_of(coords));
}

RingElement ChainRing::from_integer(std::int64_t k) const {
  // Double-and-add on |k| keeps this independent of the family.
  const bool negative = k < 0;
  std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Code result = 0, base = 1;
  while (m) {
    if (m & 1) result = add(result, base);
    base = add(base, base);
    m >>= 1;
  }
  if (negative) result = neg(result);
  return RingElement(shared_from_this(), result);
}

RingElement ChainRing::zero() const { return RingElement(shared_from_this(), 0); }
RingElement ChainRing::one() const { return RingElement(shared_from_this(), 1); }
RingElement ChainRing::gamma() const { return RingElement(shared_from_this(), e_ > 1 ? q_ : 0); }

std::vector<RingElement> ChainRing::representatives() const {
  std::vector<RingElement> out;
  out.reserve(q_);
  for (Code i = 0; i < q_; ++i) out.emplace_back(shared_from_this(), i);
  return out;
}

RingElement ChainRing::teichmuller(FiniteField::Code x) const {
  if (x >= q_) throw Error(ErrorCode::BadIndex, "residue code out of range");
  switch (family_) {
    case Family::PolyU:
    case Family::GaloisRing:
      return RingElement(shared_from_this(), x);
    case Family::IntegerModPE: {
      std::uint64_t v = x;
      for (unsigned step = 0; step <= e_; ++step) {
        const std::uint64_t next = pow_mod(v, p_, char_modulus_);
        if (next == v) return RingElement(shared_from_this(), static_cast<Code>(v));
        v = next;
      }
      throw Error(ErrorCode::InternalConsistency, "Teichmueller iteration did not converge");
    }
  }
  throw Error(ErrorCode::InternalConsistency, "unknown family");
}

std::vector<std::uint32_t> ChainRing::coords(Code a) const {
  std::vector<std::uint32_t> out(e_);
  for (unsigned i = 0; i < e_; ++i) {
    out[i] = a % q_;
    a /= q_;
  }
  return out;
}

ChainRing::Code ChainRing::code_of(std::span<const std::uint32_t> coords) const {
  if (coords.size() > e_) {
    throw Error(ErrorCode::InvalidArgument,
                "expected at most " + std::to_string(e_) + " coordinates for " + name());
  }
  Code code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= q_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range for " + name());
    code = code * q_ + coords[i];
  }
  return code;
}

unsigned ChainRing::valuation(Code a) const {
  unsigned s = 0;
  while (s < e_ && a % q_ == 0) {
    a /= q_;
    ++s;
  }
  return s;
}

ChainRing::Code ChainRing::neg(Code a) const {
  switch (family_) {
    case Family::IntegerModPE:
      return a == 0 ? 0 : static_cast<Code>(char_modulus_ - a);
    case Family::PolyU: {
      Code out = 0, scale = 1;
      for (unsigned i = 0; i < e_; ++i) {
        out += field_.neg(a % q_) * scale;
        a /= q_;
        scale *= q_;
      }
      return out;
    }
    case Family::GaloisRing: {
      Native v = gr_decode(a);
      for (auto& c : v) c = c == 0 ? 0 : char_modulus_ - c;
      return gr_encode(std::move(v));
    }
  }
  return 0;
}

ChainRing::Code ChainRing::add_slow(Code a, Code b) const {
  switch (family_) {
    case Family::IntegerModPE:
      return static_cast<Code>((std::uint64_t{a} + b) % char_modulus_);
    case Family::PolyU: {
      Code out = 0, scale = 1;
      for (unsigned i = 0; i < e_; ++i) {
        out += field_.add(a % q_, b % q_) * scale;
        a /= q_;
        b /= q_;
        scale *= q_;
      }
      return out;
    }
    case Family::GaloisRing: {
      Native x = gr_decode(a);
      const Native y = gr_decode(b);
      for (unsigned i = 0; i < r_; ++i) x[i] = (x[i] + y[i]) % char_modulus_;
      return gr_encode(std::move(x));
    }
  }
  return 0;
}

ChainRing::Code ChainRing::mul_slow(Code a, Code b) const {
  switch (family_) {
    case Family::IntegerModPE:
      return static_cast<Code>(std::uint64_t{a} * b % char_modulus_);
    case Family::PolyU: {
      const auto x = coords(a);
      const auto y = coords(b);
      std::vector<std::uint32_t> z(e_, 0);
      for (unsigned i = 0; i < e_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; i + j < e_; ++j) {
          z[i + j] = field_.add(z[i + j], field_.mul(x[i], y[j]));
        }
      }
      return code_of(z);
    }
    case Family::GaloisRing:
      return gr_encode(gr_mul(gr_decode(a), gr_decode(b)));
  }
  return 0;
}

ChainRing::Code ChainRing::pow(Code a, std::uint64_t exp) const {
  Code result = 1, base = a;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    exp >>= 1;
    if (exp) base = mul(base, base);
  }
  return result;
}

ChainRing::Code ChainRing::inverse(Code a) const {
  if (!is_unit(a)) throw Error(ErrorCode::NotAUnit, format(a) + " is not a unit in " + name());
  // Residue-field inverse lifted to a representative, then y <- y(2 - ay) doubles the
  // gamma-adic precision each round.
  Code y = field_.inv(residue(a));
  const Code two = add(1, 1);
  for (unsigned precision = 1;; precision *= 2) {
    if (mul(a, y) == 1) return y;
    if (precision >= 2 * e_) break;
    y = mul(y, sub(two, mul(a, y)));
  }
  throw Error(ErrorCode::InternalConsistency, "Newton inversion failed in " + name());
}

std::string ChainRing::format(Code a) const {
  switch (family_) {
    case Family::IntegerModPE:
      return std::to_string(a);
    case Family::PolyU: {
      const auto c = coords(a);
      std::string out;
      for (unsigned i = 0; i < e_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string coeff = field_.to_string(c[i]);
        if (r_ > 1 && i > 0 && coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
        if (i == 0) {
          out += coeff;
        } else {
          if (coeff != "1") out += coeff;
          out += "u";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      return out.empty() ? "0" : out;
    }
    case Family::GaloisRing: {
      const Native v = gr_decode(a);
      if (r_ == 1) return std::to_string(v[0]);
      std::string out;
      for (unsigned i = 0; i < r_; ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(v[i]);
        } else {
          if (v[i] != 1) out += std::to_string(v[i]);
          out += "x";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

ChainRing::Native ChainRing::gr_decode(Code a) const {
  Native out(r_, 0);
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    const Native& t = gr_teichmuller_[a % q_];
    for (unsigned j = 0; j < r_; ++j) out[j] = (out[j] + t[j] * scale) % char_modulus_;
    a /= q_;
    scale *= p_;
  }
  return out;
}

ChainRing::Code ChainRing::gr_encode(Native a) const {
  Code code = 0, scale = 1;
  std::vector<std::uint32_t> digits(r_);
  for (unsigned i = 0; i < e_; ++i) {
    for (unsigned j = 0; j < r_; ++j) digits[j] = static_cast<std::uint32_t>(a[j] % p_);
    const FiniteField::Code d = field_.from_digits(digits);
    code += d * scale;
    scale *= q_;
    const Native& t = gr_teichmuller_[d];
    for (unsigned j = 0; j < r_; ++j) {
      // a - t is divisible by p; the quotient is only needed modulo p^{e-1-i}.
      a[j] = ((a[j] + char_modulus_ - t[j]) % char_modulus_) / p_;
    }
  }
  return code;
}

ChainRing::Native ChainRing::gr_mul(const Native& a, const Native& b) const {
  const std::uint64_t m = char_modulus_;
  Native prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a[i]) * b[j] + prod[i + j]) % m);
    }
  }
  // Reduce by the monic modulus from the top degree down.
  for (std::size_t k = prod.size(); k-- > r_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i < r_; ++i) {
      const auto term = static_cast<std::uint64_t>(static_cast<unsigned __int128>(lead) * gr_modulus_[i] % m);
      auto& c = prod[k - r_ + i];
      c = (c + m - term) % m;
    }
    prod[k] = 0;
  }
  prod.resize(r_);
  return prod;
}

ChainRing::Native ChainRing::gr_pow(Native a, std::uint64_t exp) const {
  Native result(r_, 0);
  result[0] = 1 % char_modulus_;
  while (exp) {
    if (exp & 1) result = gr_mul(result, a);
    exp >>= 1;
    if (exp) a = gr_mul(a, a);
  }
  return result;
}

RingElement::RingElement(RingPtr ring, Code code) : ring_(std::move(ring)), code_(code) {
  if (!ring_) throw Error(ErrorCode::InvalidArgument, "element without a ring");
}

void require_same_ring(const ChainRing& x, const ChainRing& y) {
  if (&x != &y && !x.same_as(y)) {
    throw Error(ErrorCode::RingMismatch, x.name() + " vs " + y.name());
  }
}

void require_same_ring(const RingElement& x, const RingElement& y) { require_same_ring(*x.ring(), *y.ring()); }

bool operator==(const RingElement& x, const RingElement& y) {
  return x.code_ == y.code_ && (x.ring_ == y.ring_ || x.ring_->same_as(*y.ring_));
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring_, x.ring_->add(x.code_, y.code_)};
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring_, x.ring_->sub(x.code_, y.code_)};
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  return {x.ring_, x.ring_->mul(x.code_, y.code_)};
}

RingElement operator-(const RingElement& x) { return {x.ring_, x.ring_->neg(x.code_)}; }

bool is_unit(const RingElement& x) { return x.ring()->is_unit(x.code()); }

RingElement inverse(const RingElement& x) { return {x.ring(), x.ring()->inverse(x.code())}; }

ValUnitDecomposition valuation(const RingElement& x) {
  const auto& ring = *x.ring();
  const unsigned s = ring.valuation(x.code());
  if (s == ring.e()) return {s, std::nullopt};
  // Shifting the coordinates down by s gives a unit b with x = gamma^s b.
  std::uint64_t shift = 1;
  for (unsigned i = 0; i < s; ++i) shift *= ring.q();
  return {s, RingElement(x.ring(), static_cast<ChainRing::Code>(x.code() / shift))};
}

FieldElement residue(const RingElement& x) { return x.ring()->residue_field().element(x.ring()->residue(x.code())); }

void enforce_enumeration_cap(const ChainRing& ring, std::uint64_t cap) {
  if (ring.order() > cap) {
    throw Error(ErrorCode::TooLarge,
                ring.name() + " has " + std::to_string(ring.order()) + " elements, cap is " + std::to_string(cap));
  }
}

QuotientMap::QuotientMap(RingPtr source, RingPtr target)
    : source_(std::move(source)), target_(std::move(target)), modulus_(target_->order()) {}

RingElement QuotientMap::operator()(const RingElement& x) const {
  require_same_ring(*x.ring(), *source_);
  return RingElement(target_, static_cast<ChainRing::Code>(x.code() % modulus_));
}

QuotientMap quotient(const RingPtr& ring, unsigned i) {
  if (i < 1 || i > ring->e()) {
    throw Error(ErrorCode::BadIndex,
                "quotient index " + std::to_string(i) + " outside [1, " + std::to_string(ring->e()) + "]");
  }
  if (i == ring->e()) return QuotientMap(ring, ring);
  return QuotientMap(ring, ChainRing::make(ring->family(), ring->p(), i, ring->r()));
}

RingElement root_of_unity(const RingPtr& ring, std::uint64_t n) {
  const std::uint64_t group = ring->q() - 1;
  if (n == 0 || group % n != 0) {
    throw Error(ErrorCode::NoRoot,
                std::to_string(n) + " does not divide q-1 = " + std::to_string(group) + " in " + ring->name());
  }
  const RingElement xi = ring->teichmuller(ring->residue_field().generator());
  return xi.pow(group / n);
}

std::uint64_t multiplicative_order(const RingElement& x) {
  if (!is_unit(x)) throw Error(ErrorCode::NotAUnit, x.to_string() + " has no multiplicative order");
  const auto& ring = *x.ring();
  RingElement::Code power = x.code();
  std::uint64_t k = 1;
  while (power != 1) {
    power = ring.mul(power, x.code());
    ++k;
  }
  return k;
}

}  // namespace chainring
