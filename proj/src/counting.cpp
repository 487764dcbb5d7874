#include "chainring/counting.hpp"

#include <charconv>
#include <numeric>
#include <vector>

#include "chainring/error.hpp"

namespace chainring {

DetClass DetClass::of_valuation(unsigned s, unsigned e) {
  if (s > e) throw Error(ErrorCode::InvalidArgument, "valuation exceeds nilpotency index");
  if (s == e) return zero();
  if (s == 0) return unit();
  return gamma_pow(s);
}

unsigned DetClass::valuation(unsigned e) const {
  switch (kind) {
    case Kind::Unit: return 0;
    case Kind::GammaPow: return s;
    case Kind::Zero: return e;
  }
  return e;
}

std::string to_string(const DetClass& c) {
  switch (c.kind) {
    case DetClass::Kind::Unit: return "unit";
    case DetClass::Kind::GammaPow: return "gamma^" + std::to_string(c.s);
    case DetClass::Kind::Zero: return "zero";
  }
  return "?";
}

DetClass parse_det_class(std::string_view text) {
  if (text == "unit") return DetClass::unit();
  if (text == "zero") return DetClass::zero();
  constexpr std::string_view prefix = "gamma^";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    unsigned s = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && s >= 1) {
      return DetClass::gamma_pow(s);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown determinant class '" + std::string(text) + "'");
}

void CountQuery::validate() const {
  if (!as_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "e must be >= 1");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (det_class.kind == DetClass::Kind::GammaPow && (det_class.s < 1 || det_class.s >= e)) {
    throw Error(ErrorCode::InvalidArgument,
                "gamma^" + std::to_string(det_class.s) + " needs 1 <= s < e = " + std::to_string(e));
  }
}

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Recursion: return "recursion";
    case CountMethod::Enumeration: return "enumeration";
  }
  return "?";
}

BigInt unit_count(std::uint64_t q, unsigned e) { return BigInt(q - 1) * big_pow(q, e - 1); }

BigInt class_size(std::uint64_t q, unsigned e, const DetClass& c) {
  const unsigned s = c.valuation(e);
  if (s == e) return 1;
  return BigInt(q - 1) * big_pow(q, e - 1 - s);
}

namespace {

// (q-1)^{n-1} q^{(e-1)(n-1)}
BigInt d_unit(std::uint64_t q, unsigned e, unsigned n) {
  return big_pow(q - 1, n - 1) * big_pow(q, std::uint64_t{e - 1} * (n - 1));
}

// q^{ne} - sum_{i<e} (q-1)^n C(n+i-1, n-1) q^{(e-1)n - i}
BigInt d_zero(std::uint64_t q, unsigned e, unsigned n) {
  BigInt sum = 0;
  const BigInt unit_part = big_pow(q - 1, n);
  for (unsigned i = 0; i < e; ++i) {
    sum += unit_part * binomial(n + i - 1, n - 1) * big_pow(q, std::uint64_t{e - 1} * n - i);
  }
  return big_pow(q, std::uint64_t{n} * e) - sum;
}

// q^{(e-1)(n-1)} (q-1)^{n-1} C(n+s-1, n-1)
BigInt d_gamma(std::uint64_t q, unsigned e, unsigned n, unsigned s) {
  return big_pow(q, std::uint64_t{e - 1} * (n - 1)) * big_pow(q - 1, n - 1) * binomial(n + s - 1, n - 1);
}

BigInt d_value(const CountQuery& query) {
  switch (query.det_class.kind) {
    case DetClass::Kind::Unit: return d_unit(query.q, query.e, query.n);
    case DetClass::Kind::Zero: return d_zero(query.q, query.e, query.n);
    case DetClass::Kind::GammaPow: return d_gamma(query.q, query.e, query.n, query.det_class.s);
  }
  return 0;
}

}  // namespace

CountResult d_count(const CountQuery& query) {
  query.validate();
  return CountResult::formula(d_value(query));
}

BigInt d_zero_recursive(std::uint64_t q, unsigned e, unsigned n) {
  if (!as_prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (e < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "e and n must be >= 1");
  // table[f][k] = d_k(R / gamma^f R, 0)
  std::vector<std::vector<BigInt>> table(e + 1, std::vector<BigInt>(n + 1));
  for (unsigned k = 1; k <= n; ++k) table[1][k] = big_pow(q, k) - big_pow(q - 1, k);
  for (unsigned f = 2; f <= e; ++f) {
    table[f][1] = 1;
    const BigInt units = unit_count(q, f);
    for (unsigned k = 2; k <= n; ++k) {
      table[f][k] = units * table[f][k - 1] + big_pow(q, k - 1) * table[f - 1][k];
    }
  }
  return table[e][n];
}

BigInt nsd_count(std::uint64_t q, unsigned e, unsigned n) {
  return big_pow(q - 1, n) * big_pow(q, std::uint64_t{e - 1} * n);
}

BigInt nsc_count_field(std::uint64_t q, unsigned n) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  unsigned coprime_part = n;
  while (coprime_part % pp->p == 0) coprime_part /= static_cast<unsigned>(pp->p);
  BigInt result = big_pow(q, n - coprime_part);
  for (auto d : divisors(coprime_part)) {
    const std::uint64_t ord = mult_order(q, d);
    result *= boost::multiprecision::pow(big_pow(q, ord) - 1, static_cast<unsigned>(euler_phi(d) / ord));
  }
  return result;
}

BigInt nsc_count_ring(std::uint64_t q, unsigned e, unsigned n) {
  if (std::gcd(std::uint64_t{n}, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(q));
  }
  return big_pow(q, std::uint64_t{e - 1} * n) * nsc_count_field(q, n);
}

CountResult c_count(const CountQuery& query) {
  query.validate();
  const auto q = query.q;
  const auto n = query.n;
  if (query.det_class.kind == DetClass::Kind::Unit) {
    if (std::gcd(std::uint64_t{n}, q) != 1) return CountResult::open("open problem: gcd(n,q) != 1");
    const BigInt total = nsc_count_ring(q, query.e, n);
    const BigInt units = unit_count(q, query.e);
    if (total % units != 0) {
      throw Error(ErrorCode::InternalConsistency, "|NSC_n(R)| is not divisible by |U(R)|");
    }
    return CountResult::formula(total / units);
  }
  if ((q - 1) % n != 0) return CountResult::open("open problem: n does not divide q-1");
  return CountResult::formula(d_value(query));
}

bool d_quotient_reduction_check(std::uint64_t q, unsigned e, unsigned f, unsigned n, unsigned s) {
  if (e < 2 || s < 1 || s >= e) throw Error(ErrorCode::InvalidArgument, "needs e >= 2 and 1 <= s < e");
  const auto big = d_count({q, e + f, n, DetClass::gamma_pow(s)});
  const auto small = d_count({q, e, n, DetClass::gamma_pow(s)});
  return *big.value == big_pow(q, std::uint64_t{f} * (n - 1)) * *small.value;
}

}  // namespace chainring
