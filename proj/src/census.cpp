#include "chainring/census.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "chainring/determinant.hpp"
#include "chainring/error.hpp"

namespace chainring {

using Code = ChainRing::Code;

std::string_view to_string(Shape shape) { return shape == Shape::Diagonal ? "diagonal" : "circulant"; }

Shape parse_shape(std::string_view text) {
  if (text == "diagonal") return Shape::Diagonal;
  if (text == "circulant") return Shape::Circulant;
  throw Error(ErrorCode::InvalidArgument, "unknown shape '" + std::string(text) + "'");
}

std::uint64_t cap_from_environment() {
  const char* raw = std::getenv("CENSUS_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("CENSUS_MAX_ENUM must be a positive integer, got '") + raw + "'");
  }
  return value;
}

namespace {


// prod_j sum_i a_i omega^{ij}, valid when omega is a primitive n-th root of unity in R.
class EigenvalueDet {
 public:
  EigenvalueDet(const ChainRing& ring, std::size_t n, Code omega) : ring_(&ring), n_(n), powers_(n) {
    powers_[0] = 1;
    for (std::size_t k = 1; k < n; ++k) powers_[k] = ring.mul(powers_[k - 1], omega);
  }

  Code operator()(std::span<const Code> row) const {
    Code acc = 1;
    for (std::size_t j = 0; j < n_; ++j) {
      Code w = 0;
      for (std::size_t i = 0; i < n_; ++i) w = ring_->add(w, ring_->mul(row[i], powers_[(i * j) % n_]));
      acc = ring_->mul(acc, w);
    }
    return acc;
  }

 private:
  const ChainRing* ring_;
  std::size_t n_;
  std::vector<Code> powers_;
};

void cross_check_eigenvalue_path(const ChainRing& ring, std::size_t n, Code omega, std::uint64_t total) {
  CirculantDet<ChainRing> reference(ring, n);
  const EigenvalueDet fast(ring, n, omega);
  std::vector<Code> row(n, 0);
  const std::uint64_t limit = std::min(total, kCrossCheckPrefix);
  for (std::uint64_t k = 0; k < limit; ++k) {
    if (reference(row) != fast(row)) {
      throw Error(ErrorCode::InternalConsistency, "eigenvalue determinant disagrees with the division-free determinant over " + ring.name());
    }
    for (std::size_t pos = n; pos-- > 0;) {
      if (++row[pos] < ring.order()) break;
      row[pos] = 0;
    }
  }
}

std::uint64_t q_power(const ChainRing& ring, unsigned s) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < s; ++i) v *= ring.q();
  return v;
}

// Representative of the class: gamma^s, whose only nonzero coordinate is a 1 in slot s.
Code class_representative(const ChainRing& ring, unsigned s) {
  return s >= ring.e() ? 0 : static_cast<Code>(q_power(ring, s));
}

std::vector<DetClass> classes_of(unsigned e) {
  std::vector<DetClass> out{DetClass::unit()};
  for (unsigned s = 1; s < e; ++s) out.push_back(DetClass::gamma_pow(s));
  out.push_back(DetClass::zero());
  return out;
}

}  // namespace

std::uint64_t DetTally::count(const RingElement& a) const {
  require_same_ring(*a.ring(), *ring);
  return by_element[a.code()];
}

std::vector<std::uint64_t> DetTally::by_valuation() const {
  std::vector<std::uint64_t> out(ring->e() + 1, 0);
  for (Code c = 0; c < by_element.size(); ++c) out[ring->valuation(c)] += by_element[c];
  return out;
}

std::uint64_t DetTally::total() const { return std::accumulate(by_element.begin(), by_element.end(), std::uint64_t{0}); }

DetTally enumerate_tally(const RingPtr& ring, std::size_t n, Shape shape, const EnumerationOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const std::uint64_t total = candidate_count(ring->order(), n, options.cap);
  const ChainRing& r = *ring;
  DetTally tally{ring, n, shape, {}, false};
  if (shape == Shape::Diagonal) {
    tally.by_element = parallel_tally<Code>(r.order(), n, options.threads, [&r] { return DiagonalDet<ChainRing>(r); });
    return tally;
  }
  const bool fast = options.eigenvalue_fast_path && n > 1 && (r.q() - 1) % n == 0;
  if (fast) {
    const Code omega = root_of_unity(ring, n).code();
    cross_check_eigenvalue_path(r, n, omega, total);
    tally.by_element = parallel_tally<Code>(r.order(), n, options.threads, [&r, n, omega] { return EigenvalueDet(r, n, omega); });
    tally.used_eigenvalue_path = true;
  } else {
    tally.by_element = parallel_tally<Code>(r.order(), n, options.threads, [&r, n] { return CirculantDet<ChainRing>(r, n); });
  }
  return tally;
}

std::string_view to_string(ImageMode mode) { return mode == ImageMode::Full ? "full" : "cheap"; }

ImageMode parse_image_mode(std::string_view text) {
  if (text == "full") return ImageMode::Full;
  if (text == "cheap") return ImageMode::TwoParameter;
  throw Error(ErrorCode::InvalidArgument, "unknown image mode '" + std::string(text) + "'");
}

std::vector<RingElement> det_image(const RingPtr& ring, std::size_t n, Shape shape, ImageMode mode,
                                   const EnumerationOptions& options) {
  std::vector<bool> attained(ring->order(), false);
  if (mode == ImageMode::Full) {
    const DetTally tally = enumerate_tally(ring, n, shape, options);
    for (Code c = 0; c < ring->order(); ++c) attained[c] = tally.by_element[c] > 0;
  } else {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    candidate_count(ring->order(), std::min<std::size_t>(n, 2), options.cap);
    const DiagonalDet<ChainRing> diagonal(*ring);
    CirculantDet<ChainRing> circulant(*ring, n);
    std::vector<Code> row(n);
    for (Code a = 0; a < ring->order(); ++a) {
      for (Code b = 0; b < (n == 1 ? 1 : ring->order()); ++b) {
        row.assign(n, b);
        row[0] = a;
        attained[shape == Shape::Diagonal ? diagonal(row) : circulant(row)] = true;
      }
    }
  }
  std::vector<RingElement> out;
  for (Code c = 0; c < ring->order(); ++c) {
    if (attained[c]) out.emplace_back(ring, c);
  }
  return out;
}

OrbitCheck unit_orbit_check(const DetTally& tally) {
  const ChainRing& ring = *tally.ring;
  OrbitCheck result;
  for (unsigned s = 0; s < ring.e() && !result.counterexample; ++s) {
    const Code rep = class_representative(ring, s);
    for (Code c = 0; c < ring.order(); ++c) {
      if (ring.valuation(c) != s || tally.by_element[c] == tally.by_element[rep]) continue;
      result.counterexample =
          OrbitCounterexample{s, RingElement(tally.ring, rep), RingElement(tally.ring, c), tally.by_element[rep], tally.by_element[c]};
      break;
    }
  }
  if (tally.shape == Shape::Circulant && std::gcd(std::uint64_t{tally.n}, std::uint64_t{ring.q()}) == 1) {
    result.positivity_checked = true;
    for (Code c = 0; c < ring.order(); ++c) {
      if (tally.by_element[c] == 0) {
        result.unattained = RingElement(tally.ring, c);
        break;
      }
    }
  }
  result.holds = !result.counterexample && !result.unattained;
  return result;
}

OrbitCheck unit_orbit_check(const RingPtr& ring, std::size_t n, Shape shape, const EnumerationOptions& options) {
  return unit_orbit_check(enumerate_tally(ring, n, shape, options));
}

std::size_t VerificationReport::falsified_count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.falsified(); }));
}

void settle_match(VerificationCell& cell) {
  cell.match = cell.formula.state == FormulaEntry::State::Value && cell.oracle.state == OracleEntry::State::Uniform &&
               cell.formula.value == cell.oracle.value;
}

FormulaEntry formula_entry(const CountResult& result) {
  if (result.applicable && result.value) return {FormulaEntry::State::Value, *result.value, {}};
  constexpr std::string_view prefix = "open problem: ";
  std::string note = result.reason;
  if (note.starts_with(prefix)) note.erase(0, prefix.size());
  return {FormulaEntry::State::Open, 0, note};
}

namespace {

VerificationCell blank_cell(std::uint64_t q, unsigned e, const std::string& ring, std::size_t n, Shape shape,
                            const DetClass& cls) {
  VerificationCell cell;
  cell.ring = ring;
  cell.q = {q};
  cell.e = {e};
  cell.n = static_cast<unsigned>(n);
  cell.shape = shape;
  cell.det_class = {cls};
  const CountQuery query{q, e, static_cast<unsigned>(n), cls};
  cell.formula = formula_entry(shape == Shape::Diagonal ? d_count(query) : c_count(query));
  return cell;
}

}  // namespace

std::vector<VerificationCell> formula_cells(const ChainRing& ring, std::size_t n, Shape shape, const std::string& note) {
  return formula_cells(ring.q(), ring.e(), ring.name(), n, shape, note);
}

std::vector<VerificationCell> formula_cells(std::uint64_t q, unsigned e, const std::string& ring, std::size_t n,
                                            Shape shape, const std::string& note) {
  std::vector<VerificationCell> out;
  for (const auto& cls : classes_of(e)) {
    auto cell = blank_cell(q, e, ring, n, shape, cls);
    cell.oracle = {OracleEntry::State::Skipped, 0, note};
    settle_match(cell);
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<VerificationCell> verify_tally(const DetTally& tally) {
  const ChainRing& ring = *tally.ring;
  std::vector<VerificationCell> out;
  for (const auto& cls : classes_of(ring.e())) {
    auto cell = blank_cell(ring.q(), ring.e(), ring.name(), tally.n, tally.shape, cls);
    const unsigned s = cls.valuation(ring.e());
    const std::uint64_t rep_count = tally.by_element[class_representative(ring, s)];
    bool uniform = true;
    std::uint64_t class_sum = 0;
    for (Code c = 0; c < ring.order(); ++c) {
      if (ring.valuation(c) != s) continue;
      uniform = uniform && tally.by_element[c] == rep_count;
      class_sum += tally.by_element[c];
    }
    cell.oracle = {uniform ? OracleEntry::State::Uniform : OracleEntry::State::Varies, rep_count, {}};
    settle_match(cell);
    if (cell.match && BigInt(class_sum) != class_size(ring.q(), ring.e(), cls) * cell.formula.value) cell.match = false;
    out.push_back(std::move(cell));
  }
  return out;
}

VerificationReport verify(const std::vector<GridCell>& grid, const std::vector<Shape>& shapes,
                          const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  for (const auto& cell : grid) {
    for (Shape shape : shapes) {
      std::vector<VerificationCell> cells;
      try {
        cells = verify_tally(enumerate_tally(cell.ring, cell.n, shape, options));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::TooLarge) throw;
        cells = formula_cells(*cell.ring, cell.n, shape, "too large");
      }
      report.cells.insert(report.cells.end(), cells.begin(), cells.end());
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(const std::vector<CountQuery>& queries, const std::vector<Shape>& shapes,
                          const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::map<std::tuple<std::uint64_t, unsigned, unsigned, Shape>, std::vector<VerificationCell>> cache;
  VerificationReport report;
  for (const auto& query : queries) {
    query.validate();
    const auto pp = *as_prime_power(query.q);
    for (Shape shape : shapes) {
      const auto key = std::make_tuple(query.q, query.e, query.n, shape);
      auto it = cache.find(key);
      if (it == cache.end()) {
        const RingPtr ring = pp.k == 1 ? ChainRing::make(Family::IntegerModPE, pp.p, query.e)
                                       : ChainRing::make(Family::GaloisRing, pp.p, query.e, pp.k);
        std::vector<VerificationCell> cells;
        try {
          cells = verify_tally(enumerate_tally(ring, query.n, shape, options));
        } catch (const Error& err) {
          if (err.code() != ErrorCode::TooLarge) throw;
          cells = formula_cells(*ring, query.n, shape, "too large");
        }
        it = cache.emplace(key, std::move(cells)).first;
      }
      for (const auto& cell : it->second) {
        if (cell.det_class.front() == query.det_class) report.cells.push_back(cell);
      }
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string_view to_string(Conjecture c) {
  return c == Conjecture::OrbitWithoutGcd ? "orbit-without-gcd" : "unit-coverage";
}

Conjecture parse_conjecture(std::string_view text) {
  if (text == "orbit-without-gcd") return Conjecture::OrbitWithoutGcd;
  if (text == "unit-coverage") return Conjecture::UnitCoverage;
  throw Error(ErrorCode::InvalidArgument, "unknown conjecture '" + std::string(text) + "'");
}

std::string_view to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Consistent: return "consistent";
    case ScanStatus::Counterexample: return "counterexample";
    case ScanStatus::NotOpen: return "not-open";
    case ScanStatus::Skipped: return "skipped";
  }
  return "?";
}

ScanStatus parse_scan_status(std::string_view text) {
  for (auto s : {ScanStatus::Consistent, ScanStatus::Counterexample, ScanStatus::NotOpen, ScanStatus::Skipped}) {
    if (text == to_string(s)) return s;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scan status '" + std::string(text) + "'");
}

bool ConjectureReport::found_counterexample() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == ScanStatus::Counterexample; });
}

ConjectureReport conjecture_scan(Conjecture which, const std::vector<GridCell>& grid, const EnumerationOptions& options) {
  ConjectureReport report{which, {}};
  for (const auto& cell : grid) {
    const ChainRing& ring = *cell.ring;
    ScanEntry entry{ring.name(), ring.q(), ring.e(), static_cast<unsigned>(cell.n), ScanStatus::Skipped, {}};
    if (std::gcd(std::uint64_t{cell.n}, std::uint64_t{ring.q()}) == 1) {
      entry.status = ScanStatus::NotOpen;
      entry.detail = "gcd(n,q) = 1";
      report.entries.push_back(std::move(entry));
      continue;
    }
    DetTally tally;
    try {
      tally = enumerate_tally(cell.ring, cell.n, Shape::Circulant, options);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::TooLarge) throw;
      entry.detail = "too large";
      report.entries.push_back(std::move(entry));
      continue;
    }
    if (which == Conjecture::OrbitWithoutGcd) {
      const OrbitCheck check = unit_orbit_check(tally);
      if (check.counterexample) {
        const auto& ce = *check.counterexample;
        entry.status = ScanStatus::Counterexample;
        entry.detail = "valuation " + std::to_string(ce.s) + ": c(" + ce.a.to_string() + ") = " +
                       std::to_string(ce.count_a) + " but c(" + ce.b.to_string() + ") = " + std::to_string(ce.count_b);
      } else {
        entry.status = ScanStatus::Consistent;
        entry.detail = "constant on all " + std::to_string(ring.e() + 1) + " valuation classes";
      }
    } else {
      entry.status = ScanStatus::Consistent;
      entry.detail = "all units attained";
      for (Code c = 0; c < ring.order(); ++c) {
        if (ring.is_unit(c) && tally.by_element[c] == 0) {
          entry.status = ScanStatus::Counterexample;
          entry.detail = "unit " + ring.format(c) + " is not a circulant determinant";
          break;
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace chainring
