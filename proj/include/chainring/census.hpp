#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainring/chain_ring.hpp"
#include "chainring/counting.hpp"
#include "chainring/enumeration.hpp"

namespace chainring {

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Circulants with n | q-1 may use the eigenvalue product, after it has matched the
  /// division-free determinant on the first kCrossCheckPrefix candidates of the same run.
  bool eigenvalue_fast_path = false;
};

inline constexpr std::uint64_t kCrossCheckPrefix = 4096;

/// CENSUS_MAX_ENUM when set to a positive integer, else kDefaultEnumerationCap.
std::uint64_t cap_from_environment();

/// Exact determinant census of all n x n diagonal or circulant matrices over a ring.
struct DetTally {
  RingPtr ring;
  std::size_t n = 0;
  Shape shape = Shape::Diagonal;
  std::vector<std::uint64_t> by_element;  // indexed by element code
  bool used_eigenvalue_path = false;

  std::uint64_t count(const RingElement& a) const;
  /// Push-forward of by_element along the valuation; index s in [0, e].
  std::vector<std::uint64_t> by_valuation() const;
  std::uint64_t total() const;
};

/// Throws TooLarge when |R|^n exceeds options.cap.
DetTally enumerate_tally(const RingPtr& ring, std::size_t n, Shape shape, const EnumerationOptions& options = {});

enum class ImageMode {
  Full,          // every matrix of the shape
  TwoParameter,  // only the rows / diagonals (a, b, b, ..., b): q^{2e} candidates
};

std::string_view to_string(ImageMode mode);
ImageMode parse_image_mode(std::string_view text);

/// Attained determinants, in code order.
std::vector<RingElement> det_image(const RingPtr& ring, std::size_t n, Shape shape, ImageMode mode,
                                   const EnumerationOptions& options = {});

struct OrbitCounterexample {
  unsigned s = 0;
  RingElement a;
  RingElement b;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
};

struct OrbitCheck {
  bool holds = true;
  /// Strict positivity of every count was also required (circulant with gcd(n, q) = 1).
  bool positivity_checked = false;
  std::optional<OrbitCounterexample> counterexample;
  std::optional<RingElement> unattained;  // first zero count when positivity was checked
};

/// Is the tally constant on every class {b gamma^s : b a unit}?
OrbitCheck unit_orbit_check(const DetTally& tally);
OrbitCheck unit_orbit_check(const RingPtr& ring, std::size_t n, Shape shape, const EnumerationOptions& options = {});

// -- verification reports ------------------------------------------------------------------

struct FormulaEntry {
  enum class State { Value, Open, Skipped };
  State state = State::Skipped;
  BigInt value;
  std::string note;  // open-problem reason

  friend bool operator==(const FormulaEntry&, const FormulaEntry&) = default;
};

struct OracleEntry {
  enum class State { Uniform, Varies, Skipped };
  State state = State::Skipped;
  BigInt value;      // count at the class representative
  std::string note;  // why the oracle was skipped

  friend bool operator==(const OracleEntry&, const OracleEntry&) = default;
};

/// One (ring, n, shape, class) comparison between a closed form and the enumeration.
/// Product rings carry one q, e and class per factor.
struct VerificationCell {
  std::string ring;
  std::vector<std::uint64_t> q;
  std::vector<unsigned> e;
  unsigned n = 0;
  Shape shape = Shape::Diagonal;
  std::vector<DetClass> det_class;
  FormulaEntry formula;
  OracleEntry oracle;
  bool match = false;

  bool applicable() const { return formula.state == FormulaEntry::State::Value; }
  /// A closed form applied, the oracle ran, and they disagree.
  bool falsified() const { return applicable() && oracle.state != OracleEntry::State::Skipped && !match; }

  friend bool operator==(const VerificationCell&, const VerificationCell&) = default;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;
  std::optional<double> wall_seconds;

  std::size_t falsified_count() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// match is true iff formula and oracle are both present, the oracle is constant on the class,
/// and the values are equal.
void settle_match(VerificationCell& cell);

FormulaEntry formula_entry(const CountResult& result);

/// One cell per determinant class (unit, gamma^1, ..., zero) of the tally's ring.
/// Unit cells also check |U(R)| * formula against the summed unit tally.
std::vector<VerificationCell> verify_tally(const DetTally& tally);

/// Formula-only cells for the classes of (R, n, shape); the oracle column is skipped with `note`.
std::vector<VerificationCell> formula_cells(const ChainRing& ring, std::size_t n, Shape shape,
                                            const std::string& note = {});
/// Same, for invariants (q, e) without building a ring; `ring` is the label written to the cells.
std::vector<VerificationCell> formula_cells(std::uint64_t q, unsigned e, const std::string& ring, std::size_t n,
                                            Shape shape, const std::string& note = {});

struct GridCell {
  RingPtr ring;
  std::size_t n = 1;
};

/// Cells ordered by grid position, then shape, then class. Cells over the cap are reported with
/// a skipped oracle rather than failing the run.
VerificationReport verify(const std::vector<GridCell>& grid, const std::vector<Shape>& shapes,
                          const EnumerationOptions& options = {});

/// Queries are realized over the Galois ring GR(p^e, r) with q = p^r (Z/p^e when r = 1).
VerificationReport verify(const std::vector<CountQuery>& queries, const std::vector<Shape>& shapes,
                          const EnumerationOptions& options = {});

// -- open-problem scans -------------------------------------------------------------------

enum class Conjecture {
  OrbitWithoutGcd,  // circulant counts constant on unit-association classes when gcd(n, q) != 1
  UnitCoverage,     // every unit is a circulant determinant
};

std::string_view to_string(Conjecture c);
Conjecture parse_conjecture(std::string_view text);

enum class ScanStatus { Consistent, Counterexample, NotOpen, Skipped };

std::string_view to_string(ScanStatus s);
ScanStatus parse_scan_status(std::string_view text);

struct ScanEntry {
  std::string ring;
  std::uint64_t q = 0;
  unsigned e = 0;
  unsigned n = 0;
  ScanStatus status = ScanStatus::Skipped;
  std::string detail;

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

struct ConjectureReport {
  Conjecture which = Conjecture::OrbitWithoutGcd;
  std::vector<ScanEntry> entries;

  bool found_counterexample() const;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Cells with gcd(n, q) = 1 are covered by theorems and reported as NotOpen without enumeration.
ConjectureReport conjecture_scan(Conjecture which, const std::vector<GridCell>& grid,
                                 const EnumerationOptions& options = {});

}  // namespace chainring
