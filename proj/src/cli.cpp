#include "chainring/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "chainring/census.hpp"
#include "chainring/error.hpp"
#include "chainring/product_ring.hpp"
#include "chainring/report.hpp"
#include "chainring/ring_spec.hpp"

namespace chainring::cli {
namespace {

struct Common {
  std::string emit = "json";
  std::optional<std::uint64_t> max_enum;
  unsigned threads = 1;
  bool timing = false;
  bool eigen_fast_path = false;

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.cap = max_enum ? *max_enum : cap_from_environment();
    o.threads = threads;
    o.eigenvalue_fast_path = eigen_fast_path;
    return o;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Shape> shapes_of(const std::string& text) {
  if (text == "both") return {Shape::Diagonal, Shape::Circulant};
  return {parse_shape(text)};
}

std::vector<std::size_t> dimensions(std::optional<unsigned> n, std::optional<unsigned> n_max) {
  if (n && n_max) throw UsageError("--n and --n-max are mutually exclusive");
  if (!n && !n_max) throw UsageError("one of --n or --n-max is required");
  if ((n && *n == 0) || (n_max && *n_max == 0)) throw UsageError("n must be >= 1");
  if (n) return {*n};
  std::vector<std::size_t> out;
  for (unsigned k = 1; k <= *n_max; ++k) out.push_back(k);
  return out;
}

std::vector<std::string> split_on(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    std::string part = text.substr(start, at == std::string::npos ? std::string::npos : at - start);
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    out.push_back(part);
    if (at == std::string::npos) return out;
    start = at + sep.size();
  }
}

/// A class name, or a concrete element given as "[a_0,...,a_{e-1}]".
struct ClassSpec {
  DetClass cls;
  std::optional<RingElement> element;
};

ClassSpec parse_class_spec(const RingPtr& ring, const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw UsageError("coordinate list must end with ']': " + text);
    std::vector<std::uint32_t> coords;
    const std::string inner = text.substr(1, text.size() - 2);
    if (!inner.empty()) {
      for (const auto& part : split_on(inner, ",")) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
          throw UsageError("bad coordinate '" + part + "' in " + text);
        }
        coords.push_back(static_cast<std::uint32_t>(std::stoul(part)));
      }
    }
    if (coords.size() != ring->e()) {
      throw UsageError(ring->name() + " elements have " + std::to_string(ring->e()) + " coordinates");
    }
    for (auto c : coords) {
      if (c >= ring->q()) throw UsageError("coordinate " + std::to_string(c) + " is not below q = " + std::to_string(ring->q()));
    }
    RingElement a = ring->from_coords(coords);
    return {DetClass::of_valuation(ring->valuation(a.code()), ring->e()), a};
  }
  const DetClass cls = parse_det_class(text);
  if (cls.kind == DetClass::Kind::GammaPow && (cls.s == 0 || cls.s >= ring->e())) {
    throw UsageError("gamma^" + std::to_string(cls.s) + " needs 1 <= s < e = " + std::to_string(ring->e()) + " for " +
                     ring->name());
  }
  return {cls, std::nullopt};
}

void emit(std::ostream& out, const Common& common, VerificationReport report) {
  if (!common.timing) report.wall_seconds.reset();
  out << (common.emit == "csv" ? to_csv(report) : to_json(report));
}

const std::string kNotRequested = "not requested";

// -- count -------------------------------------------------------------------------------

struct CountArgs {
  std::string ring;
  unsigned n = 0;
  std::string shape;
  std::string cls;
  std::string method = "both";
};

VerificationCell chain_count(const RingPtr& ring, const CountArgs& a, const Common& common) {
  const Shape shape = parse_shape(a.shape);
  const ClassSpec spec = parse_class_spec(ring, a.cls);
  const bool want_formula = a.method != "enumeration";
  const bool want_oracle = a.method != "formula";
  auto pick = [&](const std::vector<VerificationCell>& cells) {
    return *std::find_if(cells.begin(), cells.end(), [&](const auto& c) { return c.det_class.front() == spec.cls; });
  };
  VerificationCell cell;
  if (want_oracle) {
    const DetTally tally = enumerate_tally(ring, a.n, shape, common.options());
    cell = pick(verify_tally(tally));
    if (spec.element) cell.oracle.value = tally.by_element[spec.element->code()];
  } else {
    cell = pick(formula_cells(*ring, a.n, shape, kNotRequested));
  }
  if (!want_formula) cell.formula = {FormulaEntry::State::Skipped, 0, kNotRequested};
  settle_match(cell);
  return cell;
}

VerificationCell product_count_cell(const ProductRingPtr& ring, const CountArgs& a, const Common& common) {
  const Shape shape = parse_shape(a.shape);
  const auto parts = a.cls.find(';') != std::string::npos ? split_on(a.cls, ";") : split_on(a.cls, " x ");
  if (parts.size() != ring->size()) {
    throw UsageError("--class needs one entry per factor (" + std::to_string(ring->size()) + "), joined by ' x ' or ';'");
  }
  std::vector<ClassSpec> specs;
  for (std::size_t i = 0; i < parts.size(); ++i) specs.push_back(parse_class_spec(ring->factors()[i], parts[i]));

  VerificationCell cell;
  cell.ring = ring->name();
  cell.n = a.n;
  cell.shape = shape;
  std::vector<CountQuery> queries;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const ChainRing& f = *ring->factors()[i];
    cell.q.push_back(f.q());
    cell.e.push_back(f.e());
    cell.det_class.push_back(specs[i].cls);
    queries.push_back({f.q(), f.e(), a.n, specs[i].cls});
  }
  cell.formula = a.method == "enumeration" ? FormulaEntry{FormulaEntry::State::Skipped, 0, kNotRequested}
                                           : formula_entry(product_count(shape, a.n, queries));
  cell.oracle = {OracleEntry::State::Skipped, 0, kNotRequested};
  if (a.method != "formula") {
    const ProductVerification v = product_verify(ring, a.n, {shape}, common.options());
    const auto it = std::find_if(v.report.cells.begin(), v.report.cells.end(),
                                 [&](const auto& c) { return c.det_class == cell.det_class; });
    cell.oracle = it->oracle;
    const ProductTally tally = enumerate_product_tally(ring, a.n, shape, common.options());
    std::vector<ChainRing::Code> rep;
    bool concrete = false;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      concrete = concrete || specs[i].element.has_value();
      const ChainRing& f = *ring->factors()[i];
      if (specs[i].element) {
        rep.push_back(specs[i].element->code());
      } else {
        const unsigned s = specs[i].cls.valuation(f.e());
        rep.push_back(s >= f.e() ? 0 : static_cast<ChainRing::Code>(checked_pow(f.q(), s)));
      }
    }
    if (concrete) cell.oracle.value = tally.by_element[ring->pack(rep)];
  }
  settle_match(cell);
  return cell;
}

int do_count(const CountArgs& a, const Common& common, std::ostream& out) {
  if (a.n == 0) throw UsageError("n must be >= 1");
  const AnyRing ring = parse_ring_spec(a.ring);
  VerificationReport report;
  if (const auto* chain = std::get_if<RingPtr>(&ring)) {
    report.cells.push_back(chain_count(*chain, a, common));
  } else {
    report.cells.push_back(product_count_cell(std::get<ProductRingPtr>(ring), a, common));
  }
  emit(out, common, report);
  return report.falsified_count() > 0 ? kExitFalsified : kExitOk;
}

// -- verify ------------------------------------------------------------------------------

struct VerifyArgs {
  std::string rings;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::string shape = "both";
};

int do_verify(const VerifyArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const auto shapes = shapes_of(a.shape);
  const auto ns = dimensions(a.n, a.n_max);
  std::vector<AnyRing> rings;
  for (const auto& text : split_ring_list(a.rings)) rings.push_back(parse_ring_spec(text));

  const auto options = common.options();
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  bool elementwise_ok = true;
  for (const auto& ring : rings) {
    for (std::size_t n : ns) {
      if (const auto* chain = std::get_if<RingPtr>(&ring)) {
        const auto part = verify({GridCell{*chain, n}}, shapes, options);
        report.cells.insert(report.cells.end(), part.cells.begin(), part.cells.end());
        continue;
      }
      const auto& product = std::get<ProductRingPtr>(ring);
      try {
        const auto v = product_verify(product, n, shapes, options);
        report.cells.insert(report.cells.end(), v.report.cells.begin(), v.report.cells.end());
        if (!v.elementwise_match) {
          elementwise_ok = false;
          err << "FALSIFIED product identity over " << product->name() << ": " << v.first_mismatch << '\n';
        }
      } catch (const Error& error) {
        if (error.code() != ErrorCode::TooLarge) throw;
        err << "skipped " << product->name() << " n=" << n << ": " << error.what() << '\n';
      }
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(out, common, report);
  for (const auto& cell : report.cells) {
    if (cell.falsified()) {
      err << "FALSIFIED " << cell.ring << " n=" << cell.n << " " << to_string(cell.shape) << ": formula "
          << format_formula(cell.formula) << ", oracle " << format_oracle(cell.oracle) << '\n';
    }
  }
  return report.falsified_count() > 0 || !elementwise_ok ? kExitFalsified : kExitOk;
}

// -- det-image ---------------------------------------------------------------------------

struct ImageArgs {
  std::string ring;
  unsigned n = 0;
  std::string shape = "circulant";
  std::string mode = "full";
};

int do_det_image(const ImageArgs& a, const Common& common, std::ostream& out) {
  if (a.n == 0) throw UsageError("n must be >= 1");
  const Shape shape = parse_shape(a.shape);
  const ImageMode mode = parse_image_mode(a.mode);
  const RingPtr ring = parse_chain_ring(a.ring);
  const auto image = det_image(ring, a.n, shape, mode, common.options());
  const auto report = make_det_image_report(ring, a.n, shape, mode, image);
  out << (common.emit == "csv" ? to_csv(report) : to_json(report));
  return kExitOk;
}

// -- conjecture --------------------------------------------------------------------------

struct ConjectureArgs {
  std::string which;
  std::string ring;
  std::string rings;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
};

int do_conjecture(const ConjectureArgs& a, const Common& common, std::ostream& out, std::ostream& err) {
  const Conjecture which = parse_conjecture(a.which);
  if (a.ring.empty() == a.rings.empty()) throw UsageError("exactly one of --ring or --rings is required");
  const auto ns = dimensions(a.n, a.n_max);
  std::vector<GridCell> grid;
  for (const auto& text : a.ring.empty() ? split_ring_list(a.rings) : std::vector<std::string>{a.ring}) {
    const RingPtr ring = parse_chain_ring(text);
    for (std::size_t n : ns) grid.push_back({ring, n});
  }
  const auto report = conjecture_scan(which, grid, common.options());
  out << (common.emit == "csv" ? to_csv(report) : to_json(report));
  if (!report.found_counterexample()) return kExitOk;
  for (const auto& e : report.entries) {
    if (e.status == ScanStatus::Counterexample) {
      err << "COUNTEREXAMPLE to " << to_string(which) << " over " << e.ring << " n=" << e.n << ": " << e.detail << '\n';
    }
  }
  return kExitCounterexample;
}

// -- table -------------------------------------------------------------------------------

struct TableArgs {
  unsigned q_max = 0;
  unsigned e_max = 0;
  unsigned n_max = 0;
  std::string shape = "both";
};

int do_table(const TableArgs& a, const Common& common, std::ostream& out) {
  if (a.q_max < 2 || a.e_max < 1 || a.n_max < 1) throw UsageError("--q-max >= 2, --e-max >= 1 and --n-max >= 1 are required");
  const auto shapes = shapes_of(a.shape);
  VerificationReport report;
  for (std::uint64_t q = 2; q <= a.q_max; ++q) {
    if (!as_prime_power(q)) continue;
    for (unsigned e = 1; e <= a.e_max; ++e) {
      const std::string label = "F" + std::to_string(q) + "[u]/u^" + std::to_string(e);
      for (unsigned n = 1; n <= a.n_max; ++n) {
        for (Shape shape : shapes) {
          const auto cells = formula_cells(q, e, label, n, shape, kNotRequested);
          report.cells.insert(report.cells.end(), cells.begin(), cells.end());
        }
      }
    }
  }
  emit(out, common, report);
  return kExitOk;
}

void add_common(CLI::App& app, Common& common) {
  app.add_option("--emit", common.emit, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--max-enum", common.max_enum, "Enumeration cap per cell (overrides CENSUS_MAX_ENUM)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", common.threads, "Worker threads for enumeration (0 = all cores)");
  app.add_flag("--timing", common.timing, "Include wall time in verification reports");
  app.add_flag("--eigen-fast-path", common.eigen_fast_path,
               "Use eigenvalue products for circulants with n | q-1 after a cross-check");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinant census of diagonal and circulant matrices over finite chain rings", "chaindet"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  add_common(app, common);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count matrices with a given determinant class");
  count_cmd->add_option("--ring", count.ring, "Ring spec, e.g. Z/8 or Z/4 x F3")->required();
  count_cmd->add_option("--n", count.n, "Dimension")->required();
  count_cmd->add_option("--shape", count.shape)->required()->check(CLI::IsMember({"diagonal", "circulant"}));
  count_cmd->add_option("--class", count.cls, "unit, zero, gamma^s or [a_0,...,a_{e-1}]")->required();
  count_cmd->add_option("--method", count.method)->check(CLI::IsMember({"formula", "enumeration", "both"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms against exhaustive enumeration");
  verify_cmd->add_option("--rings", verify_args.rings, "Comma-separated ring specs")->required();
  verify_cmd->add_option("--n", verify_args.n);
  verify_cmd->add_option("--n-max", verify_args.n_max);
  verify_cmd->add_option("--shape", verify_args.shape)->check(CLI::IsMember({"diagonal", "circulant", "both"}));

  ImageArgs image;
  auto* image_cmd = app.add_subcommand("det-image", "Set of attained determinants");
  image_cmd->add_option("--ring", image.ring)->required();
  image_cmd->add_option("--n", image.n)->required();
  image_cmd->add_option("--shape", image.shape)->check(CLI::IsMember({"diagonal", "circulant"}));
  image_cmd->add_option("--mode", image.mode, "full, or cheap for cir(a,b,...,b) only")
      ->check(CLI::IsMember({"full", "cheap"}));

  ConjectureArgs conj;
  auto* conj_cmd = app.add_subcommand("conjecture", "Scan open circulant cells for counterexamples");
  conj_cmd->add_option("which", conj.which, "orbit-without-gcd or unit-coverage")
      ->required()
      ->check(CLI::IsMember({"orbit-without-gcd", "unit-coverage"}));
  conj_cmd->add_option("--ring", conj.ring);
  conj_cmd->add_option("--rings", conj.rings);
  conj_cmd->add_option("--n", conj.n);
  conj_cmd->add_option("--n-max", conj.n_max);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Closed-form counts over a (q, e, n) grid");
  table_cmd->add_option("--q-max", table.q_max)->required();
  table_cmd->add_option("--e-max", table.e_max)->required();
  table_cmd->add_option("--n-max", table.n_max)->required();
  table_cmd->add_option("--shape", table.shape)->check(CLI::IsMember({"diagonal", "circulant", "both"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*count_cmd) return do_count(count, common, out);
    if (*verify_cmd) return do_verify(verify_args, common, out, err);
    if (*image_cmd) return do_det_image(image, common, out);
    if (*conj_cmd) return do_conjecture(conj, common, out, err);
    if (*table_cmd) return do_table(table, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalConsistency ? kExitFalsified : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chainring::cli
