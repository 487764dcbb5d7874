#include "chainring/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "chainring/error.hpp"

namespace chainring {

using nlohmann::json;

namespace {

const char* const kVerificationHeader[] = {"ring", "q", "e", "n", "shape", "class", "formula", "oracle", "applicable", "match"};
const char* const kConjectureHeader[] = {"conjecture", "ring", "q", "e", "n", "status", "detail"};
const char* const kImageHeader[] = {"ring", "n", "shape", "mode", "coords", "element"};

[[noreturn]] void bad_report(const std::string& what) { throw Error(ErrorCode::ParseError, "malformed report: " + what); }

template <class T>
T parse_unsigned(std::string_view text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    bad_report("expected an unsigned integer, got '" + std::string(text) + "'");
  }
  return value;
}

BigInt parse_big(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
    bad_report("expected a decimal count, got '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  bad_report("expected true or false, got '" + std::string(text) + "'");
}

template <class T>
std::string join(const std::vector<T>& items, std::string_view sep, auto&& show) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += show(items[i]);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.emplace_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + sep.size();
  }
}

// Product rings join per-factor q, e and class with "x" / " x ".
std::string q_column(const VerificationCell& c) {
  return join(c.q, "x", [](auto v) { return std::to_string(v); });
}
std::string e_column(const VerificationCell& c) {
  return join(c.e, "x", [](auto v) { return std::to_string(v); });
}
std::string class_column(const VerificationCell& c) {
  return join(c.det_class, " x ", [](const DetClass& d) { return to_string(d); });
}

void read_cell_columns(VerificationCell& cell, const std::string& q, const std::string& e, const std::string& cls) {
  for (const auto& part : split(q, "x")) cell.q.push_back(parse_unsigned<std::uint64_t>(part));
  for (const auto& part : split(e, "x")) cell.e.push_back(parse_unsigned<unsigned>(part));
  for (const auto& part : split(cls, " x ")) cell.det_class.push_back(parse_det_class(part));
}

std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", s);
  return buf;
}

std::string coords_text(const std::vector<std::uint32_t>& coords) {
  return "[" + join(coords, ",", [](auto v) { return std::to_string(v); }) + "]";
}

std::vector<std::uint32_t> parse_coords(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') bad_report("coordinate list '" + std::string(text) + "'");
  std::vector<std::uint32_t> out;
  const auto inner = text.substr(1, text.size() - 2);
  if (inner.empty()) return out;
  for (const auto& part : split(inner, ",")) out.push_back(parse_unsigned<std::uint32_t>(part));
  return out;
}

void require_header(const std::vector<std::string>& row, auto const& expected) {
  const std::vector<std::string> want(std::begin(expected), std::end(expected));
  if (row != want) bad_report("unexpected CSV header");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& err) {
    bad_report(err.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& err) {
    bad_report(std::string("field '") + key + "': " + err.what());
  }
}

}  // namespace

DetImageReport make_det_image_report(const RingPtr& ring, std::size_t n, Shape shape, ImageMode mode,
                                     const std::vector<RingElement>& image) {
  DetImageReport report{ring->name(), static_cast<unsigned>(n), shape, mode, {}, {}};
  for (const auto& a : image) {
    report.coords.push_back(a.coords());
    report.text.push_back(a.to_string());
  }
  return report;
}

std::string format_formula(const FormulaEntry& f) {
  switch (f.state) {
    case FormulaEntry::State::Value: return f.value.str();
    case FormulaEntry::State::Open: return "open: " + f.note;
    case FormulaEntry::State::Skipped: return f.note.empty() ? "" : "skipped: " + f.note;
  }
  return {};
}

FormulaEntry parse_formula(std::string_view text) {
  if (text.empty()) return {};
  if (text.starts_with("open: ")) return {FormulaEntry::State::Open, 0, std::string(text.substr(6))};
  if (text.starts_with("skipped: ")) return {FormulaEntry::State::Skipped, 0, std::string(text.substr(9))};
  return {FormulaEntry::State::Value, parse_big(text), {}};
}

std::string format_oracle(const OracleEntry& o) {
  switch (o.state) {
    case OracleEntry::State::Uniform: return o.value.str();
    case OracleEntry::State::Varies: return "varies: " + o.value.str();
    case OracleEntry::State::Skipped: return o.note.empty() ? "skipped" : "skipped: " + o.note;
  }
  return {};
}

OracleEntry parse_oracle(std::string_view text) {
  if (text == "skipped") return {};
  if (text.starts_with("skipped: ")) return {OracleEntry::State::Skipped, 0, std::string(text.substr(9))};
  if (text.starts_with("varies: ")) return {OracleEntry::State::Varies, parse_big(text.substr(8)), {}};
  return {OracleEntry::State::Uniform, parse_big(text), {}};
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos && !field.starts_with("#")) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      ++i;
      continue;
    }
    std::vector<std::string> row;
    std::string cell;
    bool quoted = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (quoted) {
        if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        row.push_back(std::move(cell));
        cell.clear();
      } else if (c == '\n') {
        break;
      } else if (c != '\r') {
        cell += c;
      }
    }
    if (quoted) bad_report("unterminated quoted CSV field");
    ++i;
    row.push_back(std::move(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

// -- verification --------------------------------------------------------------------------

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  if (report.wall_seconds) out << "# wall_seconds=" << format_seconds(*report.wall_seconds) << '\n';
  out << join(std::vector<std::string>(std::begin(kVerificationHeader), std::end(kVerificationHeader)), ",",
              [](const std::string& s) { return s; })
      << '\n';
  for (const auto& c : report.cells) {
    const std::string columns[] = {c.ring,
                                   q_column(c),
                                   e_column(c),
                                   std::to_string(c.n),
                                   std::string(to_string(c.shape)),
                                   class_column(c),
                                   format_formula(c.formula),
                                   format_oracle(c.oracle),
                                   c.applicable() ? "true" : "false",
                                   c.match ? "true" : "false"};
    for (std::size_t k = 0; k < std::size(columns); ++k) out << (k ? "," : "") << csv_escape(columns[k]);
    out << '\n';
  }
  return out.str();
}

VerificationReport verification_from_csv(std::string_view text) {
  VerificationReport report;
  if (text.starts_with("# wall_seconds=")) {
    const auto line = text.substr(15, text.find('\n') - 15);
    report.wall_seconds = std::stod(std::string(line));
  }
  const auto rows = csv_parse(text);
  if (rows.empty()) bad_report("missing CSV header");
  require_header(rows.front(), kVerificationHeader);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != std::size(kVerificationHeader)) bad_report("row " + std::to_string(r) + " has the wrong width");
    VerificationCell cell;
    cell.ring = row[0];
    read_cell_columns(cell, row[1], row[2], row[5]);
    cell.n = parse_unsigned<unsigned>(row[3]);
    cell.shape = parse_shape(row[4]);
    cell.formula = parse_formula(row[6]);
    cell.oracle = parse_oracle(row[7]);
    if (parse_bool(row[8]) != cell.applicable()) bad_report("applicable column disagrees with formula column");
    cell.match = parse_bool(row[9]);
    report.cells.push_back(std::move(cell));
  }
  return report;
}

std::string to_json(const VerificationReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    cells.push_back(json{{"ring", c.ring},
                         {"q", q_column(c)},
                         {"e", e_column(c)},
                         {"n", c.n},
                         {"shape", to_string(c.shape)},
                         {"class", class_column(c)},
                         {"formula", format_formula(c.formula)},
                         {"oracle", format_oracle(c.oracle)},
                         {"applicable", c.applicable()},
                         {"match", c.match}});
  }
  json doc{{"report", "verification"},
           {"cells", std::move(cells)},
           {"falsified", report.falsified_count()}};
  if (report.wall_seconds) doc["wall_seconds"] = *report.wall_seconds;
  return doc.dump(2) + "\n";
}

VerificationReport verification_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (field<std::string>(doc, "report") != "verification") bad_report("not a verification report");
  VerificationReport report;
  if (doc.contains("wall_seconds")) report.wall_seconds = field<double>(doc, "wall_seconds");
  for (const auto& j : doc.at("cells")) {
    VerificationCell cell;
    cell.ring = field<std::string>(j, "ring");
    read_cell_columns(cell, field<std::string>(j, "q"), field<std::string>(j, "e"), field<std::string>(j, "class"));
    cell.n = field<unsigned>(j, "n");
    cell.shape = parse_shape(field<std::string>(j, "shape"));
    cell.formula = parse_formula(field<std::string>(j, "formula"));
    cell.oracle = parse_oracle(field<std::string>(j, "oracle"));
    if (field<bool>(j, "applicable") != cell.applicable()) bad_report("applicable field disagrees with formula field");
    cell.match = field<bool>(j, "match");
    report.cells.push_back(std::move(cell));
  }
  return report;
}

// -- conjecture scans ----------------------------------------------------------------------

std::string to_csv(const ConjectureReport& report) {
  std::ostringstream out;
  out << "conjecture,ring,q,e,n,status,detail\n";
  for (const auto& e : report.entries) {
    const std::string columns[] = {std::string(to_string(report.which)), e.ring, std::to_string(e.q),
                                   std::to_string(e.e), std::to_string(e.n), std::string(to_string(e.status)),
                                   e.detail};
    for (std::size_t k = 0; k < std::size(columns); ++k) out << (k ? "," : "") << csv_escape(columns[k]);
    out << '\n';
  }
  return out.str();
}

ConjectureReport conjecture_from_csv(std::string_view text) {
  const auto rows = csv_parse(text);
  if (rows.empty()) bad_report("missing CSV header");
  require_header(rows.front(), kConjectureHeader);
  ConjectureReport report;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != std::size(kConjectureHeader)) bad_report("row " + std::to_string(r) + " has the wrong width");
    report.which = parse_conjecture(row[0]);
    report.entries.push_back({row[1], parse_unsigned<std::uint64_t>(row[2]), parse_unsigned<unsigned>(row[3]),
                              parse_unsigned<unsigned>(row[4]), parse_scan_status(row[5]), row[6]});
  }
  return report;
}

std::string to_json(const ConjectureReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"ring", e.ring},
                           {"q", std::to_string(e.q)},
                           {"e", std::to_string(e.e)},
                           {"n", e.n},
                           {"status", to_string(e.status)},
                           {"detail", e.detail}});
  }
  const json doc{{"report", "conjecture"},
                 {"conjecture", to_string(report.which)},
                 {"counterexample_found", report.found_counterexample()},
                 {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

ConjectureReport conjecture_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (field<std::string>(doc, "report") != "conjecture") bad_report("not a conjecture report");
  ConjectureReport report;
  report.which = parse_conjecture(field<std::string>(doc, "conjecture"));
  for (const auto& j : doc.at("entries")) {
    report.entries.push_back({field<std::string>(j, "ring"), parse_unsigned<std::uint64_t>(field<std::string>(j, "q")),
                              parse_unsigned<unsigned>(field<std::string>(j, "e")), field<unsigned>(j, "n"),
                              parse_scan_status(field<std::string>(j, "status")), field<std::string>(j, "detail")});
  }
  return report;
}

// -- determinant images --------------------------------------------------------------------

std::string to_csv(const DetImageReport& report) {
  std::ostringstream out;
  out << "ring,n,shape,mode,coords,element\n";
  for (std::size_t k = 0; k < report.coords.size(); ++k) {
    const std::string columns[] = {report.ring, std::to_string(report.n), std::string(to_string(report.shape)),
                                   std::string(to_string(report.mode)), coords_text(report.coords[k]), report.text[k]};
    for (std::size_t c = 0; c < std::size(columns); ++c) out << (c ? "," : "") << csv_escape(columns[c]);
    out << '\n';
  }
  return out.str();
}

DetImageReport det_image_from_csv(std::string_view text) {
  const auto rows = csv_parse(text);
  if (rows.size() < 2) bad_report("a determinant image has at least one element");
  require_header(rows.front(), kImageHeader);
  DetImageReport report;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != std::size(kImageHeader)) bad_report("row " + std::to_string(r) + " has the wrong width");
    report.ring = row[0];
    report.n = parse_unsigned<unsigned>(row[1]);
    report.shape = parse_shape(row[2]);
    report.mode = parse_image_mode(row[3]);
    report.coords.push_back(parse_coords(row[4]));
    report.text.push_back(row[5]);
  }
  return report;
}

std::string to_json(const DetImageReport& report) {
  json image = json::array();
  for (std::size_t k = 0; k < report.coords.size(); ++k) {
    image.push_back(json{{"coords", report.coords[k]}, {"element", report.text[k]}});
  }
  const json doc{{"report", "det-image"},
                 {"ring", report.ring},
                 {"n", report.n},
                 {"shape", to_string(report.shape)},
                 {"mode", to_string(report.mode)},
                 {"size", report.coords.size()},
                 {"image", std::move(image)}};
  return doc.dump(2) + "\n";
}

DetImageReport det_image_from_json(std::string_view text) {
  const json doc = parse_json(text);
  if (field<std::string>(doc, "report") != "det-image") bad_report("not a det-image report");
  DetImageReport report;
  report.ring = field<std::string>(doc, "ring");
  report.n = field<unsigned>(doc, "n");
  report.shape = parse_shape(field<std::string>(doc, "shape"));
  report.mode = parse_image_mode(field<std::string>(doc, "mode"));
  for (const auto& j : doc.at("image")) {
    report.coords.push_back(field<std::vector<std::uint32_t>>(j, "coords"));
    report.text.push_back(field<std::string>(j, "element"));
  }
  return report;
}

}  // namespace chainring
