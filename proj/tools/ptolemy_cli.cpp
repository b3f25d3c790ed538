// Command-line front end. Polygon sizes are given as --n-gon <vertices>; the
// library works with degree = vertices - 1.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ptolemy/count.hpp"
#include "ptolemy/csp.hpp"
#include "ptolemy/diagram.hpp"
#include "ptolemy/enumerate.hpp"
#include "ptolemy/json.hpp"
#include "ptolemy/orbit.hpp"
#include "ptolemy/series.hpp"

namespace {

using namespace ptolemy;
using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxSeriesDegree = 24;

/// Bad input detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { table, csv, json, ndjson };

Format parse_format(const std::string& s) {
  if (s == "text-table" || s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return Format::ndjson;
}

struct Triple {
  int triangles = 0;
  int cliques = 0;
  int empty_cells = 0;
};

Triple parse_triple(const std::string& text) {
  Triple t;
  int* fields[] = {&t.triangles, &t.cliques, &t.empty_cells};
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    const auto [next, ec] = std::from_chars(p, end, *fields[i]);
    if (ec != std::errc() || *fields[i] < 0) break;
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') break;
      ++p;
    } else if (p == end) {
      return t;
    }
  }
  throw UsageError("--stats expects three non-negative integers k,l,m, got '" + text + "'");
}

int enum_vertex_limit() {
  const char* env = std::getenv("PTOLEMY_ENUM_LIMIT");
  if (env == nullptr || *env == '\0') return kDefaultEnumVertexLimit;
  int v = 0;
  const std::string text(env);
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || v < 2) {
    throw UsageError("PTOLEMY_ENUM_LIMIT must be an integer >= 2, got '" + text + "'");
  }
  return v;
}

void require_enumerable(int n_gon, const char* what) {
  const int limit = enum_vertex_limit();
  if (n_gon > limit) {
    throw UsageError(std::string(what) + " on a " + std::to_string(n_gon) +
                     "-gon exceeds the enumeration limit of " + std::to_string(limit) +
                     " vertices (raise PTOLEMY_ENUM_LIMIT to override)");
  }
}

/// Plain rows rendered as an aligned text table or CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os, Format f) const {
    if (f == Format::csv) {
      for (const auto& r : with_header()) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
      }
      return;
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& r : with_header()) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : with_header()) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << "  ";
        os << std::string(width[i] - r[i].size(), ' ') << r[i];
      }
      os << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> with_header() const {
    std::vector<std::vector<std::string>> all{header};
    all.insert(all.end(), rows.begin(), rows.end());
    return all;
  }
};

void print_json_rows(std::ostream& os, Format f, const json& rows) {
  if (f == Format::ndjson) {
    for (const auto& r : rows) os << r.dump() << '\n';
  } else {
    os << rows.dump(2) << '\n';
  }
}

std::string opt_str(const std::optional<BigInt>& v) { return v ? to_string(*v) : "-"; }

// ---------------------------------------------------------------------------

struct Common {
  int n_gon = 0;
  std::string stats;
  std::string format = "text-table";

  int degree() const { return n_gon - 1; }
  Format fmt() const { return parse_format(format); }
  std::optional<Triple> triple() const {
    if (stats.empty()) return std::nullopt;
    return parse_triple(stats);
  }
  /// The requested class, or every non-empty class of the polygon.
  std::vector<RegionStats> classes() const {
    if (auto t = triple()) return {{degree(), t->triangles, t->cliques, t->empty_cells}};
    return stats_classes(degree());
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n-gon", c.n_gon, "Polygon size (number of vertices, >= 2)")
      ->required()
      ->check(CLI::Range(2, kMaxVertices));
  sub->add_option("--stats", c.stats, "Restrict to one class: triangles,cliques,empty_cells");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text-table", "table", "csv", "json", "ndjson"}));
}

// --- count -----------------------------------------------------------------

struct CountArgs {
  Common common;
  std::optional<int> rotation_order;
  std::optional<std::int64_t> rotation_power;
  std::optional<std::int64_t> perp;
};

int run_count(const CountArgs& a) {
  const int n = a.common.n_gon;
  CountQuery proto;
  proto.stats = {a.common.degree(), 0, 0, 0};
  proto.rotation_order = a.rotation_order;
  proto.rotation_steps = a.rotation_power;
  proto.perp_power = a.perp;
  try {
    proto.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const bool explicit_class = a.common.triple().has_value();
  json rows = json::array();
  Table table{{"triangles", "cliques", "empty_cells", "count"}, {}};
  BigInt total = 0;
  for (const RegionStats& s : a.common.classes()) {
    CountQuery q = proto;
    q.stats = s;
    const BigInt value = count(q);
    total += value;
    if (value == 0 && !explicit_class) continue;
    rows.push_back({{"triangles", s.triangles},
                    {"cliques", s.cliques},
                    {"empty_cells", s.empty_cells},
                    {"count", bigint_to_json(value)}});
    table.rows.push_back({std::to_string(s.triangles), std::to_string(s.cliques),
                          std::to_string(s.empty_cells), to_string(value)});
  }

  const Format f = a.common.fmt();
  if (f == Format::json) {
    json out{{"n_gon", n}, {"rows", rows}, {"total", bigint_to_json(total)}};
    if (a.rotation_order) out["rotation_order"] = *a.rotation_order;
    if (a.rotation_power) out["rotation_power"] = *a.rotation_power;
    if (a.perp) out["perp"] = *a.perp;
    std::cout << out.dump(2) << '\n';
  } else if (f == Format::ndjson) {
    print_json_rows(std::cout, f, rows);
  } else {
    if (f == Format::table) table.rows.push_back({"total", "", "", to_string(total)});
    table.print(std::cout, f);
  }
  return 0;
}

// --- enum ------------------------------------------------------------------

struct EnumArgs {
  Common common;
  std::optional<int> triangles;
  std::optional<int> cliques;
  std::optional<int> empty_cells;
  std::optional<int> rotation_order;
  std::optional<int> perp;
  std::optional<long long> limit;
  bool brute_force = false;
};

int run_enum(const EnumArgs& a) {
  const int degree = a.common.degree();
  EnumFilter filter;
  filter.triangles = a.triangles;
  filter.cliques = a.cliques;
  filter.empty_cells = a.empty_cells;
  if (auto t = a.common.triple()) {
    filter.triangles = t->triangles;
    filter.cliques = t->cliques;
    filter.empty_cells = t->empty_cells;
  }
  filter.rotation_order = a.rotation_order;
  filter.perp_power = a.perp;
  try {
    filter.validate(degree);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.brute_force && (filter.rotation_order || filter.perp_power)) {
    throw UsageError("--brute-force cannot be combined with symmetry filters");
  }
  // The rotation-invariant generator never visits non-invariant diagrams.
  if (!filter.rotation_order) require_enumerable(a.common.n_gon, "enumeration");

  const Format f = a.common.fmt();
  long long emitted = 0;
  bool truncated = false;
  json array = json::array();
  if (f == Format::csv) std::cout << "encoding,triangles,cliques,empty_cells\n";
  const DiagramSink sink = [&](const Diagram& d) {
    if (a.limit && emitted >= *a.limit) {
      truncated = true;
      return false;
    }
    ++emitted;
    switch (f) {
      case Format::table:
        std::cout << canonical_encoding(d) << '\n';
        break;
      case Format::csv: {
        const RegionStats s = stats(d);
        std::cout << canonical_encoding(d) << ',' << s.triangles << ',' << s.cliques << ','
                  << s.empty_cells << '\n';
        break;
      }
      case Format::json:
        array.push_back(json(d));
        break;
      case Format::ndjson:
        std::cout << json(d).dump() << '\n';
        break;
    }
    return true;
  };

  if (a.brute_force) {
    const DiagramSink filtered = [&](const Diagram& d) {
      return filter.matches_stats(stats(d)) ? sink(d) : true;
    };
    try {
      brute_force_ptolemy(a.common.n_gon, filtered, kBruteForceHardCap);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    enumerate_filtered(degree, filter, sink);
  }
  if (f == Format::json) std::cout << array.dump(2) << '\n';
  if (truncated) {
    std::cerr << "output truncated after " << emitted << " diagrams (--limit)\n";
  }
  return 0;
}

// --- orbits ----------------------------------------------------------------

struct OrbitArgs {
  Common common;
  bool check = false;
};

int run_orbits(const OrbitArgs& a) {
  const int n = a.common.n_gon;
  const auto classes = a.common.classes();
  std::map<RegionStats, std::vector<Diagram>> members;
  if (a.check) {
    require_enumerable(n, "orbit check");
    enumerate_all(a.common.degree(), [&](const Diagram& d) {
      members[stats(d)].push_back(d);
      return true;
    });
  }

  bool all_pass = true;
  json rows = json::array();
  Table table{{"triangles", "cliques", "empty_cells", "orbits"}, {}};
  if (a.check) {
    table.header.insert(table.header.end(), {"enumerated", "orbit_sizes", "status"});
  }
  BigInt total = 0;
  for (const RegionStats& s : classes) {
    const BigInt formula = count_orbits(s);
    total += formula;
    json row{{"triangles", s.triangles},
             {"cliques", s.cliques},
             {"empty_cells", s.empty_cells},
             {"orbits", bigint_to_json(formula)}};
    std::vector<std::string> cells{std::to_string(s.triangles), std::to_string(s.cliques),
                                   std::to_string(s.empty_cells), to_string(formula)};
    if (a.check) {
      const OrbitReport report = orbit_report(members[s], n);
      std::vector<int> sizes;
      for (const Orbit& o : report.orbits) sizes.push_back(o.size);
      std::sort(sizes.rbegin(), sizes.rend());
      const bool pass = formula == report.orbits.size();
      all_pass = all_pass && pass;
      std::string joined;
      for (int v : sizes) joined += (joined.empty() ? "" : " ") + std::to_string(v);
      row["enumerated"] = report.orbits.size();
      row["orbit_sizes"] = sizes;
      row["pass"] = pass;
      cells.insert(cells.end(),
                   {std::to_string(report.orbits.size()), joined, pass ? "pass" : "FAIL"});
    }
    rows.push_back(std::move(row));
    table.rows.push_back(std::move(cells));
  }

  const Format f = a.common.fmt();
  if (f == Format::json) {
    json out{{"n_gon", n}, {"rows", rows}, {"total", bigint_to_json(total)}};
    if (a.check) out["pass"] = all_pass;
    std::cout << out.dump(2) << '\n';
  } else if (f == Format::ndjson) {
    print_json_rows(std::cout, f, rows);
  } else {
    table.print(std::cout, f);
    if (f == Format::table && a.check) std::cout << (all_pass ? "pass" : "FAIL") << '\n';
  }
  return all_pass ? 0 : kExitCheckFailed;
}

// --- csp -------------------------------------------------------------------

struct CspArgs {
  Common common;
  std::string mode = "both";
};

int run_csp(const CspArgs& a) {
  const CspMode mode = *parse_csp_mode(a.mode);
  const int limit = enum_vertex_limit();
  if (mode != CspMode::formula) require_enumerable(a.common.n_gon, "enumeration-mode csp");

  std::vector<CspReport> reports;
  if (auto t = a.common.triple()) {
    const RegionStats s{a.common.degree(), t->triangles, t->cliques, t->empty_cells};
    reports.push_back(csp_verify(s, mode, limit));
  } else {
    reports = csp_verify_all(a.common.degree(), mode, limit);
  }
  bool all_pass = true;
  for (const CspReport& r : reports) all_pass = all_pass && r.pass();

  Format f = a.common.fmt();
  // Failures are always reported as machine-readable JSON.
  if (!all_pass && (f == Format::table || f == Format::csv)) f = Format::json;
  if (f == Format::json) {
    if (a.common.triple()) {
      std::cout << json(reports.front()).dump(2) << '\n';
    } else {
      std::cout << json(reports).dump(2) << '\n';
    }
  } else if (f == Format::ndjson) {
    for (const CspReport& r : reports) std::cout << json(r).dump() << '\n';
  } else {
    Table table{{"triangles", "cliques", "empty_cells", "d", "formula", "enumeration", "polynomial",
                 "status"},
                {}};
    for (const CspReport& r : reports) {
      for (const DivisorCheck& c : r.divisors) {
        table.rows.push_back({std::to_string(r.stats.triangles), std::to_string(r.stats.cliques),
                              std::to_string(r.stats.empty_cells), std::to_string(c.order),
                              opt_str(c.formula_value), opt_str(c.enum_value),
                              opt_str(c.polynomial_value), c.pass ? "pass" : "FAIL"});
      }
      if (r.rsw_pass) {
        table.rows.push_back({std::to_string(r.stats.triangles), std::to_string(r.stats.cliques),
                              std::to_string(r.stats.empty_cells), "orbits", "", "", "",
                              *r.rsw_pass ? "pass" : "FAIL"});
      }
    }
    table.print(std::cout, f);
    if (f == Format::table) std::cout << "pass\n";
  }
  for (const CspReport& r : reports) {
    if (!r.nonnegative_coefficients) {
      std::cerr << "note: polynomial for " << r.stats << " has negative coefficients\n";
    }
  }
  return all_pass ? 0 : kExitCheckFailed;
}

// --- series-check ------------------------------------------------------------

struct SeriesArgs {
  int degree = 0;
  std::optional<int> invariant;
  bool dump = false;
  std::string format = "text-table";
};

int run_series_check(const SeriesArgs& a) {
  if (a.invariant && *a.invariant < 2) throw UsageError("--invariant expects an order >= 2");
  const series::Series s =
      a.invariant ? series::invariant_gf(*a.invariant, a.degree) : series::solve_ptolemy_gf(a.degree);
  if (a.dump) {
    std::cout << series::to_csv(s);
    return 0;
  }

  bool pass = true;
  bool residual_zero = true;
  if (!a.invariant) residual_zero = series::functional_equation_residual(s).is_zero();
  pass = residual_zero;

  json rows = json::array();
  Table table{{"n_gon", "triangles", "cliques", "empty_cells", "series", "formula", "status"}, {}};
  std::size_t compared = 0;
  for (int degree = 1; degree <= a.degree; ++degree) {
    const int n = degree + 1;
    if (a.invariant && n % *a.invariant != 0) continue;
    for (const RegionStats& cls : stats_classes(degree)) {
      const BigInt coeff = s.coefficient({degree, cls.triangles, cls.cliques, cls.empty_cells});
      const BigInt formula = a.invariant ? count_invariant(cls, *a.invariant) : count_ptolemy(cls);
      const bool ok = coeff == formula;
      pass = pass && ok;
      ++compared;
      if (a.invariant && coeff == 0 && ok) continue;
      rows.push_back({{"n_gon", n},
                      {"triangles", cls.triangles},
                      {"cliques", cls.cliques},
                      {"empty_cells", cls.empty_cells},
                      {"series", bigint_to_json(coeff)},
                      {"formula", bigint_to_json(formula)},
                      {"pass", ok}});
      table.rows.push_back({std::to_string(n), std::to_string(cls.triangles),
                            std::to_string(cls.cliques), std::to_string(cls.empty_cells),
                            to_string(coeff), to_string(formula), ok ? "pass" : "FAIL"});
    }
  }
  // Every stored coefficient must belong to a class the formula knows about.
  std::size_t stored = 0;
  for (const auto& [m, c] : s.terms()) {
    const RegionStats cls{m.z, m.x, m.y1, m.y2};
    const BigInt formula = a.invariant ? count_invariant(cls, *a.invariant) : count_ptolemy(cls);
    if (formula != c) pass = false;
    ++stored;
  }

  const Format f = parse_format(a.format);
  if (f == Format::json) {
    json out{{"degree", a.degree}, {"rows", rows}, {"compared", compared}, {"pass", pass}};
    if (a.invariant) out["invariant"] = *a.invariant;
    else out["residual_zero"] = residual_zero;
    std::cout << out.dump(2) << '\n';
  } else if (f == Format::ndjson) {
    print_json_rows(std::cout, f, rows);
  } else {
    table.print(std::cout, f);
    if (f == Format::table) {
      std::cout << "coefficients compared: " << compared << ", stored: " << stored;
      if (!a.invariant) std::cout << ", residual " << (residual_zero ? "zero" : "NONZERO");
      std::cout << '\n' << (pass ? "pass" : "FAIL") << '\n';
    }
  }
  return pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ptolemy diagrams: counting, enumeration, rotation orbits and cyclic sieving checks.\n"
      "Polygon sizes are vertex counts (--n-gon 6 is the hexagon); internally the\n"
      "degree is vertices - 1."};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count diagrams per (triangles, cliques, empty cells)");
  add_common(count_cmd, count_args.common);
  auto* ro = count_cmd->add_option("--rotation-order", count_args.rotation_order,
                                   "Only diagrams fixed by rotation through 2*pi/d");
  auto* rp = count_cmd->add_option("--rotation-power", count_args.rotation_power,
                                   "Only diagrams fixed by rotating s vertices");
  auto* pp = count_cmd->add_option("--perp", count_args.perp,
                                   "Only diagrams fixed by the b-th power of the perpendicular map");
  ro->excludes(rp)->excludes(pp);
  rp->excludes(pp);

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum", "Stream diagrams as canonical encodings");
  add_common(enum_cmd, enum_args.common);
  enum_cmd->add_option("--triangles", enum_args.triangles, "Required number of triangles");
  enum_cmd->add_option("--cliques", enum_args.cliques, "Required number of cliques");
  enum_cmd->add_option("--empty-cells", enum_args.empty_cells, "Required number of empty cells");
  auto* ero = enum_cmd->add_option("--rotation-order", enum_args.rotation_order,
                                   "Only diagrams fixed by rotation through 2*pi/d");
  auto* epp = enum_cmd->add_option("--perp", enum_args.perp,
                                   "Only diagrams fixed by the b-th power of the perpendicular map");
  ero->excludes(epp);
  enum_cmd->add_option("--limit", enum_args.limit, "Stop after this many diagrams")
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--brute-force", enum_args.brute_force,
                     "Test every diagonal subset instead of the recursive generator (<= 9 vertices)");

  OrbitArgs orbit_args;
  auto* orbit_cmd = app.add_subcommand("orbits", "Count rotation orbits per class");
  add_common(orbit_cmd, orbit_args.common);
  orbit_cmd->add_flag("--check", orbit_args.check,
                      "Compare with an explicit orbit partition of the enumerated diagrams");

  CspArgs csp_args;
  auto* csp_cmd = app.add_subcommand("csp", "Verify the cyclic sieving polynomial per class");
  add_common(csp_cmd, csp_args.common);
  csp_cmd->add_option("--mode", csp_args.mode, "Fixed-point source")
      ->check(CLI::IsMember({"formula", "enumeration", "both"}));

  SeriesArgs series_args;
  auto* series_cmd = app.add_subcommand(
      "series-check", "Solve the generating function and compare its coefficients with the counts");
  series_cmd->add_option("--degree", series_args.degree, "Truncation degree (vertices - 1)")
      ->required()
      ->check(CLI::Range(1, kMaxSeriesDegree));
  series_cmd->add_option("--invariant", series_args.invariant,
                         "Use the generating function of diagrams fixed by rotation of order d");
  series_cmd->add_flag("--dump", series_args.dump, "Print all coefficients as CSV instead");
  series_cmd->add_option("--format", series_args.format, "Output format")
      ->check(CLI::IsMember({"text-table", "table", "csv", "json", "ndjson"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_args);
    if (enum_cmd->parsed()) return run_enum(enum_args);
    if (orbit_cmd->parsed()) return run_orbits(orbit_args);
    if (csp_cmd->parsed()) return run_csp(csp_args);
    if (series_cmd->parsed()) return run_series_check(series_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
