#include "ptolemy/csp.hpp"

#include <map>
#include <stdexcept>

#include "ptolemy/count.hpp"
#include "ptolemy/enumerate.hpp"
#include "ptolemy/json.hpp"
#include "ptolemy/orbit.hpp"
#include "ptolemy/qpoly.hpp"

namespace ptolemy {

std::optional<CspMode> parse_csp_mode(std::string_view text) {
  if (text == "formula") return CspMode::formula;
  if (text == "enumeration") return CspMode::enumeration;
  if (text == "both") return CspMode::both;
  return std::nullopt;
}

std::string_view to_string(CspMode mode) {
  switch (mode) {
    case CspMode::formula:
      return "formula";
    case CspMode::enumeration:
      return "enumeration";
    case CspMode::both:
      return "both";
  }
  return "?";
}

bool CspReport::pass() const {
  if (rsw_pass && !*rsw_pass) return false;
  for (const DivisorCheck& c : divisors) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

void check_enum_limit(int degree, int limit) {
  if (degree + 1 > limit) {
    throw std::invalid_argument("enumeration of the " + std::to_string(degree + 1) +
                                "-gon exceeds the vertex limit " + std::to_string(limit));
  }
}

bool uses_formula(CspMode m) { return m != CspMode::enumeration; }
bool uses_enumeration(CspMode m) { return m != CspMode::formula; }

}  // namespace

CspReport csp_verify(const RegionStats& s, CspMode mode, int enum_vertex_limit) {
  std::vector<Diagram> members;
  if (uses_enumeration(mode)) {
    check_enum_limit(s.degree, enum_vertex_limit);
    enumerate_all(s.degree, [&](const Diagram& a) {
      if (stats(a) == s) members.push_back(a);
      return true;
    });
  }
  return csp_verify(s, mode, members);
}

CspReport csp_verify(const RegionStats& s, CspMode mode, std::span<const Diagram> class_diagrams) {
  CspReport report;
  report.stats = s;
  report.mode = mode;
  report.polynomial = qpoly::csp_polynomial(s);
  for (const BigInt& c : report.polynomial.coefficients()) {
    if (c < 0) report.nonnegative_coefficients = false;
  }

  const int n = s.degree + 1;
  for (std::int64_t d64 : divisors(n)) {
    const int d = static_cast<int>(d64);
    DivisorCheck check;
    check.order = d;
    try {
      check.polynomial_value = qpoly::eval_at_primitive_root(report.polynomial, d);
    } catch (const qpoly::NonIntegralRootValue& e) {
      check.note = e.what();
    }
    if (uses_formula(mode)) {
      check.formula_value = d == 1 ? count_ptolemy(s) : count_invariant(s, d);
    }
    if (uses_enumeration(mode)) {
      BigInt fixed = 0;
      for (const Diagram& a : class_diagrams) {
        if (rotate(a, n / d) == a) ++fixed;
      }
      check.enum_value = fixed;
    }
    check.pass = check.polynomial_value.has_value();
    for (const auto* v : {&check.formula_value, &check.enum_value}) {
      if (*v && check.polynomial_value && **v != *check.polynomial_value) check.pass = false;
    }
    if (!check.pass && check.note.empty()) check.note = "fixed-point counts disagree";
    report.divisors.push_back(std::move(check));
  }

  if (uses_enumeration(mode)) {
    const OrbitReport orbits = orbit_report(class_diagrams, n);
    report.rsw_pass =
        qpoly::reduce_mod_cyclic(report.polynomial, n) == rsw_polynomial(orbits);
  }
  return report;
}

std::vector<CspReport> csp_verify_all(int degree, CspMode mode, int enum_vertex_limit) {
  std::map<RegionStats, std::vector<Diagram>> by_class;
  if (uses_enumeration(mode)) {
    check_enum_limit(degree, enum_vertex_limit);
    enumerate_all(degree, [&](const Diagram& a) {
      by_class[stats(a)].push_back(a);
      return true;
    });
  }
  std::vector<CspReport> out;
  for (const RegionStats& s : stats_classes(degree)) {
    out.push_back(csp_verify(s, mode, by_class[s]));
  }
  return out;
}

void to_json(nlohmann::json& j, const CspReport& r) {
  const auto opt = [](const std::optional<BigInt>& v) {
    return v ? bigint_to_json(*v) : nlohmann::json(nullptr);
  };
  auto divs = nlohmann::json::array();
  for (const DivisorCheck& c : r.divisors) {
    nlohmann::json entry{{"d", c.order},
                         {"formula_value", opt(c.formula_value)},
                         {"enum_value", opt(c.enum_value)},
                         {"polynomial_value", opt(c.polynomial_value)},
                         {"pass", c.pass}};
    if (!c.note.empty()) entry["note"] = c.note;
    divs.push_back(std::move(entry));
  }
  auto coeffs = nlohmann::json::array();
  for (const BigInt& c : r.polynomial.coefficients()) coeffs.push_back(bigint_to_json(c));
  j = nlohmann::json{{"stats", r.stats},
                     {"mode", std::string(to_string(r.mode))},
                     {"divisors", std::move(divs)},
                     {"rsw_pass", r.rsw_pass ? nlohmann::json(*r.rsw_pass) : nlohmann::json()},
                     {"pass", r.pass()},
                     {"polynomial", std::move(coeffs)},
                     {"nonnegative_coefficients", r.nonnegative_coefficients}};
}

void from_json(const nlohmann::json& j, CspReport& r) {
  const auto opt = [](const nlohmann::json& v) -> std::optional<BigInt> {
    if (v.is_null()) return std::nullopt;
    return bigint_from_json(v);
  };
  r.stats = j.at("stats").get<RegionStats>();
  const auto mode = parse_csp_mode(j.at("mode").get<std::string>());
  if (!mode) throw std::invalid_argument("unknown csp mode");
  r.mode = *mode;
  r.divisors.clear();
  for (const auto& e : j.at("divisors")) {
    DivisorCheck c;
    c.order = e.at("d").get<int>();
    c.formula_value = opt(e.at("formula_value"));
    c.enum_value = opt(e.at("enum_value"));
    c.polynomial_value = opt(e.at("polynomial_value"));
    c.pass = e.at("pass").get<bool>();
    if (e.contains("note")) c.note = e.at("note").get<std::string>();
    r.divisors.push_back(std::move(c));
  }
  const auto& rsw = j.at("rsw_pass");
  r.rsw_pass = rsw.is_null() ? std::nullopt : std::optional<bool>(rsw.get<bool>());
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("polynomial")) coeffs.push_back(bigint_from_json(c));
  r.polynomial = qpoly::IntPoly(std::move(coeffs));
  r.nonnegative_coefficients = j.at("nonnegative_coefficients").get<bool>();
}

}  // namespace ptolemy
