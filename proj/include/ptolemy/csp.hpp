#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ptolemy/bigint.hpp"
#include "ptolemy/diagram.hpp"
#include "ptolemy/intpoly.hpp"

namespace ptolemy {

/// Largest polygon enumerate_all is run on by verification code unless the
/// caller raises it (the CLI reads PTOLEMY_ENUM_LIMIT).
inline constexpr int kDefaultEnumVertexLimit = 12;

enum class CspMode { formula, enumeration, both };

std::optional<CspMode> parse_csp_mode(std::string_view text);
std::string_view to_string(CspMode mode);

/// Fixed-point counts for one divisor d of the polygon size, i.e. for the
/// rotation through 2*pi/d. d = 1 is the identity and checks the q = 1 value.
struct DivisorCheck {
  int order = 1;
  std::optional<BigInt> formula_value;
  std::optional<BigInt> enum_value;
  /// Empty when the polynomial does not take an integer value at the root.
  std::optional<BigInt> polynomial_value;
  bool pass = false;
  std::string note;
};

struct CspReport {
  RegionStats stats;
  CspMode mode = CspMode::formula;
  qpoly::IntPoly polynomial;
  std::vector<DivisorCheck> divisors;
  /// Polynomial congruent to the orbit-structure polynomial mod q^n - 1;
  /// only set in enumeration modes.
  std::optional<bool> rsw_pass;
  /// Observed property, reported but not part of pass().
  bool nonnegative_coefficients = true;

  bool pass() const;
};

/// Checks polynomial(w_d) against the closed-form fixed-point count (formula
/// mode) and/or the enumerated fixed-point count and orbit polynomial
/// (enumeration mode) for every divisor d of degree+1. Enumeration above
/// `enum_vertex_limit` vertices throws std::invalid_argument.
CspReport csp_verify(const RegionStats& s, CspMode mode,
                     int enum_vertex_limit = kDefaultEnumVertexLimit);

/// Same, with the diagrams of this stats class supplied by the caller
/// (ignored in formula mode).
CspReport csp_verify(const RegionStats& s, CspMode mode, std::span<const Diagram> class_diagrams);

/// Every non-empty stats class of the degree, enumerating at most once.
std::vector<CspReport> csp_verify_all(int degree, CspMode mode,
                                      int enum_vertex_limit = kDefaultEnumVertexLimit);

/// {stats, divisors: [{d, formula_value, enum_value, polynomial_value, pass}],
///  rsw_pass, pass, polynomial, nonnegative_coefficients}; absent values are null.
void to_json(nlohmann::json& j, const CspReport& r);
void from_json(const nlohmann::json& j, CspReport& r);

}  // namespace ptolemy
