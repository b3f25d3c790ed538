#pragma once

#include <nlohmann/json.hpp>

#include "ptolemy/bigint.hpp"
#include "ptolemy/diagram.hpp"

namespace ptolemy {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json bigint_to_json(const BigInt& v);
/// Accepts either representation produced by bigint_to_json.
BigInt bigint_from_json(const nlohmann::json& j);

/// {"degree": N, "triangles": k, "cliques": l, "empty_cells": m}
void to_json(nlohmann::json& j, const RegionStats& s);
void from_json(const nlohmann::json& j, RegionStats& s);

}  // namespace ptolemy
