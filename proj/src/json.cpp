#include "ptolemy/json.hpp"

#include <limits>
#include <stdexcept>

namespace ptolemy {

nlohmann::json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos) {
      throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return BigInt(text);
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

void to_json(nlohmann::json& j, const RegionStats& s) {
  j = nlohmann::json{{"degree", s.degree},
                     {"triangles", s.triangles},
                     {"cliques", s.cliques},
                     {"empty_cells", s.empty_cells}};
}

void from_json(const nlohmann::json& j, RegionStats& s) {
  s.degree = j.at("degree").get<int>();
  s.triangles = j.at("triangles").get<int>();
  s.cliques = j.at("cliques").get<int>();
  s.empty_cells = j.at("empty_cells").get<int>();
}

}  // namespace ptolemy
