#include "ptolemy/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ptolemy {

OrbitReport orbit_report(std::span<const Diagram> diagrams, int group_order) {
  if (group_order < 1) throw std::invalid_argument("group order must be >= 1");
  std::set<Diagram> pending;
  for (const Diagram& d : diagrams) {
    if (d.n_vertices() != group_order) {
      throw std::invalid_argument("diagram " + canonical_encoding(d) + " is not on a " +
                                  std::to_string(group_order) + "-gon");
    }
    pending.insert(d);
  }

  OrbitReport report;
  report.group_order = group_order;
  while (!pending.empty()) {
    const Diagram start = *pending.begin();
    std::string representative = canonical_encoding(start);
    int size = 0;
    Diagram current = start;
    do {
      const auto it = pending.find(current);
      if (it == pending.end()) {
        throw std::invalid_argument("set is not closed under rotation: missing " +
                                    canonical_encoding(current));
      }
      pending.erase(it);
      representative = std::min(representative, canonical_encoding(current));
      ++size;
      current = rotate(current, 1);
    } while (current != start);
    report.orbits.push_back({representative, size, group_order / size});
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
  return report;
}

qpoly::IntPoly rsw_polynomial(const OrbitReport& report) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(report.group_order));
  for (int l = 0; l < report.group_order; ++l) {
    for (const Orbit& o : report.orbits) {
      if (l % o.stabilizer_order == 0) coeffs[static_cast<std::size_t>(l)] += 1;
    }
  }
  return qpoly::IntPoly(std::move(coeffs));
}

}  // namespace ptolemy
