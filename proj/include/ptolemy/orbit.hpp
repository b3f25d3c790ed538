#pragma once

#include <span>
#include <string>
#include <vector>

#include "ptolemy/diagram.hpp"
#include "ptolemy/intpoly.hpp"

namespace ptolemy {

struct Orbit {
  /// Lexicographically smallest canonical encoding in the orbit.
  std::string representative;
  int size = 0;
  int stabilizer_order = 0;
};

/// Rotation orbits of a set of diagrams under the cyclic group of order
/// `group_order` (generated by rotate(., 1)). Orbits sorted by representative.
struct OrbitReport {
  int group_order = 0;
  std::vector<Orbit> orbits;
};

/// Partitions `diagrams` into rotation orbits. Every diagram must live on a
/// `group_order`-gon and the set must be closed under rotation; otherwise
/// std::invalid_argument. Duplicates are ignored.
OrbitReport orbit_report(std::span<const Diagram> diagrams, int group_order);

/// sum over 0 <= l < n of a_l q^l, with a_l the number of orbits whose
/// stabilizer order divides l.
qpoly::IntPoly rsw_polynomial(const OrbitReport& report);

}  // namespace ptolemy
