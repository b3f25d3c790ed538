#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ptolemy/bigint.hpp"
#include "ptolemy/diagram.hpp"

namespace ptolemy {

/// Binomial coefficient with the conventions used by all counting formulas:
/// 1 whenever top == bottom (for any integer, negative included), 0 when
/// bottom < 0, top < bottom or top < 0, otherwise the usual value.
BigInt binom_ext(std::int64_t top, std::int64_t bottom);

/// (sum parts)! / prod(part!). Throws std::invalid_argument on a negative part.
BigInt multinom_ext(std::span<const std::int64_t> parts);
BigInt multinom_ext(std::initializer_list<std::int64_t> parts);

/// Number of Ptolemy diagrams on the (degree+1)-gon with the given numbers of
/// triangles, cliques and empty cells.
BigInt count_ptolemy(const RegionStats& s);

/// Number of those diagrams invariant under rotation by 2*pi/order.
/// Throws std::invalid_argument unless order >= 2 divides degree+1.
BigInt count_invariant(const RegionStats& s, int order);

/// Number of diagrams fixed by rotating `steps` vertices (steps >= 0).
BigInt count_invariant_by_power(const RegionStats& s, std::int64_t steps);

/// Number of diagrams A with perp^power(A) == A.
BigInt count_perp_invariant(const RegionStats& s, std::int64_t power);

/// Number of rotation orbits (Cauchy-Frobenius over the cyclic group).
BigInt count_orbits(const RegionStats& s);

std::int64_t euler_phi(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// The (triangles, cliques, empty cells) classes with count_ptolemy > 0, in
/// lexicographic order.
std::vector<RegionStats> stats_classes(int degree);

/// One count request; at most one of rotation_order / rotation_steps /
/// perp_power may be set.
struct CountQuery {
  RegionStats stats;
  std::optional<int> rotation_order;
  std::optional<std::int64_t> rotation_steps;
  std::optional<std::int64_t> perp_power;

  void validate() const;
};

/// Dispatches to the matching count_* function.
BigInt count(const CountQuery& q);

}  // namespace ptolemy
