#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ptolemy/diagram.hpp"

namespace ptolemy {

/// Receives generated diagrams one at a time. Returning false stops the
/// generator; the enumerate_* call then returns false.
using DiagramSink = std::function<bool(const Diagram&)>;

enum class BaseKind { degenerate, triangle, clique, empty_cell };

/// The region attached to the base edge (or the central region, for the
/// rotation-invariant generator). `size` counts its vertices.
struct BaseRegion {
  BaseKind kind = BaseKind::degenerate;
  int size = 2;

  friend bool operator==(const BaseRegion&, const BaseRegion&) = default;
};

/// The disjoint parts of enumerate_all(degree), in generation order:
/// degenerate (degree 1 only), triangle, cliques by size, empty cells by size.
/// Each part can be consumed independently through enumerate_part.
std::vector<BaseRegion> base_region_partition(int degree);

/// Every Ptolemy diagram on the (degree+1)-gon exactly once, built from the
/// recursive decomposition at the base edge. Deterministic order.
/// Throws std::invalid_argument for degree < 1 or a polygon above kMaxVertices.
bool enumerate_all(int degree, const DiagramSink& sink);

/// The diagrams of enumerate_all(degree) whose base region is `part`.
bool enumerate_part(int degree, BaseRegion part, const DiagramSink& sink);

struct InvariantOptions {
  /// Track canonical encodings and throw std::logic_error on a repeat.
  bool verify_injective = false;
};

/// Ptolemy diagrams on the (degree+1)-gon fixed by rotation through 2*pi/order,
/// built directly from a central region, one sector's list of diagrams and a
/// base-vertex choice. `order` must be >= 2 and divide degree+1.
bool enumerate_invariant(int degree, int order, const DiagramSink& sink,
                         InvariantOptions options = {});

/// Ptolemy diagrams A with perp^power(A) == A, by filtering enumerate_all.
bool enumerate_perp_invariant(int degree, int power, const DiagramSink& sink);

inline constexpr int kDefaultBruteForceLimit = 8;
inline constexpr int kBruteForceHardCap = 9;

/// Tests all 2^(n(n-3)/2) diagonal subsets with is_ptolemy. Independent of the
/// recursive generator. Throws std::invalid_argument when n_vertices exceeds
/// min(limit, kBruteForceHardCap).
bool brute_force_ptolemy(int n_vertices, const DiagramSink& sink,
                         int limit = kDefaultBruteForceLimit);

struct EnumFilter {
  std::optional<int> triangles;
  std::optional<int> cliques;
  std::optional<int> empty_cells;
  std::optional<int> rotation_order;
  std::optional<int> perp_power;

  /// Throws std::invalid_argument when a field is negative, rotation_order is
  /// < 2 or does not divide degree+1, or both symmetry fields are set.
  void validate(int degree) const;
  bool matches_stats(const RegionStats& s) const;
};

/// Routes to enumerate_invariant, enumerate_perp_invariant or enumerate_all
/// and drops diagrams whose stats do not match.
bool enumerate_filtered(int degree, const EnumFilter& filter, const DiagramSink& sink);

/// Materializes a generator. Only for small polygons.
template <typename Generate>
std::vector<Diagram> collect(Generate&& generate) {
  std::vector<Diagram> out;
  generate([&out](const Diagram& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

}  // namespace ptolemy
