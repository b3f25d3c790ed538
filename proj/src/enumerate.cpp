#include "ptolemy/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ptolemy {

namespace {

using Cont = std::function<void()>;

void check_degree(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("degree must be >= 1 (polygon with at least 2 vertices), got " +
                                std::to_string(degree));
  }
  if (degree + 1 > kMaxVertices) {
    throw std::invalid_argument("polygon with " + std::to_string(degree + 1) +
                                " vertices exceeds the supported maximum of " +
                                std::to_string(kMaxVertices));
  }
}

// Glues Ptolemy diagrams into sub-polygons of a shared builder by continuation
// passing: every complete filling of a sub-polygon invokes the continuation
// once, with the filling's diagonals present in the builder, and removes them
// again afterwards.
class Filler {
 public:
  Filler(DiagramBuilder& builder, const bool& stopped) : b_(builder), stopped_(stopped) {}

  // Polygon on vertices lo..hi with base edge {hi, lo}.
  void fill(int lo, int hi, const Cont& k) {
    if (stopped_) return;
    if (hi - lo == 1) {
      k();
      return;
    }
    for (const BaseRegion& region : base_region_partition(hi - lo)) {
      place(lo, hi, region, k);
      if (stopped_) return;
    }
  }

  // Base region `region` on edge {hi, lo}, then sub-diagrams left to right.
  void place(int lo, int hi, BaseRegion region, const Cont& k) {
    std::vector<int> corners{lo};
    choose_corners(corners, region.size - 2, hi, [&] {
      corners.push_back(hi);
      fill_region(corners, region.kind == BaseKind::clique, k);
      corners.pop_back();
    });
  }

  // Marks the boundary chords of a region (and its internal diagonals, for a
  // clique), then fills every region edge in turn.
  void fill_region(const std::vector<int>& corners, bool clique, const Cont& k) {
    std::vector<Diagonal> added;
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      if (corners[i + 1] - corners[i] >= 2) added.emplace_back(corners[i], corners[i + 1]);
    }
    if (clique) {
      const std::size_t s = corners.size();
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 2; j < s; ++j) {
          if (i == 0 && j == s - 1) continue;
          added.emplace_back(corners[i], corners[j]);
        }
      }
    }
    for (const Diagonal& d : added) b_.insert(d.a, d.b);
    fill_edges(corners, 0, k);
    for (const Diagonal& d : added) b_.erase(d.a, d.b);
  }

  void fill_edges(const std::vector<int>& corners, std::size_t i, const Cont& k) {
    if (i + 1 == corners.size()) {
      k();
      return;
    }
    fill(corners[i], corners[i + 1], [&] { fill_edges(corners, i + 1, k); });
  }

  // Appends `count` increasing vertices strictly between corners.back() and
  // `hi`, in lexicographic order, calling k for each choice.
  void choose_corners(std::vector<int>& corners, int count, int hi, const Cont& k) {
    if (stopped_) return;
    if (count == 0) {
      k();
      return;
    }
    const int from = corners.back() + 1;
    for (int v = from; v + count - 1 < hi; ++v) {
      corners.push_back(v);
      choose_corners(corners, count - 1, hi, k);
      corners.pop_back();
      if (stopped_) return;
    }
  }

 private:
  DiagramBuilder& b_;
  const bool& stopped_;
};

std::vector<BaseRegion> central_regions(int n, int order) {
  std::vector<BaseRegion> out;
  if (order == 2) out.push_back({BaseKind::degenerate, 2});
  if (order == 3) out.push_back({BaseKind::triangle, 3});
  for (BaseKind kind : {BaseKind::clique, BaseKind::empty_cell}) {
    for (int s = order; s <= n; s += order) {
      if (s >= 4) out.push_back({kind, s});
    }
  }
  return out;
}

}  // namespace

std::vector<BaseRegion> base_region_partition(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (degree == 1) return {{BaseKind::degenerate, 2}};
  std::vector<BaseRegion> out{{BaseKind::triangle, 3}};
  for (BaseKind kind : {BaseKind::clique, BaseKind::empty_cell}) {
    for (int s = 4; s <= degree + 1; ++s) out.push_back({kind, s});
  }
  return out;
}

bool enumerate_part(int degree, BaseRegion part, const DiagramSink& sink) {
  check_degree(degree);
  const auto parts = base_region_partition(degree);
  if (std::find(parts.begin(), parts.end(), part) == parts.end()) {
    throw std::invalid_argument("base region is not part of the partition for this degree");
  }
  DiagramBuilder builder(degree + 1);
  bool stopped = false;
  const Cont emit = [&] {
    if (!stopped && !sink(builder.build())) stopped = true;
  };
  Filler filler(builder, stopped);
  if (part.kind == BaseKind::degenerate) {
    emit();
  } else {
    filler.place(0, degree, part, emit);
  }
  return !stopped;
}

bool enumerate_all(int degree, const DiagramSink& sink) {
  check_degree(degree);
  for (const BaseRegion& part : base_region_partition(degree)) {
    if (!enumerate_part(degree, part, sink)) return false;
  }
  return true;
}

bool enumerate_invariant(int degree, int order, const DiagramSink& sink,
                         InvariantOptions options) {
  check_degree(degree);
  const int n = degree + 1;
  if (order < 2 || n % order != 0) {
    throw std::invalid_argument("rotation order " + std::to_string(order) +
                                " must be >= 2 and divide the polygon size " + std::to_string(n));
  }
  const int sector = n / order;

  DiagramBuilder builder(n);
  bool stopped = false;
  std::unordered_set<std::string> seen;
  Filler filler(builder, stopped);

  for (const BaseRegion& center : central_regions(n, order)) {
    const int per_sector = center.size / order;
    if (per_sector > sector) continue;

    // corners = positions of the central region's vertices in the first
    // sector, measured from the first central vertex; the last entry closes
    // the sector.
    std::vector<int> corners{0};
    filler.choose_corners(corners, per_sector - 1, sector, [&] {
      corners.push_back(sector);
      const Cont emit = [&] {
        if (stopped) return;
        const Diagram piece = builder.build();
        DiagramBuilder whole(n);
        for (const Diagonal& d : piece.diagonals()) {
          for (int r = 0; r < order; ++r) {
            whole.insert((d.a + r * sector) % n, (d.b + r * sector) % n);
          }
        }
        if (center.kind == BaseKind::clique) {
          std::vector<int> ring;
          for (int r = 0; r < order; ++r) {
            for (std::size_t t = 0; t + 1 < corners.size(); ++t) {
              ring.push_back(corners[t] + r * sector);
            }
          }
          const std::size_t s = ring.size();
          for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = i + 2; j < s; ++j) {
              if (i == 0 && j == s - 1) continue;
              whole.insert(ring[i], ring[j]);
            }
          }
        }
        const Diagram symmetric = whole.build();
        // The new base vertex is any vertex of the first arc other than its
        // starting corner.
        for (int p = 1; p <= corners[1]; ++p) {
          Diagram out = rotate(symmetric, -p);
          if (options.verify_injective && !seen.insert(canonical_encoding(out)).second) {
            throw std::logic_error("enumerate_invariant produced " + canonical_encoding(out) +
                                   " twice");
          }
          if (!sink(out)) {
            stopped = true;
            return;
          }
        }
      };
      // Arc chords are ordinary region edges; the diameter of the degenerate
      // centre is one as well.
      filler.fill_region(corners, false, emit);
      corners.pop_back();
    });
    if (stopped) return false;
  }
  return !stopped;
}

bool enumerate_perp_invariant(int degree, int power, const DiagramSink& sink) {
  if (power < 0) throw std::invalid_argument("perpendicular power must be >= 0");
  return enumerate_all(degree, [&](const Diagram& a) {
    Diagram b = a;
    for (int i = 0; i < power; ++i) b = perp(b);
    return b == a ? sink(a) : true;
  });
}

bool brute_force_ptolemy(int n_vertices, const DiagramSink& sink, int limit) {
  const int cap = std::min(limit, kBruteForceHardCap);
  if (n_vertices < 2) throw std::invalid_argument("polygon needs at least 2 vertices");
  if (n_vertices > cap) {
    throw std::invalid_argument("brute force over " + std::to_string(n_vertices) +
                                "-gon subsets refused: limit is " + std::to_string(cap) +
                                " vertices (hard cap " + std::to_string(kBruteForceHardCap) + ")");
  }
  const std::vector<Diagonal> all = Diagram::full(n_vertices).diagonals();
  const std::uint64_t subsets = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    DiagramBuilder b(n_vertices);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1U) b.insert(all[i].a, all[i].b);
    }
    const Diagram d = b.build();
    if (is_ptolemy(d) && !sink(d)) return false;
  }
  return true;
}

void EnumFilter::validate(int degree) const {
  for (const auto* field : {&triangles, &cliques, &empty_cells, &perp_power}) {
    if (*field && **field < 0) throw std::invalid_argument("filter values must be non-negative");
  }
  if (rotation_order) {
    if (*rotation_order < 2 || (degree + 1) % *rotation_order != 0) {
      throw std::invalid_argument("rotation order must be >= 2 and divide the polygon size");
    }
  }
  if (rotation_order && perp_power) {
    throw std::invalid_argument("rotation order and perpendicular power are mutually exclusive");
  }
}

bool EnumFilter::matches_stats(const RegionStats& s) const {
  return (!triangles || *triangles == s.triangles) && (!cliques || *cliques == s.cliques) &&
         (!empty_cells || *empty_cells == s.empty_cells);
}

bool enumerate_filtered(int degree, const EnumFilter& filter, const DiagramSink& sink) {
  filter.validate(degree);
  const bool by_stats = filter.triangles || filter.cliques || filter.empty_cells;
  const DiagramSink filtered = [&](const Diagram& a) {
    if (by_stats && !filter.matches_stats(stats(a))) return true;
    return sink(a);
  };
  if (filter.rotation_order) return enumerate_invariant(degree, *filter.rotation_order, filtered);
  if (filter.perp_power) return enumerate_perp_invariant(degree, *filter.perp_power, filtered);
  return enumerate_all(degree, filtered);
}

}  // namespace ptolemy
