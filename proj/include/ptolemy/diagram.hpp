#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ptolemy {

/// Largest polygon the diagonal-set representation can hold.
inline constexpr int kMaxVertices = 32;

/// A diagonal between two vertices of a labeled polygon, stored with a < b.
/// Whether it is proper (not a boundary edge) depends on the polygon size and
/// is checked by Diagram and by crosses().
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  Diagonal(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

bool is_proper_diagonal(int n_vertices, Diagonal d);

/// Statistics of a Ptolemy diagram. `degree` is the vertex count minus one,
/// which is also the exponent of z in the generating function.
struct RegionStats {
  int degree = 1;
  int triangles = 0;
  int cliques = 0;
  int empty_cells = 0;

  friend auto operator<=>(const RegionStats&, const RegionStats&) = default;
};

std::ostream& operator<<(std::ostream& os, const RegionStats& s);

enum class RegionKind { triangle, clique, empty_cell };

std::string_view to_string(RegionKind kind);

/// A face of the non-crossing skeleton, vertices in increasing (= cyclic) order.
struct Region {
  std::vector<int> vertices;
  RegionKind kind = RegionKind::triangle;

  friend bool operator==(const Region&, const Region&) = default;
};

/// Signals a diagonal set whose faces cannot be classified as triangle, clique
/// or empty cell, i.e. a set that is not a Ptolemy diagram.
class RegionClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A set of proper diagonals of a polygon with vertices 0..n-1 labeled
/// counterclockwise. The distinguished base edge is the boundary edge {n-1, 0}.
///
/// Stored as one adjacency bitmask per vertex; values are immutable once built.
class Diagram {
 public:
  using Row = std::uint32_t;

  /// The empty diagram on an n-gon, 2 <= n <= kMaxVertices.
  explicit Diagram(int n_vertices);
  /// Throws std::invalid_argument on improper or duplicate diagonals.
  Diagram(int n_vertices, std::span<const Diagonal> diagonals);
  Diagram(int n_vertices, std::initializer_list<Diagonal> diagonals);

  /// Every proper diagonal of the n-gon.
  static Diagram full(int n_vertices);

  int n_vertices() const { return n_; }
  bool contains(int u, int v) const;
  bool contains(Diagonal d) const { return contains(d.a, d.b); }
  /// Number of diagonals.
  int size() const;
  bool empty() const { return size() == 0; }
  /// Diagonals in lexicographic order.
  std::vector<Diagonal> diagonals() const;
  /// Adjacency mask of vertex v (bit w set iff {v, w} is in the diagram).
  Row row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  /// True if every diagonal of this diagram is also in `other`.
  bool subset_of(const Diagram& other) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  friend class DiagramBuilder;
  Diagram() = default;

  int n_ = 2;
  std::array<Row, kMaxVertices> rows_{};
};

/// Mutable scratch space used by generators; produces immutable Diagrams.
class DiagramBuilder {
 public:
  explicit DiagramBuilder(int n_vertices);

  int n_vertices() const { return n_; }
  void insert(int u, int v);
  void erase(int u, int v);
  bool contains(int u, int v) const;
  Diagram build() const;

 private:
  int n_;
  std::array<Diagram::Row, kMaxVertices> rows_{};
};

/// True iff the two diagonals of an n-gon strictly interleave. Diagonals sharing
/// an endpoint never cross. Throws std::invalid_argument if either is not a
/// proper diagonal of the n-gon.
bool crosses(int n_vertices, Diagonal d1, Diagonal d2);

/// All proper diagonals crossing no element of `a`. Defined for any set.
Diagram nc(const Diagram& a);

/// a == nc(nc(a)).
bool is_ptolemy(const Diagram& a);

/// The elements of `a` crossed by no other element of `a`.
Diagram skeleton(const Diagram& a);

/// Faces of the skeleton dissection, classified. Faces of size >= 4 must be
/// completely filled or completely empty, and every diagonal of `a` must lie in
/// the skeleton or inside a clique; otherwise RegionClassificationError.
/// The degenerate 2-gon has no regions.
std::vector<Region> regions(const Diagram& a);

RegionStats stats(const Diagram& a);

/// Maps vertex i to (i + steps) mod n. One step is a counterclockwise turn.
Diagram rotate(const Diagram& a, int steps);

/// rotate(nc(a), 1).
Diagram perp(const Diagram& a);

/// `<n>:<a-b>,<c-d>,...` with each pair ascending and pairs sorted.
std::string canonical_encoding(const Diagram& a);

/// Inverse of canonical_encoding. Accepts pairs in any order and orientation;
/// throws std::invalid_argument on malformed text.
Diagram parse_diagram(std::string_view text);

/// JSON form `{"n": 6, "diagonals": [[0,2],[1,4]]}`.
void to_json(nlohmann::json& j, const Diagram& a);
void from_json(const nlohmann::json& j, Diagram& a);
Diagram diagram_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Diagram& a);

}  // namespace ptolemy
