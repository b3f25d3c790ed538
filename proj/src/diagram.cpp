#include "ptolemy/diagram.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ptolemy {

namespace {

using Row = Diagram::Row;

// Bits lo..hi inclusive; empty when lo > hi.
Row range_mask(int lo, int hi) {
  if (lo > hi) return 0;
  const std::uint64_t upper = (std::uint64_t{1} << (hi + 1)) - 1;
  const std::uint64_t lower = (std::uint64_t{1} << lo) - 1;
  return static_cast<Row>(upper ^ lower);
}

void check_size(int n) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("polygon size " + std::to_string(n) + " outside [2, " +
                                std::to_string(kMaxVertices) + "]");
  }
}

// Is the proper diagonal {a, b} (a < b) crossed by some element of the set
// described by `rows`? A crossing diagonal has one endpoint strictly inside
// (a, b) and the other strictly outside [a, b].
template <typename Rows>
bool crossed_by(const Rows& rows, int n, int a, int b) {
  const Row all = range_mask(0, n - 1);
  const Row outside = all & ~range_mask(a, b);
  for (int c = a + 1; c < b; ++c) {
    if (rows[static_cast<std::size_t>(c)] & outside) return true;
  }
  return false;
}

template <typename F>
void for_each_proper(int n, F&& f) {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      f(a, b);
    }
  }
}

}  // namespace

bool is_proper_diagonal(int n_vertices, Diagonal d) {
  if (d.a < 0 || d.b >= n_vertices || d.a == d.b) return false;
  if (d.b - d.a == 1) return false;
  if (d.a == 0 && d.b == n_vertices - 1) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const RegionStats& s) {
  return os << '(' << s.degree << ',' << s.triangles << ',' << s.cliques << ','
            << s.empty_cells << ')';
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::triangle:
      return "triangle";
    case RegionKind::clique:
      return "clique";
    case RegionKind::empty_cell:
      return "empty_cell";
  }
  return "?";
}

// --- Diagram ---------------------------------------------------------------

Diagram::Diagram(int n_vertices) : n_(n_vertices) { check_size(n_vertices); }

Diagram::Diagram(int n_vertices, std::span<const Diagonal> diagonals) : Diagram(n_vertices) {
  DiagramBuilder builder(n_vertices);
  for (const Diagonal& d : diagonals) {
    if (!is_proper_diagonal(n_vertices, d)) {
      throw std::invalid_argument("{" + std::to_string(d.a) + "," + std::to_string(d.b) +
                                  "} is not a proper diagonal of the " +
                                  std::to_string(n_vertices) + "-gon");
    }
    if (builder.contains(d.a, d.b)) {
      throw std::invalid_argument("duplicate diagonal {" + std::to_string(d.a) + "," +
                                  std::to_string(d.b) + "}");
    }
    builder.insert(d.a, d.b);
  }
  *this = builder.build();
}

Diagram::Diagram(int n_vertices, std::initializer_list<Diagonal> diagonals)
    : Diagram(n_vertices, std::span<const Diagonal>(diagonals.begin(), diagonals.size())) {}

Diagram Diagram::full(int n_vertices) {
  DiagramBuilder builder(n_vertices);
  for_each_proper(n_vertices, [&](int a, int b) { builder.insert(a, b); });
  return builder.build();
}

bool Diagram::contains(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Diagram::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[static_cast<std::size_t>(v)]);
  return twice / 2;
}

std::vector<Diagonal> Diagram::diagonals() const {
  std::vector<Diagonal> out;
  for (int a = 0; a < n_; ++a) {
    Row higher = rows_[static_cast<std::size_t>(a)] & ~range_mask(0, a);
    while (higher) {
      const int b = std::countr_zero(higher);
      out.emplace_back(a, b);
      higher &= higher - 1;
    }
  }
  return out;
}

bool Diagram::subset_of(const Diagram& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v) {
    const auto i = static_cast<std::size_t>(v);
    if (rows_[i] & ~other.rows_[i]) return false;
  }
  return true;
}

// --- DiagramBuilder ----------------------------------------------------------

DiagramBuilder::DiagramBuilder(int n_vertices) : n_(n_vertices) { check_size(n_vertices); }

void DiagramBuilder::insert(int u, int v) {
  rows_[static_cast<std::size_t>(u)] |= Row{1} << v;
  rows_[static_cast<std::size_t>(v)] |= Row{1} << u;
}

void DiagramBuilder::erase(int u, int v) {
  rows_[static_cast<std::size_t>(u)] &= ~(Row{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(Row{1} << u);
}

bool DiagramBuilder::contains(int u, int v) const {
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

Diagram DiagramBuilder::build() const {
  Diagram d;
  d.n_ = n_;
  d.rows_ = rows_;
  return d;
}

// --- operations --------------------------------------------------------------

bool crosses(int n_vertices, Diagonal d1, Diagonal d2) {
  if (!is_proper_diagonal(n_vertices, d1) || !is_proper_diagonal(n_vertices, d2)) {
    throw std::invalid_argument("crosses: diagonal is not proper for the " +
                                std::to_string(n_vertices) + "-gon");
  }
  const auto inside = [](int x, const Diagonal& d) { return d.a < x && x < d.b; };
  const auto outside = [](int x, const Diagonal& d) { return x < d.a || x > d.b; };
  return (inside(d2.a, d1) && outside(d2.b, d1)) || (inside(d2.b, d1) && outside(d2.a, d1));
}

Diagram nc(const Diagram& a) {
  const int n = a.n_vertices();
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = a.row(v);
  DiagramBuilder out(n);
  for_each_proper(n, [&](int u, int v) {
    if (!crossed_by(rows, n, u, v)) out.insert(u, v);
  });
  return out.build();
}

bool is_ptolemy(const Diagram& a) { return nc(nc(a)) == a; }

Diagram skeleton(const Diagram& a) {
  const int n = a.n_vertices();
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = a.row(v);
  DiagramBuilder out(n);
  for (const Diagonal& d : a.diagonals()) {
    if (!crossed_by(rows, n, d.a, d.b)) out.insert(d.a, d.b);
  }
  return out.build();
}

std::vector<Region> regions(const Diagram& a) {
  const int n = a.n_vertices();
  std::vector<Region> out;
  if (n == 2) return out;

  const Diagram skel = skeleton(a);
  int clique_internal = 0;

  // The face lying on the inner side of the chord (or base edge) {lo, hi}:
  // from each face vertex, step to the farthest skeleton neighbour (or the next
  // boundary vertex) that does not pass hi.
  std::function<void(int, int)> face = [&](int lo, int hi) {
    std::vector<int> verts{lo};
    int u = lo;
    while (u != hi) {
      int next = u + 1;
      for (int w = hi; w > u + 1; --w) {
        if (u == lo && w == hi) continue;
        if (skel.contains(u, w)) {
          next = w;
          break;
        }
      }
      verts.push_back(next);
      u = next;
    }

    Region region;
    const int size = static_cast<int>(verts.size());
    if (size == 3) {
      region.kind = RegionKind::triangle;
    } else {
      int present = 0;
      int total = 0;
      for (int s = 0; s < size; ++s) {
        for (int t = s + 2; t < size; ++t) {
          if (s == 0 && t == size - 1) continue;
          ++total;
          if (a.contains(verts[static_cast<std::size_t>(s)], verts[static_cast<std::size_t>(t)]))
            ++present;
        }
      }
      if (present == total) {
        region.kind = RegionKind::clique;
        clique_internal += total;
      } else if (present == 0) {
        region.kind = RegionKind::empty_cell;
      } else {
        std::ostringstream msg;
        msg << "face {";
        for (int s = 0; s < size; ++s) msg << (s ? "," : "") << verts[static_cast<std::size_t>(s)];
        msg << "} has " << present << " of its " << total
            << " internal diagonals; not a Ptolemy diagram";
        throw RegionClassificationError(msg.str());
      }
    }
    region.vertices = verts;
    out.push_back(std::move(region));

    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      if (verts[i + 1] - verts[i] >= 2) face(verts[i], verts[i + 1]);
    }
  };
  face(0, n - 1);

  if (a.size() != skel.size() + clique_internal) {
    throw RegionClassificationError(
        "diagram has diagonals crossing the skeleton outside any clique; not a Ptolemy diagram");
  }
  return out;
}

RegionStats stats(const Diagram& a) {
  RegionStats s;
  s.degree = a.n_vertices() - 1;
  for (const Region& r : regions(a)) {
    switch (r.kind) {
      case RegionKind::triangle:
        ++s.triangles;
        break;
      case RegionKind::clique:
        ++s.cliques;
        break;
      case RegionKind::empty_cell:
        ++s.empty_cells;
        break;
    }
  }
  return s;
}

Diagram rotate(const Diagram& a, int steps) {
  const int n = a.n_vertices();
  const int shift = ((steps % n) + n) % n;
  if (shift == 0) return a;
  DiagramBuilder out(n);
  for (const Diagonal& d : a.diagonals()) out.insert((d.a + shift) % n, (d.b + shift) % n);
  return out.build();
}

Diagram perp(const Diagram& a) { return rotate(nc(a), 1); }

std::string canonical_encoding(const Diagram& a) {
  std::string out = std::to_string(a.n_vertices());
  out += ':';
  bool first = true;
  for (const Diagonal& d : a.diagonals()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(d.a);
    out += '-';
    out += std::to_string(d.b);
  }
  return out;
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed diagram text '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("malformed diagram text '" + std::string(text) +
                                "': missing ':'");
  }
  const int n = parse_int(text.substr(0, colon), text);
  std::vector<Diagonal> diagonals;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view pair = rest.substr(0, comma);
    const auto dash = pair.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("malformed diagonal '" + std::string(pair) + "'");
    }
    diagonals.emplace_back(parse_int(pair.substr(0, dash), text),
                           parse_int(pair.substr(dash + 1), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing ',' in '" + std::string(text) + "'");
  }
  return Diagram(n, diagonals);
}

void to_json(nlohmann::json& j, const Diagram& a) {
  auto pairs = nlohmann::json::array();
  for (const Diagonal& d : a.diagonals()) pairs.push_back({d.a, d.b});
  j = nlohmann::json{{"n", a.n_vertices()}, {"diagonals", std::move(pairs)}};
}

void from_json(const nlohmann::json& j, Diagram& a) { a = diagram_from_json(j); }

Diagram diagram_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Diagonal> diagonals;
  for (const auto& pair : j.at("diagonals")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("diagonal must be a two-element array");
    }
    diagonals.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Diagram(n, diagonals);
}

std::ostream& operator<<(std::ostream& os, const Diagram& a) {
  return os << canonical_encoding(a);
}

}  // namespace ptolemy
