#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "ptolemy/diagram.hpp"
#include "ptolemy/enumerate.hpp"

using namespace ptolemy;

namespace {

// Pairwise oracle for nc: check every proper diagonal against every element.
Diagram nc_oracle(const Diagram& a) {
  const int n = a.n_vertices();
  std::vector<Diagonal> out;
  for (const Diagonal& cand : Diagram::full(n).diagonals()) {
    bool ok = true;
    for (const Diagonal& d : a.diagonals()) {
      if (crosses(n, cand, d)) ok = false;
    }
    if (ok) out.push_back(cand);
  }
  return Diagram(n, out);
}

Diagram subset(int n, std::uint64_t mask) {
  const auto all = Diagram::full(n).diagonals();
  std::vector<Diagonal> chosen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if ((mask >> i) & 1U) chosen.push_back(all[i]);
  }
  return Diagram(n, chosen);
}

std::set<std::vector<int>> region_vertex_sets(const std::vector<Region>& rs) {
  std::set<std::vector<int>> out;
  for (const Region& r : rs) out.insert(r.vertices);
  return out;
}

const std::vector<Diagram>& hexagon_triangulations() {
  static const std::vector<Diagram> tris = [] {
    std::vector<Diagram> out;
    enumerate_all(5, [&](const Diagram& d) {
      if (d.size() == 3 && skeleton(d) == d) out.push_back(d);
      return true;
    });
    return out;
  }();
  return tris;
}

}  // namespace

TEST(Diagonal, ProperDiagonals) {
  EXPECT_TRUE(is_proper_diagonal(6, {0, 2}));
  EXPECT_FALSE(is_proper_diagonal(6, {0, 1}));
  EXPECT_FALSE(is_proper_diagonal(6, {0, 5}));
  EXPECT_FALSE(is_proper_diagonal(6, {2, 2}));
  EXPECT_FALSE(is_proper_diagonal(6, {2, 6}));
  EXPECT_EQ(Diagram::full(6).size(), 9);
  EXPECT_EQ(Diagram::full(2).size(), 0);
  EXPECT_EQ(Diagram::full(kMaxVertices).size(), kMaxVertices * (kMaxVertices - 3) / 2);
}

TEST(Diagram, RejectsInvalidInput) {
  EXPECT_THROW(Diagram(1), std::invalid_argument);
  EXPECT_THROW(Diagram(kMaxVertices + 1), std::invalid_argument);
  EXPECT_THROW(Diagram(6, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Diagram(6, {{0, 2}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(Diagram(6, {{0, 7}}), std::invalid_argument);
}

TEST(Crosses, Examples) {
  EXPECT_TRUE(crosses(6, {0, 2}, {1, 3}));
  EXPECT_FALSE(crosses(6, {0, 2}, {2, 4}));
  EXPECT_FALSE(crosses(12, {0, 5}, {1, 3}));
  EXPECT_TRUE(crosses(6, {1, 3}, {0, 2}));
  EXPECT_TRUE(crosses(6, {3, 5}, {0, 4}));
}

TEST(Crosses, ImproperDiagonalIsContractViolation) {
  EXPECT_THROW(crosses(6, {0, 1}, {2, 4}), std::invalid_argument);
  EXPECT_THROW(crosses(5, {0, 2}, {1, 5}), std::invalid_argument);
}

TEST(Nc, Examples) {
  EXPECT_EQ(nc(Diagram(6)), Diagram::full(6));
  EXPECT_EQ(nc(Diagram::full(6)), Diagram(6));
  EXPECT_EQ(nc(Diagram(6, {{0, 3}})), Diagram(6, {{0, 3}, {0, 2}, {1, 3}, {3, 5}, {0, 4}}));
  EXPECT_EQ(nc(Diagram(2)), Diagram(2));
}

TEST(Nc, AgreesWithPairwiseOracleOnAllHeptagonSubsets) {
  for (std::uint64_t mask = 0; mask < (1U << 14); ++mask) {
    const Diagram a = subset(7, mask);
    ASSERT_EQ(nc(a), nc_oracle(a)) << a;
  }
}

TEST(IsPtolemy, Examples) {
  EXPECT_TRUE(is_ptolemy(Diagram(6)));
  EXPECT_TRUE(is_ptolemy(Diagram::full(6)));
  EXPECT_FALSE(is_ptolemy(Diagram(6, {{0, 2}, {1, 3}})));
  EXPECT_TRUE(is_ptolemy(Diagram(2)));
  ASSERT_EQ(hexagon_triangulations().size(), 14U);
  for (const Diagram& t : hexagon_triangulations()) EXPECT_TRUE(is_ptolemy(t)) << t;
}

TEST(Skeleton, Examples) {
  for (const Diagram& t : hexagon_triangulations()) EXPECT_EQ(skeleton(t), t);
  EXPECT_EQ(skeleton(Diagram::full(6)), Diagram(6));
  const Diagram fan(6, {{0, 3}, {1, 3}, {3, 5}});
  EXPECT_EQ(skeleton(fan), fan);
}

TEST(Regions, Examples) {
  const auto full = regions(Diagram::full(6));
  ASSERT_EQ(full.size(), 1U);
  EXPECT_EQ(full[0].kind, RegionKind::clique);
  EXPECT_EQ(full[0].vertices.size(), 6U);

  const auto empty = regions(Diagram(6));
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_EQ(empty[0].kind, RegionKind::empty_cell);
  EXPECT_EQ(empty[0].vertices, (std::vector<int>{0, 1, 2, 3, 4, 5}));

  const auto tri = regions(Diagram(6, {{0, 3}, {1, 3}, {3, 5}}));
  EXPECT_EQ(region_vertex_sets(tri),
            (std::set<std::vector<int>>{{0, 1, 3}, {1, 2, 3}, {3, 4, 5}, {0, 3, 5}}));
  for (const Region& r : tri) EXPECT_EQ(r.kind, RegionKind::triangle);

  EXPECT_TRUE(regions(Diagram(2)).empty());
}

TEST(Regions, MixedFaceIsClassificationError) {
  EXPECT_THROW(regions(Diagram(6, {{0, 2}, {1, 3}})), RegionClassificationError);
  EXPECT_THROW(regions(Diagram(5, {{0, 2}, {1, 3}})), RegionClassificationError);
  EXPECT_NO_THROW(regions(Diagram(5, {{0, 2}})));
}

TEST(Stats, Examples) {
  EXPECT_EQ(stats(Diagram(2)), (RegionStats{1, 0, 0, 0}));
  EXPECT_EQ(stats(Diagram(3)), (RegionStats{2, 1, 0, 0}));
  for (const Diagram& t : hexagon_triangulations()) EXPECT_EQ(stats(t), (RegionStats{5, 4, 0, 0}));
  EXPECT_EQ(stats(Diagram(6)), (RegionStats{5, 0, 0, 1}));
  EXPECT_EQ(stats(Diagram::full(6)), (RegionStats{5, 0, 1, 0}));
  // square clique glued to a triangle on each side of a hexagon's diameter
  EXPECT_EQ(stats(Diagram(6, {{0, 2}, {2, 5}, {2, 4}, {3, 5}})), (RegionStats{5, 2, 1, 0}));
}

TEST(Rotate, Examples) {
  const Diagram a(6, {{0, 3}, {1, 5}});
  EXPECT_EQ(rotate(a, 0), a);
  EXPECT_EQ(rotate(a, 6), a);
  EXPECT_EQ(rotate(a, -6), a);
  EXPECT_EQ(rotate(Diagram(6, {{0, 3}}), 1), Diagram(6, {{1, 4}}));
  EXPECT_EQ(rotate(rotate(a, 2), -2), a);
  EXPECT_EQ(rotate(Diagram(6, {{1, 4}}), 2), Diagram(6, {{0, 3}}));
}

TEST(Perp, Examples) {
  EXPECT_EQ(perp(Diagram::full(6)), Diagram(6));
  for (const Diagram& t : hexagon_triangulations()) {
    EXPECT_EQ(nc(t), t);
    EXPECT_EQ(perp(t), rotate(t, 1));
  }
}

TEST(Perp, EvenPowersAreRotations) {
  for (int n = 2; n <= 8; ++n) {
    enumerate_all(n - 1, [&](const Diagram& a) {
      Diagram b = a;
      for (int power = 1; power <= 6; ++power) {
        b = perp(b);
        EXPECT_TRUE(is_ptolemy(b));
        if (power % 2 == 0) EXPECT_EQ(b, rotate(a, power)) << a;
      }
      return true;
    });
  }
}

TEST(Encoding, Examples) {
  EXPECT_EQ(canonical_encoding(Diagram(6, {{3, 0}})), "6:0-3");
  EXPECT_EQ(canonical_encoding(Diagram(6, {{1, 4}, {0, 2}})), "6:0-2,1-4");
  EXPECT_EQ(canonical_encoding(Diagram(2)), "2:");
}

TEST(Encoding, ParseAcceptsAnyOrderAndRejectsGarbage) {
  EXPECT_EQ(parse_diagram("6:4-1,2-0"), Diagram(6, {{1, 4}, {0, 2}}));
  EXPECT_EQ(parse_diagram("2:"), Diagram(2));
  for (const char* bad : {"", "6", "6:0-", "6:0-2,", "x:0-2", "6:0-1", "6:0-2,0-2", "6:0+2"}) {
    EXPECT_THROW(parse_diagram(bad), std::invalid_argument) << bad;
  }
}

TEST(Encoding, InjectiveAndRoundTripsOnAllOctagonDiagrams) {
  std::set<std::string> seen;
  enumerate_all(7, [&](const Diagram& a) {
    const std::string enc = canonical_encoding(a);
    EXPECT_TRUE(seen.insert(enc).second);
    EXPECT_EQ(parse_diagram(enc), a);
    nlohmann::json j = a;
    EXPECT_EQ(diagram_from_json(nlohmann::json::parse(j.dump())), a);
    return true;
  });
  EXPECT_EQ(seen.size(), 2274U);
}

TEST(Encoding, JsonShape) {
  const nlohmann::json j = Diagram(6, {{1, 4}, {0, 2}});
  EXPECT_EQ(j, nlohmann::json::parse(R"({"n": 6, "diagonals": [[0,2],[1,4]]})"));
  EXPECT_THROW(diagram_from_json(nlohmann::json::parse(R"({"n": 6, "diagonals": [[0]]})")),
               std::invalid_argument);
}

// --- invariants ---------------------------------------------------------------

TEST(Invariants, NcIsInvolutionOnPtolemyDiagrams) {
  for (int n = 2; n <= 8; ++n) {
    enumerate_all(n - 1, [](const Diagram& a) {
      EXPECT_EQ(nc(nc(a)), a);
      return true;
    });
  }
}

TEST(Invariants, NcLandsOnPtolemyDiagramsForEverySubset) {
  for (int n = 2; n <= 7; ++n) {
    const int count = n * (n - 3) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::max(count, 0)); ++mask) {
      ASSERT_TRUE(is_ptolemy(nc(subset(n, mask))));
    }
  }
}

TEST(Invariants, NcIsAntitone) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const int count = n * (n - 3) / 2;
    const auto all = Diagram::full(n).diagonals();
    std::vector<Diagonal> small;
    std::vector<Diagonal> large;
    for (int i = 0; i < count; ++i) {
      const auto roll = rng() % 4;
      if (roll == 0) small.push_back(all[static_cast<std::size_t>(i)]);
      if (roll <= 1) large.push_back(all[static_cast<std::size_t>(i)]);
    }
    const Diagram a(n, small);
    const Diagram b(n, large);
    ASSERT_TRUE(a.subset_of(b));
    ASSERT_TRUE(nc(b).subset_of(nc(a))) << a << " " << b;
  }
}

TEST(Invariants, StatsUnderRotationAndNc) {
  for (int n = 3; n <= 8; ++n) {
    enumerate_all(n - 1, [&](const Diagram& a) {
      const RegionStats s = stats(a);
      for (int step = 1; step < n; ++step) EXPECT_EQ(stats(rotate(a, step)), s);
      const RegionStats swapped = stats(nc(a));
      EXPECT_EQ(swapped, (RegionStats{s.degree, s.triangles, s.empty_cells, s.cliques}));
      EXPECT_EQ(s.triangles + s.cliques + s.empty_cells, skeleton(a).size() + 1);
      return true;
    });
  }
}

TEST(Invariants, ClassificationPathsAgreeOnEverySubset) {
  for (int n = 2; n <= 7; ++n) {
    const int count = n * (n - 3) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::max(count, 0)); ++mask) {
      const Diagram a = subset(n, mask);
      bool classified = true;
      try {
        regions(a);
      } catch (const RegionClassificationError&) {
        classified = false;
      }
      ASSERT_EQ(classified, is_ptolemy(a)) << a;
    }
  }
}
