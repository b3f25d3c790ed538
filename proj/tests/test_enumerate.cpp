#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "ptolemy/count.hpp"
#include "ptolemy/diagram.hpp"
#include "ptolemy/enumerate.hpp"

using namespace ptolemy;

namespace {

std::set<std::string> encodings(const std::vector<Diagram>& ds) {
  std::set<std::string> out;
  for (const Diagram& d : ds) out.insert(canonical_encoding(d));
  return out;
}

std::vector<Diagram> all_of(int degree) {
  return collect([&](const DiagramSink& s) { return enumerate_all(degree, s); });
}

std::vector<Diagram> rotation_fixed(int degree, int order) {
  const int n = degree + 1;
  std::vector<Diagram> out;
  enumerate_all(degree, [&](const Diagram& a) {
    if (rotate(a, n / order) == a) out.push_back(a);
    return true;
  });
  return out;
}

std::map<RegionStats, int> tally(const std::vector<Diagram>& ds) {
  std::map<RegionStats, int> out;
  for (const Diagram& d : ds) ++out[stats(d)];
  return out;
}

}  // namespace

TEST(EnumerateAll, SmallCases) {
  const auto one = all_of(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0], Diagram(2));
  EXPECT_EQ(stats(one[0]), (RegionStats{1, 0, 0, 0}));

  EXPECT_EQ(all_of(2).size(), 1U);

  const auto square = all_of(3);
  EXPECT_EQ(encodings(square), (std::set<std::string>{"4:", "4:0-2", "4:1-3", "4:0-2,1-3"}));
  const auto t = tally(square);
  EXPECT_EQ(t.at({3, 2, 0, 0}), 2);
  EXPECT_EQ(t.at({3, 0, 1, 0}), 1);
  EXPECT_EQ(t.at({3, 0, 0, 1}), 1);
}

TEST(EnumerateAll, RejectsBadDegree) {
  const DiagramSink ignore = [](const Diagram&) { return true; };
  EXPECT_THROW(enumerate_all(0, ignore), std::invalid_argument);
  EXPECT_THROW(enumerate_all(kMaxVertices, ignore), std::invalid_argument);
}

TEST(EnumerateAll, TotalsMatchIndependentReference) {
  // Totals computed separately by a subset-closure script.
  const std::vector<std::size_t> expected{1, 1, 4, 17, 82, 422, 2274, 12665};
  for (int degree = 1; degree <= 8; ++degree) {
    EXPECT_EQ(all_of(degree).size(), expected[static_cast<std::size_t>(degree - 1)]);
  }
}

TEST(EnumerateAll, ValidDistinctAndMatchesCountsUpToDegreeEight) {
  for (int degree = 1; degree <= 8; ++degree) {
    const auto ds = all_of(degree);
    for (const Diagram& d : ds) ASSERT_TRUE(is_ptolemy(d)) << d;
    EXPECT_EQ(encodings(ds).size(), ds.size());
    const auto t = tally(ds);
    BigInt total = 0;
    for (const RegionStats& s : stats_classes(degree)) {
      const auto it = t.find(s);
      EXPECT_EQ(count_ptolemy(s), it == t.end() ? 0 : it->second) << s;
      total += count_ptolemy(s);
    }
    EXPECT_EQ(total, ds.size());
    for (const auto& [s, c] : t) EXPECT_GT(count_ptolemy(s), 0) << s;
  }
}

TEST(EnumerateAll, EqualsBruteForceUpToEightVertices) {
  for (int n = 2; n <= 8; ++n) {
    const auto brute = collect([&](const DiagramSink& s) { return brute_force_ptolemy(n, s); });
    EXPECT_EQ(encodings(brute), encodings(all_of(n - 1))) << n;
  }
}

TEST(EnumerateAll, Deterministic) {
  EXPECT_EQ(all_of(7), all_of(7));
}

TEST(EnumerateAll, OrderFollowsBaseRegionPartition) {
  for (int degree = 1; degree <= 7; ++degree) {
    std::vector<Diagram> chained;
    for (const BaseRegion& part : base_region_partition(degree)) {
      enumerate_part(degree, part, [&](const Diagram& d) {
        chained.push_back(d);
        return true;
      });
    }
    EXPECT_EQ(chained, all_of(degree));
  }
  const auto parts = base_region_partition(5);
  ASSERT_EQ(parts.size(), 7U);
  EXPECT_EQ(parts[0], (BaseRegion{BaseKind::triangle, 3}));
  EXPECT_EQ(parts[1], (BaseRegion{BaseKind::clique, 4}));
  EXPECT_EQ(parts[3], (BaseRegion{BaseKind::clique, 6}));
  EXPECT_EQ(parts[4], (BaseRegion{BaseKind::empty_cell, 4}));
  EXPECT_EQ(base_region_partition(1), (std::vector<BaseRegion>{{BaseKind::degenerate, 2}}));
}

TEST(EnumerateAll, SinkCanStopEarly) {
  int seen = 0;
  const bool finished = enumerate_all(6, [&](const Diagram&) { return ++seen < 10; });
  EXPECT_FALSE(finished);
  EXPECT_EQ(seen, 10);
  EXPECT_TRUE(enumerate_all(3, [](const Diagram&) { return true; }));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(collect([](const DiagramSink& s) { return brute_force_ptolemy(4, s); }).size(), 4U);
  const auto hex = collect([](const DiagramSink& s) { return brute_force_ptolemy(6, s); });
  EXPECT_EQ(tally(hex).at({5, 4, 0, 0}), 14);
  const DiagramSink ignore = [](const Diagram&) { return true; };
  EXPECT_THROW(brute_force_ptolemy(9, ignore), std::invalid_argument);
  EXPECT_THROW(brute_force_ptolemy(10, ignore, 10), std::invalid_argument);
}

TEST(EnumerateInvariant, DodecagonQuarterTurnExamples) {
  const auto fixed =
      collect([](const DiagramSink& s) { return enumerate_invariant(11, 4, s, {true}); });
  const auto t = tally(fixed);
  EXPECT_EQ(t.at({11, 8, 1, 0}), 6);
  EXPECT_EQ(t.at({11, 0, 0, 1}), 1);
  for (const Diagram& d : fixed) EXPECT_EQ(rotate(d, 3), d);
}

TEST(EnumerateInvariant, HexagonHalfTurnMatchesFilter) {
  const auto direct = collect([](const DiagramSink& s) { return enumerate_invariant(5, 2, s); });
  EXPECT_EQ(encodings(direct), encodings(rotation_fixed(5, 2)));
}

TEST(EnumerateInvariant, EqualsRotationFixedSubsetUpToDodecagon) {
  for (int n = 2; n <= 12; ++n) {
    const int degree = n - 1;
    const auto everything = all_of(degree);
    for (int order = 2; order <= n; ++order) {
      if (n % order != 0) continue;
      std::set<std::string> expected;
      for (const Diagram& a : everything) {
        if (rotate(a, n / order) == a) expected.insert(canonical_encoding(a));
      }
      const auto direct = collect(
          [&](const DiagramSink& s) { return enumerate_invariant(degree, order, s, {true}); });
      EXPECT_EQ(direct.size(), expected.size()) << n << " " << order;
      EXPECT_EQ(encodings(direct), expected) << n << " " << order;
    }
  }
}

TEST(EnumerateInvariant, RejectsBadOrder) {
  const DiagramSink ignore = [](const Diagram&) { return true; };
  EXPECT_THROW(enumerate_invariant(5, 4, ignore), std::invalid_argument);
  EXPECT_THROW(enumerate_invariant(5, 1, ignore), std::invalid_argument);
  EXPECT_THROW(enumerate_invariant(5, 0, ignore), std::invalid_argument);
}

TEST(EnumeratePerpInvariant, HexagonCubeExamples) {
  const auto fixed =
      collect([](const DiagramSink& s) { return enumerate_perp_invariant(5, 3, s); });
  const auto t = tally(fixed);
  EXPECT_EQ(t.at({5, 0, 1, 1}), 6);
  EXPECT_EQ(t.at({5, 4, 0, 0}), 6);
}

TEST(EnumeratePerpInvariant, EvenPowersAreRotationFixedSets) {
  for (int n = 3; n <= 9; ++n) {
    const auto everything = all_of(n - 1);
    for (int power = 2; power <= 2 * n; power += 2) {
      std::set<std::string> expected;
      for (const Diagram& a : everything) {
        if (rotate(a, power) == a) expected.insert(canonical_encoding(a));
      }
      const auto got =
          collect([&](const DiagramSink& s) { return enumerate_perp_invariant(n - 1, power, s); });
      EXPECT_EQ(encodings(got), expected) << n << " " << power;
    }
  }
}

TEST(EnumFilter, ValidationAndRouting) {
  EnumFilter bad_order;
  bad_order.rotation_order = 5;
  EXPECT_THROW(bad_order.validate(5), std::invalid_argument);

  EnumFilter both;
  both.rotation_order = 2;
  both.perp_power = 3;
  EXPECT_THROW(both.validate(5), std::invalid_argument);

  EnumFilter negative;
  negative.triangles = -1;
  EXPECT_THROW(negative.validate(5), std::invalid_argument);

  EnumFilter tri;
  tri.triangles = 4;
  EXPECT_EQ(collect([&](const DiagramSink& s) { return enumerate_filtered(5, tri, s); }).size(),
            14U);

  EnumFilter quarter;
  quarter.rotation_order = 4;
  quarter.triangles = 8;
  quarter.cliques = 1;
  quarter.empty_cells = 0;
  EXPECT_EQ(collect([&](const DiagramSink& s) { return enumerate_filtered(11, quarter, s); }).size(),
            6U);

  EnumFilter perp3;
  perp3.perp_power = 3;
  perp3.cliques = 1;
  EXPECT_EQ(collect([&](const DiagramSink& s) { return enumerate_filtered(5, perp3, s); }).size(),
            6U);
}
