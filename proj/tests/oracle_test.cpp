#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "orbitdeg/errors.hpp"
#include "orbitdeg/oracle.hpp"
#include "orbitdeg/walk_counting.hpp"

namespace orbitdeg {
namespace {

std::vector<Vertex> rotate(const std::vector<Vertex>& s, std::size_t k) {
  std::vector<Vertex> out(s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

// Every closed walk, canonicalized and deduplicated.
std::set<OrbitRep> orbits_from_all_walks(const GraphSpec& g, int n) {
  std::set<OrbitRep> out;
  std::vector<Vertex> walk;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == n) {
      if (g.adjacent(walk.back(), walk.front())) out.insert(canonical_cyclic(walk));
      return;
    }
    for (Vertex next : g.neighbors(walk.back())) {
      walk.push_back(next);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex s = 1; s <= g.vertex_count(); ++s) {
    walk = {s};
    rec(rec);
  }
  return out;
}

TEST(CanonicalCyclic, Examples) {
  EXPECT_EQ(canonical_cyclic(std::vector<Vertex>{2, 4, 1}).vertices, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(canonical_cyclic(std::vector<Vertex>{1, 2, 1, 2}).vertices, (std::vector<Vertex>{1, 2, 1, 2}));
  EXPECT_EQ(canonical_cyclic(std::vector<Vertex>{5, 4, 1, 2, 4, 1}).vertices,
            (std::vector<Vertex>{1, 2, 4, 1, 5, 4}));
  EXPECT_THROW(canonical_cyclic(std::vector<Vertex>{}), DomainError);
}

TEST(CanonicalCyclic, RotationInvariantAndIdempotent) {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<Vertex> label(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vertex> s(static_cast<std::size_t>(len(rng)));
    for (auto& x : s) x = label(rng);
    const OrbitRep c = canonical_cyclic(s);
    EXPECT_EQ(canonical_cyclic(c.vertices), c);
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(canonical_cyclic(rotate(s, k)), c);
      EXPECT_LE(c.vertices, rotate(s, k));
    }
  }
}

TEST(EnumerateOrbits, Examples) {
  const auto k2 = enumerate_orbits(GraphSpec::complete(2), 4);
  ASSERT_EQ(k2.size(), 1U);
  EXPECT_EQ(k2[0].vertices, (std::vector<Vertex>{1, 2, 1, 2}));
  EXPECT_EQ(enumerate_orbits(GraphSpec::complete(3), 3).size(), 2U);
}

TEST(EnumerateOrbits, PrimeLengthsMatchWalkCount) {
  for (int V = 2; V <= 5; ++V) {
    for (int p : {2, 3, 5, 7}) {
      EXPECT_EQ(Integer(enumerate_orbits(GraphSpec::complete(V), p).size()) * p, closed_walks_complete(p, V));
    }
  }
}

TEST(EnumerateOrbits, MatchesCanonicalizedWalksOnRandomGraphs) {
  std::mt19937 rng(2718);
  std::bernoulli_distribution coin(0.6);
  for (int trial = 0; trial < 20; ++trial) {
    const int V = 2 + trial % 4;
    std::vector<Bond> bonds;
    for (Vertex i = 1; i <= V; ++i) {
      for (Vertex j = i + 1; j <= V; ++j) {
        if (coin(rng)) bonds.emplace_back(i, j);
      }
    }
    const GraphSpec g = GraphSpec::from_bonds(V, bonds);
    for (int n = 2; n <= 7; ++n) {
      const auto listed = enumerate_orbits(g, n);
      const auto expected = orbits_from_all_walks(g, n);
      EXPECT_EQ(std::set<OrbitRep>(listed.begin(), listed.end()), expected);
      EXPECT_EQ(listed.size(), expected.size());  // no duplicates
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    }
  }
}

TEST(EnumerateOrbits, Caps) {
  EXPECT_THROW(enumerate_orbits(GraphSpec::complete(3), 13), SizeCapError);
  EXPECT_THROW(enumerate_orbits(GraphSpec::complete(7), 4), SizeCapError);
  EXPECT_NO_THROW(enumerate_orbits(GraphSpec::complete(7), 3, OracleCaps{12, 7}));
  EXPECT_THROW(enumerate_orbits(GraphSpec::complete(4), 5, OracleCaps{4, 6}), SizeCapError);
  EXPECT_THROW(enumerate_orbits(GraphSpec::complete(4), 1), DomainError);
}

TEST(ClassCodeOf, Examples) {
  const ClassCode bounce = class_code_of(OrbitRep{{1, 2, 1, 2}});
  EXPECT_EQ(bounce.entries(), (std::vector<BondMultiplicity>{{1, 2, 4}}));
  const ClassCode fig1 = class_code_of(OrbitRep{{1, 2, 4, 1, 5, 4}});
  EXPECT_EQ(fig1, ClassCode({{1, 2, 1}, {2, 4, 1}, {4, 5, 1}, {5, 1, 1}, {1, 4, 2}}));
  EXPECT_EQ(fig1.order(), 6);
  EXPECT_EQ(fig1.multiplicity(4, 1), 2);
  EXPECT_EQ(fig1.multiplicity(2, 5), 0);
  EXPECT_TRUE(fig1.is_even());
  EXPECT_TRUE(fig1.is_connected());
}

TEST(ClassCodeOf, ReversalKeepsCode) {
  for (const auto& orbit : enumerate_orbits(GraphSpec::complete(4), 6)) {
    std::vector<Vertex> reversed(orbit.vertices.rbegin(), orbit.vertices.rend());
    EXPECT_EQ(class_code_of(canonical_cyclic(reversed)), class_code_of(orbit));
  }
}

TEST(GroupByClass, FigureOneClass) {
  const auto orbits = enumerate_orbits(GraphSpec::complete(5), 6);
  const auto classes = group_by_class(orbits);
  const ClassCode fig1({{1, 2, 1}, {2, 4, 1}, {4, 5, 1}, {1, 5, 1}, {1, 4, 2}});
  ASSERT_TRUE(classes.contains(fig1));
  EXPECT_EQ(classes.at(fig1).degeneracy, 6U);
  EXPECT_EQ(classes.at(fig1).example.vertices, (std::vector<Vertex>{1, 2, 4, 1, 4, 5}));
}

TEST(GroupByClass, PartitionSizes) {
  const auto k4 = enumerate_orbits(GraphSpec::complete(4), 4);
  EXPECT_EQ(group_by_class(k4).size(), 21U);

  const auto k3 = group_by_class(enumerate_orbits(GraphSpec::complete(3), 3));
  ASSERT_EQ(k3.size(), 1U);
  EXPECT_EQ(k3.begin()->second.degeneracy, 2U);

  for (int n = 2; n <= 8; ++n) {
    const auto orbits = enumerate_orbits(GraphSpec::complete(4), n);
    std::size_t total = 0;
    for (const auto& [code, members] : group_by_class(orbits)) {
      total += members.degeneracy;
      EXPECT_EQ(code.order(), n);
      EXPECT_TRUE(code.is_even());
      EXPECT_TRUE(code.is_connected());
    }
    EXPECT_EQ(total, orbits.size());
  }
}

TEST(GroupByClass, OddDegeneracyOnlyWithSelfReverseOrbits) {
  for (int n = 2; n <= 8; ++n) {
    const auto orbits = enumerate_orbits(GraphSpec::complete(4), n);
    std::map<ClassCode, int> self_reverse;
    for (const auto& o : orbits) {
      std::vector<Vertex> reversed(o.vertices.rbegin(), o.vertices.rend());
      if (canonical_cyclic(reversed) == o) ++self_reverse[class_code_of(o)];
    }
    for (const auto& [code, members] : group_by_class(orbits)) {
      // Reversal pairs the non-self-reverse members.
      EXPECT_EQ((members.degeneracy - static_cast<std::size_t>(self_reverse[code])) % 2, 0U);
    }
  }
}

TEST(EnumerateEvenConnected, Examples) {
  EXPECT_EQ(enumerate_even_connected(4, 4, GraphSpec::complete(4)).size(), 3U);
  const auto bounce = enumerate_even_connected(4, 2, GraphSpec::complete(2));
  ASSERT_EQ(bounce.size(), 1U);
  EXPECT_EQ(bounce[0].entries(), (std::vector<BondMultiplicity>{{1, 2, 4}}));
  EXPECT_TRUE(enumerate_even_connected(5, 2, GraphSpec::complete(2)).empty());
  EXPECT_THROW(enumerate_even_connected(13, 2, GraphSpec::complete(2)), SizeCapError);
}

TEST(EnumerateEvenConnected, EulerCorrespondenceOnSmallGraphs) {
  for (int V = 2; V <= 4; ++V) {
    const GraphSpec g = GraphSpec::complete(V);
    for (int n = 2; n <= 8; ++n) {
      std::set<ClassCode> from_orbits;
      for (const auto& [code, members] : group_by_class(enumerate_orbits(g, n))) from_orbits.insert(code);
      std::set<ClassCode> from_multigraphs;
      for (int v = 1; v <= V; ++v) {
        for (auto& code : enumerate_even_connected(n, v, g)) from_multigraphs.insert(code);
      }
      EXPECT_EQ(from_orbits, from_multigraphs) << "n=" << n << " V=" << V;
    }
  }
}

TEST(EnumerateEvenConnected, RespectsHostConnectivity) {
  // On the path 1-2-3 only bouncing codes on a single bond or on both exist.
  const std::vector<Bond> path{{1, 2}, {2, 3}};
  const GraphSpec g = GraphSpec::from_bonds(3, path);
  const auto codes = enumerate_even_connected(4, 3, g);
  ASSERT_EQ(codes.size(), 1U);
  EXPECT_EQ(codes[0], ClassCode({{1, 2, 2}, {2, 3, 2}}));
}

}  // namespace
}  // namespace orbitdeg
