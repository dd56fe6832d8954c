#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "orbitdeg/errors.hpp"
#include "orbitdeg/oracle.hpp"
#include "orbitdeg/walk_counting.hpp"

namespace orbitdeg {
namespace {

// Closed walks counted by walking every path explicitly.
long brute_closed_walks(const GraphSpec& g, int n) {
  long total = 0;
  auto rec = [&](auto&& self, Vertex start, Vertex at, int steps) -> void {
    if (steps == n) {
      total += at == start ? 1 : 0;
      return;
    }
    for (Vertex next : g.neighbors(at)) self(self, start, next, steps + 1);
  };
  for (Vertex s = 1; s <= g.vertex_count(); ++s) rec(rec, s, s, 0);
  return total;
}

GraphSpec random_graph(std::mt19937& rng, int V) {
  std::bernoulli_distribution coin(0.55);
  std::vector<Bond> bonds;
  for (Vertex i = 1; i <= V; ++i) {
    for (Vertex j = i + 1; j <= V; ++j) {
      if (coin(rng)) bonds.emplace_back(i, j);
    }
  }
  return GraphSpec::from_bonds(V, bonds);
}

TEST(ClosedWalks, Examples) {
  EXPECT_EQ(closed_walks(GraphSpec::complete(4), 4), 84);
  EXPECT_EQ(closed_walks(GraphSpec::complete(2), 2), 2);
  EXPECT_EQ(closed_walks(GraphSpec::complete(5), 1), 0);
  EXPECT_THROW(closed_walks(GraphSpec::complete(3), 0), DomainError);
}

TEST(ClosedWalks, CompleteGraphClosedForm) {
  EXPECT_EQ(closed_walks_complete(3, 3), 6);
  for (int V = 2; V <= 9; ++V) EXPECT_EQ(closed_walks_complete(1, V), 0);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(closed_walks_complete(n, 2), n % 2 == 0 ? 2 : 0);
  for (int V = 2; V <= 8; ++V) {
    const GraphSpec g = GraphSpec::complete(V);
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(closed_walks(g, n), closed_walks_complete(n, V)) << n << "," << V;
  }
}

TEST(ClosedWalks, MatchesExplicitWalksOnRandomGraphs) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int V = 2 + trial % 5;
    const GraphSpec g = random_graph(rng, V);
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(closed_walks(g, n), brute_closed_walks(g, n));
  }
}

TEST(CyclicOrbitCount, Examples) {
  const OrbitCount prime = cyclic_orbit_count(5, 4);
  EXPECT_EQ(prime.count, 48);
  EXPECT_FALSE(prime.extension);
  const OrbitCount composite = cyclic_orbit_count(4, 2);
  EXPECT_EQ(composite.count, 1);
  EXPECT_TRUE(composite.extension);
  for (int V = 2; V <= 8; ++V) EXPECT_EQ(cyclic_orbit_count(2, V).count, V * (V - 1) / 2);
  EXPECT_THROW(cyclic_orbit_count(1, 4), DomainError);
}

TEST(CyclicOrbitCount, MatchesEnumerationForAllLengths) {
  for (int V = 2; V <= 4; ++V) {
    const GraphSpec g = GraphSpec::complete(V);
    for (int n = 2; n <= 9; ++n) {
      EXPECT_EQ(cyclic_orbit_count(n, V).count, Integer(enumerate_orbits(g, n).size())) << n << "," << V;
    }
  }
}

TEST(CyclicOrbitCount, MatchesEnumerationOnRandomGraphs) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    const GraphSpec g = random_graph(rng, 3 + trial % 3);
    for (int n = 2; n <= 8; ++n) {
      EXPECT_EQ(cyclic_orbit_count(g, n).count, Integer(enumerate_orbits(g, n).size())) << n;
    }
  }
}

TEST(CyclicOrbitCount, PrimeLengthsDivideWalkCount) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int V = 2; V <= 9; ++V) {
      EXPECT_EQ(cyclic_orbit_count(p, V).count * p, closed_walks_complete(p, V));
      EXPECT_EQ(Rational(cyclic_orbit_count(p, V).count), naive_orbit_count(p, V));
    }
  }
}

TEST(MeanDegeneracy, SmallLengths) {
  for (int V = 2; V <= 9; ++V) EXPECT_EQ(mean_degeneracy(2, V), 1);
  for (int V = 3; V <= 9; ++V) EXPECT_EQ(mean_degeneracy(3, V), 2);
  EXPECT_EQ(mean_degeneracy(5, 4), 2);
}

TEST(MeanDegeneracy, UndefinedWithoutClasses) {
  EXPECT_THROW(mean_degeneracy(3, 2), UndefinedQuantityError);
  EXPECT_THROW(mean_degeneracy(1, 4), DomainError);
}

TEST(MeanDegeneracy, AtLeastOneWhereDefined) {
  const auto table = ClassCountTable::build(16, 7);
  for (int n = 2; n <= 16; ++n) {
    for (int V = 2; V <= 7; ++V) {
      if (table.classes(n, V) == 0) continue;
      EXPECT_GE(mean_degeneracy(n, V, table), 1) << n << "," << V;
    }
  }
}

TEST(MeanDegeneracy, ApproachesTwoForManyVertices) {
  for (int n : {4, 5, 6}) {
    const Real d = to_real(mean_degeneracy(n, 40));
    EXPECT_LT(abs(d - 2), 0.1) << n;
  }
}

TEST(MeanDegeneracy, NaiveModeDiffersOnlyForCompositeLengths) {
  EXPECT_EQ(mean_degeneracy(7, 4, OrbitCountMode::naive), mean_degeneracy(7, 4));
  // n = 4 on K_2: one bouncing orbit, but N/n = 2/4.
  EXPECT_EQ(mean_degeneracy(4, 2, OrbitCountMode::naive), Rational(1, 2));
  EXPECT_EQ(mean_degeneracy(4, 2), 1);
}

TEST(OrbitCounts, FieldsAreConsistent) {
  const OrbitCounts c = orbit_counts(6, 5);
  EXPECT_EQ(c.walks, closed_walks_complete(6, 5));
  EXPECT_EQ(c.orbits, 700);
  EXPECT_EQ(c.classes, 325);
  EXPECT_EQ(c.mean_degeneracy, Rational(700, 325));
  EXPECT_TRUE(c.extension);
  EXPECT_GE(Rational(c.walks), c.orbits);
  const OrbitCounts p = orbit_counts(7, 5);
  EXPECT_EQ(Rational(p.walks), 7 * p.orbits);
  EXPECT_FALSE(p.extension);
}

}  // namespace
}  // namespace orbitdeg
