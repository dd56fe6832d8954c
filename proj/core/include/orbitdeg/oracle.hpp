#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "orbitdeg/graph.hpp"

namespace orbitdeg {

// Brute-force ground truth for small instances. Everything here enumerates
// explicitly and is kept independent of the generating-function and
// walk-counting formulas it is used to check.

struct OracleCaps {
  int n_cap = 12;
  int v_cap = 6;
};

/// A periodic orbit as the lexicographically smallest rotation of its vertex
/// sequence. The closing step back to vertices.front() is implicit.
struct OrbitRep {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  auto operator<=>(const OrbitRep&) const = default;
};

struct BondMultiplicity {
  Vertex i = 0;  // i < j
  Vertex j = 0;
  int q = 0;     // q > 0

  auto operator<=>(const BondMultiplicity&) const = default;
};

/// Bond-multiplicity code of a degeneracy class: how often each unordered
/// bond is traversed. Stored sorted by (i, j) with zero entries dropped, so
/// equal codes compare equal.
class ClassCode {
 public:
  ClassCode() = default;
  // Accepts bonds in either orientation and repeated bonds (summed).
  explicit ClassCode(std::vector<BondMultiplicity> entries);

  const std::vector<BondMultiplicity>& entries() const { return entries_; }
  int order() const;
  int multiplicity(Vertex i, Vertex j) const;
  std::vector<Vertex> support() const;
  bool is_even() const;
  bool is_connected() const;

  auto operator<=>(const ClassCode&) const = default;

 private:
  std::vector<BondMultiplicity> entries_;
};

struct ClassMembers {
  std::size_t degeneracy = 0;
  OrbitRep example;  // smallest member
};

/// Lexicographically minimal rotation, vertices compared as integers.
/// DomainError on an empty sequence.
OrbitRep canonical_cyclic(std::span<const Vertex> sequence);

/// Every distinct periodic orbit of length n on g, sorted. Generated
/// directly in canonical form (prenecklace extension with adjacency
/// pruning), so no rotation of an orbit is visited twice.
std::vector<OrbitRep> enumerate_orbits(const GraphSpec& g, int n, const OracleCaps& caps = {});

// Same walk as enumerate_orbits without materializing the orbits.
std::size_t count_orbits(const GraphSpec& g, int n, const OracleCaps& caps = {});

ClassCode class_code_of(const OrbitRep& orbit);

std::map<ClassCode, ClassMembers> group_by_class(std::span<const OrbitRep> orbits);

/// All connected even multigraphs with n bonds embedded in `host` whose
/// support is exactly v vertices, as sorted codes. On host = K_v this is
/// the set of connected even multigraphs on v labeled vertices.
std::vector<ClassCode> enumerate_even_connected(int n, int v, const GraphSpec& host,
                                                const OracleCaps& caps = {});

}  // namespace orbitdeg
