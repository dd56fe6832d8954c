#pragma once

#include "orbitdeg/class_counting.hpp"
#include "orbitdeg/graph.hpp"
#include "orbitdeg/numeric.hpp"

namespace orbitdeg {

/// N(n) = Tr C^n, the number of closed n-step trajectories, by exact
/// repeated squaring of the connectivity matrix. Requires n >= 1.
Integer closed_walks(const GraphSpec& g, int n);

/// (V-1)^n + (V-1)(-1)^n, from the spectrum {V-1, -1 x (V-1)} of K_V.
Integer closed_walks_complete(int n, int V);

bool is_prime(int n);
int euler_phi(int n);

struct OrbitCount {
  Integer count;
  // Set when n is composite: the count comes from cyclic-group orbit
  // averaging rather than plain division by n.
  bool extension = false;
};

/// Number of periodic orbits (closed walks up to rotation). For prime n this
/// is N(n)/n; otherwise sum_{d | n} phi(d) N(n/d) / n, which also counts
/// repetitions of shorter orbits once.
OrbitCount cyclic_orbit_count(int n, int V);
OrbitCount cyclic_orbit_count(const GraphSpec& g, int n);

/// N(n,V)/n regardless of primality; not integral in general.
Rational naive_orbit_count(int n, int V);

enum class OrbitCountMode { exact, naive };

/// D(n,V) = N_p(n,V) / N_c(n,V). Throws UndefinedQuantityError when there
/// are no classes (e.g. odd n on K_2).
Rational mean_degeneracy(int n, int V, OrbitCountMode mode = OrbitCountMode::exact);
// Same, reading N_c from a prebuilt table.
Rational mean_degeneracy(int n, int V, const ClassCountTable& table,
                         OrbitCountMode mode = OrbitCountMode::exact);

struct OrbitCounts {
  int n = 0;
  int V = 0;
  Integer walks;
  Rational orbits;  // integral unless mode == naive and n is composite
  Integer classes;
  Rational mean_degeneracy;
  bool extension = false;
};

OrbitCounts orbit_counts(int n, int V, OrbitCountMode mode = OrbitCountMode::exact);

}  // namespace orbitdeg
