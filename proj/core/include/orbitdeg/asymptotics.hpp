#pragma once

#include <span>
#include <vector>

#include "orbitdeg/class_counting.hpp"
#include "orbitdeg/numeric.hpp"

namespace orbitdeg {

// Leading large-n behaviour of the pair N_c(2m,V) + N_c(2m+1,V) on a graph
// with B bonds: 2^(B-V+1) m^(B-1) / (B-1)!, with B = V(V-1)/2 on K_V.
// Takes the even starting length n = 2m; odd n is a DomainError.
Real asymptotic_pair_count(int n, int V);

struct AsymptoticPoint {
  int n = 0;
  int V = 0;
  Integer exact_pair;    // N_c(n,V) + N_c(n+1,V)
  Real asymptotic_pair;  // asymptotic_pair_count(n, V)
  Real ratio;            // exact_pair / asymptotic_pair
};

// `table` must cover n + 1 and V.
AsymptoticPoint asymptotic_point(int n, int V, const ClassCountTable& table);
AsymptoticPoint asymptotic_point(int n, int V);

// One point per even n in `even_ns`, sharing a single recursion table.
std::vector<AsymptoticPoint> asymptotic_points(int V, std::span<const int> even_ns);

// Large-n estimate V (B-1)! 2^(V-1) (V-1)^n / n^B of the mean degeneracy.
// Only meaningful for n >> V; no guard beyond n >= 1, V >= 2.
Real approx_mean_degeneracy(int n, int V);

// sqrt(n / log_base(n)), the location of the maximum of D(n, .) suggested by
// the large-n estimate. The default base 10 reproduces the commonly quoted
// maxima near 3.9 (n = 20) and 4.5 (n = 30).
Real v_max_estimate(int n, double log_base = 10.0);

}  // namespace orbitdeg
