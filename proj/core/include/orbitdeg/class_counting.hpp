#pragma once

#include <cstddef>
#include <vector>

#include "orbitdeg/numeric.hpp"

namespace orbitdeg {

// How N_{c,v}(n,v), the number of connected even multigraphs with n bonds
// on v labeled vertices, is obtained.
enum class NcvRoute {
  log_series,  // v! [t^n x^v] log E(x,t)
  recursion,   // L_v = v! E_v - sum_k (v-1)!/(k-1)! L_k E_{v-k}
};

Integer ncv_from_log(int n, int v);
Integer ncv_recursive(int n, int v);

/// Memo store for the recursion route. Fills the whole window
/// [0, n_max] x [1, v_max] bottom-up on construction; entries are immutable
/// afterwards.
class NcvRecursion {
 public:
  NcvRecursion(int n_max, int v_max);

  int n_max() const { return n_max_; }
  int v_max() const { return v_max_; }
  const Integer& ncv(int n, int v) const;

 private:
  int n_max_;
  int v_max_;
  std::vector<Integer> ncv_;  // row-major in v, then n
};

/// Exact grid of N_{c,v}(n,v) and N_c(n,V) = sum_{v=1..V} C(V,v) N_{c,v}(n,v)
/// for 0 <= n <= n_max and 1 <= v, V <= v_max.
///
/// The N_c column is the raw vertex-decomposition sum: at n = 0 it counts
/// the V single-vertex empty multigraphs. count_classes() is the entry point
/// that applies orbit semantics for small n.
class ClassCountTable {
 public:
  static ClassCountTable build(int n_max, int v_max, NcvRoute route = NcvRoute::recursion);

  int n_max() const { return n_max_; }
  int v_max() const { return v_max_; }
  NcvRoute route() const { return route_; }

  const Integer& ncv(int n, int v) const;
  const Integer& nc(int n, int V) const;

  // Number of periodic-orbit degeneracy classes, with the n = 0 / n = 1
  // rules of count_classes(). V may exceed v_max as long as v_max >= n.
  Integer classes(int n, int V) const;

 private:
  ClassCountTable(int n_max, int v_max, NcvRoute route);
  std::size_t index(int n, int v) const;

  int n_max_;
  int v_max_;
  NcvRoute route_;
  std::vector<Integer> ncv_;
  std::vector<Integer> nc_;
};

/// Number N_c(n,V) of degeneracy classes of n-bond periodic orbits on K_V.
/// Returns 0 for n = 1 (no loops, so no one-bond orbits) and throws
/// DomainError for n <= 0 or V < 1.
Integer count_classes(int n, int V, NcvRoute route = NcvRoute::recursion);

}  // namespace orbitdeg
