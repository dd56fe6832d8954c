#include "orbitdeg/class_counting.hpp"

#include <algorithm>
#include <string>

#include "orbitdeg/errors.hpp"
#include "orbitdeg/series.hpp"

namespace orbitdeg {

namespace {

void check_ncv_args(int n, int v) {
  if (n < 0 || v < 1) {
    throw DomainError("N_{c,v}(n,v) needs n >= 0 and v >= 1, got n=" + std::to_string(n) +
                      " v=" + std::to_string(v));
  }
}

}  // namespace

Integer ncv_from_log(int n, int v) {
  check_ncv_args(n, v);
  const BivariateSeries log_e = series_log(build_E(n, v));
  return require_integral(Rational(factorial(v)) * log_e.coeff(n, v), "ncv_from_log");
}

Integer ncv_recursive(int n, int v) {
  check_ncv_args(n, v);
  return NcvRecursion(n, v).ncv(n, v);
}

NcvRecursion::NcvRecursion(int n_max, int v_max) : n_max_(n_max), v_max_(v_max) {
  check_ncv_args(n_max, v_max);
  const auto rows = static_cast<std::size_t>(n_max + 1);

  // e[v][n] = E_{n,v}, v = 0 .. v_max - 1 is all the recursion reads besides
  // the diagonal term v! E_{n,v}.
  std::vector<std::vector<Rational>> e(static_cast<std::size_t>(v_max + 1));
  for (int v = 0; v <= v_max; ++v) {
    e[static_cast<std::size_t>(v)].reserve(rows);
    for (int n = 0; n <= n_max; ++n) e[static_cast<std::size_t>(v)].push_back(e_coeff(n, v));
  }

  ncv_.assign(rows * static_cast<std::size_t>(v_max), Integer(0));
  auto at = [&](int n, int v) -> Integer& {
    return ncv_[static_cast<std::size_t>(v - 1) * rows + static_cast<std::size_t>(n)];
  };

  for (int v = 1; v <= v_max; ++v) {
    const Integer v_fact = factorial(v);
    const Integer vm1_fact = factorial(v - 1);
    for (int n = 0; n <= n_max; ++n) {
      Rational value = Rational(v_fact) * e[static_cast<std::size_t>(v)][static_cast<std::size_t>(n)];
      for (int k = 1; k < v; ++k) {
        const Integer weight = vm1_fact / factorial(k - 1);
        const auto& e_rest = e[static_cast<std::size_t>(v - k)];
        for (int m = 0; m <= n; ++m) {
          const Integer& lower = at(m, k);
          if (lower == 0) continue;
          const Rational& ecoef = e_rest[static_cast<std::size_t>(n - m)];
          if (ecoef == 0) continue;
          value -= Rational(weight * lower) * ecoef;
        }
      }
      at(n, v) = require_integral(value, "ncv_recursive");
    }
  }
}

const Integer& NcvRecursion::ncv(int n, int v) const {
  if (n < 0 || n > n_max_ || v < 1 || v > v_max_) {
    throw DomainError("NcvRecursion: (" + std::to_string(n) + ", " + std::to_string(v) +
                      ") outside the memoized window");
  }
  return ncv_[static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(n_max_ + 1) +
              static_cast<std::size_t>(n)];
}

ClassCountTable::ClassCountTable(int n_max, int v_max, NcvRoute route)
    : n_max_(n_max), v_max_(v_max), route_(route) {}

std::size_t ClassCountTable::index(int n, int v) const {
  if (n < 0 || n > n_max_ || v < 1 || v > v_max_) {
    throw DomainError("ClassCountTable: (" + std::to_string(n) + ", " + std::to_string(v) +
                      ") outside the table");
  }
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(v_max_) + static_cast<std::size_t>(v - 1);
}

ClassCountTable ClassCountTable::build(int n_max, int v_max, NcvRoute route) {
  check_ncv_args(n_max, v_max);
  ClassCountTable table(n_max, v_max, route);
  const auto cells = static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(v_max);
  table.ncv_.assign(cells, Integer(0));
  table.nc_.assign(cells, Integer(0));

  if (route == NcvRoute::log_series) {
    const BivariateSeries log_e = series_log(build_E(n_max, v_max));
    for (int v = 1; v <= v_max; ++v) {
      const Rational scale(factorial(v));
      for (int n = 0; n <= n_max; ++n) {
        table.ncv_[table.index(n, v)] = require_integral(scale * log_e.coeff(n, v), "ncv_from_log");
      }
    }
  } else {
    const NcvRecursion rec(n_max, v_max);
    for (int v = 1; v <= v_max; ++v) {
      for (int n = 0; n <= n_max; ++n) table.ncv_[table.index(n, v)] = rec.ncv(n, v);
    }
  }

  for (int n = 0; n <= n_max; ++n) {
    for (int V = 1; V <= v_max; ++V) {
      Integer sum = 0;
      for (int v = 1; v <= V; ++v) sum += binomial(V, v) * table.ncv_[table.index(n, v)];
      table.nc_[table.index(n, V)] = sum;
    }
  }
  return table;
}

const Integer& ClassCountTable::ncv(int n, int v) const { return ncv_[index(n, v)]; }

const Integer& ClassCountTable::nc(int n, int V) const { return nc_[index(n, V)]; }

Integer ClassCountTable::classes(int n, int V) const {
  if (n <= 0) {
    throw DomainError("count_classes: n must be positive, got " + std::to_string(n));
  }
  if (V < 1) throw DomainError("count_classes: V must be positive, got " + std::to_string(V));
  if (n == 1) return Integer(0);
  if (V <= v_max_) return nc(n, V);
  // Only v <= n contributes, so a table at least n wide still answers.
  if (n > v_max_) {
    throw DomainError("ClassCountTable: V=" + std::to_string(V) + " at n=" + std::to_string(n) +
                      " needs a table with v_max >= " + std::to_string(n));
  }
  Integer sum = 0;
  for (int v = 1; v <= v_max_; ++v) sum += binomial(V, v) * ncv(n, v);
  return sum;
}

Integer count_classes(int n, int V, NcvRoute route) {
  if (n <= 0) {
    throw DomainError("count_classes: n must be positive, got " + std::to_string(n));
  }
  if (V < 1) {
    throw DomainError("count_classes: V must be positive, got " + std::to_string(V));
  }
  if (n == 1) return Integer(0);
  // A connected even multigraph with n bonds has at most n vertices.
  const int v_max = std::min(V, n);
  Integer total = 0;
  if (route == NcvRoute::log_series) {
    const BivariateSeries log_e = series_log(build_E(n, v_max));
    for (int v = 1; v <= v_max; ++v) {
      total += binomial(V, v) *
               require_integral(Rational(factorial(v)) * log_e.coeff(n, v), "ncv_from_log");
    }
  } else {
    const NcvRecursion rec(n, v_max);
    for (int v = 1; v <= v_max; ++v) total += binomial(V, v) * rec.ncv(n, v);
  }
  return total;
}

}  // namespace orbitdeg
