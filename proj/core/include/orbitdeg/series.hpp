#pragma once

#include <cstddef>
#include <vector>

#include "orbitdeg/numeric.hpp"

namespace orbitdeg {

/// Truncated power series in two variables (t, x) with exact rational
/// coefficients, stored densely. The coefficient of t^n x^v is kept for
/// 0 <= n <= n_max and 0 <= v <= v_max; everything above is discarded.
class BivariateSeries {
 public:
  BivariateSeries(int n_max, int v_max);
  BivariateSeries(int n_max, int v_max, std::vector<Rational> coeffs);

  static BivariateSeries constant(int n_max, int v_max, const Rational& c);

  int n_max() const { return n_max_; }
  int v_max() const { return v_max_; }

  const Rational& coeff(int n, int v) const;
  // Coefficient if inside the window, zero otherwise.
  Rational coeff_or_zero(int n, int v) const;

  bool is_zero() const;

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::size_t index(int n, int v) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(v_max_ + 1) + static_cast<std::size_t>(v);
  }

  int n_max_;
  int v_max_;
  std::vector<Rational> coeffs_;
};

// Arithmetic truncates to the smaller window of the two operands.
BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const Rational& c, const BivariateSeries& a);

// Window shrink; fails if the requested window is larger.
BivariateSeries truncate(const BivariateSeries& s, int n_max, int v_max);

/// Closed-form coefficient E_{n,v} of the even-multigraph generating
/// function, as a double sum over the number s of "positive" vertices and
/// the number mu of bonds between opposite-sign vertices.
Rational e_coeff(int n, int v);

/// E(x,t) on the window [0, n_max] x [0, v_max], built by expanding
///   sum_v 2^-v x^v / v! (1-t)^{-v(v-1)/2} sum_s C(v,s) ((1-t)/(1+t))^{s(v-s)}
/// as products of univariate series in t. Shares no code with e_coeff.
BivariateSeries build_E(int n_max, int v_max);

/// Formal logarithm. Requires coeff(0,0) == 1 (DomainError otherwise).
BivariateSeries series_log(const BivariateSeries& s);

/// Formal exponential of a series with zero constant term, by the
/// truncated Taylor sum of u^k / k!.
BivariateSeries series_exp(const BivariateSeries& s);

}  // namespace orbitdeg
