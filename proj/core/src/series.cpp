#include "orbitdeg/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

namespace {

using UniSeries = std::vector<Integer>;

void check_window(int n_max, int v_max) {
  if (n_max < 0 || v_max < 0) {
    throw DomainError("series window must be nonnegative, got (" + std::to_string(n_max) + ", " +
                      std::to_string(v_max) + ")");
  }
}

UniSeries mul_truncated(const UniSeries& a, const UniSeries& b) {
  const std::size_t len = std::min(a.size(), b.size());
  UniSeries out(len, Integer(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Multiplying by 1/(1-t) is a running sum of coefficients.
void divide_by_one_minus_t(UniSeries& s) {
  for (std::size_t i = 1; i < s.size(); ++i) s[i] += s[i - 1];
}

}  // namespace

BivariateSeries::BivariateSeries(int n_max, int v_max) : n_max_(n_max), v_max_(v_max) {
  check_window(n_max, v_max);
  coeffs_.assign(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(v_max + 1), Rational(0));
}

BivariateSeries::BivariateSeries(int n_max, int v_max, std::vector<Rational> coeffs)
    : n_max_(n_max), v_max_(v_max), coeffs_(std::move(coeffs)) {
  check_window(n_max, v_max);
  if (coeffs_.size() != static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(v_max + 1)) {
    throw DomainError("coefficient grid size does not match the series window");
  }
}

BivariateSeries BivariateSeries::constant(int n_max, int v_max, const Rational& c) {
  BivariateSeries s(n_max, v_max);
  s.coeffs_[0] = c;
  return s;
}

const Rational& BivariateSeries::coeff(int n, int v) const {
  if (n < 0 || v < 0 || n > n_max_ || v > v_max_) {
    throw DomainError("coefficient (" + std::to_string(n) + ", " + std::to_string(v) +
                      ") is outside the truncation window");
  }
  return coeffs_[index(n, v)];
}

Rational BivariateSeries::coeff_or_zero(int n, int v) const {
  if (n < 0 || v < 0 || n > n_max_ || v > v_max_) return Rational(0);
  return coeffs_[index(n, v)];
}

bool BivariateSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

BivariateSeries truncate(const BivariateSeries& s, int n_max, int v_max) {
  if (n_max > s.n_max() || v_max > s.v_max()) {
    throw DomainError("truncate: cannot widen a series window");
  }
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(v_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    for (int v = 0; v <= v_max; ++v) grid.push_back(s.coeff(n, v));
  }
  return BivariateSeries(n_max, v_max, std::move(grid));
}

namespace {

template <typename Op>
BivariateSeries combine(const BivariateSeries& a, const BivariateSeries& b, Op op) {
  const int n_max = std::min(a.n_max(), b.n_max());
  const int v_max = std::min(a.v_max(), b.v_max());
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(v_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    for (int v = 0; v <= v_max; ++v) grid.push_back(op(a.coeff(n, v), b.coeff(n, v)));
  }
  return BivariateSeries(n_max, v_max, std::move(grid));
}

}  // namespace

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

BivariateSeries operator*(const Rational& c, const BivariateSeries& a) {
  std::vector<Rational> grid;
  for (int n = 0; n <= a.n_max(); ++n) {
    for (int v = 0; v <= a.v_max(); ++v) grid.push_back(c * a.coeff(n, v));
  }
  return BivariateSeries(a.n_max(), a.v_max(), std::move(grid));
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int n_max = std::min(a.n_max(), b.n_max());
  const int v_max = std::min(a.v_max(), b.v_max());
  const auto width = static_cast<std::size_t>(v_max + 1);
  std::vector<Rational> grid(static_cast<std::size_t>(n_max + 1) * width, Rational(0));
  for (int n1 = 0; n1 <= n_max; ++n1) {
    for (int v1 = 0; v1 <= v_max; ++v1) {
      const Rational& x = a.coeff(n1, v1);
      if (x == 0) continue;
      for (int n2 = 0; n1 + n2 <= n_max; ++n2) {
        for (int v2 = 0; v1 + v2 <= v_max; ++v2) {
          const Rational& y = b.coeff(n2, v2);
          if (y == 0) continue;
          grid[static_cast<std::size_t>(n1 + n2) * width + static_cast<std::size_t>(v1 + v2)] += x * y;
        }
      }
    }
  }
  return BivariateSeries(n_max, v_max, std::move(grid));
}

Rational e_coeff(int n, int v) {
  if (n < 0 || v < 0) {
    throw DomainError("e_coeff: indices must be nonnegative");
  }
  Integer total = 0;
  for (long s = 0; s <= v; ++s) {
    const long cross = s * (v - s);
    const long same = s * (s - 1) / 2 + (v - s) * (v - s - 1) / 2;
    const Integer choose_positive = binomial_ext(v, s);
    for (long mu = 0; mu <= n; ++mu) {
      Integer term = binomial_ext(mu + cross - 1, mu);
      if (term == 0) continue;
      term *= binomial_ext(n - mu + same - 1, n - mu);
      if (term == 0) continue;
      term *= choose_positive;
      if (mu % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
  }
  return Rational(total, pow_int(Integer(2), static_cast<unsigned long>(v)) * factorial(v));
}

BivariateSeries build_E(int n_max, int v_max) {
  check_window(n_max, v_max);
  const auto len = static_cast<std::size_t>(n_max + 1);

  // (1-t)/(1+t) = 1 - 2t + 2t^2 - 2t^3 + ...
  UniSeries ratio(len, Integer(0));
  ratio[0] = 1;
  for (std::size_t k = 1; k < len; ++k) ratio[k] = (k % 2 == 0) ? 2 : -2;

  std::vector<UniSeries> ratio_powers;
  ratio_powers.emplace_back(len, Integer(0));
  ratio_powers[0][0] = 1;
  const int max_cross = (v_max / 2) * (v_max - v_max / 2);
  for (int p = 1; p <= max_cross; ++p) ratio_powers.push_back(mul_truncated(ratio_powers.back(), ratio));

  std::vector<Rational> grid(len * static_cast<std::size_t>(v_max + 1), Rational(0));
  std::vector<Integer> pascal{Integer(1)};
  Integer scale = 1;  // 2^v v!
  for (int v = 0; v <= v_max; ++v) {
    if (v > 0) {
      std::vector<Integer> next(static_cast<std::size_t>(v + 1), Integer(1));
      for (int s = 1; s < v; ++s) next[static_cast<std::size_t>(s)] = pascal[s - 1] + pascal[s];
      pascal = std::move(next);
      scale *= 2 * v;
    }
    UniSeries sum(len, Integer(0));
    for (int s = 0; s <= v; ++s) {
      const UniSeries& power = ratio_powers[static_cast<std::size_t>(s * (v - s))];
      for (std::size_t k = 0; k < len; ++k) sum[k] += pascal[static_cast<std::size_t>(s)] * power[k];
    }
    const int geometric_order = v * (v - 1) / 2;
    for (int i = 0; i < geometric_order; ++i) divide_by_one_minus_t(sum);
    for (std::size_t n = 0; n < len; ++n) {
      grid[n * static_cast<std::size_t>(v_max + 1) + static_cast<std::size_t>(v)] = Rational(sum[n], scale);
    }
  }
  return BivariateSeries(n_max, v_max, std::move(grid));
}

BivariateSeries series_log(const BivariateSeries& s) {
  if (s.coeff(0, 0) != 1) {
    throw DomainError("series_log: constant term must be 1, got " + s.coeff(0, 0).str());
  }
  // With theta = t d/dt + x d/dx, theta S = S * theta(log S). Comparing the
  // t^n x^v coefficients gives L_{n,v} from coefficients that precede it
  // lexicographically.
  const int n_max = s.n_max();
  const int v_max = s.v_max();
  const auto width = static_cast<std::size_t>(v_max + 1);
  std::vector<Rational> log_grid(static_cast<std::size_t>(n_max + 1) * width, Rational(0));
  for (int n = 0; n <= n_max; ++n) {
    for (int v = 0; v <= v_max; ++v) {
      if (n == 0 && v == 0) continue;
      Rational acc = Rational(n + v) * s.coeff(n, v);
      for (int a = 0; a <= n; ++a) {
        for (int b = 0; b <= v; ++b) {
          if ((a == 0 && b == 0) || (a == n && b == v)) continue;
          const Rational& l = log_grid[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(b)];
          if (l == 0) continue;
          const Rational& rest = s.coeff(n - a, v - b);
          if (rest == 0) continue;
          acc -= Rational(a + b) * l * rest;
        }
      }
      log_grid[static_cast<std::size_t>(n) * width + static_cast<std::size_t>(v)] = acc / (n + v);
    }
  }
  return BivariateSeries(n_max, v_max, std::move(log_grid));
}

BivariateSeries series_exp(const BivariateSeries& s) {
  if (s.coeff(0, 0) != 0) {
    throw DomainError("series_exp: constant term must be 0");
  }
  BivariateSeries result = BivariateSeries::constant(s.n_max(), s.v_max(), 1);
  BivariateSeries power = result;
  Integer k_factorial = 1;
  for (int k = 1;; ++k) {
    power = power * s;
    if (power.is_zero()) break;
    k_factorial *= k;
    result = result + Rational(Integer(1), k_factorial) * power;
  }
  return result;
}

}  // namespace orbitdeg
