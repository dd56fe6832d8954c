#include "orbitdeg/asymptotics.hpp"

#include <algorithm>
#include <string>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

namespace {

long complete_bonds(int V) { return static_cast<long>(V) * (V - 1) / 2; }

}  // namespace

Real asymptotic_pair_count(int n, int V) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("asymptotic_pair_count needs an even n >= 2, got " + std::to_string(n));
  }
  if (V < 3) throw DomainError("asymptotic_pair_count needs V >= 3, got " + std::to_string(V));
  const long bonds = complete_bonds(V);
  const Integer half = n / 2;
  const Integer numerator = pow_int(Integer(2), static_cast<unsigned long>(bonds - V + 1)) *
                            pow_int(half, static_cast<unsigned long>(bonds - 1));
  return to_real(Rational(numerator, factorial(bonds - 1)));
}

AsymptoticPoint asymptotic_point(int n, int V, const ClassCountTable& table) {
  AsymptoticPoint p;
  p.n = n;
  p.V = V;
  p.asymptotic_pair = asymptotic_pair_count(n, V);
  p.exact_pair = table.classes(n, V) + table.classes(n + 1, V);
  p.ratio = to_real(p.exact_pair) / p.asymptotic_pair;
  return p;
}

AsymptoticPoint asymptotic_point(int n, int V) {
  const int n_top = n + 1;
  return asymptotic_point(n, V, ClassCountTable::build(n_top, V));
}

std::vector<AsymptoticPoint> asymptotic_points(int V, std::span<const int> even_ns) {
  std::vector<AsymptoticPoint> out;
  if (even_ns.empty()) return out;
  for (int n : even_ns) asymptotic_pair_count(n, V);  // validate before the expensive build
  const int n_top = *std::max_element(even_ns.begin(), even_ns.end()) + 1;
  const ClassCountTable table = ClassCountTable::build(n_top, V);
  out.reserve(even_ns.size());
  for (int n : even_ns) out.push_back(asymptotic_point(n, V, table));
  return out;
}

Real approx_mean_degeneracy(int n, int V) {
  if (n < 1 || V < 2) throw DomainError("approx_mean_degeneracy needs n >= 1 and V >= 2");
  const long bonds = complete_bonds(V);
  const Integer numerator = Integer(V) * factorial(bonds - 1) *
                            pow_int(Integer(2), static_cast<unsigned long>(V - 1)) *
                            pow_int(Integer(V - 1), static_cast<unsigned long>(n));
  const Integer denominator = pow_int(Integer(n), static_cast<unsigned long>(bonds));
  return to_real(Rational(numerator, denominator));
}

Real v_max_estimate(int n, double log_base) {
  if (n < 3) throw DomainError("v_max_estimate needs n >= 3, got " + std::to_string(n));
  if (!(log_base > 1.0)) throw DomainError("v_max_estimate needs a logarithm base > 1");
  const Real log_n = log(Real(n)) / log(Real(log_base));
  return sqrt(Real(n) / log_n);
}

}  // namespace orbitdeg
