#include "orbitdeg/walk_counting.hpp"

#include <string>
#include <vector>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

namespace {

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Integer(0)) {}

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const {
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Integer& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t dim_;
  std::vector<Integer> data_;
};

void check_degeneracy_args(int n, int V) {
  if (n < 2 || V < 2) {
    throw DomainError("mean degeneracy needs n >= 2 and V >= 2, got n=" + std::to_string(n) +
                      " V=" + std::to_string(V));
  }
}

template <typename WalkCount>
OrbitCount orbit_count_from_walks(int n, WalkCount&& walks) {
  if (n < 1) throw DomainError("orbit count needs n >= 1, got " + std::to_string(n));
  if (is_prime(n)) {
    const Integer w = walks(n);
    if (w % n != 0) {
      throw InternalConsistencyError("closed walk count " + w.str() + " not divisible by prime n=" +
                                     std::to_string(n));
    }
    return {w / n, false};
  }
  Integer total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) total += Integer(euler_phi(d)) * walks(n / d);
  }
  if (total % n != 0) {
    throw InternalConsistencyError("orbit average not integral at n=" + std::to_string(n));
  }
  return {total / n, n > 1};
}

}  // namespace

Integer closed_walks(const GraphSpec& g, int n) {
  if (n < 1) throw DomainError("closed_walks needs n >= 1, got " + std::to_string(n));
  const auto dim = static_cast<std::size_t>(g.vertex_count());
  IntMatrix base(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      base(i, j) = g.adjacent(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)) ? 1 : 0;
    }
  }
  IntMatrix result = IntMatrix::identity(dim);
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result.trace();
}

Integer closed_walks_complete(int n, int V) {
  if (n < 1 || V < 2) {
    throw DomainError("closed_walks_complete needs n >= 1 and V >= 2");
  }
  const Integer degree = V - 1;
  const Integer lead = pow_int(degree, static_cast<unsigned long>(n));
  return n % 2 == 0 ? Integer(lead + degree) : Integer(lead - degree);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

OrbitCount cyclic_orbit_count(int n, int V) {
  if (n < 2) throw DomainError("cyclic_orbit_count needs n >= 2, got " + std::to_string(n));
  return orbit_count_from_walks(n, [V](int k) { return closed_walks_complete(k, V); });
}

OrbitCount cyclic_orbit_count(const GraphSpec& g, int n) {
  if (n < 2) throw DomainError("cyclic_orbit_count needs n >= 2, got " + std::to_string(n));
  return orbit_count_from_walks(n, [&g](int k) { return closed_walks(g, k); });
}

Rational naive_orbit_count(int n, int V) {
  if (n < 1) throw DomainError("naive_orbit_count needs n >= 1");
  return Rational(closed_walks_complete(n, V), Integer(n));
}

namespace {

Rational orbits_for_mode(int n, int V, OrbitCountMode mode) {
  return mode == OrbitCountMode::naive ? naive_orbit_count(n, V) : Rational(cyclic_orbit_count(n, V).count);
}

Rational divide_by_classes(const Rational& orbits, const Integer& classes, int n, int V) {
  if (classes == 0) {
    throw UndefinedQuantityError("mean degeneracy undefined: no degeneracy classes at n=" +
                                 std::to_string(n) + " V=" + std::to_string(V));
  }
  return orbits / Rational(classes);
}

}  // namespace

Rational mean_degeneracy(int n, int V, OrbitCountMode mode) {
  check_degeneracy_args(n, V);
  return divide_by_classes(orbits_for_mode(n, V, mode), count_classes(n, V), n, V);
}

Rational mean_degeneracy(int n, int V, const ClassCountTable& table, OrbitCountMode mode) {
  check_degeneracy_args(n, V);
  return divide_by_classes(orbits_for_mode(n, V, mode), table.classes(n, V), n, V);
}

OrbitCounts orbit_counts(int n, int V, OrbitCountMode mode) {
  check_degeneracy_args(n, V);
  OrbitCounts out;
  out.n = n;
  out.V = V;
  out.walks = closed_walks_complete(n, V);
  out.orbits = orbits_for_mode(n, V, mode);
  out.classes = count_classes(n, V);
  out.extension = mode == OrbitCountMode::exact && !is_prime(n);
  out.mean_degeneracy = divide_by_classes(out.orbits, out.classes, n, V);
  return out;
}

}  // namespace orbitdeg
