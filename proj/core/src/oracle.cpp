#include "orbitdeg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

ClassCode::ClassCode(std::vector<BondMultiplicity> entries) {
  for (auto& e : entries) {
    if (e.i == e.j) throw DomainError("class code may not contain a loop");
    if (e.q < 0) throw DomainError("bond multiplicity must be nonnegative");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(entries.begin(), entries.end());
  for (const auto& e : entries) {
    if (e.q == 0) continue;
    if (!entries_.empty() && entries_.back().i == e.i && entries_.back().j == e.j) {
      entries_.back().q += e.q;
    } else {
      entries_.push_back(e);
    }
  }
}

int ClassCode::order() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0,
                         [](int acc, const BondMultiplicity& e) { return acc + e.q; });
}

int ClassCode::multiplicity(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : entries_) {
    if (e.i == i && e.j == j) return e.q;
  }
  return 0;
}

std::vector<Vertex> ClassCode::support() const {
  std::vector<Vertex> out;
  for (const auto& e : entries_) {
    out.push_back(e.i);
    out.push_back(e.j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ClassCode::is_even() const {
  std::map<Vertex, int> valency;
  for (const auto& e : entries_) {
    valency[e.i] += e.q;
    valency[e.j] += e.q;
  }
  return std::all_of(valency.begin(), valency.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

bool ClassCode::is_connected() const {
  const std::vector<Vertex> vertices = support();
  if (vertices.empty()) return false;
  // Union-find over support positions.
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto pos = [&](Vertex x) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices.size();
  for (const auto& e : entries_) {
    const auto a = find(pos(e.i));
    const auto b = find(pos(e.j));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

OrbitRep canonical_cyclic(std::span<const Vertex> sequence) {
  if (sequence.empty()) throw DomainError("canonical_cyclic: empty sequence");
  const std::size_t n = sequence.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Vertex a = sequence[(r + k) % n];
      const Vertex b = sequence[(best + k) % n];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  OrbitRep out;
  out.vertices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.vertices.push_back(sequence[(best + k) % n]);
  return out;
}

namespace {

void check_caps(int n, int vertex_count, const OracleCaps& caps, const char* what) {
  if (n > caps.n_cap || vertex_count > caps.v_cap) {
    throw SizeCapError(std::string(what) + ": instance (n=" + std::to_string(n) + ", V=" +
                       std::to_string(vertex_count) + ") exceeds caps (n<=" + std::to_string(caps.n_cap) +
                       ", V<=" + std::to_string(caps.v_cap) + ")");
  }
}

// Depth-first generation of canonical closed walks. `visit` receives each
// orbit's vertex sequence once, in lexicographic order.
template <typename Visit>
class NecklaceWalker {
 public:
  NecklaceWalker(const GraphSpec& g, int n, Visit visit)
      : g_(g), n_(static_cast<std::size_t>(n)), word_(n_), visit_(std::move(visit)) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) neighbors_.push_back(g.neighbors(v));
  }

  void run() {
    for (Vertex start = 1; start <= g_.vertex_count(); ++start) {
      word_[0] = start;
      extend(1, 1);
    }
  }

 private:
  // word_[0..t) is a prenecklace with period p. A prefix of a necklace
  // always is, so pruning on it never loses an orbit.
  void extend(std::size_t t, std::size_t p) {
    if (t == n_) {
      if (n_ % p == 0 && g_.adjacent(word_[n_ - 1], word_[0])) visit_(word_);
      return;
    }
    const Vertex floor = word_[t - p];
    for (Vertex next : neighbors_[static_cast<std::size_t>(word_[t - 1] - 1)]) {
      if (next < floor) continue;
      word_[t] = next;
      extend(t + 1, next == floor ? p : t + 1);
    }
  }

  const GraphSpec& g_;
  std::size_t n_;
  std::vector<Vertex> word_;
  std::vector<std::vector<Vertex>> neighbors_;
  Visit visit_;
};

void check_orbit_request(const GraphSpec& g, int n, const OracleCaps& caps, const char* what) {
  if (n < 2) throw DomainError(std::string(what) + ": n must be at least 2, got " + std::to_string(n));
  check_caps(n, g.vertex_count(), caps, what);
}

}  // namespace

std::vector<OrbitRep> enumerate_orbits(const GraphSpec& g, int n, const OracleCaps& caps) {
  check_orbit_request(g, n, caps, "enumerate_orbits");
  std::vector<OrbitRep> orbits;
  NecklaceWalker(g, n, [&](const std::vector<Vertex>& w) { orbits.push_back(OrbitRep{w}); }).run();
  return orbits;
}

std::size_t count_orbits(const GraphSpec& g, int n, const OracleCaps& caps) {
  check_orbit_request(g, n, caps, "count_orbits");
  std::size_t count = 0;
  NecklaceWalker(g, n, [&](const std::vector<Vertex>&) { ++count; }).run();
  return count;
}

ClassCode class_code_of(const OrbitRep& orbit) {
  const auto& w = orbit.vertices;
  if (w.size() < 2) throw DomainError("class_code_of: an orbit needs at least two steps");
  std::vector<BondMultiplicity> steps;
  steps.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Vertex a = w[k];
    const Vertex b = w[(k + 1) % w.size()];
    if (a == b) throw DomainError("class_code_of: orbit repeats a vertex in consecutive steps");
    steps.push_back({a, b, 1});
  }
  return ClassCode(std::move(steps));
}

std::map<ClassCode, ClassMembers> group_by_class(std::span<const OrbitRep> orbits) {
  std::map<ClassCode, ClassMembers> classes;
  for (const auto& orbit : orbits) {
    auto& members = classes[class_code_of(orbit)];
    if (members.degeneracy == 0 || orbit < members.example) members.example = orbit;
    ++members.degeneracy;
  }
  return classes;
}

namespace {

class EvenCodeSearch {
 public:
  EvenCodeSearch(int n, int v, const GraphSpec& host) : n_(n), v_(v), bonds_(host.bonds()) {
    const auto vertex_count = static_cast<std::size_t>(host.vertex_count());
    valency_.assign(vertex_count + 1, 0);
    closes_at_.assign(bonds_.size(), {});
    std::vector<std::ptrdiff_t> last(vertex_count + 1, -1);
    for (std::size_t b = 0; b < bonds_.size(); ++b) {
      last[static_cast<std::size_t>(bonds_[b].first)] = static_cast<std::ptrdiff_t>(b);
      last[static_cast<std::size_t>(bonds_[b].second)] = static_cast<std::ptrdiff_t>(b);
    }
    for (std::size_t x = 1; x <= vertex_count; ++x) {
      if (last[x] >= 0) closes_at_[static_cast<std::size_t>(last[x])].push_back(static_cast<Vertex>(x));
    }
    q_.assign(bonds_.size(), 0);
  }

  std::vector<ClassCode> run() {
    if (!bonds_.empty()) assign(0, n_);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void assign(std::size_t b, int remaining) {
    if (remaining == 0) {
      // Every later bond is zero, so current valencies are final.
      if (std::all_of(valency_.begin(), valency_.end(), [](int d) { return d % 2 == 0; })) emit();
      return;
    }
    if (b == bonds_.size()) return;
    const auto [i, j] = bonds_[b];
    const bool last_bond = b + 1 == bonds_.size();
    for (int q = last_bond ? remaining : 0; q <= remaining; ++q) {
      q_[b] = q;
      valency_[static_cast<std::size_t>(i)] += q;
      valency_[static_cast<std::size_t>(j)] += q;
      const bool parity_ok = std::all_of(closes_at_[b].begin(), closes_at_[b].end(), [&](Vertex x) {
        return valency_[static_cast<std::size_t>(x)] % 2 == 0;
      });
      if (parity_ok) assign(b + 1, remaining - q);
      valency_[static_cast<std::size_t>(i)] -= q;
      valency_[static_cast<std::size_t>(j)] -= q;
    }
    q_[b] = 0;
  }

  void emit() {
    std::vector<BondMultiplicity> entries;
    for (std::size_t b = 0; b < bonds_.size(); ++b) {
      if (q_[b] > 0) entries.push_back({bonds_[b].first, bonds_[b].second, q_[b]});
    }
    ClassCode code(std::move(entries));
    if (static_cast<int>(code.support().size()) == v_ && code.is_connected()) out_.push_back(std::move(code));
  }

  int n_;
  int v_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Vertex>> closes_at_;
  std::vector<int> valency_;
  std::vector<int> q_;
  std::vector<ClassCode> out_;
};

}  // namespace

std::vector<ClassCode> enumerate_even_connected(int n, int v, const GraphSpec& host, const OracleCaps& caps) {
  if (n < 1 || v < 1) throw DomainError("enumerate_even_connected: needs n >= 1 and v >= 1");
  check_caps(n, std::max(v, host.vertex_count()), caps, "enumerate_even_connected");
  if (v > host.vertex_count()) return {};
  return EvenCodeSearch(n, v, host).run();
}

}  // namespace orbitdeg
