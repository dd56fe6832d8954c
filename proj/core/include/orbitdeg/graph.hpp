#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orbitdeg {

// Vertices carry 1-based labels 1..V throughout the public interface.
using Vertex = int;
using Bond = std::pair<Vertex, Vertex>;  // always first < second

/// Simple undirected graph: symmetric 0/1 connectivity, zero diagonal.
class GraphSpec {
 public:
  GraphSpec(int vertex_count, std::vector<std::uint8_t> adjacency);

  static GraphSpec complete(int vertex_count);
  static GraphSpec from_bonds(int vertex_count, std::span<const Bond> bonds);

  int vertex_count() const { return vertex_count_; }
  bool adjacent(Vertex i, Vertex j) const;
  std::vector<Vertex> neighbors(Vertex i) const;
  // Bonds in lexicographic order (1,2), (1,3), ..., (2,3), ...
  std::vector<Bond> bonds() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  int vertex_count_;
  std::vector<std::uint8_t> adjacency_;
};

}  // namespace orbitdeg
