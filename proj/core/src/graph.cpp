#include "orbitdeg/graph.hpp"

#include <string>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

GraphSpec::GraphSpec(int vertex_count, std::vector<std::uint8_t> adjacency)
    : vertex_count_(vertex_count), adjacency_(std::move(adjacency)) {
  if (vertex_count < 1) throw DomainError("graph needs at least one vertex");
  const auto v = static_cast<std::size_t>(vertex_count);
  if (adjacency_.size() != v * v) throw DomainError("adjacency grid must be V x V");
  for (std::size_t i = 0; i < v; ++i) {
    if (adjacency_[i * v + i] != 0) throw DomainError("graph may not have loops");
    for (std::size_t j = 0; j < v; ++j) {
      const auto a = adjacency_[i * v + j];
      if (a > 1) throw DomainError("adjacency entries must be 0 or 1");
      if (a != adjacency_[j * v + i]) throw DomainError("adjacency must be symmetric");
    }
  }
}

GraphSpec GraphSpec::complete(int vertex_count) {
  if (vertex_count < 1) throw DomainError("graph needs at least one vertex");
  const auto v = static_cast<std::size_t>(vertex_count);
  std::vector<std::uint8_t> adjacency(v * v, 1);
  for (std::size_t i = 0; i < v; ++i) adjacency[i * v + i] = 0;
  return GraphSpec(vertex_count, std::move(adjacency));
}

GraphSpec GraphSpec::from_bonds(int vertex_count, std::span<const Bond> bonds) {
  if (vertex_count < 1) throw DomainError("graph needs at least one vertex");
  const auto v = static_cast<std::size_t>(vertex_count);
  std::vector<std::uint8_t> adjacency(v * v, 0);
  for (const auto& [i, j] : bonds) {
    if (i < 1 || j < 1 || i > vertex_count || j > vertex_count) {
      throw DomainError("bond (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (i == j) throw DomainError("graph may not have loops");
    adjacency[static_cast<std::size_t>(i - 1) * v + static_cast<std::size_t>(j - 1)] = 1;
    adjacency[static_cast<std::size_t>(j - 1) * v + static_cast<std::size_t>(i - 1)] = 1;
  }
  return GraphSpec(vertex_count, std::move(adjacency));
}

bool GraphSpec::adjacent(Vertex i, Vertex j) const {
  if (i < 1 || j < 1 || i > vertex_count_ || j > vertex_count_) return false;
  return adjacency_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(vertex_count_) +
                    static_cast<std::size_t>(j - 1)] != 0;
}

std::vector<Vertex> GraphSpec::neighbors(Vertex i) const {
  std::vector<Vertex> out;
  for (Vertex j = 1; j <= vertex_count_; ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<Bond> GraphSpec::bonds() const {
  std::vector<Bond> out;
  for (Vertex i = 1; i <= vertex_count_; ++i) {
    for (Vertex j = i + 1; j <= vertex_count_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace orbitdeg
