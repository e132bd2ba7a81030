#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hyperlin {

/// Small undirected simple graph on vertices 0..v-1 (v <= 32), adjacency kept as bitmasks.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 32;

  SimpleGraph() = default;
  explicit SimpleGraph(int v);
  SimpleGraph(int v, std::span<const std::pair<int, int>> edges);

  static SimpleGraph complete(int v);
  static SimpleGraph path(int v);
  static SimpleGraph cycle(int v);
  /// Graph whose edge i (in `all_pairs(v)` order) is present iff bit i of `mask` is set.
  static SimpleGraph from_edge_mask(int v, std::uint64_t mask);

  void add_edge(int a, int b);
  void remove_edge(int a, int b);

  int vertex_count() const noexcept { return v_; }
  int edge_count() const noexcept;
  bool has_edge(int a, int b) const noexcept { return (adj_[a] >> b) & 1u; }
  std::uint32_t neighbors(int a) const noexcept { return adj_[a]; }
  std::vector<std::pair<int, int>> edges() const;

  int component_count() const;
  bool connected() const { return v_ > 0 && component_count() == 1; }
  /// True iff no two vertices of `mask` are adjacent.
  bool independent(std::uint32_t mask) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int v_ = 0;
  std::vector<std::uint32_t> adj_;
};

/// All unordered pairs (i<j) of {0..v-1} in lexicographic order.
std::vector<std::pair<int, int>> all_pairs(int v);

}  // namespace hyperlin
