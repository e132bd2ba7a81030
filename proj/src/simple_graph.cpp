#include "hyperlin/simple_graph.hpp"

#include "hyperlin/errors.hpp"

#include <bit>
#include <string>

namespace hyperlin {

SimpleGraph::SimpleGraph(int v) : v_(v), adj_(static_cast<std::size_t>(v), 0u) {
  if (v < 0 || v > kMaxVertices) throw DomainError("SimpleGraph supports 0..32 vertices, got " + std::to_string(v));
}

SimpleGraph::SimpleGraph(int v, std::span<const std::pair<int, int>> edges) : SimpleGraph(v) {
  for (auto [a, b] : edges) add_edge(a, b);
}

SimpleGraph SimpleGraph::complete(int v) {
  SimpleGraph g(v);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) g.add_edge(a, b);
  return g;
}

SimpleGraph SimpleGraph::path(int v) {
  SimpleGraph g(v);
  for (int a = 0; a + 1 < v; ++a) g.add_edge(a, a + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(int v) {
  SimpleGraph g = path(v);
  if (v >= 3) g.add_edge(0, v - 1);
  return g;
}

SimpleGraph SimpleGraph::from_edge_mask(int v, std::uint64_t mask) {
  SimpleGraph g(v);
  const auto pairs = all_pairs(v);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= v_ || b >= v_) {
    throw DomainError("invalid edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  adj_[a] |= 1u << b;
  adj_[b] |= 1u << a;
}

void SimpleGraph::remove_edge(int a, int b) {
  adj_[a] &= ~(1u << b);
  adj_[b] &= ~(1u << a);
}

int SimpleGraph::edge_count() const noexcept {
  int twice = 0;
  for (auto m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < v_; ++a)
    for (int b = a + 1; b < v_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

int SimpleGraph::component_count() const {
  const std::uint32_t all = v_ == 32 ? ~0u : ((1u << v_) - 1u);
  std::uint32_t unseen = all;
  int components = 0;
  while (unseen) {
    std::uint32_t frontier = unseen & (~unseen + 1u);
    std::uint32_t reached = frontier;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
    ++components;
  }
  return components;
}

bool SimpleGraph::independent(std::uint32_t mask) const {
  for (std::uint32_t m = mask; m; m &= m - 1) {
    if (adj_[std::countr_zero(m)] & mask) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> all_pairs(int v) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) out.emplace_back(a, b);
  return out;
}

}  // namespace hyperlin
