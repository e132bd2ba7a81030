#include "hyperlin/dependency.hpp"

#include <map>
#include <ostream>

namespace hyperlin {

DependencyGraph DependencyGraph::from_adjacency(Adjacency adjacency) {
  DependencyGraph d;
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  d.adjacency = std::move(adjacency);
  return d;
}

DependencyGraph build_dependency_graph(std::vector<ForbiddenCopy> copies) {
  DependencyGraph d;
  d.copies = std::move(copies);
  std::map<Edge, int> edge_id;
  for (const auto& c : d.copies) {
    edge_id.emplace(c.e1, 0);
    edge_id.emplace(c.e2, 0);
  }
  int next = 0;
  for (auto& [edge, id] : edge_id) {
    id = next++;
    d.edges.push_back(edge);
  }
  // Each copy registers under its two hyperedges; copies sharing a bucket are adjacent.
  std::vector<std::vector<int>> copies_on_edge(d.edges.size());
  d.copy_edges.reserve(d.copies.size());
  for (std::size_t i = 0; i < d.copies.size(); ++i) {
    const int a = edge_id.at(d.copies[i].e1);
    const int b = edge_id.at(d.copies[i].e2);
    d.copy_edges.push_back({a, b});
    copies_on_edge[a].push_back(static_cast<int>(i));
    copies_on_edge[b].push_back(static_cast<int>(i));
  }
  d.adjacency.assign(d.copies.size(), {});
  for (const auto& bucket : copies_on_edge) {
    for (int i : bucket)
      for (int j : bucket)
        if (i != j) d.adjacency[i].push_back(j);
  }
  for (auto& nbrs : d.adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return d;
}

DependencyGraph dependency_graph_for(int n, int r) { return build_dependency_graph(enumerate_forbidden_copies(n, r)); }

void write_adjacency_list(std::ostream& out, const DependencyGraph& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    out << i << ':';
    for (int j : d.adjacency[i]) out << ' ' << j;
    out << '\n';
  }
}

std::size_t ClusterDisjoint::total_size() const noexcept {
  std::size_t total = 0;
  for (const auto& p : polymers) total += p.size();
  return total;
}

std::vector<std::uint64_t> adjacency_masks(const Adjacency& adj) {
  if (adj.size() > 64) throw DomainError("bitmask enumeration supports at most 64 vertices");
  std::vector<std::uint64_t> out(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (int j : adj[i]) out[i] |= std::uint64_t{1} << j;
  return out;
}

LocalPolymer::LocalPolymer(const DependencyGraph& d, std::span<const int> members)
    : LocalPolymer(d.adjacency, members) {}

LocalPolymer::LocalPolymer(const Adjacency& adj, std::span<const int> members)
    : members_(members.begin(), members.end()), adj_(members.size(), 0u) {
  if (members_.size() > static_cast<std::size_t>(kMaxSize)) {
    throw BudgetExceeded("local polymer limited to " + std::to_string(kMaxSize) + " members");
  }
  for (std::size_t a = 0; a < members_.size(); ++a) {
    const auto& nbrs = adj[members_[a]];
    for (std::size_t b = 0; b < members_.size(); ++b) {
      if (a != b && std::binary_search(nbrs.begin(), nbrs.end(), members_[b])) adj_[a] |= 1u << b;
    }
  }
}

std::uint32_t LocalPolymer::neighbourhood(std::uint32_t mask) const noexcept {
  std::uint32_t out = 0;
  for (std::uint32_t m = mask; m; m &= m - 1) out |= adj_[std::countr_zero(m)];
  return out;
}

bool LocalPolymer::connected(std::uint32_t mask) const noexcept {
  if (mask == 0) return false;
  std::uint32_t reached = mask & (~mask + 1u);
  std::uint32_t frontier = reached;
  while (frontier) {
    const std::uint32_t next = neighbourhood(frontier) & mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

SimpleGraph LocalPolymer::block_graph(std::span<const std::uint32_t> blocks) const {
  SimpleGraph g(static_cast<int>(blocks.size()));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::uint32_t reach = neighbourhood(blocks[i]);
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (reach & blocks[j]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

}  // namespace hyperlin
