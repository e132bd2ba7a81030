#pragma once

#include "hyperlin/errors.hpp"
#include "hyperlin/hypergraph.hpp"
#include "hyperlin/simple_graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlin {

/// Sorted neighbour lists over vertices 0..N-1.
using Adjacency = std::vector<std::vector<int>>;

/// Dependency graph D on forbidden copies: copies i and j are adjacent iff they share a hyperedge.
struct DependencyGraph {
  std::vector<ForbiddenCopy> copies;
  /// Distinct hyperedges referenced by the copies, lexicographic.
  std::vector<Edge> edges;
  /// Indices into `edges` of each copy's two hyperedges.
  std::vector<std::array<int, 2>> copy_edges;
  Adjacency adjacency;

  std::size_t size() const noexcept { return adjacency.size(); }

  /// An abstract dependency graph with no copy data attached; for enumeration tests.
  static DependencyGraph from_adjacency(Adjacency adjacency);
};

DependencyGraph build_dependency_graph(std::vector<ForbiddenCopy> copies);

/// D for all forbidden copies in the complete r-graph on [n].
DependencyGraph dependency_graph_for(int n, int r);

/// One line per copy: "index: neighbour neighbour ...".
void write_adjacency_list(std::ostream& out, const DependencyGraph& d);

struct Polymer {
  std::vector<int> members;  // sorted copy indices

  std::size_t size() const noexcept { return members.size(); }
  bool operator==(const Polymer&) const = default;
  auto operator<=>(const Polymer&) const = default;
};

/// Unordered set of pairwise-disjoint polymers whose compatibility graph is connected.
struct ClusterDisjoint {
  std::vector<Polymer> polymers;  // ordered by smallest member
  SimpleGraph adjacency;          // 𝔾: polymers i, j adjacent iff C_i ∼ C_j

  std::size_t total_size() const noexcept;
};

/// Hard cap on streamed items. The default is generous; callers that know their
/// instance is large should raise it explicitly.
struct EnumerationLimits {
  static constexpr std::size_t kDefaultMaxItems = 500'000'000;
  std::size_t max_items = kDefaultMaxItems;
};

/// Connected vertex sets of a graph, grown from each root by the ESU rule: a set is
/// extended only with exclusive neighbours of the newest vertex that exceed the root,
/// which produces every connected set exactly once, from its minimum element.
///
/// `on_add(w)` is called before a vertex joins the set and may return false to prune
/// that branch (the whole subtree consists of supersets). `on_remove(w)` undoes it.
/// `visit(members)` receives members in insertion order.
/// Roots are restricted to r ≡ root_offset (mod root_stride) so callers can shard work.
template <class OnAdd, class OnRemove, class Visit>
void grow_connected_sets(const Adjacency& adj, int max_size, OnAdd&& on_add, OnRemove&& on_remove,
                         Visit&& visit, int root_offset = 0, int root_stride = 1) {
  const int n = static_cast<int>(adj.size());
  if (max_size < 1) return;
  std::vector<int> cover(static_cast<std::size_t>(n), 0);  // |N[S] ∩ {u}| counts
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(max_size));

  auto enter = [&](int w) {
    members.push_back(w);
    ++cover[w];
    for (int u : adj[w]) ++cover[u];
  };
  auto leave = [&](int w) {
    members.pop_back();
    --cover[w];
    for (int u : adj[w]) --cover[u];
  };

  // Explicit recursion over extension lists.
  auto extend = [&](auto&& self, std::vector<int>& ext, int root) -> void {
    visit(static_cast<const std::vector<int>&>(members));
    if (static_cast<int>(members.size()) == max_size) return;
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      if (!on_add(w)) continue;
      std::vector<int> next = ext;
      for (int u : adj[w]) {
        if (u > root && cover[u] == 0) next.push_back(u);
      }
      // Exclusive neighbours of w can appear twice only through duplicates in adj; they don't.
      enter(w);
      self(self, next, root);
      leave(w);
      on_remove(w);
    }
  };

  for (int root = root_offset; root < n; root += root_stride) {
    if (!on_add(root)) continue;
    enter(root);
    std::vector<int> ext;
    for (int u : adj[root]) {
      if (u > root) ext.push_back(u);
    }
    extend(extend, ext, root);
    leave(root);
    on_remove(root);
  }
}

/// Bitmask variant of `grow_connected_sets` for graphs with at most 64 vertices.
/// `visit(mask, size)` is called once per connected set; `step(mask_before, w)` may return
/// false to prune the set mask_before ∪ {w} and everything grown from it.
template <class Step, class Visit>
void grow_connected_masks(std::span<const std::uint64_t> adj, int max_size, Step&& step, Visit&& visit,
                          int root_offset = 0, int root_stride = 1) {
  const int n = static_cast<int>(adj.size());
  auto extend = [&](auto&& self, std::uint64_t set, std::uint64_t closed, std::uint64_t ext,
                    std::uint64_t above_root, int size) -> void {
    visit(set, size);
    if (size == max_size) return;
    while (ext) {
      const int w = 63 - std::countl_zero(ext);
      const std::uint64_t bit = std::uint64_t{1} << w;
      ext &= ~bit;
      if (!step(set, w)) continue;
      const std::uint64_t fresh = adj[w] & ~closed & above_root;
      self(self, set | bit, closed | adj[w] | bit, ext | fresh, above_root, size + 1);
    }
  };
  for (int root = root_offset; root < n; root += root_stride) {
    if (!step(std::uint64_t{0}, root)) continue;
    const std::uint64_t bit = std::uint64_t{1} << root;
    const std::uint64_t above = root == 63 ? 0 : (~std::uint64_t{0} << (root + 1));
    extend(extend, bit, adj[root] | bit, adj[root] & above, above, 1);
  }
}

std::vector<std::uint64_t> adjacency_masks(const Adjacency& adj);

/// Streams every polymer (connected vertex set) of size <= k exactly once.
/// With `max_edges`, polymers whose copies use more distinct hyperedges are skipped
/// together with all their supersets. Throws CapExceeded past `limits.max_items`.
template <class Visit>
void polymers_up_to(const DependencyGraph& d, int k, Visit&& visit, EnumerationLimits limits = {},
                    std::optional<int> max_edges = std::nullopt);

/// Partitions of a polymer into D-connected blocks. Local indices refer to positions in
/// `members`; blocks are bitmasks over those positions.
class LocalPolymer {
 public:
  static constexpr int kMaxSize = 20;

  LocalPolymer(const DependencyGraph& d, std::span<const int> members);
  LocalPolymer(const Adjacency& adj, std::span<const int> members);

  int size() const noexcept { return static_cast<int>(members_.size()); }
  std::span<const int> members() const noexcept { return members_; }
  std::uint32_t neighbourhood(std::uint32_t mask) const noexcept;
  bool connected(std::uint32_t mask) const noexcept;
  std::uint32_t full_mask() const noexcept { return size() == 32 ? ~0u : ((1u << size()) - 1u); }

  /// Visits each partition into connected blocks as a span of block masks ordered by
  /// lowest position.
  template <class Visit>
  void for_each_connected_partition(Visit&& visit) const;

  /// Compatibility graph 𝔾 of the given blocks.
  SimpleGraph block_graph(std::span<const std::uint32_t> blocks) const;

 private:
  template <class Visit>
  void partition_rec(std::uint32_t remaining, std::vector<std::uint32_t>& blocks, Visit& visit) const;

  std::vector<int> members_;
  std::vector<std::uint32_t> adj_;
};

/// Streams every cluster of pairwise-disjoint polymers with total size <= k exactly once.
template <class Visit>
void clusters_disjoint(const DependencyGraph& d, int k, Visit&& visit, EnumerationLimits limits = {});

// ---- template definitions ----

template <class Visit>
void polymers_up_to(const DependencyGraph& d, int k, Visit&& visit, EnumerationLimits limits,
                    std::optional<int> max_edges) {
  if (k < 1) throw DomainError("polymer size bound must be >= 1");
  std::size_t produced = 0;
  std::vector<int> edge_use(d.edges.size(), 0);
  int distinct = 0;
  const bool track = max_edges.has_value();
  if (track && d.copy_edges.size() != d.size()) {
    throw DomainError("edge budget requires a dependency graph built from copies");
  }
  auto on_add = [&](int w) {
    if (!track) return true;
    for (int e : d.copy_edges[w]) distinct += edge_use[e]++ == 0;
    if (distinct > *max_edges) {
      for (int e : d.copy_edges[w]) distinct -= --edge_use[e] == 0;
      return false;
    }
    return true;
  };
  auto on_remove = [&](int w) {
    if (!track) return;
    for (int e : d.copy_edges[w]) distinct -= --edge_use[e] == 0;
  };
  Polymer polymer;
  auto emit = [&](const std::vector<int>& members) {
    if (++produced > limits.max_items) {
      throw CapExceeded("polymer enumeration exceeded cap of " + std::to_string(limits.max_items), produced - 1);
    }
    polymer.members = members;
    std::sort(polymer.members.begin(), polymer.members.end());
    visit(static_cast<const Polymer&>(polymer));
  };
  grow_connected_sets(d.adjacency, k, on_add, on_remove, emit);
}

template <class Visit>
void LocalPolymer::partition_rec(std::uint32_t remaining, std::vector<std::uint32_t>& blocks,
                                 Visit& visit) const {
  if (remaining == 0) {
    visit(std::span<const std::uint32_t>(blocks));
    return;
  }
  const std::uint32_t low = remaining & (~remaining + 1u);
  const std::uint32_t rest = remaining & ~low;
  // Every submask of `rest`, joined with the lowest remaining position, is a candidate block.
  for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
    const std::uint32_t block = sub | low;
    if (connected(block)) {
      blocks.push_back(block);
      partition_rec(remaining & ~block, blocks, visit);
      blocks.pop_back();
    }
    if (sub == 0) break;
  }
}

template <class Visit>
void LocalPolymer::for_each_connected_partition(Visit&& visit) const {
  std::vector<std::uint32_t> blocks;
  blocks.reserve(members_.size());
  partition_rec(full_mask(), blocks, visit);
}

template <class Visit>
void clusters_disjoint(const DependencyGraph& d, int k, Visit&& visit, EnumerationLimits limits) {
  std::size_t produced = 0;
  ClusterDisjoint cluster;
  polymers_up_to(
      d, k,
      [&](const Polymer& p) {
        const LocalPolymer local(d, p.members);
        local.for_each_connected_partition([&](std::span<const std::uint32_t> blocks) {
          if (++produced > limits.max_items) {
            throw CapExceeded("cluster enumeration exceeded cap of " + std::to_string(limits.max_items),
                              produced - 1);
          }
          cluster.polymers.clear();
          for (auto b : blocks) {
            Polymer part;
            for (std::uint32_t m = b; m; m &= m - 1) part.members.push_back(p.members[std::countr_zero(m)]);
            cluster.polymers.push_back(std::move(part));
          }
          cluster.adjacency = local.block_graph(blocks);
          if (!cluster.adjacency.connected()) {
            throw std::logic_error("disjoint-polymer cluster with a connected union has a disconnected 𝔾");
          }
          visit(static_cast<const ClusterDisjoint&>(cluster));
        });
      },
      limits);
}

}  // namespace hyperlin
