#pragma once

// Slow, independently written reference computations for the tests. Nothing here
// reuses the library's enumeration, partition or chromatic code.

#include "hyperlin/dependency.hpp"
#include "hyperlin/polynomial.hpp"
#include "hyperlin/simple_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace bf {

using hyperlin::BigInt;
using hyperlin::DependencyGraph;
using hyperlin::PPolynomial;
using hyperlin::Rational;

inline bool adjacent(const DependencyGraph& d, int a, int b) {
  const auto& row = d.adjacency[a];
  return std::find(row.begin(), row.end(), b) != row.end();
}

inline bool connected(const DependencyGraph& d, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < s.size(); ++y)
      if (!seen[y] && adjacent(d, s[x], s[y])) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == s.size();
}

// Every k-subset of {0..n-1}, lexicographic.
inline void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return;
  while (true) {
    f(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

inline std::vector<std::vector<int>> polymers_of_size(const DependencyGraph& d, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(static_cast<int>(d.size()), k, [&](const std::vector<int>& c) {
    if (connected(d, c)) out.push_back(c);
  });
  return out;
}

inline int distinct_edges(const DependencyGraph& d, const std::vector<int>& s) {
  std::set<int> e;
  for (int c : s) e.insert(d.copy_edges[c].begin(), d.copy_edges[c].end());
  return static_cast<int>(e.size());
}

// Set partitions by inserting each element into an existing block or a new one.
inline void for_each_partition(const std::vector<int>& items,
                               const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      f(blocks);
      return;
    }
    // Indexing, not references: the recursion grows `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(items[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({items[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Σ over edge subsets of g that connect all vertices of (-1)^{|E|}, via union-find.
inline long long ursell(const hyperlin::SimpleGraph& g) {
  const auto edges = g.edges();
  const int v = g.vertex_count();
  long long total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(v));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = v;
    int count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      const int a = find(edges[i].first), b = find(edges[i].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    if (comps == 1) total += count % 2 ? -1 : 1;
  }
  return total;
}

// L∅_{D,i} straight from the definition: polymers of size i, all set partitions with
// connected blocks, φ of the block compatibility graph by spanning-subgraph summation.
inline PPolynomial L_term(const DependencyGraph& d, int i) {
  std::map<int, long long> coeff;
  for (const auto& poly : polymers_of_size(d, i)) {
    for_each_partition(poly, [&](const std::vector<std::vector<int>>& blocks) {
      for (const auto& b : blocks)
        if (!connected(d, b)) return;
      hyperlin::SimpleGraph g(static_cast<int>(blocks.size()));
      for (std::size_t x = 0; x < blocks.size(); ++x)
        for (std::size_t y = x + 1; y < blocks.size(); ++y) {
          bool touch = false;
          for (int a : blocks[x])
            for (int b : blocks[y]) touch = touch || adjacent(d, a, b);
          if (touch) g.add_edge(static_cast<int>(x), static_cast<int>(y));
        }
      int power = 0;
      for (const auto& b : blocks) power += distinct_edges(d, b);
      coeff[power] += (i % 2 ? -1 : 1) * ursell(g);
    });
  }
  PPolynomial out;
  for (const auto& [m, c] : coeff) out.add_term(m, Rational(c));
  return out;
}

// κ by its definition over set partitions.
inline PPolynomial cumulant(const DependencyGraph& d, const std::vector<int>& s) {
  PPolynomial out;
  for_each_partition(s, [&](const std::vector<std::vector<int>>& blocks) {
    long long w = 1;
    for (std::size_t j = 1; j < blocks.size(); ++j) w *= -static_cast<long long>(j);
    int power = 0;
    for (const auto& b : blocks) power += distinct_edges(d, b);
    out.add_term(power, Rational(w));
  });
  return out;
}

// Proper λ-colourings by exhaustive assignment.
inline long long colourings(const hyperlin::SimpleGraph& g, int lambda) {
  const int v = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(v), 0);
  long long count = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == v) {
      ++count;
      return;
    }
    for (int c = 0; c < lambda; ++c) {
      bool ok = true;
      for (int y = 0; y < x; ++y) ok = ok && !(g.has_edge(x, y) && colour[y] == c);
      if (!ok) continue;
      colour[x] = c;
      rec(x + 1);
    }
  };
  rec(0);
  return count;
}

// Linear edge sets of each size on K_n^{(r)}, by scanning all 2^N subsets.
inline std::vector<long long> linear_counts(const std::vector<std::vector<int>>& edges) {
  const int N = static_cast<int>(edges.size());
  std::vector<long long> out(static_cast<std::size_t>(N + 1), 0);
  std::vector<std::vector<char>> clash(static_cast<std::size_t>(N), std::vector<char>(static_cast<std::size_t>(N), 0));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int shared = 0;
      for (int x : edges[a])
        for (int y : edges[b]) shared += x == y;
      clash[a][b] = a != b && shared >= 2;
    }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    bool ok = true;
    for (int a = 0; a < N && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < N && ok; ++b) ok = !((mask >> b & 1) && clash[a][b]);
    }
    if (ok) ++out[std::popcount(mask)];
  }
  return out;
}

}  // namespace bf
