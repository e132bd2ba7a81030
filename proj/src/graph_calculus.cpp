#include "hyperlin/graph_calculus.hpp"

#include "hyperlin/errors.hpp"
#include "hyperlin/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

namespace hyperlin {
namespace {

// Working representation for deletion–contraction: vertex count plus adjacency masks.
struct Minor {
  int v = 0;
  std::vector<std::uint32_t> adj;

  int edges() const {
    int twice = 0;
    for (auto m : adj) twice += std::popcount(m);
    return twice / 2;
  }
};

Minor to_minor(const SimpleGraph& g) {
  Minor m;
  m.v = g.vertex_count();
  m.adj.resize(static_cast<std::size_t>(m.v));
  for (int a = 0; a < m.v; ++a) m.adj[a] = g.neighbors(a);
  return m;
}

// Removes vertex w, renumbering higher vertices down by one.
void drop_vertex(Minor& m, int w) {
  const std::uint32_t low = (1u << w) - 1u;
  for (int a = 0; a < m.v; ++a) {
    const std::uint32_t x = m.adj[a];
    m.adj[a] = (x & low) | ((x >> 1) & ~low);
  }
  m.adj.erase(m.adj.begin() + w);
  --m.v;
}

Minor contract(const Minor& g, int u, int w) {
  Minor m = g;
  m.adj[u] |= m.adj[w];
  for (std::uint32_t nb = m.adj[w]; nb; nb &= nb - 1) {
    const int x = std::countr_zero(nb);
    m.adj[x] |= 1u << u;
  }
  m.adj[u] &= ~((1u << u) | (1u << w));
  for (int a = 0; a < m.v; ++a) m.adj[a] &= ~(1u << w);
  drop_vertex(m, w);
  return m;
}

std::vector<Minor> components(const Minor& g) {
  std::vector<Minor> out;
  std::uint32_t unseen = g.v == 32 ? ~0u : ((1u << g.v) - 1u);
  while (unseen) {
    std::uint32_t reached = unseen & (~unseen + 1u);
    std::uint32_t frontier = reached;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= g.adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
    Minor c;
    std::vector<int> index(static_cast<std::size_t>(g.v), -1);
    for (std::uint32_t r = reached; r; r &= r - 1) index[std::countr_zero(r)] = c.v++;
    c.adj.assign(static_cast<std::size_t>(c.v), 0u);
    for (std::uint32_t r = reached; r; r &= r - 1) {
      const int a = std::countr_zero(r);
      for (std::uint32_t nb = g.adj[a]; nb; nb &= nb - 1) c.adj[index[a]] |= 1u << index[std::countr_zero(nb)];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::uint64_t code_under(const Minor& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < g.v; ++i)
    for (int j = i + 1; j < g.v; ++j) code = (code << 1) | ((g.adj[perm[i]] >> perm[j]) & 1u);
  return code;
}

CanonicalForm canonical_of(const Minor& g) {
  std::vector<int> order(static_cast<std::size_t>(g.v));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(g.adj[a]) < std::popcount(g.adj[b]); });
  // Degree classes as [begin, end) ranges of `order`.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < g.v;) {
    int j = i;
    while (j < g.v && std::popcount(g.adj[order[j]]) == std::popcount(g.adj[order[i]])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : classes) std::sort(order.begin() + b, order.begin() + e);
  std::uint64_t best = 0;
  bool first = true;
  while (true) {
    const std::uint64_t c = code_under(g, order);
    if (first || c > best) best = c;
    first = false;
    // Odometer over per-class permutations.
    std::size_t k = 0;
    for (; k < classes.size(); ++k) {
      auto [b, e] = classes[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == classes.size()) break;
  }
  return {g.v, best};
}

struct MinorKey {
  int v;
  bool canonical;
  std::vector<std::uint32_t> data;
  bool operator<(const MinorKey& o) const { return std::tie(v, canonical, data) < std::tie(o.v, o.canonical, o.data); }
};

constexpr int kMemoCanonicalMax = 7;

MinorKey key_of(const Minor& g) {
  if (g.v <= kMemoCanonicalMax) {
    const auto c = canonical_of(g);
    return {g.v, true, {static_cast<std::uint32_t>(c.code), static_cast<std::uint32_t>(c.code >> 32)}};
  }
  return {g.v, false, g.adj};
}

class ChromaticSolver {
 public:
  IntPolynomial solve(const Minor& g) {
    const int e = g.edges();
    if (e == 0) return IntPolynomial::monomial(g.v);
    if (e == g.v * (g.v - 1) / 2) return falling_factorial_polynomial(g.v);
    auto parts = components(g);
    if (parts.size() > 1) {
      IntPolynomial out(BigInt(1));
      for (const auto& c : parts) out *= solve(c);
      return out;
    }
    if (e == g.v - 1) {
      // Tree: λ(λ-1)^{v-1}.
      IntPolynomial factor = IntPolynomial::monomial(1);
      factor.add_term(0, BigInt(-1));
      IntPolynomial out = IntPolynomial::monomial(1);
      for (int i = 1; i < g.v; ++i) out *= factor;
      return out;
    }
    MinorKey key = key_of(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pivot on an edge at a maximum-degree vertex.
    int u = 0;
    for (int a = 1; a < g.v; ++a)
      if (std::popcount(g.adj[a]) > std::popcount(g.adj[u])) u = a;
    int w = -1;
    for (std::uint32_t nb = g.adj[u]; nb; nb &= nb - 1) {
      const int x = std::countr_zero(nb);
      if (w < 0 || std::popcount(g.adj[x]) > std::popcount(g.adj[w])) w = x;
    }
    Minor deleted = g;
    deleted.adj[u] &= ~(1u << w);
    deleted.adj[w] &= ~(1u << u);
    IntPolynomial out = solve(deleted) - solve(contract(g, u, w));
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  std::map<MinorKey, IntPolynomial> memo_;
};

int count_components_with(int v, const std::vector<std::pair<int, int>>& edges, std::uint32_t subset) {
  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = v;
  for (std::uint32_t s = subset; s; s &= s - 1) {
    const auto [a, b] = edges[std::countr_zero(s)];
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices) {
    throw BudgetExceeded("canonical form supports at most 8 vertices");
  }
  return canonical_of(to_minor(g));
}

std::uint64_t labelled_code(const SimpleGraph& g) {
  if (g.vertex_count() > 11) throw BudgetExceeded("labelled code supports at most 11 vertices");
  std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
  std::iota(identity.begin(), identity.end(), 0);
  return code_under(to_minor(g), identity);
}

IntPolynomial chromatic_polynomial(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return IntPolynomial(BigInt(1));
  ChromaticSolver solver;
  return solver.solve(to_minor(g));
}

IntPolynomial chromatic_via_whitney(const SimpleGraph& g) {
  const auto edges = g.edges();
  if (edges.size() > 24) throw BudgetExceeded("Whitney expansion limited to 24 edges");
  std::vector<BigInt> by_components(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  const std::uint32_t total = 1u << edges.size();
  for (std::uint32_t subset = 0; subset < total; ++subset) {
    const int c = count_components_with(g.vertex_count(), edges, subset);
    if (std::popcount(subset) % 2) {
      by_components[c] -= 1;
    } else {
      by_components[c] += 1;
    }
  }
  IntPolynomial out;
  for (std::size_t c = 0; c < by_components.size(); ++c) out.add_term(static_cast<int>(c), by_components[c]);
  return out;
}

std::vector<BigInt> independent_partition_counts(const SimpleGraph& g) {
  if (g.vertex_count() > 10) throw BudgetExceeded("partition enumeration limited to 10 vertices");
  std::vector<BigInt> alpha(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for_each_set_partition(g.vertex_count(), [&](std::span<const std::uint32_t> blocks) {
    for (auto b : blocks)
      if (!g.independent(b)) return;
    alpha[blocks.size()] += 1;
  });
  return alpha;
}

IntPolynomial chromatic_via_partitions(const SimpleGraph& g) {
  const auto alpha = independent_partition_counts(g);
  IntPolynomial out;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k] != 0) out += falling_factorial_polynomial(static_cast<int>(k)) * alpha[k];
  }
  return out;
}

BigInt connected_spanning_sum(const SimpleGraph& g) {
  const auto edges = g.edges();
  if (edges.size() > 24) throw BudgetExceeded("connected spanning subgraph sum limited to 24 edges");
  long long sum = 0;
  const std::uint32_t total = 1u << edges.size();
  for (std::uint32_t subset = 0; subset < total; ++subset) {
    if (count_components_with(g.vertex_count(), edges, subset) == 1) sum += std::popcount(subset) % 2 ? -1 : 1;
  }
  return BigInt(sum);
}

BigInt ursell(const SimpleGraph& g) {
  if (!g.connected()) throw DomainError("Ursell function requested for a disconnected graph");
  return chromatic_polynomial(g).coefficient(1);
}

BigInt ursell_complete(int m) {
  BigInt f = factorial(m - 1);
  return (m - 1) % 2 ? BigInt(-f) : f;
}

PartitionFormCheck lemma4_check(const SimpleGraph& g) {
  if (!g.connected()) throw DomainError("partition-form check needs a connected graph");
  if (g.vertex_count() > 7) throw BudgetExceeded("partition-form check limited to 7 vertices");
  PartitionFormCheck out;
  out.partition_side = 0;
  for_each_set_partition(g.vertex_count(), [&](std::span<const std::uint32_t> blocks) {
    for (auto b : blocks)
      if (!g.independent(b)) return;
    out.partition_side += ursell_complete(static_cast<int>(blocks.size()));
  });
  out.ursell_side = ursell(g);
  return out;
}

BigInt UrsellCache::get(const SimpleGraph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices) return ursell(g);
  const CanonicalForm key = canonical_form(g);
  {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
  }
  BigInt value = ursell(g);
  std::unique_lock lock(mutex_);
  values_.emplace(key, value);
  return value;
}

std::size_t UrsellCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

UrsellCache& UrsellCache::global() {
  static UrsellCache cache;
  return cache;
}

MeanPolynomial independent_cluster_expansion(int m, int max_order) {
  if (m < 1 || max_order < 1) throw DomainError("need m >= 1 and order >= 1");
  if (max_order > 8) throw BudgetExceeded("independent-case expansion limited to order 8");
  MeanPolynomial out;
  std::vector<int> tuple;
  auto walk = [&](auto&& self) -> void {
    const int k = static_cast<int>(tuple.size());
    if (k > 0) {
      // Two entries of the tuple are incompatible iff they are the same polymer;
      // distinct singletons of an edgeless graph never touch.
      SimpleGraph g(k);
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (tuple[a] == tuple[b]) g.add_edge(a, b);
      if (g.connected()) {
        std::vector<int> exponents(static_cast<std::size_t>(m), 0);
        for (int i : tuple) ++exponents[i];
        Rational w = Rational(ursell(g)) / Rational(factorial(k));
        if (k % 2) w = -w;
        out[exponents] += w;
      }
    }
    if (k == max_order) return;
    for (int i = 0; i < m; ++i) {
      tuple.push_back(i);
      self(self);
      tuple.pop_back();
    }
  };
  walk(walk);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MeanPolynomial log_one_minus_taylor(int m, int max_order) {
  MeanPolynomial out;
  for (int i = 0; i < m; ++i)
    for (int k = 1; k <= max_order; ++k) {
      std::vector<int> exponents(static_cast<std::size_t>(m), 0);
      exponents[i] = k;
      out[exponents] += Rational(-1, k);
    }
  return out;
}

}  // namespace hyperlin
