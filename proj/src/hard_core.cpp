#include "hyperlin/hard_core.hpp"

#include "hyperlin/errors.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace hyperlin {
namespace {

void require_copies(const DependencyGraph& d) {
  if (d.copy_edges.size() != d.size()) throw DomainError("dependency graph carries no forbidden copies");
}

std::vector<std::uint64_t> copy_edge_masks(const DependencyGraph& d, int max_edges) {
  require_copies(d);
  if (static_cast<int>(d.edges.size()) > max_edges) {
    throw BudgetExceeded("hyperedge count " + std::to_string(d.edges.size()) + " exceeds " +
                         std::to_string(max_edges));
  }
  std::vector<std::uint64_t> out;
  out.reserve(d.size());
  for (const auto& ce : d.copy_edges) out.push_back((std::uint64_t{1} << ce[0]) | (std::uint64_t{1} << ce[1]));
  return out;
}

void add_checked(long long& slot, long long value) {
  if (__builtin_add_overflow(slot, value, &slot)) throw std::overflow_error("coefficient overflow");
}

PPolynomial by_edge_count(const std::vector<long long>& weight) {
  std::vector<long long> coeff(64, 0);
  for (std::size_t f = 0; f < weight.size(); ++f) add_checked(coeff[std::popcount(f)], weight[f]);
  PPolynomial out;
  for (int m = 0; m < 64; ++m) out.add_term(m, Rational(coeff[m]));
  return out;
}

}  // namespace

PPolynomial inclusion_exclusion_polynomial(const DependencyGraph& d) {
  require_copies(d);
  const int copies = static_cast<int>(d.size());
  if (copies > kMaxInclusionExclusionCopies) {
    throw BudgetExceeded("inclusion-exclusion over 2^" + std::to_string(copies) + " copy subsets");
  }
  std::vector<int> use(d.edges.size(), 0);
  std::vector<long long> coeff(d.edges.size() + 1, 0);
  std::vector<char> in(static_cast<std::size_t>(copies), 0);
  int distinct = 0;
  int parity = 0;
  coeff[0] = 1;
  const std::uint64_t steps = std::uint64_t{1} << copies;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int j = std::countr_zero(i);
    if (in[j]) {
      for (int e : d.copy_edges[j]) distinct -= --use[e] == 0;
    } else {
      for (int e : d.copy_edges[j]) distinct += use[e]++ == 0;
    }
    in[j] ^= 1;
    parity ^= 1;
    coeff[distinct] += parity ? -1 : 1;
  }
  PPolynomial out;
  for (std::size_t m = 0; m < coeff.size(); ++m) out.add_term(static_cast<int>(m), Rational(coeff[m]));
  return out;
}

PPolynomial inclusion_exclusion_by_support(const DependencyGraph& d) {
  const auto masks = copy_edge_masks(d, kMaxSupportEdges);
  const int edges = static_cast<int>(d.edges.size());
  const std::size_t states = std::size_t{1} << edges;
  // contains[F] = 1 when some copy lives inside F (superset closure).
  std::vector<char> contains(states, 0);
  for (auto m : masks) contains[m] = 1;
  for (int b = 0; b < edges; ++b)
    for (std::size_t f = 0; f < states; ++f)
      if (f >> b & 1) contains[f] |= contains[f ^ (std::size_t{1} << b)];
  // a[F] = Σ_{S: ∪S = F} (-1)^{|S|}, by Möbius inversion of [F contains no copy].
  std::vector<long long> a(states);
  for (std::size_t f = 0; f < states; ++f) a[f] = contains[f] ? 0 : 1;
  for (int b = 0; b < edges; ++b)
    for (std::size_t f = 0; f < states; ++f)
      if (f >> b & 1) a[f] -= a[f ^ (std::size_t{1} << b)];
  return by_edge_count(a);
}

PPolynomial hard_core_polynomial(const DependencyGraph& d, const EnumerationLimits& limits) {
  const auto masks = copy_edge_masks(d, kMaxHardCoreEdges);
  const int copies = static_cast<int>(d.size());
  if (copies > 64) throw BudgetExceeded("polymer enumeration needs at most 64 copies");
  const int edges = static_cast<int>(d.edges.size());
  const std::size_t states = std::size_t{1} << edges;
  const auto adj = adjacency_masks(d.adjacency);

  // weight[E] = Σ over polymers with support E of (-1)^{|C|}.
  std::vector<long long> weight(states, 0);
  std::size_t produced = 0;
  auto extend = [&](auto&& self, std::uint64_t closed, std::uint64_t ext, std::uint64_t above,
                    std::uint64_t support, int size) -> void {
    if (++produced > limits.max_items) throw CapExceeded("polymer enumeration cap reached", produced - 1);
    weight[support] += size % 2 ? -1 : 1;
    while (ext) {
      const int w = 63 - std::countl_zero(ext);
      const std::uint64_t bit = std::uint64_t{1} << w;
      ext &= ~bit;
      self(self, closed | adj[w], ext | (adj[w] & ~closed & above), above, support | masks[w], size + 1);
    }
  };
  for (int root = 0; root < copies; ++root) {
    const std::uint64_t bit = std::uint64_t{1} << root;
    const std::uint64_t above = root == 63 ? 0 : (~std::uint64_t{0} << (root + 1));
    extend(extend, adj[root] | bit, adj[root] & above, above, masks[root], 1);
  }

  // total[F] = Σ over sets of polymers whose supports partition F.
  std::vector<long long> total(states, 0);
  total[0] = 1;
  for (std::size_t f = 1; f < states; ++f) {
    const std::size_t low = f & (~f + 1);
    const std::size_t rest = f ^ low;
    long long acc = 0;
    // E ranges over subsets of f containing the lowest element.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t e = sub | low;
      if (weight[e]) {
        long long term;
        if (__builtin_mul_overflow(weight[e], total[f ^ e], &term)) throw std::overflow_error("coefficient overflow");
        add_checked(acc, term);
      }
      if (sub == 0) break;
    }
    total[f] = acc;
  }
  return by_edge_count(total);
}

PPolynomial hard_core_polynomial_literal(const DependencyGraph& d, std::size_t max_polymers) {
  require_copies(d);
  if (d.size() > 64) throw BudgetExceeded("literal hard-core form needs at most 64 copies");
  const auto adj = adjacency_masks(d.adjacency);
  std::vector<std::uint64_t> polymers;
  grow_connected_masks(
      adj, static_cast<int>(d.size()), [](std::uint64_t, int) { return true; },
      [&](std::uint64_t mask, int) {
        if (polymers.size() == max_polymers) throw BudgetExceeded("too many polymers for the literal form");
        polymers.push_back(mask);
      });
  const std::size_t count = polymers.size();
  std::vector<int> distinct(count);
  std::vector<int> sign(count);
  std::vector<std::uint64_t> closure(count);  // copies in or adjacent to the polymer
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<char> used(d.edges.size(), 0);
    int e_count = 0;
    std::uint64_t close = polymers[i];
    for (std::uint64_t m = polymers[i]; m; m &= m - 1) {
      const int c = std::countr_zero(m);
      close |= adj[c];
      for (int e : d.copy_edges[c]) e_count += used[e]++ == 0;
    }
    distinct[i] = e_count;
    sign[i] = std::popcount(polymers[i]) % 2 ? -1 : 1;
    closure[i] = close;
  }
  // Compatible means the union is disconnected in D: no copy of one lies in or next to the other.
  std::vector<long long> coeff(d.edges.size() + 1, 0);
  std::vector<std::size_t> chosen;
  auto walk = [&](auto&& self, std::size_t from, int power, int s) -> void {
    coeff[power] += s;
    for (std::size_t j = from; j < count; ++j) {
      bool ok = true;
      for (std::size_t c : chosen) {
        if ((closure[c] & polymers[j]) != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(j);
      self(self, j + 1, power + distinct[j], s * sign[j]);
      chosen.pop_back();
    }
  };
  walk(walk, 0, 0, 1);
  PPolynomial out;
  for (std::size_t m = 0; m < coeff.size(); ++m) out.add_term(static_cast<int>(m), Rational(coeff[m]));
  return out;
}

}  // namespace hyperlin
