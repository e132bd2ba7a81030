#include "hyperlin/moments.hpp"

#include "hyperlin/errors.hpp"
#include "hyperlin/partitions.hpp"

#include <algorithm>
#include <set>

namespace hyperlin {

int distinct_edge_count(std::span<const int> copy_set, const DependencyGraph& d) {
  std::vector<int> ids;
  ids.reserve(copy_set.size() * 2);
  for (int c : copy_set) {
    ids.push_back(d.copy_edges.at(c)[0]);
    ids.push_back(d.copy_edges.at(c)[1]);
  }
  std::sort(ids.begin(), ids.end());
  return static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

PPolynomial joint_moment(std::span<const int> copy_set, const DependencyGraph& d) {
  return PPolynomial::monomial(distinct_edge_count(copy_set, d));
}

PPolynomial joint_moment(std::span<const int> copy_set, std::span<const ForbiddenCopy> copies) {
  std::set<Edge> edges;
  for (int c : copy_set) {
    edges.insert(copies[c].e1);
    edges.insert(copies[c].e2);
  }
  return PPolynomial::monomial(static_cast<int>(edges.size()));
}

PPolynomial joint_cumulant(std::span<const int> copy_set, const DependencyGraph& d) {
  const int s = static_cast<int>(copy_set.size());
  if (s > kMaxCumulantSize) throw BudgetExceeded("joint cumulant limited to 10 copies");
  if (s == 0) return {};
  // Distinct-edge count of every sub-multiset, indexed by local mask.
  std::vector<int> edges_of(std::size_t{1} << s, 0);
  std::vector<int> members;
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    members.clear();
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) members.push_back(copy_set[i]);
    edges_of[mask] = distinct_edge_count(members, d);
  }
  std::vector<BigInt> by_power(static_cast<std::size_t>(2 * s) + 1, 0);
  for_each_set_partition(s, [&](std::span<const std::uint32_t> blocks) {
    int power = 0;
    for (auto b : blocks) power += edges_of[b];
    const int m = static_cast<int>(blocks.size());
    BigInt weight = factorial(m - 1);
    if ((m - 1) % 2) weight = -weight;
    by_power[power] += weight;
  });
  PPolynomial out;
  for (std::size_t k = 0; k < by_power.size(); ++k) out.add_term(static_cast<int>(k), Rational(by_power[k]));
  return out;
}

bool factorisation_check(std::span<const Polymer> family, const DependencyGraph& d) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (int a : family[i].members) {
        for (int b : family[j].members) {
          if (a == b) throw PreconditionViolated("polymers overlap");
          const auto& nbrs = d.adjacency.at(a);
          if (std::binary_search(nbrs.begin(), nbrs.end(), b)) {
            throw PreconditionViolated("polymers are adjacent in the dependency graph");
          }
        }
      }
    }
  }
  return moments_factorise(family, d);
}

bool moments_factorise(std::span<const Polymer> family, const DependencyGraph& d) {
  std::vector<int> all;
  PPolynomial product(Rational(1));
  for (const auto& p : family) {
    all.insert(all.end(), p.members.begin(), p.members.end());
    product *= joint_moment(p.members, d);
  }
  return joint_moment(all, d) == product;
}

}  // namespace hyperlin
