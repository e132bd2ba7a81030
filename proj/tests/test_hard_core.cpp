#include <doctest.h>

#include "hyperlin/errors.hpp"
#include "hyperlin/hard_core.hpp"
#include "hyperlin/oracle.hpp"

#include <random>

using namespace hyperlin;

namespace {

// P(no copy of d is present) by scanning every subset of d's hyperedges.
PPolynomial avoidance_by_edge_scan(const DependencyGraph& d) {
  const int e = static_cast<int>(d.edges.size());
  std::vector<long long> by_size(static_cast<std::size_t>(e) + 1, 0);
  for (std::uint32_t f = 0; f < (1u << e); ++f) {
    bool free = true;
    for (const auto& ce : d.copy_edges) free = free && !((f >> ce[0] & 1) && (f >> ce[1] & 1));
    if (free) ++by_size[std::popcount(f)];
  }
  PPolynomial out;
  const PPolynomial p = PPolynomial::monomial(1);
  for (int k = 0; k <= e; ++k) {
    PPolynomial term = one_minus_p_power(e - k);
    for (int i = 0; i < k; ++i) term *= p;
    out += term * Rational(by_size[k]);
  }
  return out;
}

DependencyGraph random_sub_host(std::mt19937_64& rng, int n, int copies) {
  auto all = enumerate_forbidden_copies(n, 3);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(copies));
  std::sort(all.begin(), all.end());
  return build_dependency_graph(std::move(all));
}

}  // namespace

TEST_CASE("all untruncated forms agree with the exact oracle on four vertices") {
  const auto d = dependency_graph_for(4, 3);
  const auto exact = exact_linearity_polynomial(4, 3);
  CHECK(inclusion_exclusion_polynomial(d) == exact);
  CHECK(inclusion_exclusion_by_support(d) == exact);
  CHECK(hard_core_polynomial(d) == exact);
  CHECK(hard_core_polynomial_literal(d) == exact);
}

TEST_CASE("support-grouped inclusion-exclusion matches the oracle on five and six vertices") {
  CHECK(inclusion_exclusion_by_support(dependency_graph_for(5, 3)) == exact_linearity_polynomial(5, 3));
  CHECK(inclusion_exclusion_by_support(dependency_graph_for(6, 3)) == avoidance_by_edge_scan(dependency_graph_for(6, 3)));
}

TEST_CASE("every form agrees on random sub-hosts") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 3;
    const int copies = 3 + static_cast<int>(rng() % 7);
    const auto d = random_sub_host(rng, n, copies);
    CAPTURE(trial);
    const auto truth = avoidance_by_edge_scan(d);
    CHECK(inclusion_exclusion_polynomial(d) == truth);
    CHECK(inclusion_exclusion_by_support(d) == truth);
    if (static_cast<int>(d.edges.size()) <= kMaxHardCoreEdges) CHECK(hard_core_polynomial(d) == truth);
    if (copies <= 8) CHECK(hard_core_polynomial_literal(d) == truth);
  }
}

TEST_CASE("size budgets") {
  const auto d6 = dependency_graph_for(6, 3);
  CHECK_THROWS_AS(inclusion_exclusion_polynomial(d6), BudgetExceeded);
  CHECK_THROWS_AS(hard_core_polynomial(d6), BudgetExceeded);
  CHECK_THROWS_AS(hard_core_polynomial_literal(d6), BudgetExceeded);
  CHECK_THROWS_AS(inclusion_exclusion_by_support(dependency_graph_for(7, 3)), BudgetExceeded);
  CHECK_THROWS_AS(hard_core_polynomial_literal(dependency_graph_for(5, 3), 100), BudgetExceeded);
  CHECK_THROWS_AS(inclusion_exclusion_polynomial(DependencyGraph::from_adjacency({{}})), DomainError);
}
