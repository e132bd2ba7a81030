#include <doctest.h>

#include "brute_force.hpp"
#include "hyperlin/errors.hpp"
#include "hyperlin/graph_calculus.hpp"

#include <random>
#include <thread>

using namespace hyperlin;

namespace {

IntPolynomial poly(std::initializer_list<std::pair<int, long>> terms) {
  IntPolynomial out;
  for (auto [k, c] : terms) out.add_term(k, BigInt(c));
  return out;
}

SimpleGraph random_graph(std::mt19937_64& rng, int v, int max_edges) {
  const auto pairs = all_pairs(v);
  std::vector<std::size_t> idx(pairs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<std::size_t>(max_edges, pairs.size()) + 1));
  SimpleGraph g(v);
  for (int i = 0; i < e; ++i) g.add_edge(pairs[idx[i]].first, pairs[idx[i]].second);
  return g;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph out(g.vertex_count());
  for (auto [a, b] : g.edges()) out.add_edge(perm[a], perm[b]);
  return out;
}

}  // namespace

TEST_CASE("chromatic polynomials of small graphs") {
  const auto k3 = poly({{3, 1}, {2, -3}, {1, 2}});
  CHECK(chromatic_polynomial(SimpleGraph::complete(3)) == k3);
  CHECK(chromatic_polynomial(SimpleGraph::path(3)) == poly({{3, 1}, {2, -2}, {1, 1}}));
  CHECK(chromatic_polynomial(SimpleGraph(1)) == poly({{1, 1}}));
  CHECK(chromatic_via_whitney(SimpleGraph::complete(3)) == k3);
  CHECK(chromatic_via_whitney(SimpleGraph(4)) == poly({{4, 1}}));
  CHECK(chromatic_via_whitney(SimpleGraph::complete(2)) == poly({{2, 1}, {1, -1}}));
  CHECK(chromatic_via_partitions(SimpleGraph::complete(3)) == k3);
  CHECK(chromatic_via_partitions(SimpleGraph(2)) == poly({{2, 1}}));
  CHECK(chromatic_via_partitions(SimpleGraph::path(3)) == poly({{3, 1}, {2, -2}, {1, 1}}));
  // C_4: (λ-1)^4 + (λ-1).
  CHECK(chromatic_polynomial(SimpleGraph::cycle(4)) == poly({{4, 1}, {3, -4}, {2, 6}, {1, -3}}));
}

TEST_CASE("independent partition counts of P3") {
  const auto alpha = independent_partition_counts(SimpleGraph::path(3));
  REQUIRE(alpha.size() == 4);
  CHECK(alpha[0] == 0);
  CHECK(alpha[1] == 0);
  CHECK(alpha[2] == 1);  // {0,2},{1}
  CHECK(alpha[3] == 1);
}

TEST_CASE("three chromatic forms agree on every graph with at most 6 vertices") {
  for (int v = 1; v <= 6; ++v) {
    const auto pairs = all_pairs(v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto g = SimpleGraph::from_edge_mask(v, mask);
      const auto dc = chromatic_polynomial(g);
      REQUIRE(dc == chromatic_via_whitney(g));
      REQUIRE(dc == chromatic_via_partitions(g));
    }
  }
}

TEST_CASE("three chromatic forms agree on seeded random graphs up to 9 vertices") {
  std::mt19937_64 rng(20260301);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 9);
    const auto g = random_graph(rng, v, 22);
    const auto dc = chromatic_polynomial(g);
    CHECK(dc == chromatic_via_whitney(g));
    CHECK(dc == chromatic_via_partitions(g));
  }
}

TEST_CASE("chromatic polynomial counts proper colourings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 6);
    const auto g = random_graph(rng, v, 15);
    const auto p = chromatic_polynomial(g);
    for (int lambda = 0; lambda <= 4; ++lambda) CHECK(p.evaluate(BigInt(lambda)) == bf::colourings(g, lambda));
  }
}

TEST_CASE("Ursell function of complete graphs") {
  CHECK(ursell(SimpleGraph::complete(1)) == 1);
  CHECK(ursell(SimpleGraph::complete(2)) == -1);
  for (int m = 1; m <= 7; ++m) {
    const BigInt expected = (m % 2 ? 1 : -1) * factorial(m - 1);
    CHECK(ursell_complete(m) == expected);
    CHECK(connected_spanning_sum(SimpleGraph::complete(m)) == expected);
    CHECK(ursell(SimpleGraph::complete(m)) == expected);
  }
}

TEST_CASE("Ursell equals the linear chromatic coefficient and the spanning sum") {
  for (int v = 1; v <= 6; ++v) {
    const auto pairs = all_pairs(v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); mask += (v == 6 ? 7 : 1)) {
      const auto g = SimpleGraph::from_edge_mask(v, mask);
      if (!g.connected()) continue;
      const BigInt phi = ursell(g);
      REQUIRE(phi == chromatic_polynomial(g).coefficient(1));
      REQUIRE(phi == connected_spanning_sum(g));
      if (v <= 5) REQUIRE(phi == bf::ursell(g));
    }
  }
}

TEST_CASE("Ursell of a disconnected graph is an error") {
  CHECK_THROWS_AS(ursell(SimpleGraph(2)), DomainError);
  CHECK_THROWS_AS(ursell(SimpleGraph(0)), DomainError);
}

TEST_CASE("partition form of the Ursell function") {
  const auto k2 = lemma4_check(SimpleGraph::complete(2));
  CHECK(k2.holds());
  CHECK(k2.partition_side == -1);
  const auto k3 = lemma4_check(SimpleGraph::complete(3));
  CHECK(k3.holds());
  CHECK(k3.ursell_side == 2);
  for (int v = 1; v <= 5; ++v) {
    const auto pairs = all_pairs(v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto g = SimpleGraph::from_edge_mask(v, mask);
      if (g.connected()) REQUIRE(lemma4_check(g).holds());
    }
  }
  CHECK_THROWS_AS(lemma4_check(SimpleGraph(3)), DomainError);
  CHECK_THROWS_AS(lemma4_check(SimpleGraph::complete(8)), BudgetExceeded);
}

TEST_CASE("canonical form is invariant under relabelling and separates non-isomorphic graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 8);
    const auto g = random_graph(rng, v, 28);
    std::vector<int> perm(static_cast<std::size_t>(v));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
  CHECK_FALSE(canonical_form(SimpleGraph::path(4)) == canonical_form(SimpleGraph::cycle(4)));
  // Star and path on 4 vertices both have 3 edges.
  SimpleGraph star(4);
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  CHECK_FALSE(canonical_form(star) == canonical_form(SimpleGraph::path(4)));
  CHECK_THROWS_AS(canonical_form(SimpleGraph(9)), BudgetExceeded);
}

TEST_CASE("canonical forms on 5 vertices give the 34 isomorphism classes") {
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) classes.insert(canonical_form(SimpleGraph::from_edge_mask(5, mask)).code);
  CHECK(classes.size() == 34);
}

TEST_CASE("Ursell cache is consistent under concurrent use") {
  UrsellCache cache;
  std::vector<SimpleGraph> graphs;
  std::mt19937_64 rng(5);
  while (graphs.size() < 80) {
    auto g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 20);
    if (g.connected()) graphs.push_back(g);
  }
  std::vector<std::vector<BigInt>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (int rep = 0; rep < 3; ++rep)
        for (const auto& g : graphs) results[t].push_back(cache.get(g));
    });
  for (auto& th : pool) th.join();
  for (int t = 0; t < 4; ++t)
    for (std::size_t i = 0; i < results[t].size(); ++i) CHECK(results[t][i] == ursell(graphs[i % graphs.size()]));
  CHECK(cache.size() <= graphs.size());
}

TEST_CASE("cluster expansion for independent indicators is the log Taylor series") {
  for (int m = 1; m <= 3; ++m)
    for (int order = 1; order <= 5; ++order) CHECK(independent_cluster_expansion(m, order) == log_one_minus_taylor(m, order));
  const auto one = independent_cluster_expansion(1, 3);
  CHECK(one.at({1}) == Rational(-1));
  CHECK(one.at({2}) == Rational(-1, 2));
  CHECK(one.at({3}) == Rational(-1, 3));
  // No mixed monomials survive for independent indicators.
  for (const auto& [exps, c] : independent_cluster_expansion(2, 4)) CHECK(std::count(exps.begin(), exps.end(), 0) == 1);
}

TEST_CASE("simple graph helpers") {
  CHECK(SimpleGraph::complete(5).edge_count() == 10);
  CHECK(SimpleGraph::cycle(5).edge_count() == 5);
  CHECK(SimpleGraph(4).component_count() == 4);
  CHECK(SimpleGraph::path(4).independent(0b0101));
  CHECK_FALSE(SimpleGraph::path(4).independent(0b0011));
  CHECK_THROWS_AS(SimpleGraph(33), DomainError);
  SimpleGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
}
