#include "hyperlin/symbolic.hpp"

#include "hyperlin/errors.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace hyperlin {
namespace {

using TermKey = std::pair<int, int>;  // (p_power, n_falling)
using TermMap = std::map<TermKey, Rational>;

std::vector<SeriesTerm> flatten(const TermMap& m) {
  std::vector<SeriesTerm> out;
  for (const auto& [key, c] : m)
    if (c != 0) out.push_back({c, key.second, key.first});
  return out;
}

SymbolicSeries assemble(int r, int b_max, const std::map<ClusterOrigin, TermMap>& origins) {
  SymbolicSeries out;
  out.r = r;
  out.b_max = b_max;
  TermMap all;
  for (const auto& [origin, m] : origins) {
    auto list = flatten(m);
    if (list.empty()) continue;
    for (const auto& t : list) all[{t.p_power, t.n_falling}] += t.coeff;
    out.by_origin.emplace(origin, std::move(list));
  }
  out.terms = flatten(all);
  return out;
}

void validate(int r, int b_max) {
  if (r != 3) throw DomainError("symbolic series is implemented for r = 3 only");
  if (b_max < 1) throw DomainError("max p-power must be >= 1");
  if (b_max > kMaxSymbolicPower) {
    throw BudgetExceeded("symbolic series supports max p-power up to " + std::to_string(kMaxSymbolicPower));
  }
}

SymbolicSeries structural(int b_max) {
  std::map<ClusterOrigin, TermMap> origins;
  // Every linked edge after the first adds at most one vertex.
  for (int v = 4; v <= b_max + 2; ++v) {
    const DependencyGraph d = dependency_graph_for(v, 3);
    const int edge_count = static_cast<int>(d.edges.size());
    const std::uint32_t all_vertices = (std::uint32_t{1} << v) - 1;
    std::vector<std::uint32_t> edge_vertices(static_cast<std::size_t>(edge_count), 0);
    for (int e = 0; e < edge_count; ++e)
      for (int x : d.edges[e]) edge_vertices[e] |= std::uint32_t{1} << (x - 1);

    ClusterTally tally;
    std::vector<int> chosen;
    std::vector<char> in_set(static_cast<std::size_t>(edge_count), 0);
    auto visit_edge_set = [&](std::uint32_t covered) {
      if (covered != all_vertices || chosen.size() < 2) return;
      std::vector<int> links;
      for (std::size_t c = 0; c < d.size(); ++c)
        if (in_set[d.copy_edges[c][0]] && in_set[d.copy_edges[c][1]]) links.push_back(static_cast<int>(c));
      const int L = static_cast<int>(links.size());
      if (L == 0 || L > 20) {
        if (L > 20) throw BudgetExceeded("too many links on one edge set");
        return;
      }
      std::vector<std::uint32_t> link_adj(static_cast<std::size_t>(L), 0);
      for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b)
          if (a != b && std::binary_search(d.adjacency[links[a]].begin(), d.adjacency[links[a]].end(), links[b]))
            link_adj[a] |= std::uint32_t{1} << b;
      std::vector<int> members;
      for (std::uint32_t s = 1; s < (std::uint32_t{1} << L); ++s) {
        // Connected?
        std::uint32_t reach = s & (~s + 1);
        for (std::uint32_t prev = 0; prev != reach;) {
          prev = reach;
          for (std::uint32_t m = reach; m; m &= m - 1) reach |= link_adj[std::countr_zero(m)] & s;
        }
        if (reach != s) continue;
        // Uses every chosen edge?
        std::vector<char> used(static_cast<std::size_t>(edge_count), 0);
        std::size_t distinct = 0;
        members.clear();
        for (std::uint32_t m = s; m; m &= m - 1) {
          const int c = links[std::countr_zero(m)];
          members.push_back(c);
          for (int e : d.copy_edges[c]) distinct += used[e]++ == 0;
        }
        if (distinct != chosen.size()) continue;
        tally_clusters(d, members, b_max, tally);
      }
    };
    auto grow = [&](auto&& self, int from, std::uint32_t covered) -> void {
      visit_edge_set(covered);
      if (static_cast<int>(chosen.size()) == b_max) return;
      for (int e = from; e < edge_count; ++e) {
        chosen.push_back(e);
        in_set[e] = 1;
        self(self, e + 1, covered | edge_vertices[e]);
        in_set[e] = 0;
        chosen.pop_back();
      }
    };
    grow(grow, 0, 0);

    const Rational placements_per_label = Rational(1) / Rational(factorial(v));
    for (const auto& [key, count] : tally) {
      const auto [size, blocks, power] = key;
      origins[{size, blocks}][{power, v}] += Rational(count) * placements_per_label;
    }
  }
  return assemble(3, b_max, origins);
}

SymbolicSeries interpolation(int b_max, const ExpansionOptions& options) {
  const int r = 3;
  const int v_max = b_max * (r - 1) + 1;
  // values[origin][b][n]
  std::map<ClusterOrigin, std::map<int, std::vector<Rational>>> values;
  std::vector<OriginSeries> per_n(static_cast<std::size_t>(v_max + 1));
  for (int n = r; n <= v_max; ++n) per_n[n] = expansion_by_p_power(dependency_graph_for(n, r), b_max, options);
  for (int n = 0; n <= v_max; ++n) {
    for (const auto& [origin, poly] : per_n[n]) {
      for (int b = 1; b <= b_max; ++b) {
        const Rational c = poly.coefficient(b);
        if (c == 0) continue;
        auto& row = values[origin][b];
        if (row.empty()) row.assign(static_cast<std::size_t>(v_max + 1), Rational(0));
        row[n] = c;
      }
    }
  }
  std::map<ClusterOrigin, TermMap> origins;
  for (auto& [origin, by_power] : values) {
    for (auto& [b, row] : by_power) {
      // Forward differences at 0: Δ^a f(0) / a! is the coefficient of [n]_a.
      std::vector<Rational> diff = row;
      for (int a = 0; a <= v_max; ++a) {
        const Rational c = diff[0] / Rational(factorial(a));
        if (c != 0) {
          if (a == 0) throw std::logic_error("interpolated series has a constant term");
          origins[origin][{b, a}] += c;
        }
        for (int i = 0; i + 1 < static_cast<int>(diff.size()); ++i) diff[i] = diff[i + 1] - diff[i];
        diff.pop_back();
      }
    }
  }
  return assemble(r, b_max, origins);
}

std::string describe(const SeriesTerm& t) {
  return to_string(t.coeff) + "·[n]_" + std::to_string(t.n_falling) + "·p^" + std::to_string(t.p_power);
}

}  // namespace

SymbolicSeries symbolic_series(int r, int b_max, SeriesStrategy strategy, const ExpansionOptions& options) {
  validate(r, b_max);
  return strategy == SeriesStrategy::structural ? structural(b_max) : interpolation(b_max, options);
}

SymbolicSeries symbolic_series(int r, int b_max, const ExpansionOptions& options) {
  validate(r, b_max);
  SymbolicSeries a = structural(b_max);
  SymbolicSeries b = interpolation(b_max, options);
  if (!(a == b)) {
    std::string msg = "structural and interpolated series disagree";
    const std::size_t k = std::min(a.terms.size(), b.terms.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (!(a.terms[i] == b.terms[i])) {
        msg += ": " + describe(a.terms[i]) + " vs " + describe(b.terms[i]);
        break;
      }
    }
    throw StrategyMismatch(msg);
  }
  return a;
}

BigInt stirling_first(int a, int j) {
  if (a < 0 || j < 0) throw DomainError("Stirling indices must be non-negative");
  // s(a+1, j) = s(a, j-1) - a s(a, j)
  std::vector<BigInt> row{1};
  for (int m = 0; m < a; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i + 1] += row[i];
      next[i] -= BigInt(m) * row[i];
    }
    row = std::move(next);
  }
  return j < static_cast<int>(row.size()) ? row[j] : BigInt(0);
}

BigInt stirling_second(int j, int a) {
  if (a < 0 || j < 0) throw DomainError("Stirling indices must be non-negative");
  // S(m+1, a) = a S(m, a) + S(m, a-1)
  std::vector<BigInt> row{1};
  for (int m = 0; m < j; ++m) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += BigInt(static_cast<long>(i)) * row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  return a < static_cast<int>(row.size()) ? row[a] : BigInt(0);
}

std::vector<MonomialTerm> to_monomials(const std::vector<SeriesTerm>& terms) {
  std::map<TermKey, Rational> acc;
  for (const auto& t : terms)
    for (int j = 0; j <= t.n_falling; ++j) {
      const BigInt s = stirling_first(t.n_falling, j);
      if (s != 0) acc[{t.p_power, j}] += t.coeff * Rational(s);
    }
  std::vector<MonomialTerm> out;
  for (const auto& [key, c] : acc)
    if (c != 0) out.push_back({c, key.second, key.first});
  return out;
}

std::vector<SeriesTerm> to_falling(const std::vector<MonomialTerm>& terms) {
  TermMap acc;
  for (const auto& t : terms)
    for (int a = 0; a <= t.n_power; ++a) {
      const BigInt s = stirling_second(t.n_power, a);
      if (s != 0) acc[{t.p_power, a}] += t.coeff * Rational(s);
    }
  return flatten(acc);
}

std::vector<MonomialTerm> asymptotic_collapse(const std::vector<SeriesTerm>& terms, const Rational& threshold) {
  std::vector<MonomialTerm> out;
  for (const auto& m : to_monomials(terms))
    if (Rational(m.n_power) > threshold * m.p_power) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const MonomialTerm& a, const MonomialTerm& b) {
    return std::tie(a.p_power, b.n_power) < std::tie(b.p_power, a.n_power);
  });
  return out;
}

Rational evaluate(const std::vector<SeriesTerm>& terms, long long n, const Rational& p) {
  Rational out = 0;
  for (const auto& t : terms) {
    Rational pb = 1;
    for (int i = 0; i < t.p_power; ++i) pb *= p;
    out += t.coeff * Rational(falling_factorial(n, t.n_falling)) * pb;
  }
  return out;
}

}  // namespace hyperlin
