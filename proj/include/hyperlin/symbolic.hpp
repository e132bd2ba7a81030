#pragma once

// Series in n: coefficients of [n]_a p^b summed over all clusters with at most b_max
// distinct hyperedges, for the r = 3 link model.

#include "hyperlin/expansion.hpp"
#include "hyperlin/numeric.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hyperlin {

inline constexpr int kMaxSymbolicPower = 5;

/// coeff · [n]_{n_falling} · p^{p_power}
struct SeriesTerm {
  Rational coeff;
  int n_falling = 0;
  int p_power = 0;
  bool operator==(const SeriesTerm&) const = default;
};

/// coeff · n^{n_power} · p^{p_power}
struct MonomialTerm {
  Rational coeff;
  int n_power = 0;
  int p_power = 0;
  bool operator==(const MonomialTerm&) const = default;
};

enum class SeriesStrategy { structural, interpolation };

struct SymbolicSeries {
  int r = 3;
  int b_max = 0;
  std::vector<SeriesTerm> terms;  // sorted by (p_power, n_falling)
  std::map<ClusterOrigin, std::vector<SeriesTerm>> by_origin;
  bool operator==(const SymbolicSeries&) const = default;
};

class StrategyMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Structural: for v = 4 .. b_max + 2, walks every edge set of K_v^{(3)} with at most b_max
/// edges covering [v], every D-connected link set using exactly those edges, and every
/// partition of it into connected blocks. Each labelled structure on [v] is counted once
/// and carries C(n,v) = [n]_v / v! placements.
/// Interpolation: evaluates the same cluster sum on the complete 3-graph for
/// n = 0 .. 2 b_max + 1 and reads off falling-factorial coefficients from forward differences.
SymbolicSeries symbolic_series(int r, int b_max, SeriesStrategy strategy, const ExpansionOptions& options = {});

/// Runs both strategies and throws StrategyMismatch unless they agree term for term.
SymbolicSeries symbolic_series(int r, int b_max, const ExpansionOptions& options = {});

/// Signed Stirling numbers of the first kind: [n]_a = Σ_j s(a,j) n^j.
BigInt stirling_first(int a, int j);
/// Stirling numbers of the second kind: n^j = Σ_a S(j,a) [n]_a.
BigInt stirling_second(int j, int a);

std::vector<MonomialTerm> to_monomials(const std::vector<SeriesTerm>& terms);
std::vector<SeriesTerm> to_falling(const std::vector<MonomialTerm>& terms);

/// Keeps the monomials n^a p^b with a > threshold · b, i.e. those that do not vanish
/// when p = n^{-threshold}. Sorted by (p_power, n_power descending).
std::vector<MonomialTerm> asymptotic_collapse(const std::vector<SeriesTerm>& terms,
                                              const Rational& threshold = Rational(7, 5));

Rational evaluate(const std::vector<SeriesTerm>& terms, long long n, const Rational& p);

}  // namespace hyperlin
