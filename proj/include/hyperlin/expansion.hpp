#pragma once

#include "hyperlin/dependency.hpp"
#include "hyperlin/polynomial.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace hyperlin {

struct ExpansionOptions {
  EnumerationLimits limits;
  /// Worker threads; results are exact and independent of this value.
  int threads = 1;
  /// When set, only terms with p-power <= max_p_power are kept. Polymers whose copies use
  /// more hyperedges than that are skipped outright, since every cluster built on them has
  /// at least that many factors of p.
  std::optional<int> max_p_power;
};

/// L∅_{D,i}: sum over unordered disjoint-polymer clusters with ‖γ‖ = i of
/// φ(𝔾(γ)) (-1)^i Π μ(C).
PPolynomial L_term(const DependencyGraph& d, int i, const ExpansionOptions& options = {});

/// L∅_{D,1} .. L∅_{D,max_order}; enumerates order by order so that on CapExceeded the
/// exception's completed_order tells how far the result got.
std::vector<PPolynomial> L_terms(const DependencyGraph& d, int max_order, const ExpansionOptions& options = {});

struct PartialSeries {
  std::vector<PPolynomial> by_order;  // L∅_{D,1} .. L∅_{D,completed}
  bool complete = false;
  std::string cap_message;
};

/// Like L_terms, but returns what was finished instead of throwing on the cap.
PartialSeries L_terms_partial(const DependencyGraph& d, int max_order, const ExpansionOptions& options = {});

/// T∅_{D,k} = Σ_{i=1}^{k-1} L∅_{D,i}. Needs k >= 2.
PPolynomial T_truncated(const DependencyGraph& d, int k, const ExpansionOptions& options = {});

/// Δ_i(D) = Σ_{|C| = i} μ(C).
PPolynomial delta(const DependencyGraph& d, int i, const ExpansionOptions& options = {});

/// Σ_{C ∈ 𝒞(D), |C| <= k} (-1)^{|C|} κ(C).
PPolynomial cumulant_series(const DependencyGraph& d, int k, const ExpansionOptions& options = {});

/// Where a cluster contribution came from: ‖γ‖ and |γ|.
struct ClusterOrigin {
  int cluster_size = 0;
  int polymer_count = 0;
  auto operator<=>(const ClusterOrigin&) const = default;
};

using OriginSeries = std::map<ClusterOrigin, PPolynomial>;

/// Every disjoint-polymer cluster whose moment product has p-power <= max_p_power,
/// grouped by origin. Clusters of any size are included.
OriginSeries expansion_by_p_power(const DependencyGraph& d, int max_p_power, const ExpansionOptions& options = {});

PPolynomial total(const OriginSeries& series);

/// (‖γ‖, |γ|, p-power) -> Σ (-1)^{‖γ‖} φ(𝔾(γ)) over the clusters with that key.
using ClusterTally = std::map<std::tuple<int, int, int>, long long>;

/// Adds every disjoint-polymer cluster whose blocks partition `polymer` into `tally`,
/// skipping those whose moment exponent exceeds max_p_power.
void tally_clusters(const DependencyGraph& d, std::span<const int> polymer, std::optional<int> max_p_power,
                    ClusterTally& tally);

}  // namespace hyperlin
