#pragma once

// Untruncated forms of P(no forbidden copy): the alternating moment sum over all copy
// subsets, and the hard-core partition function over independent sets of polymers.

#include "hyperlin/dependency.hpp"
#include "hyperlin/polynomial.hpp"

namespace hyperlin {

inline constexpr int kMaxInclusionExclusionCopies = 34;
inline constexpr int kMaxSupportEdges = 24;
inline constexpr int kMaxHardCoreEdges = 16;

/// Σ_{S ⊆ V(D)} (-1)^{|S|} μ(S) by a Gray-code walk over every copy subset.
PPolynomial inclusion_exclusion_polynomial(const DependencyGraph& d);

/// The same sum grouped by the hyperedge union of S. Uses that the signed count of copy
/// subsets living inside an edge set F is [F contains no copy], then Möbius-inverts
/// over edge subsets.
PPolynomial inclusion_exclusion_by_support(const DependencyGraph& d);

/// Σ over independent sets U of the polymer compatibility graph of Π_{C∈U} (-1)^{|C|} μ(C).
/// Two polymers are compatible when their union is not D-connected, which for
/// connected polymers means their hyperedge supports are disjoint. Enumerates every
/// polymer, groups the signed weights by support and then sums over disjoint supports.
PPolynomial hard_core_polynomial(const DependencyGraph& d,
                                 const EnumerationLimits& limits = {std::size_t{1} << 32});

/// Literal version: lists all polymers, builds the compatibility graph and walks its
/// independent sets. Only for tiny D.
PPolynomial hard_core_polynomial_literal(const DependencyGraph& d, std::size_t max_polymers = 4096);

}  // namespace hyperlin
