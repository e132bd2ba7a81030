#pragma once

#include "hyperlin/dependency.hpp"
#include "hyperlin/polynomial.hpp"

#include <span>
#include <vector>

namespace hyperlin {

/// Number of distinct hyperedges used by a set of copies.
int distinct_edge_count(std::span<const int> copy_set, const DependencyGraph& d);

/// μ(C) = p^m, m = number of distinct hyperedges among the copies in C; μ(∅) = 1.
PPolynomial joint_moment(std::span<const int> copy_set, const DependencyGraph& d);
PPolynomial joint_moment(std::span<const int> copy_set, std::span<const ForbiddenCopy> copies);

inline constexpr int kMaxCumulantSize = 10;

/// κ(C) = Σ_{π ∈ Π(C)} (-1)^{|π|-1} (|π|-1)! Π_{P∈π} μ(P). Needs |C| <= 10.
PPolynomial joint_cumulant(std::span<const int> copy_set, const DependencyGraph& d);

/// Checks μ(∪ C_i) = Π μ(C_i) for pairwise disjoint polymers at D-distance > 1.
/// Throws PreconditionViolated when some pair overlaps or is adjacent.
bool factorisation_check(std::span<const Polymer> family, const DependencyGraph& d);

/// The bare comparison μ(∪ C_i) == Π μ(C_i), with no precondition check.
bool moments_factorise(std::span<const Polymer> family, const DependencyGraph& d);

}  // namespace hyperlin
