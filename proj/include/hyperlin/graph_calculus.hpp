#pragma once

#include "hyperlin/numeric.hpp"
#include "hyperlin/polynomial.hpp"
#include "hyperlin/simple_graph.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace hyperlin {

/// Isomorphism-invariant key for graphs with up to 8 vertices: the lexicographically
/// largest upper-triangle adjacency code over all relabelings that respect the
/// degree-sorted vertex order.
struct CanonicalForm {
  int vertices = 0;
  std::uint64_t code = 0;
  bool operator==(const CanonicalForm&) const = default;
};

inline constexpr int kCanonicalMaxVertices = 8;

CanonicalForm canonical_form(const SimpleGraph& g);

/// Upper-triangle adjacency code under the identity labelling (v <= 11).
std::uint64_t labelled_code(const SimpleGraph& g);

/// Chromatic polynomial by deletion–contraction, memoised on minors.
IntPolynomial chromatic_polynomial(const SimpleGraph& g);

/// Σ_{E ⊆ E(g)} (-1)^{|E|} λ^{c(E)}. Needs e(g) <= 24.
IntPolynomial chromatic_via_whitney(const SimpleGraph& g);

/// α(g, k) for k = 0..v: the number of partitions of V(g) into k non-empty independent sets.
std::vector<BigInt> independent_partition_counts(const SimpleGraph& g);

/// Σ_k α(g,k) [λ]_k. Needs v(g) <= 10.
IntPolynomial chromatic_via_partitions(const SimpleGraph& g);

/// Σ over connected spanning subgraphs H of g of (-1)^{e_H}, by direct enumeration
/// of edge subsets. Needs e(g) <= 24.
BigInt connected_spanning_sum(const SimpleGraph& g);

/// Ursell function of a connected graph: the linear coefficient of its chromatic
/// polynomial. Throws DomainError for disconnected input.
BigInt ursell(const SimpleGraph& g);

/// (-1)^{m-1} (m-1)!
BigInt ursell_complete(int m);

struct PartitionFormCheck {
  BigInt partition_side;  // Σ_π φ(K_|π|) Π 1[block independent]
  BigInt ursell_side;     // φ(g)
  bool holds() const { return partition_side == ursell_side; }
};

/// Needs g connected with at most 7 vertices.
PartitionFormCheck lemma4_check(const SimpleGraph& g);

/// Shared, read-mostly cache of Ursell values keyed by canonical form (graphs up to 8
/// vertices); larger graphs are computed on demand without caching.
class UrsellCache {
 public:
  BigInt get(const SimpleGraph& g);
  std::size_t size() const;

  static UrsellCache& global();

 private:
  struct KeyHash {
    std::size_t operator()(const CanonicalForm& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.code * 31u + static_cast<std::uint64_t>(k.vertices));
    }
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalForm, BigInt, KeyHash> values_;
};

/// Polynomial in the means q_1..q_m, keyed by exponent vectors.
using MeanPolynomial = std::map<std::vector<int>, Rational>;

/// Full cluster expansion of log P(no indicator fires) for m independent indicators
/// (edgeless dependency graph, singleton polymers), truncated at total size max_order.
/// Sums over ordered tuples of polymers, repeats allowed, of φ(𝔾)/|γ|! Π (-q_i).
MeanPolynomial independent_cluster_expansion(int m, int max_order);

/// Σ_i Σ_{k<=max_order} -q_i^k / k, the Taylor series of Σ_i log(1 - q_i).
MeanPolynomial log_one_minus_taylor(int m, int max_order);

}  // namespace hyperlin
