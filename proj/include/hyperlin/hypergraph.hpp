#pragma once

#include "hyperlin/numeric.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperlin {

/// An r-set of 1-based vertex labels, kept sorted ascending.
using Edge = std::vector<int>;

/// Uniform hypergraph on vertices {1..n}. Edges are validated on construction and
/// stored in lexicographic order, so two hypergraphs with the same edge set compare equal.
class Hypergraph {
 public:
  Hypergraph(int n, int r, std::vector<Edge> edges = {});

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_;
  int r_;
  std::vector<Edge> edges_;
};

/// An unordered pair of r-edges sharing t vertices, 2 <= t <= r-1. Stored with e1 < e2.
struct ForbiddenCopy {
  Edge e1;
  Edge e2;
  int t = 0;

  /// e1 ∪ e2, sorted.
  std::vector<int> span() const;

  bool operator==(const ForbiddenCopy&) const = default;
  auto operator<=>(const ForbiddenCopy& o) const { return std::tie(e1, e2) <=> std::tie(o.e1, o.e2); }
};

int intersection_size(const Edge& a, const Edge& b);

/// All r-subsets of {1..n} in lexicographic order.
std::vector<Edge> all_r_subsets(int n, int r);

/// Every forbidden copy in the complete r-graph on [n], in canonical (lexicographic) order.
/// Throws DomainError unless n >= r >= 3.
std::vector<ForbiddenCopy> enumerate_forbidden_copies(int n, int r);

/// True iff every pair of distinct edges shares at most one vertex.
bool is_linear(const Hypergraph& h);

struct FamilyDensities {
  Rational m_star;
  Rational d;
};

/// m⋆(𝓕) and d(𝓕) for the forbidden family of r-graphs, by brute-force minimisation
/// over all sub-hypergraphs of every member.
FamilyDensities family_densities(int r);

/// Text fixture format: first line "n r", then one edge per line. Blank lines and lines
/// starting with '#' are ignored. Errors carry the 1-based line number.
Hypergraph parse_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace hyperlin
