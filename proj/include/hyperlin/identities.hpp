#pragma once

// The exact identity checks behind `hyperlin verify`.

#include <string>
#include <vector>

namespace hyperlin {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Σ over connected spanning subgraphs of K_m of (-1)^e equals (-1)^{m-1}(m-1)!, m = 1..max_m.
IdentityCheck check_ursell_complete(int max_m = 7);

/// The partition form of φ agrees with φ on every connected labelled graph with <= max_v vertices.
IdentityCheck check_lemma4(int max_v = 5);

/// Deletion–contraction, Whitney subset expansion and the independent-partition form give
/// the same chromatic polynomial on every labelled graph with <= max_v vertices.
IdentityCheck check_chromatic_agreement(int max_v = 6);

/// The cluster expansion for independent indicators equals the Taylor series of
/// Σ log(1 - q_i), for m <= max_m and order <= max_order.
IdentityCheck check_independent_case(int max_m = 3, int max_order = 5);

/// T∅_{D,k+1} = Σ_{|C|<=k} (-1)^{|C|} κ(C) for the complete 3-graph on n vertices.
IdentityCheck check_cumulant_cluster(int n, int max_k = 3, int threads = 1);

/// Exact oracle = inclusion–exclusion (Gray code and support-grouped) = hard-core form on
/// the complete 3-graph on n vertices (n <= 5).
IdentityCheck check_partition_forms(int n);

/// All of the above with the given sizes; `thorough` adds the n = 5 partition-form check.
std::vector<IdentityCheck> run_identity_suite(bool thorough, int threads = 1);

}  // namespace hyperlin
