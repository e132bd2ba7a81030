#include "hyperlin/identities.hpp"

#include "hyperlin/expansion.hpp"
#include "hyperlin/graph_calculus.hpp"
#include "hyperlin/hard_core.hpp"
#include "hyperlin/oracle.hpp"

namespace hyperlin {

IdentityCheck check_ursell_complete(int max_m) {
  IdentityCheck out{"ursell_complete_graphs", true, ""};
  for (int m = 1; m <= max_m; ++m) {
    const BigInt direct = connected_spanning_sum(SimpleGraph::complete(m));
    if (direct != ursell_complete(m)) {
      out.passed = false;
      out.detail = "K_" + std::to_string(m) + ": spanning sum " + to_string(direct) + ", expected " +
                   to_string(ursell_complete(m));
      return out;
    }
  }
  out.detail = "m = 1.." + std::to_string(max_m);
  return out;
}

IdentityCheck check_lemma4(int max_v) {
  IdentityCheck out{"ursell_partition_form", true, ""};
  long checked = 0;
  for (int v = 1; v <= max_v; ++v) {
    const int pairs = v * (v - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const SimpleGraph g = SimpleGraph::from_edge_mask(v, mask);
      if (!g.connected()) continue;
      const auto check = lemma4_check(g);
      ++checked;
      if (!check.holds()) {
        out.passed = false;
        out.detail = "v=" + std::to_string(v) + " mask=" + std::to_string(mask) + ": partition side " +
                     to_string(check.partition_side) + ", φ " + to_string(check.ursell_side);
        return out;
      }
    }
  }
  out.detail = std::to_string(checked) + " connected labelled graphs";
  return out;
}

IdentityCheck check_chromatic_agreement(int max_v) {
  IdentityCheck out{"chromatic_three_forms", true, ""};
  long checked = 0;
  for (int v = 1; v <= max_v; ++v) {
    const int pairs = v * (v - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const SimpleGraph g = SimpleGraph::from_edge_mask(v, mask);
      const IntPolynomial a = chromatic_polynomial(g);
      const IntPolynomial b = chromatic_via_whitney(g);
      const IntPolynomial c = chromatic_via_partitions(g);
      ++checked;
      if (!(a == b) || !(a == c)) {
        out.passed = false;
        out.detail = "v=" + std::to_string(v) + " mask=" + std::to_string(mask) + ": " + a.to_string("λ") +
                     " | " + b.to_string("λ") + " | " + c.to_string("λ");
        return out;
      }
    }
  }
  out.detail = std::to_string(checked) + " labelled graphs";
  return out;
}

IdentityCheck check_independent_case(int max_m, int max_order) {
  IdentityCheck out{"independent_case_log_series", true, ""};
  for (int m = 1; m <= max_m; ++m)
    for (int k = 1; k <= max_order; ++k)
      if (independent_cluster_expansion(m, k) != log_one_minus_taylor(m, k)) {
        out.passed = false;
        out.detail = "m=" + std::to_string(m) + " order=" + std::to_string(k);
        return out;
      }
  out.detail = "m <= " + std::to_string(max_m) + ", order <= " + std::to_string(max_order);
  return out;
}

IdentityCheck check_cumulant_cluster(int n, int max_k, int threads) {
  IdentityCheck out{"cumulant_cluster_n" + std::to_string(n), true, ""};
  const DependencyGraph d = dependency_graph_for(n, 3);
  ExpansionOptions options;
  options.threads = threads;
  for (int k = 1; k <= max_k; ++k) {
    const PPolynomial clusters = T_truncated(d, k + 1, options);
    const PPolynomial cumulants = cumulant_series(d, k, options);
    if (!(clusters == cumulants)) {
      out.passed = false;
      out.detail = "k=" + std::to_string(k) + ": " + clusters.to_string("p") + " vs " + cumulants.to_string("p");
      return out;
    }
  }
  out.detail = "k = 1.." + std::to_string(max_k);
  return out;
}

IdentityCheck check_partition_forms(int n) {
  IdentityCheck out{"partition_forms_n" + std::to_string(n), true, ""};
  const DependencyGraph d = dependency_graph_for(n, 3);
  const PPolynomial exact = exact_linearity_polynomial(n, 3);
  const std::vector<std::pair<std::string, PPolynomial>> forms = {
      {"inclusion-exclusion", inclusion_exclusion_polynomial(d)},
      {"inclusion-exclusion by support", inclusion_exclusion_by_support(d)},
      {"hard-core", hard_core_polynomial(d)},
  };
  for (const auto& [name, poly] : forms) {
    if (!(poly == exact)) {
      out.passed = false;
      out.detail = name + " = " + poly.to_string("p") + ", oracle = " + exact.to_string("p");
      return out;
    }
  }
  out.detail = "P(linear) = " + exact.to_string("p");
  return out;
}

std::vector<IdentityCheck> run_identity_suite(bool thorough, int threads) {
  std::vector<IdentityCheck> out;
  out.push_back(check_ursell_complete());
  out.push_back(check_lemma4());
  out.push_back(check_chromatic_agreement());
  out.push_back(check_independent_case());
  out.push_back(check_cumulant_cluster(5, 3, threads));
  out.push_back(check_partition_forms(4));
  if (thorough) {
    out.push_back(check_cumulant_cluster(6, 3, threads));
    out.push_back(check_partition_forms(5));
  }
  return out;
}

}  // namespace hyperlin
