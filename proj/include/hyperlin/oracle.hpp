#pragma once

#include "hyperlin/numeric.hpp"
#include "hyperlin/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace hyperlin {

inline constexpr int kMaxExactEdges = 24;

/// P(H_r(n,p) is linear) as an expanded polynomial in p:
/// Σ over linear edge sets E of p^{|E|} (1-p)^{C(n,r)-|E|}. Needs C(n,r) <= 24.
PPolynomial exact_linearity_polynomial(int n, int r);

/// Number of linear edge sets of each size, index = edge count.
std::vector<std::uint64_t> linear_subset_counts(int n, int r);

struct McReport {
  int n = 0;
  int r = 0;
  Rational p;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0;
  double std_error = 0;
  std::uint64_t seed = 0;
  std::string rng_name;
};

/// Trials are cut into fixed blocks of this many draws, each with its own generator.
inline constexpr std::uint64_t kTrialsPerChunk = 4096;
extern const char* const kRngName;

/// Seeded Monte Carlo estimate of P(linear). Block b runs mt19937_64 seeded with
/// splitmix64(seed, b); workers take whole blocks, so the report does not depend on
/// `threads`.
McReport monte_carlo(int n, int r, const Rational& p, std::uint64_t trials, std::uint64_t seed, int threads = 1);

nlohmann::ordered_json to_json(const McReport& report);

}  // namespace hyperlin
