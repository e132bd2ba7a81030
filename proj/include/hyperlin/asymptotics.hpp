#pragma once

// Closed-form log-probability estimates for linearity, evaluated in high precision.

#include "hyperlin/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperlin {

enum class Regime { mckay_small, mckay_mid, corollary3 };

std::string regime_name(Regime regime);

/// Size of a term the formula leaves out. Reported next to the estimate, never added.
struct ErrorMagnitude {
  std::string term;
  HighFloat value;
};

struct AsymptoticEstimate {
  HighFloat log_prob;
  Regime regime = Regime::corollary3;
  bool valid = false;
  /// Which hypothesis on p was tested and how it came out.
  std::string diagnostic;
  /// Distance to the regime boundary in the units of the diagnostic; empty when p = 0.
  std::optional<HighFloat> margin;
  std::vector<ErrorMagnitude> unmodeled;
};

/// -(1/4)n^4p^2 + (2/3)n^5p^3 - (55/24)n^6p^4 + (3/2)n^3p^2 for r = 3, valid for
/// p = o(n^{-7/5}). margin = log_n(1/p) - 7/5, so margin >= 0 means p <= n^{-7/5}.
AsymptoticEstimate corollary3_log(long long n, const HighFloat& p);

/// Main terms of the McKay–Tian estimates in their two ranges, with x = p C(n,r):
///   x <= n/r^2:            -([r]_2^2 / 4n^2) x^2
///   n/r^2 < x:             the above + ((3r-5)[r]_2^3 / 6n^4) x^3, valid while x < n^{3/2}/r^3.
/// margin is log(bound / x) against the bound that applies.
AsymptoticEstimate mckay_tian_log(long long n, int r, const HighFloat& p);

nlohmann::ordered_json to_json(const AsymptoticEstimate& estimate);

/// Decimal rendering with `digits` significant digits.
std::string high_string(const HighFloat& x, int digits = 30);

}  // namespace hyperlin
