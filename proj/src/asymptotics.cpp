#include "hyperlin/asymptotics.hpp"

#include "hyperlin/errors.hpp"

#include <sstream>

namespace hyperlin {

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::mckay_small: return "mckay_small";
    case Regime::mckay_mid: return "mckay_mid";
    case Regime::corollary3: return "corollary3";
  }
  return "unknown";
}

namespace {

void check_p(const HighFloat& p) {
  if (p < 0 || p >= 1) throw DomainError("p must lie in [0, 1)");
}

std::string fixed(const HighFloat& x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace

AsymptoticEstimate corollary3_log(long long n, const HighFloat& p) {
  if (n < 3) throw DomainError("n must be at least 3");
  check_p(p);
  const HighFloat N(n);
  const HighFloat p2 = p * p;
  AsymptoticEstimate out;
  out.regime = Regime::corollary3;
  out.log_prob = -pow(N, 4) * p2 / 4 + HighFloat(2) / 3 * pow(N, 5) * p2 * p -
                 HighFloat(55) / 24 * pow(N, 6) * p2 * p2 + HighFloat(3) / 2 * pow(N, 3) * p2;
  const HighFloat threshold = HighFloat(7) / 5;
  if (p == 0) {
    out.valid = true;
    out.diagnostic = "p = 0; requires p = o(n^-7/5): holds";
  } else {
    const HighFloat exponent = -log(p) / log(N);
    const HighFloat margin = exponent - threshold;
    out.margin = margin;
    out.valid = margin >= 0;
    out.diagnostic = "p = n^-" + fixed(exponent) + "; requires p = o(n^-7/5): " +
                     (out.valid ? "holds" : "fails") + ", exponent margin " + fixed(margin);
  }
  // Largest orders the formula drops.
  out.unmodeled = {{"n^4 p^3", pow(N, 4) * p2 * p}, {"n^5 p^4", pow(N, 5) * p2 * p2}};
  return out;
}

AsymptoticEstimate mckay_tian_log(long long n, int r, const HighFloat& p) {
  if (r < 3) throw DomainError("r must be at least 3");
  if (n < r) throw DomainError("n must be at least r");
  check_p(p);
  const HighFloat N(n);
  const HighFloat R(r);
  const HighFloat pairs = R * (R - 1);  // [r]_2
  const HighFloat x = p * to_high(Rational(binomial(static_cast<int>(n), r)));
  const HighFloat small_bound = N / (R * R);
  const HighFloat mid_bound = pow(N, HighFloat(3) / 2) / pow(R, 3);

  AsymptoticEstimate out;
  out.log_prob = -pairs * pairs / (4 * N * N) * x * x;
  const HighFloat quadratic_error = pow(R, 6) / pow(N, 3) * x * x;
  if (x <= small_bound) {
    out.regime = Regime::mckay_small;
    out.valid = true;
    out.diagnostic = "p·C(n,r) = " + fixed(x) + " <= n/r^2 = " + fixed(small_bound);
    if (x > 0) out.margin = log(small_bound / x);
    out.unmodeled = {{"r^6 n^-3 C(n,r)^2 p^2", quadratic_error}};
  } else {
    out.regime = Regime::mckay_mid;
    out.log_prob += (3 * R - 5) * pow(pairs, 3) / (6 * pow(N, 4)) * pow(x, 3);
    out.valid = x < mid_bound;
    out.diagnostic = "n/r^2 < p·C(n,r) = " + fixed(x) + "; requires p·C(n,r) = o(n^{3/2}/r^3 = " +
                     fixed(mid_bound) + "): " + (out.valid ? "holds" : "fails");
    out.margin = log(mid_bound / x);
    out.unmodeled = {{"log^3(n/r^2) / sqrt(C(n,r) p)", pow(log(small_bound), 3) / sqrt(x)},
                     {"r^6 n^-3 C(n,r)^2 p^2", quadratic_error}};
  }
  return out;
}

std::string high_string(const HighFloat& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

nlohmann::ordered_json to_json(const AsymptoticEstimate& e) {
  nlohmann::ordered_json j;
  j["log_prob"] = e.log_prob.convert_to<double>();
  j["log_prob_hp"] = high_string(e.log_prob);
  j["regime"] = regime_name(e.regime);
  j["valid"] = e.valid;
  j["diagnostic"] = e.diagnostic;
  j["margin"] = e.margin ? nlohmann::ordered_json(e.margin->convert_to<double>()) : nlohmann::ordered_json(nullptr);
  auto& errs = j["unmodeled_error"] = nlohmann::ordered_json::array();
  for (const auto& m : e.unmodeled) errs.push_back({{"term", m.term}, {"magnitude", m.value.convert_to<double>()}});
  return j;
}

}  // namespace hyperlin
