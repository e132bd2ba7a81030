// One PASS/FAIL line per acceptance criterion, followed by indented detail lines.
// Exit status is nonzero when any criterion fails.

#include "brute_force.hpp"
#include "hyperlin/asymptotics.hpp"
#include "hyperlin/cli.hpp"
#include "hyperlin/expansion.hpp"
#include "hyperlin/hard_core.hpp"
#include "hyperlin/hypergraph.hpp"
#include "hyperlin/identities.hpp"
#include "hyperlin/oracle.hpp"
#include "hyperlin/symbolic.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hyperlin;
using Json = nlohmann::ordered_json;

namespace {

struct Report {
  bool pass = true;
  std::vector<std::string> lines;

  void item(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "BAD  ") + what);
  }
  void note(const std::string& what) { lines.push_back("     " + what); }
};

std::string str(const Rational& q) { return to_string(q); }

Rational rational_of(const Json& term) {
  return Rational(BigInt(term["coeff_num"].get<std::string>()), BigInt(term["coeff_den"].get<std::string>()));
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string without_run(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("run");
  return j.dump();
}

// ---- 1 ----
Report coefficient_reproduction() {
  Report r;
  const auto run = cli({"series", "--r", "3", "--max-p-power", "4"});
  if (run.code != 0) {
    r.item(false, "series command exited " + std::to_string(run.code) + ": " + run.err);
    return r;
  }
  const Json result = Json::parse(run.out)["result"];
  // Sum of [n]_a p^b coefficients over clusters whose size is in `sizes`.
  auto by_size = [&](std::vector<int> sizes, int a, int b) {
    Rational total = 0;
    for (const auto& o : result["by_origin"]) {
      if (std::find(sizes.begin(), sizes.end(), o["cluster_size"].get<int>()) == sizes.end()) continue;
      for (const auto& t : o["terms"])
        if (t["n_falling"] == a && t["p_power"] == b) total += rational_of(t);
    }
    return total;
  };
  auto expect = [&](const std::string& label, const Rational& got, const Rational& want) {
    r.item(got == want, label + ": got " + str(got) + ", expected " + str(want));
  };
  Rational p2_total = 0;
  int p2_terms = 0;
  for (const auto& t : result["terms"])
    if (t["p_power"] == 2) {
      ++p2_terms;
      if (t["n_falling"] == 4) p2_total = rational_of(t);
    }
  r.item(p2_terms == 1, "p^2 series has a single term");
  expect("p^2 [n]_4 total", p2_total, Rational(-1, 4));
  expect("p^3 [n]_5, clusters of size 2", by_size({2}, 5, 3), Rational(3, 4));
  expect("p^3 [n]_4, clusters of size 2", by_size({2}, 4, 3), Rational(1, 2));
  expect("p^3 [n]_5, clusters of size 3", by_size({3}, 5, 3), Rational(-1, 12));
  expect("p^4 [n]_6, clusters of size 3", by_size({3}, 6, 4), Rational(-3));
  expect("p^4 [n]_6, clusters of size 4", by_size({4}, 6, 4), Rational(13, 16));
  expect("p^4 [n]_6, clusters of size 5 and 6", by_size({5, 6}, 6, 4), Rational(-5, 48));
  expect("p^4 [n]_5, clusters of size 2", by_size({2}, 5, 4), Rational(-1, 4));

  std::vector<MonomialTerm> lead;
  for (const auto& t : result["leading_terms"])
    lead.push_back({rational_of(t), t["n_power"].get<int>(), t["p_power"].get<int>()});
  const std::vector<MonomialTerm> want{
      {Rational(-1, 4), 4, 2}, {Rational(3, 2), 3, 2}, {Rational(2, 3), 5, 3}, {Rational(-55, 24), 6, 4}};
  std::string shown;
  for (const auto& m : lead) shown += " " + str(m.coeff) + "*n^" + std::to_string(m.n_power) + "p^" + std::to_string(m.p_power);
  r.item(lead == want, "leading-power collapse:" + shown);
  return r;
}

// ---- 2 ----
Report strategy_cross_check() {
  Report r;
  for (int b : {2, 3, 4}) {
    const auto a = symbolic_series(3, b, SeriesStrategy::structural);
    const auto i = symbolic_series(3, b, SeriesStrategy::interpolation);
    r.item(a == i, "b_max = " + std::to_string(b) + ": " + std::to_string(a.terms.size()) + " terms, " +
                       std::to_string(a.by_origin.size()) + " cluster origins");
  }
  return r;
}

// ---- 3 ----
Report oracle_equivalence() {
  Report r;
  for (int n : {4, 5}) {
    const auto d = dependency_graph_for(n, 3);
    const auto exact = exact_linearity_polynomial(n, 3);
    r.item(hard_core_polynomial(d) == exact, "n = " + std::to_string(n) + ": hard-core form equals the oracle " + exact.to_string("p"));
    r.item(inclusion_exclusion_polynomial(d) == exact, "n = " + std::to_string(n) + ": inclusion-exclusion over all copy subsets equals the oracle");
  }
  const auto d6 = dependency_graph_for(6, 3);
  const auto exact6 = exact_linearity_polynomial(6, 3);
  const auto support6 = inclusion_exclusion_by_support(d6);
  const auto counts = bf::linear_counts(all_r_subsets(6, 3));
  std::mt19937_64 rng(6);
  int agree = 0;
  for (int t = 0; t < 10; ++t) {
    const long den = 2 + static_cast<long>(rng() % 9999);
    const Rational p(1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1)), den);
    Rational scan = 0;
    const int N = static_cast<int>(counts.size()) - 1;
    for (int e = 0; e <= N; ++e) {
      Rational term = counts[e];
      for (int i = 0; i < e; ++i) term *= p;
      for (int i = e; i < N; ++i) term *= 1 - p;
      scan += term;
    }
    const Rational value = exact6.evaluate(p);
    agree += value == scan && value == support6.evaluate(p);
  }
  r.item(agree == 10, "n = 6: oracle, an independent 2^20 subset scan and support-grouped inclusion-exclusion agree at " +
                          std::to_string(agree) + "/10 random rationals");
  return r;
}

// ---- 4 ----
Report cumulant_cluster() {
  Report r;
  for (int n : {5, 6}) {
    const auto d = dependency_graph_for(n, 3);
    for (int k = 1; k <= 3; ++k) {
      const auto lhs = T_truncated(d, k + 1);
      const auto rhs = cumulant_series(d, k);
      r.item(lhs == rhs, "n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": " + lhs.to_string("p"));
    }
  }
  return r;
}

// ---- 5 ----
Report identity_suite() {
  Report r;
  for (const auto& c : {check_ursell_complete(7), check_lemma4(5), check_chromatic_agreement(6)})
    r.item(c.passed, c.name + " (" + c.detail + ")");
  return r;
}

// ---- 6 ----
Report truncation_convergence() {
  Report r;
  const auto d = dependency_graph_for(6, 3);
  const Rational p(1, 1000);
  const HighFloat log_exact = log(to_high(exact_linearity_polynomial(6, 3).evaluate(p)));
  std::vector<HighFloat> gaps;
  for (int k = 2; k <= 4; ++k) {
    gaps.push_back(abs(log_exact - to_high(T_truncated(d, k).evaluate(p))));
    r.note("k = " + std::to_string(k) + ": gap " + high_string(gaps.back(), 8));
  }
  r.item(gaps[0] >= gaps[1] && gaps[1] >= gaps[2], "gap non-increasing over k = 2, 3, 4");
  const HighFloat delta5 = to_high(delta(d, 5).evaluate(p));
  r.item(gaps[2] < 10 * delta5, "gap at k = 4 below 10 * Delta_5 = " + high_string(10 * delta5, 8));
  return r;
}

// ---- 7 ----
Report monte_carlo_vs_closed_form() {
  Report r;
  const long long n = 50;
  const HighFloat ph = pow(HighFloat(n), -HighFloat("1.6"));
  const Rational p = parse_decimal_exact(high_string(ph, 30));
  const auto closed = corollary3_log(n, to_high(p));
  r.note("closed form " + high_string(closed.log_prob, 10) + " (" + closed.diagnostic + ")");
  const std::uint64_t seed = 20261014;
  bool ok = false;
  for (std::uint64_t trials : {std::uint64_t{100'000}, std::uint64_t{1'000'000}}) {
    const auto mc = monte_carlo(static_cast<int>(n), 3, p, trials, seed, 1);
    const double log_mc = std::log(mc.estimate);
    const double se_log = mc.std_error / mc.estimate;
    const double diff = log_mc - closed.log_prob.convert_to<double>();
    ok = std::abs(diff) <= 3 * se_log;
    std::ostringstream os;
    os << trials << " trials: log estimate " << log_mc << ", SE(log) " << se_log << ", difference " << diff << " = "
       << diff / se_log << " SE";
    r.note(os.str());
    if (ok) break;
  }
  r.item(ok, "Monte Carlo within 3 SE(log) of the closed form");
  return r;
}

// ---- 8 ----
Report density_formulas() {
  Report r;
  for (int u : {3, 4, 5}) {
    const auto f = family_densities(u);
    r.item(f.m_star == Rational(1, u - 2) && f.d == Rational(1, u - 1),
           "r = " + std::to_string(u) + ": m* = " + str(f.m_star) + ", d = " + str(f.d));
  }
  return r;
}

// ---- 9 ----
Report determinism() {
  Report r;
  const std::vector<std::vector<std::string>> configs{
      {"montecarlo", "20", "3", "--p", "0.01", "--trials", "50000", "--seed", "77"},
      {"expand", "6", "3", "--k", "4"},
  };
  for (const auto& base : configs) {
    const auto first = cli(base);
    if (first.code != 0) {
      r.item(false, base.front() + " exited " + std::to_string(first.code));
      continue;
    }
    const std::string reference = without_run(first.out);
    bool same = true;
    for (int rep = 0; rep < 2; ++rep) same = same && without_run(cli(base).out) == reference;
    for (const char* threads : {"1", "4", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--threads", threads});
      same = same && without_run(cli(args).out) == reference;
    }
    r.item(same, base.front() + ": identical across 3 repeats and thread counts 1, 4, 8 (hash " +
                     Json::parse(first.out)["reproducibility_hash"].get<std::string>() + ")");
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
      {"coefficient reproduction", coefficient_reproduction},
      {"strategy cross-check", strategy_cross_check},
      {"oracle equivalence", oracle_equivalence},
      {"cumulant-cluster identity", cumulant_cluster},
      {"identity suite", identity_suite},
      {"truncation convergence", truncation_convergence},
      {"Monte Carlo vs closed form", monte_carlo_vs_closed_form},
      {"density formulas", density_formulas},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    try {
      rep = criteria[i].second();
    } catch (const std::exception& e) {
      rep.item(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !rep.pass;
    std::ostringstream t;
    t.precision(3);
    t << secs;
    std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  [" << t.str() << " s]\n";
    for (const auto& line : rep.lines) std::cout << "        " << line << '\n';
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
