#include "hyperlin/cli.hpp"

#include "hyperlin/asymptotics.hpp"
#include "hyperlin/errors.hpp"
#include "hyperlin/expansion.hpp"
#include "hyperlin/hypergraph.hpp"
#include "hyperlin/identities.hpp"
#include "hyperlin/moments.hpp"
#include "hyperlin/oracle.hpp"
#include "hyperlin/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace hyperlin {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Options {
  int n = 0;
  int r = 0;
  int k = 0;
  int i = 0;
  int max_p_power = 4;
  std::string p;
  std::string p_exponent;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  std::string output;
  std::string format = "json";
  std::string strategy = "both";
  std::string csv;
  std::string sweep_min;
  std::string sweep_max;
  int sweep_points = 20;
  int threads = 1;
  std::size_t max_items = EnumerationLimits{}.max_items;
  bool allow_partial = false;
  bool list = false;
  bool thorough = false;
};

// Everything that decides the result, echoed into the output. Thread count is
// execution detail and lives under "run".
Json config_json(const std::string& command, const Options& o, const CLI::App& sub) {
  Json c;
  c["command"] = command;
  auto given = [&](const char* name) {
    const CLI::Option* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("n")) c["n"] = o.n;
  if (given("r") || given("--r")) c["r"] = o.r;
  if (given("--k")) c["k"] = o.k;
  if (given("--i")) c["i"] = o.i;
  if (command == "series") {
    c["max_p_power"] = o.max_p_power;
    c["strategy"] = o.strategy;
  }
  if (given("--p")) c["p"] = o.p;
  if (given("--p-exponent")) c["p_exponent"] = o.p_exponent;
  if (given("--trials")) c["trials"] = o.trials;
  if (command == "montecarlo" || (command == "compare" && o.trials > 0)) c["seed"] = o.seed;
  if (given("--csv")) c["csv"] = o.csv;
  if (given("--sweep-min")) c["sweep_min"] = o.sweep_min;
  if (given("--sweep-max")) c["sweep_max"] = o.sweep_max;
  if (given("--sweep-points")) c["sweep_points"] = o.sweep_points;
  if (given("--list")) c["list"] = true;
  if (given("--thorough")) c["thorough"] = true;
  c["format"] = o.format;
  c["max_items"] = o.max_items;
  c["allow_partial"] = o.allow_partial;
  if (!o.output.empty()) c["output"] = o.output;
  return c;
}

Json rational_json(const Rational& q) {
  return Json::array({to_string(BigInt(numerator(q))), to_string(BigInt(denominator(q)))});
}

Json poly_json(const PPolynomial& poly) {
  Json j = Json::object();
  for (const auto& [power, c] : poly.terms()) j[std::to_string(power)] = rational_json(c);
  return j;
}

Json term_json(const SeriesTerm& t) {
  return {{"coeff_num", to_string(BigInt(numerator(t.coeff)))},
          {"coeff_den", to_string(BigInt(denominator(t.coeff)))},
          {"n_falling", t.n_falling},
          {"p_power", t.p_power}};
}

Json monomial_json(const MonomialTerm& t) {
  return {{"coeff_num", to_string(BigInt(numerator(t.coeff)))},
          {"coeff_den", to_string(BigInt(denominator(t.coeff)))},
          {"n_power", t.n_power},
          {"p_power", t.p_power}};
}

std::string poly_csv(const PPolynomial& poly, const std::string& prefix = "") {
  std::ostringstream os;
  for (const auto& [power, c] : poly.terms())
    os << prefix << power << ',' << BigInt(numerator(c)) << ',' << BigInt(denominator(c)) << '\n';
  return os.str();
}

Rational exact_p(const std::string& text) {
  if (text.empty()) throw DomainError("--p is required");
  if (!looks_like_fraction(text) && text.find_first_of(".eE") != std::string::npos) {
    throw DomainError("this command takes p as an exact rational (num/den), got the decimal '" + text + "'");
  }
  const Rational p = parse_rational(text);
  if (p <= 0 || p >= 1) throw DomainError("p must lie strictly between 0 and 1");
  return p;
}

// Decimal p, or p = n^{-a} from --p-exponent.
HighFloat float_p(const Options& o, bool allow_zero) {
  if (!o.p.empty() && !o.p_exponent.empty()) throw DomainError("give either --p or --p-exponent, not both");
  if (!o.p_exponent.empty()) {
    if (looks_like_fraction(o.p_exponent)) throw DomainError("--p-exponent takes a decimal");
    const HighFloat a = to_high(parse_decimal_exact(o.p_exponent));
    if (a <= 0) throw DomainError("--p-exponent must be positive");
    return pow(HighFloat(o.n), -a);
  }
  if (o.p.empty()) throw DomainError("--p or --p-exponent is required");
  if (looks_like_fraction(o.p)) {
    throw DomainError("this command takes p as a decimal, got the fraction '" + o.p + "'");
  }
  const Rational q = parse_decimal_exact(o.p);
  if ((allow_zero ? q < 0 : q <= 0) || q >= 1) throw DomainError("p must lie in (0, 1)");
  return to_high(q);
}

// Rational stand-in for a float p, exact to 30 significant digits.
Rational rational_from_high(const HighFloat& p) { return parse_decimal_exact(high_string(p, 30)); }

void require_instance(const Options& o) {
  if (o.r < 3) throw DomainError("r must be at least 3");
  if (o.n < o.r) throw DomainError("n must be at least r");
}

ExpansionOptions expansion_options(const Options& o) {
  ExpansionOptions e;
  e.threads = o.threads;
  e.limits.max_items = o.max_items;
  return e;
}

void reject_csv(const Options& o, const std::string& command) {
  if (o.format == "csv") throw DomainError("--format csv is not available for " + command);
}

struct Outcome {
  Json result;
  std::string csv;  // used when --format csv
  int code = kExitOk;
};

Outcome cmd_copies(const Options& o) {
  require_instance(o);
  Outcome out;
  const auto copies = enumerate_forbidden_copies(o.n, o.r);
  out.result["count"] = copies.size();
  if (o.list) {
    auto& list = out.result["copies"] = Json::array();
    for (const auto& c : copies) list.push_back({{"e1", c.e1}, {"e2", c.e2}, {"shared", c.t}});
  }
  std::ostringstream os;
  os << "e1,e2,shared\n";
  for (const auto& c : copies) {
    auto join = [](const Edge& e) {
      std::string s;
      for (std::size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i]);
      return s;
    };
    os << join(c.e1) << ',' << join(c.e2) << ',' << c.t << '\n';
  }
  out.csv = os.str();
  return out;
}

Outcome cmd_expand(const Options& o) {
  require_instance(o);
  if (o.k < 2) throw DomainError("--k must be at least 2 (T at k sums L_1 .. L_{k-1})");
  std::optional<Rational> p;
  if (!o.p.empty()) p = exact_p(o.p);
  const DependencyGraph d = dependency_graph_for(o.n, o.r);
  const PartialSeries series = L_terms_partial(d, o.k - 1, expansion_options(o));
  if (!series.complete && !o.allow_partial) {
    throw CapExceeded(series.cap_message, 0, static_cast<int>(series.by_order.size()));
  }
  Outcome out;
  PPolynomial T;
  auto& L = out.result["L"] = Json::object();
  std::ostringstream os;
  os << "order,p_power,coeff_num,coeff_den\n";
  for (std::size_t i = 0; i < series.by_order.size(); ++i) {
    L[std::to_string(i + 1)] = poly_json(series.by_order[i]);
    os << poly_csv(series.by_order[i], std::to_string(i + 1) + ",");
    T += series.by_order[i];
  }
  out.result["T"] = poly_json(T);
  out.result["complete"] = series.complete;
  out.result["completed_order"] = series.by_order.size();
  if (!series.complete) out.result["cap_message"] = series.cap_message;
  if (p) {
    const Rational value = T.evaluate(*p);
    out.result["T_at_p"] = {{"exact", to_string(value)}, {"approx", value.convert_to<double>()}};
  }
  out.csv = os.str();
  if (!series.complete) out.code = kExitCap;
  return out;
}

Outcome single_poly(const PPolynomial& poly) {
  Outcome out;
  out.result["polynomial"] = poly_json(poly);
  out.result["text"] = poly.to_string("p");
  out.csv = "p_power,coeff_num,coeff_den\n" + poly_csv(poly);
  return out;
}

Outcome cmd_delta(const Options& o) {
  require_instance(o);
  if (o.i < 1) throw DomainError("--i must be at least 1");
  return single_poly(delta(dependency_graph_for(o.n, o.r), o.i, expansion_options(o)));
}

Outcome cmd_cumulants(const Options& o) {
  require_instance(o);
  if (o.k < 1) throw DomainError("--k must be at least 1");
  if (o.k > kMaxCumulantSize) throw DomainError("--k is limited to " + std::to_string(kMaxCumulantSize));
  return single_poly(cumulant_series(dependency_graph_for(o.n, o.r), o.k, expansion_options(o)));
}

Outcome cmd_oracle(const Options& o) {
  require_instance(o);
  std::optional<Rational> p;
  if (!o.p.empty()) p = exact_p(o.p);
  const PPolynomial poly = exact_linearity_polynomial(o.n, o.r);
  if (!p) return single_poly(poly);
  Outcome out;
  const Rational value = poly.evaluate(*p);
  out.result["p"] = to_string(*p);
  out.result["probability"] = to_string(value);
  out.result["approx"] = value.convert_to<double>();
  out.csv = "p,probability,approx\n" + to_string(*p) + "," + to_string(value) + "," +
            std::to_string(value.convert_to<double>()) + "\n";
  return out;
}

Outcome cmd_series(const Options& o) {
  if (o.r != 3) throw DomainError("series is implemented for r = 3 only");
  if (o.max_p_power < 1 || o.max_p_power > kMaxSymbolicPower) {
    throw DomainError("--max-p-power must be in 1.." + std::to_string(kMaxSymbolicPower));
  }
  const ExpansionOptions e = expansion_options(o);
  SymbolicSeries s;
  if (o.strategy == "both") {
    s = symbolic_series(o.r, o.max_p_power, e);
  } else if (o.strategy == "structural") {
    s = symbolic_series(o.r, o.max_p_power, SeriesStrategy::structural, e);
  } else if (o.strategy == "interpolation") {
    s = symbolic_series(o.r, o.max_p_power, SeriesStrategy::interpolation, e);
  } else {
    throw DomainError("--strategy must be both, structural or interpolation");
  }
  Outcome out;
  auto& terms = out.result["terms"] = Json::array();
  std::ostringstream os;
  os << "coeff_num,coeff_den,n_falling,p_power\n";
  for (const auto& t : s.terms) {
    terms.push_back(term_json(t));
    os << BigInt(numerator(t.coeff)) << ',' << BigInt(denominator(t.coeff)) << ',' << t.n_falling << ','
       << t.p_power << '\n';
  }
  auto& origins = out.result["by_origin"] = Json::array();
  for (const auto& [origin, list] : s.by_origin) {
    Json item{{"cluster_size", origin.cluster_size}, {"polymer_count", origin.polymer_count}};
    auto& ts = item["terms"] = Json::array();
    for (const auto& t : list) ts.push_back(term_json(t));
    origins.push_back(std::move(item));
  }
  auto& lead = out.result["leading_terms"] = Json::array();
  for (const auto& m : asymptotic_collapse(s.terms)) lead.push_back(monomial_json(m));
  out.csv = os.str();
  return out;
}

Outcome cmd_montecarlo(const Options& o) {
  require_instance(o);
  reject_csv(o, "montecarlo");
  if (o.trials < 1) throw DomainError("--trials must be at least 1");
  const Rational p = rational_from_high(float_p(o, false));
  Outcome out;
  out.result = to_json(monte_carlo(o.n, o.r, p, o.trials, o.seed, o.threads));
  return out;
}

Outcome cmd_asymptotic(const Options& o) {
  require_instance(o);
  reject_csv(o, "asymptotic");
  const HighFloat p = float_p(o, true);
  Outcome out;
  out.result["p"] = high_string(p);
  out.result["corollary3"] = o.r == 3 ? to_json(corollary3_log(o.n, p)) : Json(nullptr);
  out.result["mckay_tian"] = to_json(mckay_tian_log(o.n, o.r, p));
  return out;
}

std::string cell(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return "";
  std::ostringstream os;
  os << std::setprecision(17) << *v;
  return os.str();
}

Outcome cmd_compare(const Options& o) {
  require_instance(o);
  const Rational p = exact_p(o.p);
  const int k_max = o.k == 0 ? 4 : o.k;
  if (k_max < 2) throw DomainError("--k must be at least 2");
  const bool exact_feasible = BigInt(binomial(o.n, o.r)) <= kMaxExactEdges;
  const bool sweep = !o.csv.empty() || o.format == "csv";
  HighFloat sweep_lo, sweep_hi;
  if (sweep) {
    if (o.sweep_min.empty() || o.sweep_max.empty()) throw DomainError("a sweep needs --sweep-min and --sweep-max");
    if (looks_like_fraction(o.sweep_min) || looks_like_fraction(o.sweep_max)) {
      throw DomainError("sweep bounds are decimals");
    }
    sweep_lo = to_high(parse_decimal_exact(o.sweep_min));
    sweep_hi = to_high(parse_decimal_exact(o.sweep_max));
    if (!(sweep_lo > 0 && sweep_lo <= sweep_hi && sweep_hi < 1)) throw DomainError("need 0 < sweep-min <= sweep-max < 1");
    if (o.sweep_points < 1) throw DomainError("--sweep-points must be at least 1");
  }

  const DependencyGraph d = dependency_graph_for(o.n, o.r);
  const ExpansionOptions e = expansion_options(o);
  std::optional<PPolynomial> exact;
  if (exact_feasible) exact = exact_linearity_polynomial(o.n, o.r);
  // T at k = 2..k_max from one pass over the orders; orders past a cap stay empty.
  const PartialSeries series = L_terms_partial(d, k_max - 1, e);
  std::vector<std::optional<PPolynomial>> T(static_cast<std::size_t>(k_max + 1));
  {
    PPolynomial acc;
    for (std::size_t i = 0; i < series.by_order.size(); ++i) {
      acc += series.by_order[i];
      T[i + 2] = acc;
    }
  }
  std::vector<std::optional<PPolynomial>> cumulants(static_cast<std::size_t>(k_max));
  for (int k = 1; k < k_max; ++k) {
    try {
      cumulants[k] = cumulant_series(d, k, e);
    } catch (const CapExceeded&) {
      break;
    }
  }

  struct Row {
    std::string name;
    std::optional<HighFloat> log_value;
    std::string note;
  };
  auto log_of_rational = [](const Rational& q) -> std::optional<HighFloat> {
    if (q <= 0) return std::nullopt;
    return log(to_high(q));
  };
  auto rows_at = [&](const Rational& pq, const HighFloat& ph, bool with_mc, std::optional<McReport>& mc) {
    std::vector<Row> rows;
    if (exact) rows.push_back({"exact", log_of_rational(exact->evaluate(pq)), "log of the exact probability"});
    for (int k = 2; k <= k_max; ++k)
      if (T[k]) rows.push_back({"T" + std::to_string(k), to_high(T[k]->evaluate(pq)), "truncated cluster series"});
    for (int k = 1; k < k_max; ++k)
      if (cumulants[k]) {
        rows.push_back({"cumulants" + std::to_string(k), to_high(cumulants[k]->evaluate(pq)), "cumulant series"});
      }
    if (o.r == 3) rows.push_back({"corollary3", corollary3_log(o.n, ph).log_prob, ""});
    rows.push_back({"mckay_tian", mckay_tian_log(o.n, o.r, ph).log_prob, ""});
    if (with_mc) {
      mc = monte_carlo(o.n, o.r, pq, o.trials, o.seed, o.threads);
      std::optional<HighFloat> v;
      if (mc->hits > 0) v = log(HighFloat(mc->estimate));
      rows.push_back({"montecarlo", v, "log of the Monte Carlo estimate"});
    }
    return rows;
  };

  Outcome out;
  std::optional<McReport> mc;
  const auto rows = rows_at(p, to_high(p), o.trials > 0, mc);
  auto& table = out.result["table"] = Json::array();
  for (const auto& row : rows) {
    Json item{{"name", row.name}};
    item["log_prob"] = row.log_value ? Json(row.log_value->convert_to<double>()) : Json(nullptr);
    if (!row.note.empty()) item["note"] = row.note;
    table.push_back(std::move(item));
  }
  auto& gaps = out.result["gaps"] = Json::array();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!rows[a].log_value || !rows[b].log_value) continue;
      gaps.push_back({{"a", rows[a].name},
                      {"b", rows[b].name},
                      {"gap", abs(*rows[a].log_value - *rows[b].log_value).convert_to<double>()}});
    }
  if (mc) out.result["montecarlo"] = to_json(*mc);
  out.result["exact_feasible"] = exact_feasible;
  out.result["cluster_orders_completed"] = series.by_order.size();
  if (!series.complete) out.result["cluster_cap_message"] = series.cap_message;

  if (sweep) {
    std::ostringstream os;
    os << "p,log_exact,log_T2,log_T3,log_T4,log_corollary3,log_mckay,mc_estimate,mc_stderr\n";
    for (int s = 0; s < o.sweep_points; ++s) {
      const HighFloat t = o.sweep_points == 1 ? HighFloat(0) : HighFloat(s) / (o.sweep_points - 1);
      const HighFloat ph = exp(log(sweep_lo) + t * (log(sweep_hi) - log(sweep_lo)));
      const Rational pq = parse_decimal_exact(high_string(ph, 12));
      std::optional<McReport> point_mc;
      const auto point = rows_at(pq, to_high(pq), o.trials > 0, point_mc);
      auto find = [&](const std::string& name) -> std::optional<double> {
        for (const auto& r : point)
          if (r.name == name && r.log_value) return r.log_value->convert_to<double>();
        return std::nullopt;
      };
      os << high_string(to_high(pq), 12) << ',' << cell(find("exact")) << ',' << cell(find("T2")) << ','
         << cell(find("T3")) << ',' << cell(find("T4")) << ',' << cell(find("corollary3")) << ','
         << cell(find("mckay_tian")) << ',';
      if (point_mc) os << cell(point_mc->estimate) << ',' << cell(point_mc->std_error);
      else os << ',';
      os << '\n';
    }
    out.csv = os.str();
    if (!o.csv.empty()) {
      std::ofstream f(o.csv);
      if (!f) throw DomainError("cannot write " + o.csv);
      f << out.csv;
    }
  }
  return out;
}

Outcome cmd_verify(const Options& o) {
  reject_csv(o, "verify");
  Outcome out;
  auto& checks = out.result["checks"] = Json::array();
  bool all = true;
  for (const auto& c : run_identity_suite(o.thorough, o.threads)) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  out.result["all_passed"] = all;
  if (!all) out.code = kExitIdentityFailure;
  return out;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"tool", kToolName}, {"version", kToolVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

int default_threads() {
  if (const char* env = std::getenv("HYPERLIN_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_threads();
  CLI::App app{"Probability that a random uniform hypergraph is linear, by cluster expansion", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance) {
      sub->add_option("n", o.n, "number of vertices")->required();
      sub->add_option("r", o.r, "edge size")->required();
    }
    sub->add_option("--threads", o.threads, "worker threads (default $HYPERLIN_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-items", o.max_items, "enumeration cap");
    sub->add_option("--output,-o", o.output, "write the result here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--allow-partial", o.allow_partial, "write completed orders when a cap is hit");
  };

  std::map<std::string, std::function<Outcome()>> handlers;
  auto* copies = app.add_subcommand("copies", "count (and list) forbidden copies");
  common(copies, true);
  copies->add_flag("--list", o.list, "include every copy");
  handlers["copies"] = [&] { return cmd_copies(o); };

  auto* expand = app.add_subcommand("expand", "cluster-expansion terms L_1..L_{k-1} and T_k");
  common(expand, true);
  expand->add_option("--k", o.k, "truncation order")->required();
  expand->add_option("--p", o.p, "evaluate T_k at this rational p");
  handlers["expand"] = [&] { return cmd_expand(o); };

  auto* series = app.add_subcommand("series", "coefficients of [n]_a p^b for r = 3");
  common(series, false);
  series->add_option("--r", o.r, "edge size (3 only)")->default_val(3);
  series->add_option("--max-p-power", o.max_p_power, "largest p power kept")->default_val(4);
  series->add_option("--strategy", o.strategy, "both, structural or interpolation")->default_val("both");
  handlers["series"] = [&] { return cmd_series(o); };

  auto* delta_cmd = app.add_subcommand("delta", "sum of moments over polymers of one size");
  common(delta_cmd, true);
  delta_cmd->add_option("--i", o.i, "polymer size")->required();
  handlers["delta"] = [&] { return cmd_delta(o); };

  auto* cumulants = app.add_subcommand("cumulants", "alternating cumulant sum over polymers up to size k");
  common(cumulants, true);
  cumulants->add_option("--k", o.k, "largest polymer size")->required();
  handlers["cumulants"] = [&] { return cmd_cumulants(o); };

  auto* oracle = app.add_subcommand("oracle", "exact probability by enumeration (C(n,r) <= 24)");
  common(oracle, true);
  oracle->add_option("--p", o.p, "evaluate at this rational p");
  handlers["oracle"] = [&] { return cmd_oracle(o); };

  auto* mc = app.add_subcommand("montecarlo", "seeded Monte Carlo estimate");
  common(mc, true);
  mc->add_option("--p", o.p, "decimal edge probability");
  mc->add_option("--p-exponent", o.p_exponent, "use p = n^-a");
  mc->add_option("--trials", o.trials, "number of samples")->required();
  mc->add_option("--seed", o.seed, "generator seed")->default_val(1);
  handlers["montecarlo"] = [&] { return cmd_montecarlo(o); };

  auto* asym = app.add_subcommand("asymptotic", "closed-form estimates with validity flags");
  common(asym, true);
  asym->add_option("--p", o.p, "decimal edge probability");
  asym->add_option("--p-exponent", o.p_exponent, "use p = n^-a");
  handlers["asymptotic"] = [&] { return cmd_asymptotic(o); };

  auto* compare = app.add_subcommand("compare", "all estimates side by side, with an optional CSV sweep over p");
  common(compare, true);
  compare->add_option("--p", o.p, "rational edge probability")->required();
  compare->add_option("--k", o.k, "largest truncation order (default 4)");
  compare->add_option("--trials", o.trials, "Monte Carlo samples per point (0 skips)");
  compare->add_option("--seed", o.seed, "generator seed")->default_val(1);
  compare->add_option("--csv", o.csv, "write the sweep CSV here");
  compare->add_option("--sweep-min", o.sweep_min, "smallest p of the sweep (decimal)");
  compare->add_option("--sweep-max", o.sweep_max, "largest p of the sweep (decimal)");
  compare->add_option("--sweep-points", o.sweep_points, "number of geometrically spaced points");
  handlers["compare"] = [&] { return cmd_compare(o); };

  auto* verify = app.add_subcommand("verify", "run the exact identity suites");
  common(verify, false);
  verify->add_flag("--thorough", o.thorough, "add the n = 5 and n = 6 checks");
  handlers["verify"] = [&] { return cmd_verify(o); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("validation", e.what()).dump() << '\n';
    return kExitValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (o.format == "text" && command != "verify") {
    err << error_json("validation", "--format text is only available for verify").dump() << '\n';
    return kExitValidation;
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "verify" && o.format == "text") {
      o.format = "json";
      outcome = handlers[command]();
      o.format = "text";
    } else {
      outcome = handlers[command]();
    }
  } catch (const CapExceeded& e) {
    Json j = error_json("cap_exceeded", e.what());
    j["error"]["completed_order"] = e.completed_order();
    err << j.dump() << '\n';
    return kExitCap;
  } catch (const StrategyMismatch& e) {
    err << error_json("strategy_mismatch", e.what()).dump() << '\n';
    return kExitIdentityFailure;
  } catch (const BudgetExceeded& e) {
    err << error_json("budget_exceeded", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const ParseError& e) {
    err << error_json("validation", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << error_json("validation", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << '\n';
    return 1;
  }
  const auto duration =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (o.format == "csv") {
    text = outcome.csv;
  } else if (o.format == "text") {
    std::ostringstream os;
    for (const auto& c : outcome.result["checks"])
      os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "  ("
         << c["detail"].get<std::string>() << ")\n";
    text = os.str();
  } else {
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["config"] = config_json(command, o, *sub);
    doc["result"] = std::move(outcome.result);
    doc["reproducibility_hash"] = fnv1a_hex(doc.dump());
    doc["run"] = {{"threads", o.threads}, {"duration_ms", std::llround(duration)}};
    text = doc.dump(2) + "\n";
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << error_json("validation", "cannot write " + o.output).dump() << '\n';
      return kExitValidation;
    }
    f << text;
  }
  return outcome.code;
}

}  // namespace hyperlin
