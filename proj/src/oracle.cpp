#include "hyperlin/oracle.hpp"

#include "hyperlin/errors.hpp"
#include "hyperlin/hypergraph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

namespace hyperlin {

const char* const kRngName = "mt19937_64, blocks of 4096 trials seeded by splitmix64(seed, block)";

namespace {

void validate_instance(int n, int r) {
  if (r < 3) throw DomainError("r must be at least 3");
  if (n < r) throw DomainError("n must be at least r");
}

int pair_index(int n, int a, int b) { return (a - 1) * n + (b - 1); }

}  // namespace

std::vector<std::uint64_t> linear_subset_counts(int n, int r) {
  validate_instance(n, r);
  const auto edges = all_r_subsets(n, r);
  const int total = static_cast<int>(edges.size());
  if (total > kMaxExactEdges) {
    throw BudgetExceeded("exact oracle needs C(n,r) <= 24, got " + std::to_string(total));
  }
  // Pair-cover masks over the C(n,2) vertex pairs.
  std::vector<int> pair_id(static_cast<std::size_t>(n * n), -1);
  int pairs = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pair_id[pair_index(n, a, b)] = pairs++;
  if (pairs > 64) throw BudgetExceeded("too many vertex pairs for the conflict mask");
  std::vector<std::uint64_t> cover(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t x = 0; x < edges[i].size(); ++x)
      for (std::size_t y = x + 1; y < edges[i].size(); ++y)
        cover[i] |= std::uint64_t{1} << pair_id[pair_index(n, edges[i][x], edges[i][y])];

  std::vector<std::uint64_t> counts(edges.size() + 1, 0);
  // Include/exclude each edge in turn; a branch survives while no pair is covered twice,
  // so every surviving leaf is a linear edge set.
  auto walk = [&](auto&& self, int next, std::uint64_t used, int size) -> void {
    if (next == total) {
      ++counts[size];
      return;
    }
    self(self, next + 1, used, size);
    if ((used & cover[next]) == 0) self(self, next + 1, used | cover[next], size + 1);
  };
  walk(walk, 0, 0, 0);
  return counts;
}

PPolynomial exact_linearity_polynomial(int n, int r) {
  const auto counts = linear_subset_counts(n, r);
  const int total = static_cast<int>(counts.size()) - 1;
  PPolynomial out;
  for (int e = 0; e <= total; ++e) {
    if (counts[e] == 0) continue;
    out += (PPolynomial::monomial(e, Rational(BigInt(counts[e]))) * one_minus_p_power(total - e));
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound), bound >= 1 (Lemire's multiply-and-reject).
std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(g()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(g()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Binomial(N, p) by inversion of the CDF; used only when N p is modest.
std::uint64_t binomial_inversion(std::mt19937_64& g, std::uint64_t N, double p) {
  const double q = 1 - p;
  const double ratio = p / q;
  double f = std::exp(static_cast<double>(N) * std::log1p(-p));
  double cdf = f;
  const double u = uniform01(g);
  std::uint64_t k = 0;
  while (u >= cdf && k < N) {
    f *= static_cast<double>(N - k) / static_cast<double>(k + 1) * ratio;
    ++k;
    cdf += f;
    if (f == 0 && cdf < u) break;  // numerical tail; stop at the current count
  }
  return k;
}

class Sampler {
 public:
  Sampler(int n, int r, double p) : n_(n), r_(r), p_(p), stamp_(static_cast<std::size_t>(n * n), 0) {
    choose_.assign(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(r + 1), 0));
    for (int a = 0; a <= n; ++a) {
      choose_[a][0] = 1;
      for (int b = 1; b <= std::min(a, r); ++b) {
        const std::uint64_t x = choose_[a - 1][b - 1];
        const std::uint64_t y = b <= a - 1 ? choose_[a - 1][b] : 0;
        if (__builtin_add_overflow(x, y, &choose_[a][b])) throw DomainError("C(n,r) too large for sampling");
      }
    }
    total_ = choose_[n][r];
    sparse_ = p < 0.25 && static_cast<double>(total_) * p <= 256.0;
    edge_.resize(static_cast<std::size_t>(r));
  }

  bool sparse() const noexcept { return sparse_; }

  bool linear_draw(std::mt19937_64& g) {
    ++trial_;
    if (trial_ == 0) {  // stamp wrap-around
      std::fill(stamp_.begin(), stamp_.end(), 0);
      trial_ = 1;
    }
    bool linear = true;
    if (sparse_) {
      const std::uint64_t k = binomial_inversion(g, total_, p_);
      // Floyd's algorithm: k distinct indices out of [0, total).
      chosen_.clear();
      for (std::uint64_t j = total_ - k; j < total_; ++j) {
        const std::uint64_t t = uniform_below(g, j + 1);
        const bool seen = std::find(chosen_.begin(), chosen_.end(), t) != chosen_.end();
        chosen_.push_back(seen ? j : t);
      }
      for (std::uint64_t index : chosen_) {
        unrank(index);
        linear = stamp_edge() && linear;
      }
    } else {
      // One Bernoulli draw per r-set, in colex order.
      for (std::uint64_t index = 0; index < total_; ++index) {
        if (uniform01(g) < p_) {
          unrank(index);
          linear = stamp_edge() && linear;
        }
      }
    }
    return linear;
  }

 private:
  // Colex unranking into 0-based vertices.
  void unrank(std::uint64_t index) {
    int top = n_;
    for (int b = r_; b >= 1; --b) {
      int c = b - 1;
      while (c + 1 < top && choose_[c + 1][b] <= index) ++c;
      index -= choose_[c][b];
      edge_[b - 1] = c;
      top = c;
    }
  }

  // Marks the vertex pairs of edge_; false when one was already covered this trial.
  bool stamp_edge() {
    bool fresh = true;
    for (int x = 0; x < r_; ++x)
      for (int y = x + 1; y < r_; ++y) {
        auto& s = stamp_[static_cast<std::size_t>(edge_[x] * n_ + edge_[y])];
        if (s == trial_) fresh = false;
        s = trial_;
      }
    return fresh;
  }

  int n_;
  int r_;
  double p_;
  std::uint64_t total_ = 0;
  bool sparse_ = false;
  std::vector<std::vector<std::uint64_t>> choose_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t trial_ = 0;
  std::vector<int> edge_;
  std::vector<std::uint64_t> chosen_;
};

}  // namespace

McReport monte_carlo(int n, int r, const Rational& p, std::uint64_t trials, std::uint64_t seed, int threads) {
  validate_instance(n, r);
  if (p <= 0 || p >= 1) throw DomainError("p must lie strictly between 0 and 1");
  if (trials < 1) throw DomainError("trials must be at least 1");
  const double pd = p.convert_to<double>();
  const std::uint64_t chunks = (trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
  const int workers = static_cast<int>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads < 1 ? 1 : threads, chunks)));

  std::vector<std::uint64_t> hits(static_cast<std::size_t>(workers), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      Sampler sampler(n, r, pd);
      for (std::uint64_t c = static_cast<std::uint64_t>(w); c < chunks; c += static_cast<std::uint64_t>(workers)) {
        std::mt19937_64 g(splitmix64(seed, c));
        const std::uint64_t begin = c * kTrialsPerChunk;
        const std::uint64_t end = std::min(trials, begin + kTrialsPerChunk);
        for (std::uint64_t t = begin; t < end; ++t) hits[w] += sampler.linear_draw(g);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  McReport out;
  out.n = n;
  out.r = r;
  out.p = p;
  out.trials = trials;
  for (auto h : hits) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1 - out.estimate) / static_cast<double>(trials));
  out.seed = seed;
  out.rng_name = kRngName;
  return out;
}

nlohmann::ordered_json to_json(const McReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["r"] = report.r;
  j["p_num"] = to_string(BigInt(numerator(report.p)));
  j["p_den"] = to_string(BigInt(denominator(report.p)));
  j["trials"] = report.trials;
  j["hits"] = report.hits;
  j["estimate"] = report.estimate;
  j["std_error"] = report.std_error;
  j["seed"] = report.seed;
  j["rng_name"] = report.rng_name;
  return j;
}

}  // namespace hyperlin
