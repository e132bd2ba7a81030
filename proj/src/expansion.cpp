#include "hyperlin/expansion.hpp"

#include "hyperlin/graph_calculus.hpp"
#include "hyperlin/moments.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace hyperlin {
namespace {

using Counts = ClusterTally;

void add_checked(long long& slot, long long value) {
  if (__builtin_add_overflow(slot, value, &slot)) throw std::overflow_error("cluster accumulator overflow");
}

void require_copies(const DependencyGraph& d) {
  if (d.copy_edges.size() != d.size()) {
    throw DomainError("moment computations need a dependency graph built from forbidden copies");
  }
}

template <class Fn>
void run_workers(int threads, Fn&& fn) {
  if (threads <= 1) {
    fn(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        fn(w, threads);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

int worker_count(const ExpansionOptions& o) { return o.threads < 1 ? 1 : o.threads; }

// Streams the polymers rooted at indices ≡ offset (mod stride) with their distinct
// hyperedge count. Shares one item counter across workers.
template <class Visit>
void walk_polymers(const DependencyGraph& d, int max_size, std::optional<int> max_edges, int offset, int stride,
                   std::atomic<std::size_t>& produced, std::size_t cap, Visit&& visit) {
  std::vector<int> edge_use(d.edges.size(), 0);
  int distinct = 0;
  auto on_add = [&](int w) {
    for (int e : d.copy_edges[w]) distinct += edge_use[e]++ == 0;
    if (max_edges && distinct > *max_edges) {
      for (int e : d.copy_edges[w]) distinct -= --edge_use[e] == 0;
      return false;
    }
    return true;
  };
  auto on_remove = [&](int w) {
    for (int e : d.copy_edges[w]) distinct -= --edge_use[e] == 0;
  };
  auto emit = [&](const std::vector<int>& members) {
    const std::size_t count = produced.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > cap) throw CapExceeded("polymer enumeration exceeded cap of " + std::to_string(cap), count - 1);
    visit(members, distinct);
  };
  grow_connected_sets(d.adjacency, max_size, on_add, on_remove, emit, offset, stride);
}

long long phi_of(const SimpleGraph& g) {
  thread_local std::unordered_map<std::uint64_t, long long> local;
  if (g.vertex_count() > kCanonicalMaxVertices) return ursell(g).convert_to<long long>();
  const std::uint64_t key = (static_cast<std::uint64_t>(g.vertex_count()) << 58) | labelled_code(g);
  if (auto it = local.find(key); it != local.end()) return it->second;
  const long long value = UrsellCache::global().get(g).convert_to<long long>();
  local.emplace(key, value);
  return value;
}

}  // namespace

void tally_clusters(const DependencyGraph& d, std::span<const int> polymer, std::optional<int> max_p_power,
                    ClusterTally& counts) {
  std::vector<int> members(polymer.begin(), polymer.end());
  std::sort(members.begin(), members.end());
  const LocalPolymer local(d, members);
  // Local hyperedge masks per member.
  std::vector<int> ids;
  for (int c : members) ids.insert(ids.end(), d.copy_edges[c].begin(), d.copy_edges[c].end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 64) throw BudgetExceeded("polymer spans more than 64 hyperedges");
  std::vector<std::uint64_t> edge_mask(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int e : d.copy_edges[members[i]]) {
      const auto pos = std::lower_bound(ids.begin(), ids.end(), e) - ids.begin();
      edge_mask[i] |= std::uint64_t{1} << pos;
    }
  }
  const int size = static_cast<int>(members.size());
  const long long sign = size % 2 ? -1 : 1;
  local.for_each_connected_partition([&](std::span<const std::uint32_t> blocks) {
    int power = 0;
    for (auto b : blocks) {
      std::uint64_t used = 0;
      for (std::uint32_t m = b; m; m &= m - 1) used |= edge_mask[std::countr_zero(m)];
      power += std::popcount(used);
    }
    if (max_p_power && power > *max_p_power) return;
    const SimpleGraph g = local.block_graph(blocks);
    if (!g.connected()) {
      throw std::logic_error("disjoint-polymer cluster with a connected union has a disconnected 𝔾");
    }
    add_checked(counts[{size, static_cast<int>(blocks.size()), power}], sign * phi_of(g));
  });
}

namespace {

Counts merge(std::vector<Counts>& parts) {
  Counts out;
  for (auto& part : parts)
    for (auto& [k, v] : part) add_checked(out[k], v);
  return out;
}

Counts cluster_counts(const DependencyGraph& d, int max_size, bool exact_size, std::optional<int> max_p_power,
                      const ExpansionOptions& options) {
  require_copies(d);
  const int threads = worker_count(options);
  std::vector<Counts> parts(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> produced{0};
  run_workers(threads, [&](int w, int stride) {
    walk_polymers(d, max_size, max_p_power, w, stride, produced, options.limits.max_items,
                  [&](const std::vector<int>& members, int) {
                    if (exact_size && static_cast<int>(members.size()) != max_size) return;
                    tally_clusters(d, members, max_p_power, parts[w]);
                  });
  });
  return merge(parts);
}

}  // namespace

PPolynomial L_term(const DependencyGraph& d, int i, const ExpansionOptions& options) {
  if (i < 1) throw DomainError("cluster order must be >= 1");
  PPolynomial out;
  for (const auto& [key, value] : cluster_counts(d, i, true, options.max_p_power, options)) {
    out.add_term(std::get<2>(key), Rational(value));
  }
  return out;
}

std::vector<PPolynomial> L_terms(const DependencyGraph& d, int max_order, const ExpansionOptions& options) {
  std::vector<PPolynomial> out;
  for (int i = 1; i <= max_order; ++i) {
    try {
      out.push_back(L_term(d, i, options));
    } catch (const CapExceeded& e) {
      throw CapExceeded(e.what(), e.reached(), i - 1);
    }
  }
  return out;
}

PartialSeries L_terms_partial(const DependencyGraph& d, int max_order, const ExpansionOptions& options) {
  PartialSeries out;
  for (int i = 1; i <= max_order; ++i) {
    try {
      out.by_order.push_back(L_term(d, i, options));
    } catch (const CapExceeded& e) {
      out.cap_message = e.what();
      return out;
    }
  }
  out.complete = true;
  return out;
}

PPolynomial T_truncated(const DependencyGraph& d, int k, const ExpansionOptions& options) {
  if (k < 2) throw DomainError("T∅_{D,k} needs k >= 2");
  PPolynomial out;
  for (const auto& term : L_terms(d, k - 1, options)) out += term;
  return out;
}

PPolynomial delta(const DependencyGraph& d, int i, const ExpansionOptions& options) {
  if (i < 1) throw DomainError("polymer size must be >= 1");
  require_copies(d);
  const int threads = worker_count(options);
  std::vector<std::vector<long long>> parts(static_cast<std::size_t>(threads),
                                            std::vector<long long>(static_cast<std::size_t>(2 * i) + 1, 0));
  std::atomic<std::size_t> produced{0};
  run_workers(threads, [&](int w, int stride) {
    walk_polymers(d, i, options.max_p_power, w, stride, produced, options.limits.max_items,
                  [&](const std::vector<int>& members, int edges) {
                    if (static_cast<int>(members.size()) == i) add_checked(parts[w][edges], 1);
                  });
  });
  PPolynomial out;
  for (const auto& part : parts)
    for (std::size_t m = 0; m < part.size(); ++m) out.add_term(static_cast<int>(m), Rational(part[m]));
  return out;
}

PPolynomial cumulant_series(const DependencyGraph& d, int k, const ExpansionOptions& options) {
  if (k < 1) throw DomainError("cumulant order must be >= 1");
  if (k > kMaxCumulantSize) throw BudgetExceeded("cumulant series limited to polymers of size 10");
  require_copies(d);
  const int threads = worker_count(options);
  std::vector<PPolynomial> parts(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> produced{0};
  run_workers(threads, [&](int w, int stride) {
    walk_polymers(d, k, std::nullopt, w, stride, produced, options.limits.max_items,
                  [&](const std::vector<int>& members, int) {
                    std::vector<int> sorted = members;
                    std::sort(sorted.begin(), sorted.end());
                    PPolynomial kappa = joint_cumulant(sorted, d);
                    if (sorted.size() % 2) kappa *= Rational(-1);
                    parts[w] += kappa;
                  });
  });
  PPolynomial out;
  for (const auto& p : parts) out += p;
  if (options.max_p_power) out = out.truncated(*options.max_p_power);
  return out;
}

OriginSeries expansion_by_p_power(const DependencyGraph& d, int max_p_power, const ExpansionOptions& options) {
  if (max_p_power < 1) throw DomainError("p-power bound must be >= 1");
  // A polymer of copies spanning b hyperedges has at most C(b,2) members.
  const int max_size = std::max(1, max_p_power * (max_p_power - 1) / 2);
  OriginSeries out;
  for (const auto& [key, value] : cluster_counts(d, max_size, false, max_p_power, options)) {
    const auto [size, count, power] = key;
    out[{size, count}].add_term(power, Rational(value));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

PPolynomial total(const OriginSeries& series) {
  PPolynomial out;
  for (const auto& [origin, poly] : series) out += poly;
  return out;
}

}  // namespace hyperlin
