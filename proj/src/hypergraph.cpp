#include "hyperlin/hypergraph.hpp"

#include "hyperlin/errors.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace hyperlin {
namespace {

void require_uniformity(int n, int r) {
  if (r < 3) throw DomainError("uniformity r must be >= 3, got " + std::to_string(r));
  if (n < r) throw DomainError("vertex count n must be >= r, got n=" + std::to_string(n));
}

void next_combination_lex(std::vector<Edge>& out, Edge& cur, int start, int n, int r) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  const int need = r - static_cast<int>(cur.size());
  for (int v = start; v <= n - need + 1; ++v) {
    cur.push_back(v);
    next_combination_lex(out, cur, v + 1, n, r);
    cur.pop_back();
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 1) throw DomainError("vertex count must be positive");
  if (r < 3) throw DomainError("uniformity r must be >= 3, got " + std::to_string(r));
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r) throw DomainError("edge does not have exactly r vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw DomainError("edge has repeated vertex");
    if (e.front() < 1 || e.back() > n) throw DomainError("edge vertex outside {1..n}");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw DomainError("duplicate edge");
  }
}

std::vector<int> ForbiddenCopy::span() const {
  std::vector<int> out;
  std::set_union(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(out));
  return out;
}

int intersection_size(const Edge& a, const Edge& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<Edge> all_r_subsets(int n, int r) {
  std::vector<Edge> out;
  Edge cur;
  cur.reserve(r);
  next_combination_lex(out, cur, 1, n, r);
  return out;
}

std::vector<ForbiddenCopy> enumerate_forbidden_copies(int n, int r) {
  require_uniformity(n, r);
  const auto sets = all_r_subsets(n, r);
  std::vector<ForbiddenCopy> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const int t = intersection_size(sets[i], sets[j]);
      if (t >= 2 && t <= r - 1) out.push_back({sets[i], sets[j], t});
    }
  }
  return out;
}

bool is_linear(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (intersection_size(es[i], es[j]) > 1) return false;
    }
  }
  return true;
}

FamilyDensities family_densities(int r) {
  if (r < 3) throw DomainError("uniformity r must be >= 3, got " + std::to_string(r));
  std::optional<Rational> m_star;
  std::optional<Rational> d;
  for (int t = 2; t <= r - 1; ++t) {
    // Member of the family: e1 = {0..r-1}, e2 = {0..t-1} ∪ {r..2r-t-1}.
    const int v_g = 2 * r - t;
    const int e_g = 2;
    std::uint32_t e1 = 0;
    std::uint32_t e2 = 0;
    for (int v = 0; v < r; ++v) e1 |= 1u << v;
    for (int v = 0; v < t; ++v) e2 |= 1u << v;
    for (int v = r; v < v_g; ++v) e2 |= 1u << v;
    const std::uint32_t edge_masks[2] = {e1, e2};

    std::optional<Rational> best;
    for (int edge_subset = 1; edge_subset < 4; ++edge_subset) {
      std::uint32_t covered = 0;
      int e_h = 0;
      for (int k = 0; k < 2; ++k) {
        if (edge_subset & (1 << k)) {
          covered |= edge_masks[k];
          ++e_h;
        }
      }
      for (std::uint32_t w = 0; w < (1u << v_g); ++w) {
        if ((w & covered) != covered) continue;
        const int v_h = __builtin_popcount(w);
        if (v_h >= v_g) continue;
        const Rational ratio(e_g - e_h, v_g - v_h);
        if (!best || ratio < *best) best = ratio;
      }
    }
    const Rational density(e_g, v_g);
    if (!m_star || *best < *m_star) m_star = *best;
    if (!d || density < *d) d = density;
  }
  return {*m_star, *d};
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> values;
    std::string token;
    while (ls >> token) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument("trailing");
        values.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(line_no, "not an integer: '" + token + "'");
      }
    }
    if (!header) {
      if (values.size() != 2) throw ParseError(line_no, "header must be 'n r'");
      if (values[0] < 1 || values[1] < 3 || values[1] > values[0]) {
        throw ParseError(line_no, "header requires n >= r >= 3");
      }
      header = {static_cast<int>(values[0]), static_cast<int>(values[1])};
      continue;
    }
    const auto [n, r] = *header;
    if (static_cast<int>(values.size()) != r) {
      throw ParseError(line_no, "edge must list exactly " + std::to_string(r) + " vertices");
    }
    Edge e;
    for (long long v : values) {
      if (v < 1 || v > n) throw ParseError(line_no, "vertex " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
      e.push_back(static_cast<int>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "edge repeats a vertex");
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (!header) throw ParseError(line_no + 1, "missing header 'n r'");
  return Hypergraph(header->first, header->second, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

}  // namespace hyperlin
