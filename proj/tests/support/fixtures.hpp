#pragma once

#include "hbtensor/hbgraph.hpp"
#include "hbtensor/tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hbtensor::testing {

/// Seven vertices v1..v7 and the hb-edges
/// e1 = {v1^2, v4^2, v5}, e2 = {v2^3, v3}, e3 = {v3, v5^2}, e4 = {v6}.
inline HbGraph worked_example() {
  return HbGraph::from_lists({"v1", "v2", "v3", "v4", "v5", "v6", "v7"},
                             {{{"v1", 2}, {"v4", 2}, {"v5", 1}},
                              {{"v2", 3}, {"v3", 1}},
                              {{"v3", 1}, {"v5", 2}},
                              {{"v6", 1}}});
}

inline std::vector<std::string> vertex_ids(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

/// Natural hb-graph with 1..max_n vertices and 1..max_p distinct, non-empty
/// hb-edges whose multiplicities are at most max_mult.
inline HbGraph random_hbgraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_p, unsigned max_mult) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const std::size_t p = std::uniform_int_distribution<std::size_t>(1, max_p)(rng);
  auto universe = make_universe(vertex_ids(n));
  std::uniform_int_distribution<unsigned> mult(0, max_mult);
  std::bernoulli_distribution present(0.45);
  std::set<std::map<std::size_t, Rational>> seen;
  std::vector<Multiset> edges;
  for (std::size_t attempt = 0; edges.size() < p && attempt < 50 * p; ++attempt) {
    std::map<std::size_t, Rational> m;
    for (std::size_t v = 0; v < n; ++v) {
      if (present(rng)) {
        unsigned k = mult(rng);
        if (k) m.emplace(v, k);
      }
    }
    if (m.empty()) m.emplace(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), 1 + mult(rng) % max_mult);
    if (seen.insert(m).second) edges.emplace_back(universe, std::move(m));
  }
  return HbGraph(universe, std::move(edges));
}

/// Distinct hyperedges of size 1..max_k over 1..max_n vertices.
inline HbGraph random_hypergraph(std::mt19937_64& rng, std::size_t max_n, std::size_t max_k, bool uniform = false) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(std::min<std::size_t>(2, max_n), max_n)(rng);
  const std::size_t k_cap = std::min(max_k, n);
  const std::size_t k_uniform = std::uniform_int_distribution<std::size_t>(1, k_cap)(rng);
  const std::size_t p = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  auto universe = make_universe(vertex_ids(n));
  std::vector<std::size_t> order(n);
  std::set<std::vector<std::size_t>> seen;
  std::vector<Multiset> edges;
  for (std::size_t attempt = 0; edges.size() < p && attempt < 100; ++attempt) {
    const std::size_t k = uniform ? k_uniform : std::uniform_int_distribution<std::size_t>(1, k_cap)(rng);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> members(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(members.begin(), members.end());
    if (!seen.insert(members).second) continue;
    std::map<std::size_t, Rational> m;
    for (std::size_t v : members) m.emplace(v, 1);
    edges.emplace_back(universe, std::move(m));
  }
  return HbGraph(universe, std::move(edges));
}

/// Multiset with multiplicities in {0, 1/2, 1, ..., max} over the universe.
inline Multiset random_multiset(std::mt19937_64& rng, const UniversePtr& universe, unsigned max_halves) {
  std::uniform_int_distribution<unsigned> halves(0, max_halves);
  std::map<std::size_t, Rational> m;
  for (std::size_t i = 0; i < universe->size(); ++i) m.emplace(i, Rational(halves(rng), 2));
  return Multiset(universe, std::move(m));
}

/// Every logical entry of t, by explicit permutation of each stored tuple.
/// Independent of the multinomial shortcuts used by the library.
inline std::map<IndexTuple, Rational> brute_force_expand(const SymTensor& t) {
  std::map<IndexTuple, Rational> all;
  for (const auto& [idx, value] : t.entries()) {
    std::vector<std::size_t> slots(idx.size());
    for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = k;
    do {
      IndexTuple perm;
      for (std::size_t k : slots) perm.push_back(idx[k]);
      all[perm] = value;  // repeated slot permutations map to the same tuple
    } while (std::next_permutation(slots.begin(), slots.end()));
  }
  return all;
}

inline std::vector<Rational> brute_force_row_sums(const SymTensor& t) {
  std::vector<Rational> sums(t.dim());
  for (const auto& [idx, value] : brute_force_expand(t)) sums[idx.front()] += value;
  return sums;
}

}  // namespace hbtensor::testing

#include "hbtensor/paths.hpp"

namespace hbtensor::testing {

/// Membership of concrete copy vertices in each hb-edge of the
/// numbered-copy hypergraph.
struct CopyOracle {
  explicit CopyOracle(const HbGraph& h) : hypergraph(numbered_copy_hypergraph(h)) {
    members.resize(hypergraph.edges.size());
    for (std::size_t j = 0; j < hypergraph.edges.size(); ++j) {
      for (std::size_t k : hypergraph.edges[j]) members[j].insert(hypergraph.vertices[k]);
    }
  }

  /// Counts copy-vertex choices along p: each position picks a concrete
  /// copy, extremities must lie in their edge and interior copies in both
  /// (strict) or either (large) of the adjacent edges. 0 when none exists.
  BigInt count(const MPath& p) const {
    const std::size_t s = p.edges.size();
    auto admissible = [&](std::size_t pos, const CopyVertex& cv) {
      if (pos == 0) return members[p.edges[0]].count(cv) > 0;
      if (pos == s) return members[p.edges[s - 1]].count(cv) > 0;
      const bool in_prev = members[p.edges[pos - 1]].count(cv) > 0;
      const bool in_next = members[p.edges[pos]].count(cv) > 0;
      return p.kind == PathKind::strict ? in_prev && in_next : in_prev || in_next;
    };
    BigInt total = 0;
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos > s) {
        ++total;
        return;
      }
      for (const auto& cv : hypergraph.vertices) {
        if (cv.element == p.vertices[pos] && admissible(pos, cv)) walk(pos + 1);
      }
    };
    walk(0);
    return total;
  }

  CopyHypergraph hypergraph;
  std::vector<std::set<CopyVertex>> members;
};

inline BigInt brute_force_path_count(const HbGraph& h, const MPath& p) { return CopyOracle(h).count(p); }

/// Calls f on every alternation x0 e1 x1 ... es xs with 1 <= s <= max_length.
template <typename F>
void for_each_alternation(const HbGraph& h, std::size_t max_length, F&& f) {
  MPath p;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (!p.edges.empty()) f(p);
    if (remaining == 0) return;
    for (std::size_t e = 0; e < h.size(); ++e) {
      for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        p.edges.push_back(e);
        p.vertices.push_back(v);
        extend(remaining - 1);
        p.edges.pop_back();
        p.vertices.pop_back();
      }
    }
  };
  for (std::size_t x0 = 0; x0 < h.num_vertices(); ++x0) {
    p.vertices = {x0};
    p.edges.clear();
    extend(max_length);
  }
}

}  // namespace hbtensor::testing
