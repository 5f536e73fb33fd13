#include "hbtensor/paths.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hbtensor {

namespace {

void check_ids(const HbGraph& h, const MPath& p) {
  if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) {
    throw Error(ErrorKind::InvalidPath, "an m-path needs s >= 1 edges and s + 1 vertices");
  }
  for (std::size_t v : p.vertices) {
    if (v >= h.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }
  for (std::size_t e : p.edges) {
    if (e >= h.size()) throw Error(ErrorKind::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
  }
}

// Multiplicity of interior vertex i (1 <= i < s) in e_i op e_{i+1}.
Rational junction(const HbGraph& h, const MPath& p, std::size_t i) {
  const Rational a = h.edge(p.edges[i - 1]).mult(p.vertices[i]);
  const Rational b = h.edge(p.edges[i]).mult(p.vertices[i]);
  return p.kind == PathKind::strict ? std::min(a, b) : std::max(a, b);
}

}  // namespace

bool validate_path(const HbGraph& h, const MPath& p) {
  check_ids(h, p);
  const std::size_t s = p.length();
  if (h.edge(p.edges.front()).mult(p.vertices.front()) == 0) return false;
  if (h.edge(p.edges.back()).mult(p.vertices.back()) == 0) return false;
  for (std::size_t i = 1; i < s; ++i) {
    if (junction(h, p, i) == 0) return false;
  }
  return true;
}

BigInt count_interior_choices(const HbGraph& h, const MPath& p) {
  if (!validate_path(h, p)) throw Error(ErrorKind::InvalidPath, "alternation is not an m-path of the requested kind");
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "path counting needs a natural hb-graph");
  BigInt count = 1;
  for (std::size_t i = 1; i < p.length(); ++i) count *= to_natural(junction(h, p, i));
  return count;
}

BigInt count_paths(const HbGraph& h, const MPath& p) {
  BigInt count = count_interior_choices(h, p);
  count *= to_natural(h.edge(p.edges.front()).mult(p.vertices.front()));
  count *= to_natural(h.edge(p.edges.back()).mult(p.vertices.back()));
  return count;
}

PathClosure classify(const MPath& p) {
  if (!p.vertices.empty() && p.vertices.front() == p.vertices.back()) return PathClosure::cycle;
  return PathClosure::open;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// BFS over the bipartite vertex / edge incidence structure of the support
// hypergraph; an m-path of length s crosses s edges.
std::vector<std::size_t> distances_from(const HbGraph& h, const std::vector<std::vector<std::size_t>>& incident,
                                        std::size_t source) {
  std::vector<std::size_t> dist(h.num_vertices(), kUnreached);
  std::vector<bool> edge_seen(h.size(), false);
  dist[source] = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      if (edge_seen[e]) continue;
      edge_seen[e] = true;
      for (const auto& [u, m] : h.edge(e).entries()) {
        if (dist[u] == kUnreached) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
  }
  return dist;
}

std::vector<std::vector<std::size_t>> incidence_lists(const HbGraph& h) {
  std::vector<std::vector<std::size_t>> incident(h.num_vertices());
  for (std::size_t j = 0; j < h.size(); ++j) {
    for (const auto& [v, m] : h.edge(j).entries()) incident[v].push_back(j);
  }
  return incident;
}

}  // namespace

std::optional<std::size_t> distance(const HbGraph& h, std::size_t x, std::size_t y) {
  if (x >= h.num_vertices() || y >= h.num_vertices()) {
    throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  }
  if (x == y) return 0;
  auto dist = distances_from(h, incidence_lists(h), x);
  if (dist[y] == kUnreached) return std::nullopt;
  return dist[y];
}

std::vector<std::vector<std::size_t>> connected_components(const HbGraph& h) {
  auto incident = incidence_lists(h);
  std::vector<bool> assigned(h.num_vertices(), false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (assigned[v]) continue;
    auto dist = distances_from(h, incident, v);
    std::vector<std::size_t> component;
    for (std::size_t u = 0; u < dist.size(); ++u) {
      if (dist[u] != kUnreached) {
        component.push_back(u);
        assigned[u] = true;
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

std::optional<std::size_t> diameter(const HbGraph& h) {
  auto incident = incidence_lists(h);
  std::size_t best = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto dist = distances_from(h, incident, v);
    for (std::size_t d : dist) {
      if (d == kUnreached) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const HbGraph& h) { return connected_components(h).size() <= 1; }

}  // namespace hbtensor
