#include "hbtensor/hbgraph.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>
#include <set>

namespace hbtensor {

HbGraph::HbGraph(std::vector<std::string> vertices, std::vector<Multiset> edges,
                 std::optional<std::vector<Rational>> weights)
    : HbGraph(make_universe(std::move(vertices)), std::move(edges), std::move(weights)) {}

HbGraph::HbGraph(UniversePtr vertices, std::vector<Multiset> edges, std::optional<std::vector<Rational>> weights)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), weights_(std::move(weights)) {
  if (!vertices_) vertices_ = make_universe({});
  for (auto& e : edges_) {
    if (!same_universe(e.universe(), vertices_)) {
      throw Error(ErrorKind::UniverseMismatch, "every hb-edge must be defined over the vertex set");
    }
    if (e.universe() != vertices_) e = Multiset(vertices_, e.entries());
  }
  if (weights_) {
    if (weights_->size() != edges_.size()) {
      throw Error(ErrorKind::DimensionMismatch, "weight count differs from edge count");
    }
    for (const auto& w : *weights_) {
      if (w <= 0) throw Error(ErrorKind::NonPositiveCoefficient, "edge weights must be positive");
    }
  }
}

HbGraph HbGraph::from_lists(std::vector<std::string> vertices,
                            const std::vector<std::vector<std::pair<std::string, Rational>>>& edges) {
  auto universe = make_universe(std::move(vertices));
  std::vector<Multiset> family;
  family.reserve(edges.size());
  for (const auto& e : edges) family.push_back(Multiset::from_ids(universe, e));
  return HbGraph(universe, std::move(family));
}

std::size_t HbGraph::vertex_index(std::string_view id) const {
  if (!vertices_->contains(id)) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
  return vertices_->index_of(id);
}

const Multiset& HbGraph::edge(std::size_t j) const {
  if (j >= edges_.size()) throw Error(ErrorKind::UnknownEdge, "edge index " + std::to_string(j) + " out of range");
  return edges_[j];
}

Rational HbGraph::weight(std::size_t j) const {
  edge(j);
  return weights_ ? (*weights_)[j] : Rational(1);
}

bool HbGraph::natural() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Multiset& e) { return e.natural(); });
}

bool HbGraph::has_repeated_edges() const {
  std::set<std::map<std::size_t, Rational>> seen;
  for (const auto& e : edges_) {
    if (!seen.insert(e.entries()).second) return true;
  }
  return false;
}

bool HbGraph::has_empty_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Multiset& e) { return e.empty(); });
}

HbGraph HbGraph::with_weights(std::optional<std::vector<Rational>> weights) const {
  return HbGraph(vertices_, edges_, std::move(weights));
}

bool operator==(const HbGraph& a, const HbGraph& b) {
  return same_universe(a.vertices_, b.vertices_) && a.edges_ == b.edges_ && a.weights_ == b.weights_;
}

namespace {

void check_vertex(const HbGraph& h, std::size_t v) {
  if (v >= h.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

Rational max_multiplicity(const HbGraph& h, std::size_t v) {
  check_vertex(h, v);
  Rational best = 0;
  for (const auto& e : h.edges()) best = std::max(best, e.mult(v));
  return best;
}

Rational order(const HbGraph& h) {
  Rational total = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) total += max_multiplicity(h, v);
  return total;
}

std::vector<std::size_t> isolated_vertices(const HbGraph& h) {
  std::vector<bool> covered(h.num_vertices(), false);
  for (const auto& e : h.edges()) {
    for (const auto& [v, m] : e.entries()) covered[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < covered.size(); ++v) {
    if (!covered[v]) out.push_back(v);
  }
  return out;
}

Rational m_degree(const HbGraph& h, std::size_t v) {
  check_vertex(h, v);
  Rational total = 0;
  for (const auto& e : h.edges()) total += e.mult(v);
  return total;
}

std::size_t degree(const HbGraph& h, std::size_t v) {
  check_vertex(h, v);
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(),
                                                [v](const Multiset& e) { return e.entries().contains(v); }));
}

namespace {

UniversePtr edge_labels(std::size_t p) {
  std::vector<std::string> ids;
  ids.reserve(p);
  for (std::size_t j = 1; j <= p; ++j) ids.push_back("e" + std::to_string(j));
  return make_universe(std::move(ids));
}

}  // namespace

Multiset hb_star(const HbGraph& h, std::size_t v) {
  check_vertex(h, v);
  std::map<std::size_t, Rational> star;
  for (std::size_t j = 0; j < h.size(); ++j) {
    Rational m = h.edge(j).mult(v);
    if (m != 0) star.emplace(j, std::move(m));
  }
  return Multiset(edge_labels(h.size()), std::move(star));
}

Rational m_range(const HbGraph& h) {
  if (h.size() == 0) throw Error(ErrorKind::EmptyEdgeFamily, "m-range of an hb-graph without edges");
  Rational best = h.edge(0).m_cardinality();
  for (const auto& e : h.edges()) best = std::max(best, e.m_cardinality());
  return best;
}

Rational m_corange(const HbGraph& h) {
  if (h.size() == 0) throw Error(ErrorKind::EmptyEdgeFamily, "m-co-range of an hb-graph without edges");
  Rational best = h.edge(0).m_cardinality();
  for (const auto& e : h.edges()) best = std::min(best, e.m_cardinality());
  return best;
}

bool is_k_m_uniform(const HbGraph& h, const Rational& k) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Multiset& e) { return e.m_cardinality() == k; });
}

bool is_k_m_regular(const HbGraph& h, const Rational& k) {
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (m_degree(h, v) != k) return false;
  }
  return true;
}

Rational IncidenceMatrix::row_sum(std::size_t i) const {
  Rational total = 0;
  for (std::size_t j = 0; j < cols_; ++j) total += at(i, j);
  return total;
}

Rational IncidenceMatrix::col_sum(std::size_t j) const {
  Rational total = 0;
  for (std::size_t i = 0; i < rows_; ++i) total += at(i, j);
  return total;
}

IncidenceMatrix IncidenceMatrix::transpose() const {
  IncidenceMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

IncidenceMatrix incidence_matrix(const HbGraph& h) {
  IncidenceMatrix m(h.num_vertices(), h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    for (const auto& [v, mult] : h.edge(j).entries()) m.at(v, j) = mult;
  }
  return m;
}

SupportHypergraph support_hypergraph(const HbGraph& h) {
  SupportHypergraph s{h.universe(), {}};
  s.hyperedges.reserve(h.size());
  for (const auto& e : h.edges()) s.hyperedges.push_back(e.support());
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> two_section(const SupportHypergraph& s) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& he : s.hyperedges) {
    for (std::size_t a = 0; a < he.size(); ++a) {
      for (std::size_t b = a + 1; b < he.size(); ++b) pairs.emplace(he[a], he[b]);
    }
  }
  return {pairs.begin(), pairs.end()};
}

HbGraph dual(const HbGraph& h) {
  auto dual_vertices = edge_labels(h.size());
  std::vector<Multiset> dual_edges;
  dual_edges.reserve(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    std::map<std::size_t, Rational> mult;
    for (std::size_t j = 0; j < h.size(); ++j) {
      Rational m = h.edge(j).mult(v);
      if (m != 0) mult.emplace(j, std::move(m));
    }
    dual_edges.emplace_back(dual_vertices, std::move(mult));
  }
  return HbGraph(dual_vertices, std::move(dual_edges));
}

namespace {

UniversePtr ordered_union(const UniversePtr& a, const UniversePtr& b) {
  if (same_universe(a, b)) return a;
  std::vector<std::string> ids = a->ids();
  for (const auto& id : b->ids()) {
    if (!a->contains(id)) ids.push_back(id);
  }
  return make_universe(std::move(ids));
}

}  // namespace

HbGraph hb_sum(const HbGraph& h1, const HbGraph& h2) {
  auto vertices = ordered_union(h1.universe(), h2.universe());
  std::vector<Multiset> edges;
  edges.reserve(h1.size() + h2.size());
  for (const auto& e : h1.edges()) edges.push_back(e.rebased(vertices));
  for (const auto& e : h2.edges()) edges.push_back(e.rebased(vertices));
  std::optional<std::vector<Rational>> weights;
  if (h1.weighted() || h2.weighted()) {
    weights.emplace();
    for (std::size_t j = 0; j < h1.size(); ++j) weights->push_back(h1.weight(j));
    for (std::size_t j = 0; j < h2.size(); ++j) weights->push_back(h2.weight(j));
  }
  return HbGraph(vertices, std::move(edges), std::move(weights));
}

bool is_direct(const HbGraph& h1, const HbGraph& h2) {
  auto vertices = ordered_union(h1.universe(), h2.universe());
  std::set<std::map<std::size_t, Rational>> first;
  for (const auto& e : h1.edges()) first.insert(e.rebased(vertices).entries());
  return std::none_of(h2.edges().begin(), h2.edges().end(),
                      [&](const Multiset& e) { return first.contains(e.rebased(vertices).entries()); });
}

CopyHypergraph numbered_copy_hypergraph(const HbGraph& h) {
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "numbered-copy hypergraph needs a natural hb-graph");
  CopyHypergraph out;
  std::vector<std::size_t> first_copy(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    first_copy[v] = out.vertices.size();
    unsigned copies = to_natural(max_multiplicity(h, v));
    for (unsigned c = 1; c <= copies; ++c) out.vertices.push_back({v, c});
  }
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> members;
    for (const auto& cv : numbered_copies(e).copies) members.push_back(first_copy[cv.element] + cv.copy - 1);
    out.edges.push_back(std::move(members));
  }
  return out;
}

bool are_k_adjacent(const HbGraph& h, const Multiset& vertices) {
  return std::any_of(h.edges().begin(), h.edges().end(),
                     [&](const Multiset& e) { return includes(e, vertices); });
}

bool are_estar_adjacent(const HbGraph& h, std::span<const std::size_t> vertices, std::size_t edge) {
  const Multiset& e = h.edge(edge);
  for (std::size_t v : vertices) {
    check_vertex(h, v);
    if (!e.entries().contains(v)) return false;
  }
  return true;
}

bool are_e_adjacent(const HbGraph& h, const Multiset& vertices, std::size_t edge) {
  const Multiset& e = h.edge(edge);
  return !vertices.empty() && includes(e, vertices);
}

bool are_incident(const HbGraph& h, std::size_t i, std::size_t j) {
  const auto& a = h.edge(i).entries();
  const auto& b = h.edge(j).entries();
  return std::any_of(a.begin(), a.end(), [&](const auto& entry) { return b.contains(entry.first); });
}

}  // namespace hbtensor
