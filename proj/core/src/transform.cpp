#include "hbtensor/transform.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>

namespace hbtensor {

std::string_view to_string(Approach a) {
  switch (a) {
    case Approach::straightforward: return "straightforward";
    case Approach::silo: return "silo";
    case Approach::layered: return "layered";
  }
  return "unknown";
}

std::optional<Approach> parse_approach(std::string_view text) {
  if (text == "str" || text == "straightforward") return Approach::straightforward;
  if (text == "sil" || text == "silo") return Approach::silo;
  if (text == "lay" || text == "layered") return Approach::layered;
  return std::nullopt;
}

std::string null_vertex_id(Approach a, unsigned level) {
  const char* tag = a == Approach::layered ? "L" : "N";
  return std::string(kReservedPrefix) + tag + std::to_string(level);
}

namespace {

std::vector<Rational> constant_weights(std::size_t count, const Rational& value) {
  return std::vector<Rational>(count, value);
}

UniversePtr with_vertex(const HbGraph& h, const std::string& y) {
  if (h.universe()->contains(y)) throw Error(ErrorKind::VertexCollision, "vertex '" + y + "' already exists");
  std::vector<std::string> ids = h.vertices();
  ids.push_back(y);
  return make_universe(std::move(ids));
}

// Copies every edge onto the extended universe and sets y's multiplicity.
template <typename MultiplicityOf>
HbGraph append_vertex(const HbGraph& h, const std::string& y, MultiplicityOf multiplicity_of) {
  auto universe = with_vertex(h, y);
  const std::size_t y_index = universe->size() - 1;
  std::vector<Multiset> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    auto mult = e.entries();
    Rational m = multiplicity_of(e);
    if (m != 0) mult.emplace(y_index, std::move(m));
    edges.emplace_back(universe, std::move(mult));
  }
  return HbGraph(universe, std::move(edges), h.weights());
}

struct Levels {
  unsigned r_h = 0;
  std::vector<std::vector<std::size_t>> members;  // members[r - 1] = input edge indices
};

Levels split_by_cardinality(const HbGraph& h) {
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "decomposition needs a natural hb-graph");
  if (h.has_empty_edge()) throw Error(ErrorKind::EmptyEdge, "decomposition needs non-empty hb-edges");
  Levels levels;
  if (h.size() == 0) return levels;
  levels.r_h = to_natural(m_range(h));
  levels.members.resize(levels.r_h);
  for (std::size_t j = 0; j < h.size(); ++j) {
    levels.members[to_natural(h.edge(j).m_cardinality()) - 1].push_back(j);
  }
  return levels;
}

HbGraph select_edges(const HbGraph& h, const std::vector<std::size_t>& indices) {
  std::vector<Multiset> edges;
  std::optional<std::vector<Rational>> weights;
  if (h.weighted()) weights.emplace();
  for (std::size_t j : indices) {
    edges.push_back(h.edge(j));
    if (weights) weights->push_back(h.weight(j));
  }
  return HbGraph(h.universe(), std::move(edges), std::move(weights));
}

}  // namespace

HbGraph canonical_weighting(const HbGraph& h) { return h.with_weights(constant_weights(h.size(), 1)); }

HbGraph dilatation(const HbGraph& h, const Rational& c) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveCoefficient, "dilatation coefficient must be positive");
  std::vector<Rational> weights;
  weights.reserve(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) weights.push_back(h.weight(j) * c);
  return h.with_weights(std::move(weights));
}

HbGraph y_complement(const HbGraph& h, const std::string& y) {
  return y_complement(h, y, h.size() == 0 ? Rational(0) : m_range(h));
}

HbGraph y_complement(const HbGraph& h, const std::string& y, const Rational& target) {
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "y-complement needs a natural hb-graph");
  return append_vertex(h, y, [&](const Multiset& e) {
    Rational gap = target - e.m_cardinality();
    if (gap < 0) throw Error(ErrorKind::Precondition, "edge exceeds the complement target");
    return gap;
  });
}

HbGraph vertex_increase(const HbGraph& h, const std::string& y, unsigned alpha) {
  if (alpha == 0) throw Error(ErrorKind::NonPositiveCoefficient, "vertex-increase multiplicity must be positive");
  return append_vertex(h, y, [&](const Multiset&) { return Rational(alpha); });
}

HbGraph merge(std::span<const HbGraph> family) {
  std::vector<std::string> ids;
  for (const auto& h : family) {
    for (const auto& id : h.vertices()) {
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  }
  auto universe = make_universe(std::move(ids));
  std::vector<Multiset> edges;
  std::vector<Rational> weights;
  bool weighted = false;
  for (const auto& h : family) {
    weighted = weighted || h.weighted();
    for (std::size_t j = 0; j < h.size(); ++j) {
      edges.push_back(h.edge(j).rebased(universe));
      weights.push_back(h.weight(j));
    }
  }
  std::optional<std::vector<Rational>> w;
  if (weighted) w = std::move(weights);
  return HbGraph(universe, std::move(edges), std::move(w));
}

std::vector<HbGraph> decompose(const HbGraph& h) {
  auto levels = split_by_cardinality(h);
  std::vector<HbGraph> out;
  out.reserve(levels.members.size());
  for (const auto& members : levels.members) out.push_back(select_edges(h, members));
  return out;
}

void require_tensor_input(const HbGraph& h) {
  if (h.size() == 0) throw Error(ErrorKind::EmptyEdgeFamily, "at least one hb-edge is required");
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "tensor constructions need a natural hb-graph");
  if (h.has_empty_edge()) throw Error(ErrorKind::EmptyEdge, "empty hb-edges have no tensor entry");
  if (h.has_repeated_edges()) throw Error(ErrorKind::RepeatedEdges, "repeated hb-edges must be merged first");
  for (const auto& id : h.vertices()) {
    if (id.starts_with(kReservedPrefix)) {
      throw Error(ErrorKind::ReservedVertexId, "vertex id '" + id + "' uses the reserved prefix");
    }
  }
}

Uniformised uniformize(const HbGraph& h, Approach approach) {
  require_tensor_input(h);
  const auto levels = split_by_cardinality(h);
  const unsigned r_h = levels.r_h;

  UniformisationTrace trace;
  trace.approach = approach;
  trace.r_h = r_h;
  trace.vertices = h.vertices();
  for (unsigned r = 1; r <= r_h; ++r) trace.layer_coeffs.emplace(r, Rational(r_h, r));
  for (const auto& members : levels.members) {
    trace.edge_provenance.insert(trace.edge_provenance.end(), members.begin(), members.end());
  }

  // Unweighted layers H_r, canonically weighted and c_r-dilated.
  std::vector<HbGraph> layers;
  layers.reserve(r_h);
  for (unsigned r = 1; r <= r_h; ++r) {
    HbGraph layer = select_edges(h.with_weights(std::nullopt), levels.members[r - 1]);
    layers.push_back(dilatation(canonical_weighting(layer), trace.layer_coeffs.at(r)));
  }

  HbGraph result;
  switch (approach) {
    case Approach::straightforward: {
      HbGraph merged = merge(layers);
      result = y_complement(merged, null_vertex_id(approach, 1), Rational(r_h));
      break;
    }
    case Approach::silo: {
      for (unsigned r = 1; r < r_h; ++r) {
        layers[r - 1] = vertex_increase(layers[r - 1], null_vertex_id(approach, r), r_h - r);
      }
      result = merge(layers);
      break;
    }
    case Approach::layered: {
      HbGraph current = layers.front();
      for (unsigned k = 1; k < r_h; ++k) {
        const HbGraph step[] = {vertex_increase(current, null_vertex_id(approach, k), 1), layers[k]};
        current = merge(step);
      }
      result = std::move(current);
      break;
    }
  }

  const std::size_t n = h.num_vertices();
  for (std::size_t i = n; i < result.num_vertices(); ++i) {
    trace.null_vertices.emplace_back(result.vertices()[i], i + 1);
  }
  return {std::move(result), std::move(trace)};
}

}  // namespace hbtensor
