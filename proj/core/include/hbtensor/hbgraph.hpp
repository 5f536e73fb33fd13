#pragma once

#include "hbtensor/mset.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hbtensor {

/// A hyper-bag-graph: an ordered family of multisets (hb-edges) over a
/// shared vertex universe, optionally weighted. Edges are identified by
/// their position in the family; repeats are allowed.
class HbGraph {
 public:
  HbGraph() : HbGraph(std::vector<std::string>{}, {}) {}
  HbGraph(std::vector<std::string> vertices, std::vector<Multiset> edges,
          std::optional<std::vector<Rational>> weights = std::nullopt);
  HbGraph(UniversePtr vertices, std::vector<Multiset> edges,
          std::optional<std::vector<Rational>> weights = std::nullopt);

  /// Convenience for literals: each edge lists (vertex id, multiplicity).
  static HbGraph from_lists(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::pair<std::string, Rational>>>& edges);

  const UniversePtr& universe() const noexcept { return vertices_; }
  const std::vector<std::string>& vertices() const noexcept { return vertices_->ids(); }
  std::size_t num_vertices() const noexcept { return vertices_->size(); }
  std::size_t vertex_index(std::string_view id) const;

  const std::vector<Multiset>& edges() const noexcept { return edges_; }
  const Multiset& edge(std::size_t j) const;
  std::size_t size() const noexcept { return edges_.size(); }

  bool weighted() const noexcept { return weights_.has_value(); }
  const std::optional<std::vector<Rational>>& weights() const noexcept { return weights_; }
  /// 1 for unweighted hb-graphs.
  Rational weight(std::size_t j) const;

  bool natural() const;
  bool has_repeated_edges() const;
  bool has_empty_edge() const;

  HbGraph with_weights(std::optional<std::vector<Rational>> weights) const;

  friend bool operator==(const HbGraph& a, const HbGraph& b);

 private:
  UniversePtr vertices_;
  std::vector<Multiset> edges_;
  std::optional<std::vector<Rational>> weights_;
};

Rational order(const HbGraph& h);

/// Vertex indices that belong to no edge support.
std::vector<std::size_t> isolated_vertices(const HbGraph& h);

Rational m_degree(const HbGraph& h, std::size_t v);
std::size_t degree(const HbGraph& h, std::size_t v);
/// max over edges of the multiplicity of v.
Rational max_multiplicity(const HbGraph& h, std::size_t v);

/// Multiset over edge labels e1..ep giving v's multiplicity in each edge.
Multiset hb_star(const HbGraph& h, std::size_t v);

/// Throw Error(EmptyEdgeFamily) when h has no edges.
Rational m_range(const HbGraph& h);
Rational m_corange(const HbGraph& h);
bool is_k_m_uniform(const HbGraph& h, const Rational& k);
bool is_k_m_regular(const HbGraph& h, const Rational& k);

class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }
  Rational& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }

  Rational row_sum(std::size_t i) const;
  Rational col_sum(std::size_t j) const;
  IncidenceMatrix transpose() const;

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

IncidenceMatrix incidence_matrix(const HbGraph& h);

struct SupportHypergraph {
  UniversePtr vertices;
  std::vector<std::vector<std::size_t>> hyperedges;  // sorted vertex indices
};

SupportHypergraph support_hypergraph(const HbGraph& h);

/// Undirected edges (u < v), sorted and deduplicated.
std::vector<std::pair<std::size_t, std::size_t>> two_section(const SupportHypergraph& s);

/// Dual vertices are labelled e1..ep; dual edge j corresponds to vertex j.
/// Weights are dropped.
HbGraph dual(const HbGraph& h);

HbGraph hb_sum(const HbGraph& h1, const HbGraph& h2);
/// True when the sum creates no repeated-edge pair across h1 and h2.
bool is_direct(const HbGraph& h1, const HbGraph& h2);

struct CopyHypergraph {
  std::vector<CopyVertex> vertices;           // sorted by (vertex, copy)
  std::vector<std::vector<std::size_t>> edges;  // indices into vertices, sorted
};

/// Throws Error(NotNatural).
CopyHypergraph numbered_copy_hypergraph(const HbGraph& h);

bool are_k_adjacent(const HbGraph& h, const Multiset& vertices);
bool are_estar_adjacent(const HbGraph& h, std::span<const std::size_t> vertices, std::size_t edge);
bool are_e_adjacent(const HbGraph& h, const Multiset& vertices, std::size_t edge);
bool are_incident(const HbGraph& h, std::size_t i, std::size_t j);

}  // namespace hbtensor
