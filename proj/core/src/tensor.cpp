#include "hbtensor/tensor.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>
#include <numeric>

namespace hbtensor {

RunLength run_length(const IndexTuple& canonical) {
  RunLength runs;
  for (std::uint32_t i : canonical) {
    if (!runs.empty() && runs.back().first == i) {
      ++runs.back().second;
    } else {
      runs.emplace_back(i, 1u);
    }
  }
  return runs;
}

IndexTuple from_run_length(const RunLength& runs) {
  IndexTuple idx;
  for (const auto& [i, m] : runs) idx.insert(idx.end(), m, i);
  std::sort(idx.begin(), idx.end());
  return idx;
}

BigInt permutation_count(const IndexTuple& canonical) {
  std::vector<unsigned> parts;
  for (const auto& run : run_length(canonical)) parts.push_back(run.second);
  return multinomial(static_cast<unsigned>(canonical.size()), parts);
}

SymTensor::Builder::Builder(unsigned order, std::size_t dim) : order_(order), dim_(dim) {}

SymTensor::Builder& SymTensor::Builder::add(IndexTuple idx, const Rational& v) {
  if (idx.size() != order_) {
    throw Error(ErrorKind::DimensionMismatch,
                "index tuple of length " + std::to_string(idx.size()) + " for order " + std::to_string(order_));
  }
  for (auto i : idx) {
    if (i >= dim_) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i + 1) + " exceeds dimension");
  }
  std::sort(idx.begin(), idx.end());
  auto [it, inserted] = entries_.try_emplace(std::move(idx), v);
  if (!inserted) it->second += v;
  if (it->second == 0) entries_.erase(it);
  return *this;
}

SymTensor SymTensor::Builder::build() && {
  SymTensor t(order_, dim_);
  t.entries_ = std::move(entries_);
  return t;
}

Rational SymTensor::at(IndexTuple idx) const {
  if (idx.size() != order_) throw Error(ErrorKind::DimensionMismatch, "index tuple length differs from order");
  for (auto i : idx) {
    if (i >= dim_) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i + 1) + " exceeds dimension");
  }
  std::sort(idx.begin(), idx.end());
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

IndexTuple tuple_of(const Multiset& e) {
  IndexTuple idx;
  for (const auto& [v, m] : e.entries()) idx.insert(idx.end(), to_natural(m), static_cast<std::uint32_t>(v));
  return idx;
}

// prod(mu!) / (r - 1)!: the unit value of a normalized representation.
Rational normalized_value(const IndexTuple& canonical) {
  BigInt num = 1;
  for (const auto& run : run_length(canonical)) num *= factorial(run.second);
  return Rational(num, factorial(static_cast<unsigned>(canonical.size()) - 1));
}

// Share of an entry's permutations that start with index i, weighted by value.
Rational first_index_mass(const IndexTuple& canonical, const Rational& value, unsigned mu) {
  return value * Rational(permutation_count(canonical) * mu, static_cast<unsigned>(canonical.size()));
}

}  // namespace

SymTensor mset_hypermatrix(const Multiset& a, bool normalized) {
  if (!a.natural()) throw Error(ErrorKind::NotNatural, "hypermatrix representation needs integer multiplicities");
  if (a.empty()) throw Error(ErrorKind::EmptyMultiset, "empty multiset has no hypermatrix representation");
  IndexTuple idx = tuple_of(a);
  const auto order = static_cast<unsigned>(idx.size());
  Rational value = normalized ? normalized_value(idx) : Rational(1);
  SymTensor::Builder b(order, a.universe()->size());
  b.add(std::move(idx), value);
  return std::move(b).build();
}

SymTensor elementary_tensor(const HbGraph& single_edge) {
  if (single_edge.size() != 1) throw Error(ErrorKind::Precondition, "elementary hb-graph must have exactly one edge");
  return mset_hypermatrix(single_edge.edge(0), true);
}

SymTensor uniform_tensor(const HbGraph& h) {
  if (h.size() == 0) throw Error(ErrorKind::EmptyEdgeFamily, "uniform tensor of an hb-graph without edges");
  if (!h.natural()) throw Error(ErrorKind::NotNatural, "uniform tensor needs a natural hb-graph");
  if (h.has_repeated_edges()) throw Error(ErrorKind::RepeatedEdges, "uniform tensor needs distinct hb-edges");
  Rational k = h.edge(0).m_cardinality();
  if (!is_k_m_uniform(h, k)) throw Error(ErrorKind::NotUniform, "hb-graph is not m-uniform");
  if (k == 0) throw Error(ErrorKind::EmptyEdge, "empty hb-edges have no tensor entry");
  SymTensor::Builder b(to_natural(k), h.num_vertices());
  for (const auto& e : h.edges()) {
    const SymTensor single = mset_hypermatrix(e, true);
    for (const auto& [idx, v] : single.entries()) b.add(idx, v);
  }
  return std::move(b).build();
}

AdjacencyTensor e_adjacency_tensor(const HbGraph& h, Approach approach) {
  auto [graph, trace] = uniformize(h, approach);
  SymTensor::Builder b(trace.r_h, graph.num_vertices());
  for (std::size_t j = 0; j < graph.size(); ++j) {
    IndexTuple idx = tuple_of(graph.edge(j));
    Rational value = normalized_value(idx) * h.weight(trace.edge_provenance[j]);
    b.add(std::move(idx), value);
  }
  return {std::move(b).build(), std::move(trace)};
}

AdjacencyTensor hypergraph_tensor(const HbGraph& hypergraph) {
  for (const auto& e : hypergraph.edges()) {
    for (const auto& [v, m] : e.entries()) {
      if (m != 1) throw Error(ErrorKind::NotAHypergraph, "hyperedge multiplicities must be 0 or 1");
    }
  }
  require_tensor_input(hypergraph);

  const std::size_t n = hypergraph.num_vertices();
  unsigned k_max = 0;
  for (const auto& e : hypergraph.edges()) k_max = std::max(k_max, static_cast<unsigned>(e.cardinality()));

  UniformisationTrace trace;
  trace.approach = Approach::silo;
  trace.r_h = k_max;
  trace.vertices = hypergraph.vertices();
  for (unsigned k = 1; k < k_max; ++k) trace.null_vertices.emplace_back(null_vertex_id(Approach::silo, k), n + k);
  for (unsigned k = 1; k <= k_max; ++k) {
    trace.layer_coeffs.emplace(k, Rational(k_max, k));
    for (std::size_t j = 0; j < hypergraph.size(); ++j) {
      if (hypergraph.edge(j).cardinality() == k) trace.edge_provenance.push_back(j);
    }
  }

  SymTensor::Builder b(k_max, n + k_max - 1);
  for (std::size_t j = 0; j < hypergraph.size(); ++j) {
    const auto& e = hypergraph.edge(j);
    const auto k = static_cast<unsigned>(e.cardinality());
    IndexTuple idx;
    for (std::size_t v : e.support()) idx.push_back(static_cast<std::uint32_t>(v));
    idx.insert(idx.end(), k_max - k, static_cast<std::uint32_t>(n + k - 1));
    Rational value(factorial(k_max - k), factorial(k_max - 1));
    b.add(std::move(idx), value * hypergraph.weight(j));
  }
  return {std::move(b).build(), std::move(trace)};
}

Rational row_sum(const SymTensor& t, std::size_t i) {
  if (i >= t.dim()) throw Error(ErrorKind::IndexOutOfRange, "row " + std::to_string(i + 1) + " exceeds dimension");
  Rational total = 0;
  for (const auto& [idx, value] : t.entries()) {
    auto mu = static_cast<unsigned>(std::count(idx.begin(), idx.end(), static_cast<std::uint32_t>(i)));
    if (mu != 0) total += first_index_mass(idx, value, mu);
  }
  return total;
}

namespace {

std::size_t expected_null_count(const UniformisationTrace& trace) {
  if (trace.approach == Approach::straightforward) return 1;
  return trace.r_h == 0 ? 0 : trace.r_h - 1;
}

void check_trace(const SymTensor& t, const UniformisationTrace& trace) {
  if (t.order() != trace.r_h) throw Error(ErrorKind::TraceMismatch, "tensor order differs from the trace m-range");
  if (t.dim() != trace.dim()) throw Error(ErrorKind::TraceMismatch, "tensor dimension differs from the trace");
  if (trace.n_a() != expected_null_count(trace)) {
    throw Error(ErrorKind::TraceMismatch, "null vertex count does not fit the approach");
  }
  for (std::size_t k = 0; k < trace.n_a(); ++k) {
    if (trace.null_vertices[k].second != trace.n() + k + 1) {
      throw Error(ErrorKind::TraceMismatch, "null vertex indices must follow the original vertices");
    }
  }
}

BigInt as_count(const Rational& q, unsigned level) {
  if (!is_integer(q) || q < 0) {
    throw Error(ErrorKind::TraceMismatch,
                "level " + std::to_string(level) + " yields non-integral edge count " + to_string(q));
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace

std::map<unsigned, BigInt> edge_distribution(const SymTensor& t, const UniformisationTrace& trace,
                                             std::size_t total_edges) {
  check_trace(t, trace);
  const unsigned r_h = trace.r_h;
  const std::size_t n = trace.n();
  std::map<unsigned, BigInt> out;
  BigInt below_top = 0;

  auto null_degree = [&](unsigned level) { return row_sum(t, n + level - 1); };

  for (unsigned j = 1; j < r_h; ++j) {
    Rational count;
    switch (trace.approach) {
      case Approach::straightforward: {
        // Restricted row sum of N1 over entries holding it r_h - j times.
        const auto null_index = static_cast<std::uint32_t>(n);
        Rational restricted = 0;
        for (const auto& [idx, value] : t.entries()) {
          auto mu = static_cast<unsigned>(std::count(idx.begin(), idx.end(), null_index));
          if (mu == r_h - j) restricted += first_index_mass(idx, value, mu);
        }
        count = restricted / (r_h - j);
        break;
      }
      case Approach::silo:
        count = null_degree(j) / (r_h - j);
        break;
      case Approach::layered:
        count = j == 1 ? null_degree(1) : Rational(null_degree(j) - null_degree(j - 1));
        break;
    }
    BigInt c = as_count(count, j);
    below_top += c;
    if (c != 0) out.emplace(j, std::move(c));
  }
  BigInt top = as_count(Rational(BigInt(total_edges) - below_top), r_h);
  if (top != 0) out.emplace(r_h, std::move(top));
  return out;
}

HbGraph reconstruct(const SymTensor& t, const UniformisationTrace& trace) {
  check_trace(t, trace);
  auto universe = make_universe(trace.vertices);
  const std::size_t n = trace.n();
  std::vector<Multiset> edges;
  std::vector<Rational> weights;
  bool weighted = false;
  for (const auto& [idx, value] : t.entries()) {
    std::map<std::size_t, Rational> mult;
    for (const auto& [i, m] : run_length(idx)) {
      if (i < n) mult.emplace(i, Rational(m));
    }
    Rational w = value / normalized_value(idx);
    weighted = weighted || w != 1;
    edges.emplace_back(universe, std::move(mult));
    weights.push_back(std::move(w));
  }
  std::optional<std::vector<Rational>> w;
  if (weighted) w = std::move(weights);
  return HbGraph(universe, std::move(edges), std::move(w));
}

HbPolynomial polynomial(const SymTensor& t) {
  HbPolynomial p;
  p.degree = t.order();
  p.variables = t.dim();
  for (const auto& [idx, value] : t.entries()) {
    std::vector<unsigned> exponents(t.dim(), 0);
    for (const auto& [i, m] : run_length(idx)) exponents[i] = m;
    p.monomials[exponents] += value * Rational(permutation_count(idx));
  }
  return p;
}

Rational eval_polynomial(const HbPolynomial& p, const std::vector<Rational>& z) {
  if (z.size() != p.variables) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [exponents, coeff] : p.monomials) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exponents.size() && term != 0; ++i) {
      for (unsigned k = 0; k < exponents[i]; ++k) term *= z[i];
    }
    total += term;
  }
  return total;
}

namespace {

template <typename T, typename Convert>
std::vector<T> apply_impl(const SymTensor& t, const std::vector<T>& x, Convert convert) {
  if (x.size() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "vector has wrong dimension");
  std::vector<T> out(t.dim(), T(0));
  for (const auto& [idx, value] : t.entries()) {
    const auto runs = run_length(idx);
    for (const auto& [i, mu] : runs) {
      T term = convert(first_index_mass(idx, value, mu));
      for (const auto& [j, nu] : runs) {
        const unsigned power = j == i ? nu - 1 : nu;
        for (unsigned k = 0; k < power; ++k) term *= x[j];
      }
      out[i] += term;
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> apply(const SymTensor& t, const std::vector<Rational>& x) {
  return apply_impl(t, x, [](Rational q) { return q; });
}

std::vector<double> apply(const SymTensor& t, const std::vector<double>& x) {
  return apply_impl(t, x, [](const Rational& q) { return to_double(q); });
}

std::vector<std::pair<IndexTuple, Rational>> export_coo(const SymTensor& t, CooMode mode, std::uint64_t dense_limit) {
  std::vector<std::pair<IndexTuple, Rational>> out;
  if (mode == CooMode::canonical) {
    out.assign(t.entries().begin(), t.entries().end());
    return out;
  }
  BigInt total = 0;
  for (const auto& [idx, value] : t.entries()) total += permutation_count(idx);
  if (total > dense_limit) {
    throw Error(ErrorKind::DenseTooLarge,
                "full expansion needs " + total.str() + " records, limit is " + std::to_string(dense_limit));
  }
  out.reserve(total.convert_to<std::size_t>());
  for (const auto& [idx, value] : t.entries()) {
    IndexTuple perm = idx;
    do {
      out.emplace_back(perm, value);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace hbtensor
