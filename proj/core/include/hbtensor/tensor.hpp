#pragma once

#include "hbtensor/hbgraph.hpp"
#include "hbtensor/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace hbtensor {

/// Nondecreasing 0-based index tuple, one slot per tensor mode.
using IndexTuple = std::vector<std::uint32_t>;

/// (index, multiplicity) pairs of a canonical tuple.
using RunLength = std::vector<std::pair<std::uint32_t, unsigned>>;

RunLength run_length(const IndexTuple& canonical);
IndexTuple from_run_length(const RunLength& runs);

/// Sparse symmetric hypermatrix. One entry is stored per index multiset; any
/// permutation of a stored tuple reads the same value. No zeros are stored.
class SymTensor {
 public:
  class Builder {
   public:
    Builder(unsigned order, std::size_t dim);
    /// Adds v at the multiset of idx (any order). Throws IndexOutOfRange.
    Builder& add(IndexTuple idx, const Rational& v);
    SymTensor build() &&;

   private:
    unsigned order_;
    std::size_t dim_;
    std::map<IndexTuple, Rational> entries_;
  };

  SymTensor(unsigned order, std::size_t dim) : order_(order), dim_(dim) {}

  unsigned order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::map<IndexTuple, Rational>& entries() const noexcept { return entries_; }

  /// Logical entry for any index order.
  Rational at(IndexTuple idx) const;

  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  unsigned order_;
  std::size_t dim_;
  std::map<IndexTuple, Rational> entries_;
};

/// Number of distinct index permutations of a canonical tuple.
BigInt permutation_count(const IndexTuple& canonical);

/// Throws Error(NotNatural / EmptyMultiset).
SymTensor mset_hypermatrix(const Multiset& a, bool normalized);
SymTensor elementary_tensor(const HbGraph& single_edge);
/// Throws Error(NotUniform / RepeatedEdges / NotNatural).
SymTensor uniform_tensor(const HbGraph& h);

struct AdjacencyTensor {
  SymTensor tensor;
  UniformisationTrace trace;
};

/// One canonical entry per input edge at its uniformized index multiset,
/// valued prod(mu!) / (r_h - 1)! times the user weight of the edge.
AdjacencyTensor e_adjacency_tensor(const HbGraph& h, Approach approach);

/// Silo tensor of a hypergraph computed directly from hyperedge sizes.
/// Throws Error(NotAHypergraph / RepeatedEdges).
AdjacencyTensor hypergraph_tensor(const HbGraph& hypergraph);

/// Sum of all logical entries whose first index is i.
Rational row_sum(const SymTensor& t, std::size_t i);

/// Input edge counts per m-cardinality 1..r_h recovered from the null
/// vertices. Levels with no edge are omitted. Throws Error(TraceMismatch).
std::map<unsigned, BigInt> edge_distribution(const SymTensor& t, const UniformisationTrace& trace,
                                             std::size_t total_edges);

/// Deletes the null vertex indices of every entry. User weights are
/// restored when an entry differs from the unit value of its edge.
HbGraph reconstruct(const SymTensor& t, const UniformisationTrace& trace);

struct HbPolynomial {
  unsigned degree = 0;
  std::size_t variables = 0;
  std::map<std::vector<unsigned>, Rational> monomials;  // exponent vector -> coefficient
};

HbPolynomial polynomial(const SymTensor& t);
/// Throws Error(DimensionMismatch).
Rational eval_polynomial(const HbPolynomial& p, const std::vector<Rational>& z);

/// (A x^{r-1})_i for every i. Throws Error(DimensionMismatch).
std::vector<Rational> apply(const SymTensor& t, const std::vector<Rational>& x);
std::vector<double> apply(const SymTensor& t, const std::vector<double>& x);

enum class CooMode { canonical, full };

inline constexpr std::uint64_t kDefaultDenseLimit = 10'000'000;

/// Full mode expands every distinct permutation; throws Error(DenseTooLarge)
/// when that would exceed dense_limit records.
std::vector<std::pair<IndexTuple, Rational>> export_coo(const SymTensor& t, CooMode mode,
                                                        std::uint64_t dense_limit = kDefaultDenseLimit);

}  // namespace hbtensor
