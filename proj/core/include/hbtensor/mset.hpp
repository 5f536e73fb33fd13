#pragma once

#include "hbtensor/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hbtensor {

/// Ordered list of distinct element identifiers shared by multisets.
class Universe {
 public:
  explicit Universe(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  bool contains(std::string_view id) const;
  /// Throws Error(UnknownElement).
  std::size_t index_of(std::string_view id) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> ids);

/// Universes are equal when they list the same ids in the same order.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// A multiset over an explicit universe. Multiplicities are exact
/// non-negative rationals; zeros are never stored, so the entry map is the
/// support with its multiplicities.
class Multiset {
 public:
  explicit Multiset(UniversePtr universe);
  Multiset(UniversePtr universe, std::map<std::size_t, Rational> mult);

  static Multiset from_ids(UniversePtr universe,
                           const std::vector<std::pair<std::string, Rational>>& mult);

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::map<std::size_t, Rational>& entries() const noexcept { return mult_; }

  Rational mult(std::size_t element) const;
  Rational mult(std::string_view id) const;

  bool empty() const noexcept { return mult_.empty(); }
  /// True when every multiplicity is an integer.
  bool natural() const noexcept { return natural_; }

  /// Element indices with nonzero multiplicity, in universe order.
  std::vector<std::size_t> support() const;
  std::vector<std::string> support_ids() const;

  Rational m_cardinality() const;
  std::size_t cardinality() const noexcept { return mult_.size(); }

  std::vector<Rational> vector_repr() const;

  /// Same multiplicities by id, over the (wider) target universe.
  Multiset rebased(UniversePtr target) const;

  friend bool operator==(const Multiset& a, const Multiset& b);

 private:
  UniversePtr universe_;
  std::map<std::size_t, Rational> mult_;
  bool natural_ = true;
};

bool is_cognate(const Multiset& a, const Multiset& b);

/// b is included in a. Throws Error(UniverseMismatch).
bool includes(const Multiset& a, const Multiset& b);

Multiset mset_union(const Multiset& a, const Multiset& b);
Multiset mset_intersection(const Multiset& a, const Multiset& b);
Multiset mset_sum(const Multiset& a, const Multiset& b);

struct CopyVertex {
  std::size_t element = 0;
  unsigned copy = 1;  // 1-based

  friend auto operator<=>(const CopyVertex&, const CopyVertex&) = default;
};

struct NumberedCopySet {
  std::map<std::size_t, unsigned> originals;
  std::vector<CopyVertex> copies;
};

/// Throws Error(NotNatural).
NumberedCopySet numbered_copies(const Multiset& a);

}  // namespace hbtensor
