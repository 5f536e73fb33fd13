#include "hbtensor/mset.hpp"

#include "hbtensor/error.hpp"

#include <algorithm>
#include <set>

namespace hbtensor {

Universe::Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + ids_[i] + "' listed twice");
    }
  }
}

bool Universe::contains(std::string_view id) const { return index_.contains(std::string(id)); }

std::size_t Universe::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "'" + std::string(id) + "' is not in the universe");
  return it->second;
}

UniversePtr make_universe(std::vector<std::string> ids) {
  return std::make_shared<const Universe>(std::move(ids));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

Multiset::Multiset(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) universe_ = make_universe({});
}

Multiset::Multiset(UniversePtr universe, std::map<std::size_t, Rational> mult)
    : Multiset(std::move(universe)) {
  for (auto& [element, m] : mult) {
    if (element >= universe_->size()) {
      throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(element) + " outside the universe");
    }
    if (m < 0) {
      throw Error(ErrorKind::NegativeMultiplicity,
                  "element '" + universe_->id(element) + "' has multiplicity " + to_string(m));
    }
    if (m == 0) continue;
    if (!is_integer(m)) natural_ = false;
    mult_.emplace(element, std::move(m));
  }
}

Multiset Multiset::from_ids(UniversePtr universe, const std::vector<std::pair<std::string, Rational>>& mult) {
  std::map<std::size_t, Rational> by_index;
  for (const auto& [id, m] : mult) {
    by_index[universe->index_of(id)] += m;
  }
  return Multiset(std::move(universe), std::move(by_index));
}

Rational Multiset::mult(std::size_t element) const {
  auto it = mult_.find(element);
  return it == mult_.end() ? Rational(0) : it->second;
}

Rational Multiset::mult(std::string_view id) const {
  if (!universe_->contains(id)) return 0;
  return mult(universe_->index_of(id));
}

std::vector<std::size_t> Multiset::support() const {
  std::vector<std::size_t> out;
  out.reserve(mult_.size());
  for (const auto& [element, m] : mult_) out.push_back(element);
  return out;
}

std::vector<std::string> Multiset::support_ids() const {
  std::vector<std::string> out;
  out.reserve(mult_.size());
  for (const auto& [element, m] : mult_) out.push_back(universe_->id(element));
  return out;
}

Rational Multiset::m_cardinality() const {
  Rational total = 0;
  for (const auto& [element, m] : mult_) total += m;
  return total;
}

std::vector<Rational> Multiset::vector_repr() const {
  std::vector<Rational> out(universe_->size());
  for (const auto& [element, m] : mult_) out[element] = m;
  return out;
}

Multiset Multiset::rebased(UniversePtr target) const {
  if (same_universe(universe_, target)) return Multiset(std::move(target), mult_);
  std::map<std::size_t, Rational> moved;
  for (const auto& [element, m] : mult_) moved.emplace(target->index_of(universe_->id(element)), m);
  return Multiset(std::move(target), std::move(moved));
}

bool operator==(const Multiset& a, const Multiset& b) {
  return same_universe(a.universe_, b.universe_) && a.mult_ == b.mult_;
}

bool is_cognate(const Multiset& a, const Multiset& b) {
  if (same_universe(a.universe(), b.universe())) return a.support() == b.support();
  auto sa = a.support_ids();
  auto sb = b.support_ids();
  return std::set<std::string>(sa.begin(), sa.end()) == std::set<std::string>(sb.begin(), sb.end());
}

namespace {

void require_same_universe(const Multiset& a, const Multiset& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "multisets are defined over different universes");
  }
}

template <typename Combine>
Multiset pointwise(const Multiset& a, const Multiset& b, Combine combine) {
  require_same_universe(a, b);
  std::map<std::size_t, Rational> out;
  for (const auto& [element, m] : a.entries()) out[element] = combine(m, b.mult(element));
  for (const auto& [element, m] : b.entries()) {
    if (!a.entries().contains(element)) out[element] = combine(Rational(0), m);
  }
  return Multiset(a.universe(), std::move(out));
}

}  // namespace

bool includes(const Multiset& a, const Multiset& b) {
  require_same_universe(a, b);
  return std::all_of(b.entries().begin(), b.entries().end(),
                     [&](const auto& entry) { return entry.second <= a.mult(entry.first); });
}

Multiset mset_union(const Multiset& a, const Multiset& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

Multiset mset_intersection(const Multiset& a, const Multiset& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return std::min(x, y); });
}

Multiset mset_sum(const Multiset& a, const Multiset& b) {
  return pointwise(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

NumberedCopySet numbered_copies(const Multiset& a) {
  if (!a.natural()) throw Error(ErrorKind::NotNatural, "numbered copies need integer multiplicities");
  NumberedCopySet out;
  for (const auto& [element, m] : a.entries()) {
    unsigned count = to_natural(m);
    out.originals.emplace(element, count);
    for (unsigned c = 1; c <= count; ++c) out.copies.push_back({element, c});
  }
  return out;
}

}  // namespace hbtensor
