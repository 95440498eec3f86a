#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ortholab/error.hpp"
#include "ortholab/report.hpp"
#include "ortholab/table.hpp"

namespace ortholab {

/// Finite partial order over named elements. The constructor validates the
/// relation; a Poset that exists is reflexive, antisymmetric and transitive.
class Poset {
 public:
  Poset(std::vector<std::string> names, Relation leq)
      : names_(std::move(names)), leq_(std::move(leq)) {
    validate_names(names_);
    if (leq_.size() != names_.size())
      throw Error(ErrorKind::InvalidArgument, "order relation size does not match element count");
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
      if (!leq_(x, x)) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + names_[x]);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (leq_(x, y) && leq_(y, x))
          throw Error(ErrorKind::CycleDetected, names_[x] + " and " + names_[y] + " are mutually below each other");
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (leq_(x, y))
          for (std::size_t z = 0; z < n; ++z)
            if (leq_(y, z) && !leq_(x, z))
              throw Error(ErrorKind::NotAPartialOrder,
                          "not transitive: " + names_[x] + " <= " + names_[y] + " <= " + names_[z]);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  const Relation& relation() const noexcept { return leq_; }

  bool leq(ElementId x, ElementId y) const { return leq_(x, y) != 0; }
  bool lt(ElementId x, ElementId y) const { return x != y && leq_(x, y) != 0; }

  std::optional<ElementId> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return ElementId(i);
    return std::nullopt;
  }

  /// Cover relation (transitive reduction), pairs (lower, upper) in row-major order.
  std::vector<std::pair<ElementId, ElementId>> covers() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!lt(ElementId(x), ElementId(y))) continue;
        bool between = false;
        for (std::size_t z = 0; z < n && !between; ++z)
          between = lt(ElementId(x), ElementId(z)) && lt(ElementId(z), ElementId(y));
        if (!between) out.emplace_back(ElementId(x), ElementId(y));
      }
    return out;
  }

  bool operator==(const Poset&) const = default;

  static void validate_names(const std::vector<std::string>& names) {
    std::unordered_set<std::string_view> seen;
    for (const auto& nm : names) {
      if (nm.empty()) throw Error(ErrorKind::InvalidArgument, "element names must be nonempty");
      if (!seen.insert(nm).second) throw Error(ErrorKind::DuplicateName, nm);
    }
  }

 private:
  std::vector<std::string> names_;
  Relation leq_;
};

/// Reflexive-transitive closure of a cover list given by element names.
inline Poset poset_from_covers(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset::validate_names(names);
  std::unordered_map<std::string, ElementId> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], ElementId(i));
  const std::size_t n = names.size();
  Relation leq(n);
  for (std::size_t i = 0; i < n; ++i) leq(i, i) = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    if (a == index.end()) throw Error(ErrorKind::UnknownElement, lo);
    auto b = index.find(hi);
    if (b == index.end()) throw Error(ErrorKind::UnknownElement, hi);
    if (a->second == b->second) throw Error(ErrorKind::CycleDetected, lo + " covers itself");
    leq(a->second, b->second) = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (leq(k, j)) leq(i, j) = 1;
  return Poset(std::move(names), std::move(leq));
}

/// Why a poset is not a bounded lattice; `pair` is set for NotALattice.
struct LatticeDefect {
  ErrorKind kind;
  std::optional<std::pair<ElementId, ElementId>> pair;
  std::string message;
};

/// Bounded lattice with precomputed join/meet tables. Bottom and top are
/// discovered from the order. The one-element lattice is accepted and
/// reported through trivial().
class BoundedLattice {
 public:
  explicit BoundedLattice(Poset poset) : poset_(std::move(poset)) {
    if (auto defect = build()) throw Error(defect->kind, defect->message);
  }

  /// Non-throwing construction for search loops.
  static std::optional<BoundedLattice> try_from(Poset poset, LatticeDefect* defect = nullptr) {
    BoundedLattice l(std::move(poset), Unchecked{});
    if (auto d = l.build()) {
      if (defect) *defect = std::move(*d);
      return std::nullopt;
    }
    return l;
  }

  std::size_t size() const noexcept { return poset_.size(); }
  const Poset& poset() const noexcept { return poset_; }
  const std::vector<std::string>& names() const noexcept { return poset_.names(); }
  const std::string& name(ElementId x) const { return poset_.name(x); }

  bool leq(ElementId x, ElementId y) const { return poset_.leq(x, y); }
  ElementId join(ElementId x, ElementId y) const { return join_(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return meet_(x, y); }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }
  bool trivial() const noexcept { return bottom_ == top_; }

  const BinOpTable& join_table() const noexcept { return join_; }
  const BinOpTable& meet_table() const noexcept { return meet_; }

  bool operator==(const BoundedLattice& other) const { return poset_ == other.poset_; }

 private:
  struct Unchecked {};
  BoundedLattice(Poset poset, Unchecked) : poset_(std::move(poset)) {}

  std::optional<LatticeDefect> build() {
    const std::size_t n = size();
    if (n == 0) return LatticeDefect{ErrorKind::NotBounded, std::nullopt, "empty carrier"};
    std::optional<ElementId> lo, hi;
    for (std::size_t c = 0; c < n; ++c) {
      bool below_all = true, above_all = true;
      for (std::size_t x = 0; x < n; ++x) {
        below_all = below_all && leq(ElementId(c), ElementId(x));
        above_all = above_all && leq(ElementId(x), ElementId(c));
      }
      if (below_all) lo = ElementId(c);
      if (above_all) hi = ElementId(c);
    }
    if (!lo) return LatticeDefect{ErrorKind::NotBounded, std::nullopt, "no least element"};
    if (!hi) return LatticeDefect{ErrorKind::NotBounded, std::nullopt, "no greatest element"};
    bottom_ = *lo;
    top_ = *hi;

    join_ = BinOpTable(n);
    meet_ = BinOpTable(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        const auto a = ElementId(x), b = ElementId(y);
        auto lub = extremal_bound(a, b, true);
        auto glb = extremal_bound(a, b, false);
        if (!lub || !glb) {
          std::string which = !lub ? "least upper bound" : "greatest lower bound";
          return LatticeDefect{ErrorKind::NotALattice, std::make_pair(a, b),
                               "no unique " + which + " for (" + name(a) + ", " + name(b) + ")"};
        }
        join_(x, y) = join_(y, x) = *lub;
        meet_(x, y) = meet_(y, x) = *glb;
      }
    return std::nullopt;
  }

  // Least upper bound (upper = true) or greatest lower bound of {a, b}.
  std::optional<ElementId> extremal_bound(ElementId a, ElementId b, bool upper) const {
    const std::size_t n = size();
    auto bounds = [&](ElementId u) {
      return upper ? leq(a, u) && leq(b, u) : leq(u, a) && leq(u, b);
    };
    for (std::size_t c = 0; c < n; ++c) {
      const auto u = ElementId(c);
      if (!bounds(u)) continue;
      bool extremal = true;
      for (std::size_t d = 0; d < n && extremal; ++d) {
        const auto v = ElementId(d);
        if (bounds(v)) extremal = upper ? leq(u, v) : leq(v, u);
      }
      if (extremal) return u;
    }
    return std::nullopt;
  }

  Poset poset_;
  BinOpTable join_;
  BinOpTable meet_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

inline BoundedLattice lattice_from_poset(Poset p) { return BoundedLattice(std::move(p)); }

/// Exhaustive check of the lattice laws against the stored tables.
inline VerificationReport verify_lattice_laws(const BoundedLattice& l) {
  using detail::result_of;
  using detail::scan1;
  using detail::scan2;
  using detail::scan3;
  const std::size_t n = l.size();
  VerificationReport report;
  report.add(result_of("order-join", scan2(n, [&](ElementId x, ElementId y) {
                         return l.leq(x, y) == (l.join(x, y) == y);
                       })));
  report.add(result_of("order-meet", scan2(n, [&](ElementId x, ElementId y) {
                         return l.leq(x, y) == (l.meet(x, y) == x);
                       })));
  report.add(result_of("commutativity", scan2(n, [&](ElementId x, ElementId y) {
                         return l.join(x, y) == l.join(y, x) && l.meet(x, y) == l.meet(y, x);
                       })));
  report.add(result_of("associativity", scan3(n, [&](ElementId x, ElementId y, ElementId z) {
                         return l.join(x, l.join(y, z)) == l.join(l.join(x, y), z) &&
                                l.meet(x, l.meet(y, z)) == l.meet(l.meet(x, y), z);
                       })));
  report.add(result_of("idempotence", scan1(n, [&](ElementId x) {
                         return l.join(x, x) == x && l.meet(x, x) == x;
                       })));
  report.add(result_of("absorption", scan2(n, [&](ElementId x, ElementId y) {
                         return l.meet(x, l.join(x, y)) == x && l.join(x, l.meet(x, y)) == x;
                       })));
  report.add(result_of("bounds", scan1(n, [&](ElementId x) {
                         return l.leq(l.bottom(), x) && l.leq(x, l.top());
                       })));
  if (l.trivial()) report.note("trivial lattice: bottom equals top");
  return report;
}

/// Copy of `l` where new element k is old element order[k], renamed to names[k].
inline BoundedLattice relabel(const BoundedLattice& l, const std::vector<ElementId>& order,
                              std::vector<std::string> names) {
  const std::size_t n = l.size();
  if (order.size() != n || names.size() != n)
    throw Error(ErrorKind::InvalidArgument, "relabeling size mismatch");
  Relation leq(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq(i, j) = l.leq(order[i], order[j]) ? 1 : 0;
  return BoundedLattice(Poset(std::move(names), std::move(leq)));
}

/// Inverse of a relabeling order: position[old] = new index.
inline std::vector<ElementId> inverse_order(const std::vector<ElementId>& order) {
  std::vector<ElementId> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = ElementId(k);
  return pos;
}

}  // namespace ortholab
