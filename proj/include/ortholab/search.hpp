#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortholab/canonical.hpp"
#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/ortho.hpp"
#include "ortholab/residuated.hpp"

namespace ortholab {

inline constexpr std::size_t kMaxEnumerationSize = 9;

struct EnumerationConfig {
  std::size_t max_size = 6;
  bool require_orthomodular = false;
  std::uint64_t permutation_budget = kDefaultPermutationBudget;

  void validate() const {
    if (max_size < 1) throw Error(ErrorKind::InvalidArgument, "max size must be at least 1");
    if (max_size > kMaxEnumerationSize)
      throw Error(ErrorKind::SizeLimitExceeded,
                  "enumeration is limited to " + std::to_string(kMaxEnumerationSize) + " elements");
    const std::size_t middle = max_size >= 2 ? max_size - 2 : 0;
    if (permutation_budget < factorial_saturating(middle))
      throw Error(ErrorKind::SizeLimitExceeded, "permutation budget below (max size - 2)!");
  }
};

namespace detail {

// Pairs x with a partner drawn from `partners(x)` (which may be x itself),
// smallest unassigned element first, and keeps the map antitone on the
// assigned part. Output is in lexicographic table order.
template <typename Partners>
std::vector<UnaryTable> antitone_involutions(const BoundedLattice& l, Partners&& partners) {
  const std::size_t n = l.size();
  constexpr ElementId kUnset = 0xFFFF;
  UnaryTable map(n, kUnset);
  std::vector<UnaryTable> out;

  auto consistent = [&](ElementId a) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = ElementId(j);
      if (map[b] == kUnset) continue;
      if (l.leq(a, b) && !l.leq(map[b], map[a])) return false;
      if (l.leq(b, a) && !l.leq(map[a], map[b])) return false;
    }
    return true;
  };

  std::function<void()> extend = [&]() {
    auto first = std::find(map.begin(), map.end(), kUnset);
    if (first == map.end()) {
      out.push_back(map);
      return;
    }
    const auto x = ElementId(first - map.begin());
    for (std::size_t j = x; j < n; ++j) {
      const auto y = ElementId(j);
      if (map[y] != kUnset || !partners(x, y)) continue;
      map[x] = y;
      map[y] = x;
      if (consistent(x) && consistent(y)) extend();
      map[x] = kUnset;
      map[y] = kUnset;
    }
  };
  extend();
  return out;
}

inline std::vector<std::string> lattice_names(std::size_t n) {
  std::vector<std::string> names;
  if (n == 0) return names;
  names.push_back("0");
  for (std::size_t i = 0; i + 2 < n; ++i)
    names.push_back(i < 26 ? std::string(1, char('a' + i)) : "e" + std::to_string(i));
  if (n >= 2) names.push_back("1");
  return names;
}

// Middle elements get a letter, their complement the same letter primed.
inline std::vector<std::string> ortho_names(const UnaryTable& comp) {
  const std::size_t n = comp.size();
  std::vector<std::string> names(n);
  names[0] = "0";
  if (n >= 2) names[n - 1] = "1";
  std::size_t next = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!names[i].empty()) continue;
    std::string base = next < 26 ? std::string(1, char('a' + next)) : "e" + std::to_string(next);
    ++next;
    names[i] = base;
    const auto partner = comp[i];
    if (partner != i && partner > 0 && std::size_t(partner) + 1 < n && names[partner].empty())
      names[partner] = base + "'";
  }
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (names[i].empty()) names[i] = "e" + std::to_string(next++);
  return names;
}

inline BoundedLattice chain_lattice(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> covers;
  auto names = lattice_names(n);
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return BoundedLattice(poset_from_covers(names, covers));
}

}  // namespace detail

/// Every order-reversing involution of the carrier (no complement condition).
inline std::vector<UnaryTable> enumerate_antitone_involutions(const BoundedLattice& l) {
  return detail::antitone_involutions(l, [](ElementId, ElementId) { return true; });
}

/// All orthocomplementations of `l`, optionally only the orthomodular ones.
/// Partners are restricted to lattice complements, which forces 0' = 1.
inline std::vector<UnaryTable> enumerate_orthocomplements(const BoundedLattice& l, bool require_omod) {
  auto is_complement = [&](ElementId x, ElementId y) {
    if (x == y && !l.trivial()) return false;
    return l.join(x, y) == l.top() && l.meet(x, y) == l.bottom();
  };
  auto candidates = detail::antitone_involutions(l, is_complement);
  std::vector<UnaryTable> out;
  for (auto& comp : candidates) {
    OrthoCandidate c(l, comp);
    if (!verify_ortholattice(c).overall()) continue;
    if (require_omod && !check_orthomodularity(c).overall()) continue;
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// One canonically labeled representative per isomorphism class of bounded
/// lattices with 1..max_size elements, sorted by certificate.
///
/// Removing a coatom from a finite lattice leaves a lattice, so every class
/// of size n arises from a class of size n-1 by adding a new coatom above a
/// down-set of the middle elements. Children whose certificate was already
/// produced are rejected.
inline std::vector<BoundedLattice> enumerate_bounded_lattices(const EnumerationConfig& cfg) {
  cfg.validate();
  std::vector<BoundedLattice> out;
  out.push_back(BoundedLattice(Poset({"0"}, Relation(1, 1))));
  if (cfg.max_size == 1) return out;

  std::vector<BoundedLattice> level{detail::chain_lattice(2)};
  std::vector<BoundedLattice> all(level);
  for (std::size_t n = 3; n <= cfg.max_size; ++n) {
    std::map<CanonicalCertificate, BoundedLattice> next;
    const std::size_t middle = n - 3;  // middle elements of the parent
    std::vector<std::string> scratch_names;
    for (std::size_t i = 0; i < n; ++i) scratch_names.push_back("t" + std::to_string(i));

    for (const auto& parent : level) {
      // Parent is canonical: bottom 0, middle 1..middle, top middle+1.
      for (std::uint32_t mask = 0; mask < (1u << middle); ++mask) {
        bool down_closed = true;
        for (std::size_t a = 0; a < middle && down_closed; ++a) {
          if (!(mask >> a & 1u)) continue;
          for (std::size_t b = 0; b < middle && down_closed; ++b)
            if (!(mask >> b & 1u) && parent.leq(ElementId(b + 1), ElementId(a + 1))) down_closed = false;
        }
        if (!down_closed) continue;

        const std::size_t fresh = n - 2, top = n - 1;
        Relation leq(n);
        for (std::size_t i = 0; i <= middle; ++i)
          for (std::size_t j = 0; j <= middle; ++j) leq(i, j) = parent.leq(ElementId(i), ElementId(j));
        for (std::size_t i = 0; i < n; ++i) leq(i, top) = 1;
        leq(fresh, fresh) = 1;
        leq(0, fresh) = 1;
        for (std::size_t a = 0; a < middle; ++a)
          if (mask >> a & 1u) leq(a + 1, fresh) = 1;

        auto candidate = BoundedLattice::try_from(Poset(scratch_names, std::move(leq)));
        if (!candidate) continue;
        auto labeling = canonical_labeling(*candidate, nullptr, cfg.permutation_budget);
        if (next.count(labeling.certificate)) continue;
        next.emplace(std::move(labeling.certificate),
                     relabel(*candidate, labeling.order, detail::lattice_names(n)));
      }
    }
    level.clear();
    for (auto& [cert, l] : next) level.push_back(std::move(l));
    all.insert(all.end(), level.begin(), level.end());
  }
  out.insert(out.end(), all.begin(), all.end());

  if (cfg.require_orthomodular) {
    std::erase_if(out, [](const BoundedLattice& l) { return enumerate_orthocomplements(l, true).empty(); });
  }
  return out;
}

/// One representative per isomorphism class of (lattice, orthocomplement)
/// pairs with at most max_size elements; orthomodular only if the config asks.
inline std::vector<OrthoCandidate> enumerate_ortholattices(const EnumerationConfig& cfg) {
  EnumerationConfig lattice_cfg = cfg;
  lattice_cfg.require_orthomodular = false;
  std::map<CanonicalCertificate, OrthoCandidate> classes;
  for (const auto& l : enumerate_bounded_lattices(lattice_cfg)) {
    for (const auto& comp : enumerate_orthocomplements(l, cfg.require_orthomodular)) {
      auto labeling = canonical_labeling(l, &comp, cfg.permutation_budget);
      if (classes.count(labeling.certificate)) continue;
      const auto pos = inverse_order(labeling.order);
      UnaryTable relabeled(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) relabeled[k] = pos[comp[labeling.order[k]]];
      auto names = l.size() == 1 ? std::vector<std::string>{"0"} : detail::ortho_names(relabeled);
      OrthoCandidate c(relabel(l, labeling.order, std::move(names)), std::move(relabeled));
      classes.emplace(std::move(labeling.certificate), std::move(c));
    }
  }
  std::vector<OrthoCandidate> out;
  for (auto& [cert, c] : classes) out.push_back(std::move(c));
  return out;
}

namespace detail {

template <typename S>
using Finder = std::function<AxiomResult(const S&)>;

inline const std::map<std::string, Finder<BoundedLattice>, std::less<>>& lattice_finders() {
  static const auto table = [] {
    std::map<std::string, Finder<BoundedLattice>, std::less<>> m;
    for (std::string id : {"order-join", "order-meet", "commutativity", "associativity",
                           "idempotence", "absorption", "bounds"}) {
      m[id] = [id](const BoundedLattice& l) { return *verify_lattice_laws(l).find(id); };
    }
    m["distributivity"] = [](const BoundedLattice& l) { return axioms::distributivity(l); };
    return m;
  }();
  return table;
}

inline const std::map<std::string, Finder<OrthoCandidate>, std::less<>>& ortho_finders() {
  static const auto table = [] {
    std::map<std::string, Finder<OrthoCandidate>, std::less<>> m;
    m["join-complement"] = axioms::join_complement;
    m["antitony"] = axioms::antitony;
    m["involution"] = axioms::involution;
    m["meet-complement"] = axioms::meet_complement;
    m["de-morgan-join"] = axioms::de_morgan_join;
    m["de-morgan-meet"] = axioms::de_morgan_meet;
    m["orthomodularity-(v)"] = axioms::orthomodular_law;
    m["orthomodularity-(vi)"] = axioms::orthomodular_law_dual;
    m["complementation"] = axioms::complementation;
    return m;
  }();
  return table;
}

inline const std::map<std::string, Finder<LrGroupoid>, std::less<>>& groupoid_finders() {
  static const auto table = [] {
    std::map<std::string, Finder<LrGroupoid>, std::less<>> m;
    m["unit-right"] = axioms::unit_right;
    m["unit-left"] = axioms::unit_left;
    m["left-adjointness"] = axioms::left_adjointness;
    m["divisibility"] = axioms::divisibility;
    m["antitony"] = [](const LrGroupoid& g) { return axioms::negation_antitony(g, derived_negation(g)); };
    m["double-negation"] = [](const LrGroupoid& g) { return axioms::double_negation(g, derived_negation(g)); };
    m["eq1"] = [](const LrGroupoid& g) { return axioms::eq1(g, derived_negation(g)); };
    m["eq2"] = [](const LrGroupoid& g) { return axioms::eq2(g, derived_negation(g)); };
    m["eq3"] = axioms::eq3;
    return m;
  }();
  return table;
}

template <typename S>
std::optional<Witness> find_in(const std::map<std::string, Finder<S>, std::less<>>& finders,
                               const S& s, std::string_view axiom) {
  auto it = finders.find(axiom);
  if (it == finders.end()) return std::nullopt;
  return it->second(s).witness;
}

[[noreturn]] inline void unknown_axiom(std::string_view axiom) {
  throw Error(ErrorKind::UnknownAxiomId, std::string(axiom));
}

}  // namespace detail

/// Axiom ids accepted by find_counterexample for each structure kind.
inline std::vector<std::string> lattice_axiom_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, f] : detail::lattice_finders()) ids.push_back(id);
  return ids;
}
inline std::vector<std::string> ortho_axiom_ids() {
  auto ids = lattice_axiom_ids();
  for (const auto& [id, f] : detail::ortho_finders()) ids.push_back(id);
  return ids;
}
inline std::vector<std::string> groupoid_axiom_ids() {
  auto ids = lattice_axiom_ids();
  for (const auto& [id, f] : detail::groupoid_finders()) ids.push_back(id);
  return ids;
}

/// First witness of `axiom` failing, in row-major scan order, or nullopt if
/// the axiom holds.
inline std::optional<Witness> find_counterexample(const BoundedLattice& l, std::string_view axiom) {
  if (!detail::lattice_finders().count(axiom)) detail::unknown_axiom(axiom);
  return detail::find_in(detail::lattice_finders(), l, axiom);
}

inline std::optional<Witness> find_counterexample(const OrthoCandidate& c, std::string_view axiom) {
  if (detail::ortho_finders().count(axiom)) return detail::find_in(detail::ortho_finders(), c, axiom);
  return find_counterexample(c.lattice(), axiom);
}

inline std::optional<Witness> find_counterexample(const LrGroupoid& g, std::string_view axiom) {
  if (detail::groupoid_finders().count(axiom)) return detail::find_in(detail::groupoid_finders(), g, axiom);
  return find_counterexample(g.lattice(), axiom);
}

}  // namespace ortholab
