#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/report.hpp"
#include "ortholab/table.hpp"

namespace ortholab {

/// A bounded lattice with a candidate complementation. Nothing beyond
/// totality of the unary table is assumed; the axioms are checked.
class OrthoCandidate {
 public:
  OrthoCandidate(BoundedLattice lattice, UnaryTable comp)
      : lattice_(std::move(lattice)), comp_(std::move(comp)) {
    if (comp_.size() != lattice_.size())
      throw Error(ErrorKind::TableNotTotal, "complement map must cover every element");
    for (ElementId v : comp_)
      if (v >= lattice_.size()) throw Error(ErrorKind::TableNotTotal, "complement entry out of range");
  }

  const BoundedLattice& lattice() const noexcept { return lattice_; }
  const UnaryTable& comp() const noexcept { return comp_; }
  ElementId comp(ElementId x) const { return comp_[x]; }
  std::size_t size() const noexcept { return lattice_.size(); }
  const std::vector<std::string>& names() const noexcept { return lattice_.names(); }

  bool operator==(const OrthoCandidate&) const = default;

 private:
  BoundedLattice lattice_;
  UnaryTable comp_;
};

namespace axioms {

using detail::result_of;
using detail::scan1;
using detail::scan2;
using detail::scan3;

inline AxiomResult join_complement(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("join-complement", scan1(c.size(), [&](ElementId x) {
                     return l.join(x, c.comp(x)) == l.top();
                   }));
}

inline AxiomResult antitony(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("antitony", scan2(c.size(), [&](ElementId x, ElementId y) {
                     return !l.leq(x, y) || l.leq(c.comp(y), c.comp(x));
                   }));
}

inline AxiomResult involution(const OrthoCandidate& c) {
  return result_of("involution", scan1(c.size(), [&](ElementId x) {
                     return c.comp(c.comp(x)) == x;
                   }));
}

inline AxiomResult meet_complement(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("meet-complement", scan1(c.size(), [&](ElementId x) {
                     return l.meet(x, c.comp(x)) == l.bottom();
                   }), "derived");
}

inline AxiomResult de_morgan_join(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("de-morgan-join", scan2(c.size(), [&](ElementId x, ElementId y) {
                     return c.comp(l.join(x, y)) == l.meet(c.comp(x), c.comp(y));
                   }), "derived");
}

inline AxiomResult de_morgan_meet(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("de-morgan-meet", scan2(c.size(), [&](ElementId x, ElementId y) {
                     return c.comp(l.meet(x, y)) == l.join(c.comp(x), c.comp(y));
                   }), "derived");
}

// x <= y implies y = x v (y ^ x')
inline AxiomResult orthomodular_law(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("orthomodularity-(v)", scan2(c.size(), [&](ElementId x, ElementId y) {
                     return !l.leq(x, y) || y == l.join(x, l.meet(y, c.comp(x)));
                   }));
}

// x <= y implies x = y ^ (x v y')
inline AxiomResult orthomodular_law_dual(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("orthomodularity-(vi)", scan2(c.size(), [&](ElementId x, ElementId y) {
                     return !l.leq(x, y) || x == l.meet(y, l.join(x, c.comp(y)));
                   }));
}

inline AxiomResult distributivity(const BoundedLattice& l) {
  return result_of("distributivity", scan3(l.size(), [&](ElementId x, ElementId y, ElementId z) {
                     return l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z));
                   }));
}

// x' is a lattice complement of x.
inline AxiomResult complementation(const OrthoCandidate& c) {
  const auto& l = c.lattice();
  return result_of("complementation", scan1(c.size(), [&](ElementId x) {
                     return l.join(x, c.comp(x)) == l.top() && l.meet(x, c.comp(x)) == l.bottom();
                   }));
}

}  // namespace axioms

/// Complementation axioms plus the derived laws that follow from them.
/// Every law is scanned; a failure never stops the remaining checks.
inline VerificationReport verify_ortholattice(const OrthoCandidate& c) {
  VerificationReport report;
  report.add(axioms::join_complement(c));
  report.add(axioms::antitony(c));
  report.add(axioms::involution(c));
  report.add(axioms::meet_complement(c));
  auto dm_join = axioms::de_morgan_join(c);
  auto dm_meet = axioms::de_morgan_meet(c);
  const bool premises = report.passed("antitony") && report.passed("involution");
  std::optional<Witness> implied_failure;
  if (premises) implied_failure = dm_join.passed ? dm_meet.witness : dm_join.witness;
  report.add(std::move(dm_join));
  report.add(std::move(dm_meet));
  report.add(detail::result_of(
      "de-morgan-implied", std::move(implied_failure),
      premises ? "antitony and involution hold, so both de Morgan laws must hold"
               : "vacuous: antitony or involution fails"));
  if (c.lattice().trivial()) report.note("trivial lattice: bottom equals top");
  return report;
}

/// Orthomodular law and its dual form, scanned independently over comparable
/// pairs. When antitony and involution hold the two must agree, and the
/// report asserts it.
inline VerificationReport check_orthomodularity(const OrthoCandidate& c) {
  VerificationReport report;
  const auto ortho = verify_ortholattice(c);
  if (!ortho.overall()) report.mark_conditional();
  auto v = axioms::orthomodular_law(c);
  auto vi = axioms::orthomodular_law_dual(c);
  const bool premises = ortho.passed("antitony") && ortho.passed("involution");
  std::optional<Witness> disagreement;
  if (premises && v.passed != vi.passed) disagreement = v.passed ? vi.witness : v.witness;
  report.add(std::move(v));
  report.add(std::move(vi));
  report.add(detail::result_of(
      "orthomodularity-agree", std::move(disagreement),
      premises ? "both forms must agree" : "vacuous: antitony or involution fails"));
  if (c.lattice().trivial()) report.note("trivial lattice: bottom equals top");
  return report;
}

/// Full orthomodular-lattice check: complementation axioms plus orthomodularity.
inline VerificationReport verify_orthomodular_lattice(const OrthoCandidate& c) {
  auto report = verify_ortholattice(c);
  auto omod = check_orthomodularity(c);
  report.append(omod);
  return report;
}

struct BooleanVerdict {
  bool value = false;
  /// "distributivity" or "complementation" when value is false.
  std::string failed_law;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return value; }
};

/// Distributive lattice whose unary table is a complementation.
inline BooleanVerdict is_boolean(const OrthoCandidate& c) {
  auto dist = axioms::distributivity(c.lattice());
  if (!dist.passed) return {false, dist.id, dist.witness};
  auto comp = axioms::complementation(c);
  if (!comp.passed) return {false, comp.id, comp.witness};
  return {true, {}, std::nullopt};
}

}  // namespace ortholab
