#pragma once

#include <string>
#include <utility>

#include "ortholab/error.hpp"
#include "ortholab/order.hpp"
#include "ortholab/report.hpp"
#include "ortholab/table.hpp"

namespace ortholab {

/// Bounded lattice with a multiplication (odot) and an implication (imp).
/// Only totality is enforced here; the groupoid axioms are checked.
class LrGroupoid {
 public:
  LrGroupoid(BoundedLattice lattice, BinOpTable odot, BinOpTable imp)
      : lattice_(std::move(lattice)), odot_(std::move(odot)), imp_(std::move(imp)) {
    check_total(odot_, "odot");
    check_total(imp_, "imp");
  }

  const BoundedLattice& lattice() const noexcept { return lattice_; }
  const BinOpTable& odot_table() const noexcept { return odot_; }
  const BinOpTable& imp_table() const noexcept { return imp_; }
  ElementId odot(ElementId x, ElementId y) const { return odot_(x, y); }
  ElementId imp(ElementId x, ElementId y) const { return imp_(x, y); }
  std::size_t size() const noexcept { return lattice_.size(); }
  const std::vector<std::string>& names() const noexcept { return lattice_.names(); }

  bool operator==(const LrGroupoid&) const = default;

 private:
  void check_total(const BinOpTable& t, const char* what) const {
    if (t.size() != lattice_.size())
      throw Error(ErrorKind::TableNotTotal, std::string(what) + " table size does not match carrier");
    for (ElementId v : t.cells())
      if (v >= lattice_.size())
        throw Error(ErrorKind::TableNotTotal, std::string(what) + " table entry out of range");
  }

  BoundedLattice lattice_;
  BinOpTable odot_;
  BinOpTable imp_;
};

/// Which groupoid laws to check. Presets mirror the hypothesis and
/// conclusion sets of the two constructions.
struct AxiomProfile {
  bool unit = false;
  bool left_adjointness = false;
  bool divisibility = false;
  bool antitony = false;
  bool double_negation = false;
  bool eq1 = false;
  bool eq2 = false;
  bool eq3 = false;

  bool any() const {
    return unit || left_adjointness || divisibility || antitony || double_negation || eq1 || eq2 || eq3;
  }
  bool any_extra() const {
    return divisibility || antitony || double_negation || eq1 || eq2 || eq3;
  }

  /// Unit laws and left adjointness.
  static AxiomProfile core() {
    AxiomProfile p;
    p.unit = p.left_adjointness = true;
    return p;
  }
  /// Everything a Sasaki groupoid of an orthomodular lattice satisfies.
  static AxiomProfile sasaki_image() {
    AxiomProfile p = core();
    p.divisibility = p.antitony = p.double_negation = true;
    p.eq1 = p.eq2 = p.eq3 = true;
    return p;
  }
  /// Hypotheses under which the derived negation yields an orthomodular lattice.
  static AxiomProfile induces_orthomodular() {
    AxiomProfile p = core();
    p.antitony = p.double_negation = p.eq1 = p.eq3 = true;
    return p;
  }
  /// Hypotheses for the groupoid-side round trip, as stated.
  static AxiomProfile round_trip() {
    AxiomProfile p = induces_orthomodular();
    p.eq2 = true;
    return p;
  }
  /// The same with divisibility added.
  static AxiomProfile round_trip_with_divisibility() {
    AxiomProfile p = round_trip();
    p.divisibility = true;
    return p;
  }
};

/// x' := x -> 0
inline UnaryTable derived_negation(const LrGroupoid& g) {
  UnaryTable neg(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) neg[x] = g.imp(ElementId(x), g.lattice().bottom());
  return neg;
}

namespace axioms {

inline AxiomResult unit_right(const LrGroupoid& g) {
  const auto one = g.lattice().top();
  return detail::result_of("unit-right", detail::scan1(g.size(), [&](ElementId x) {
                             return g.odot(x, one) == x;
                           }));
}

inline AxiomResult unit_left(const LrGroupoid& g) {
  const auto one = g.lattice().top();
  return detail::result_of("unit-left", detail::scan1(g.size(), [&](ElementId x) {
                             return g.odot(one, x) == x;
                           }));
}

// x odot y <= z  iff  x <= y -> z, over all n^3 triples.
inline AxiomResult left_adjointness(const LrGroupoid& g) {
  const auto& l = g.lattice();
  return detail::result_of("left-adjointness",
                           detail::scan3(g.size(), [&](ElementId x, ElementId y, ElementId z) {
                             return l.leq(g.odot(x, y), z) == l.leq(x, g.imp(y, z));
                           }));
}

inline AxiomResult divisibility(const LrGroupoid& g) {
  const auto& l = g.lattice();
  return detail::result_of("divisibility", detail::scan2(g.size(), [&](ElementId x, ElementId y) {
                             return g.odot(g.imp(x, y), x) == l.meet(x, y);
                           }));
}

inline AxiomResult negation_antitony(const LrGroupoid& g, const UnaryTable& neg) {
  const auto& l = g.lattice();
  return detail::result_of("antitony", detail::scan2(g.size(), [&](ElementId x, ElementId y) {
                             return !l.leq(x, y) || l.leq(neg[y], neg[x]);
                           }));
}

inline AxiomResult double_negation(const LrGroupoid& g, const UnaryTable& neg) {
  return detail::result_of("double-negation", detail::scan1(g.size(), [&](ElementId x) {
                             return neg[neg[x]] == x;
                           }));
}

// x odot y = (x v y') ^ y
inline AxiomResult eq1(const LrGroupoid& g, const UnaryTable& neg) {
  const auto& l = g.lattice();
  return detail::result_of("eq1", detail::scan2(g.size(), [&](ElementId x, ElementId y) {
                             return g.odot(x, y) == l.meet(l.join(x, neg[y]), y);
                           }));
}

// x -> y = (y ^ x) v x'
inline AxiomResult eq2(const LrGroupoid& g, const UnaryTable& neg) {
  const auto& l = g.lattice();
  return detail::result_of("eq2", detail::scan2(g.size(), [&](ElementId x, ElementId y) {
                             return g.imp(x, y) == l.join(l.meet(y, x), neg[x]);
                           }));
}

// x odot (x v y) = x
inline AxiomResult eq3(const LrGroupoid& g) {
  const auto& l = g.lattice();
  return detail::result_of("eq3", detail::scan2(g.size(), [&](ElementId x, ElementId y) {
                             return g.odot(x, l.join(x, y)) == x;
                           }));
}

}  // namespace axioms

namespace detail {

inline void add_extras(VerificationReport& report, const LrGroupoid& g, const AxiomProfile& p) {
  const auto neg = derived_negation(g);
  if (p.divisibility) report.add(axioms::divisibility(g));
  if (p.antitony) report.add(axioms::negation_antitony(g, neg));
  if (p.double_negation) report.add(axioms::double_negation(g, neg));
  if (p.eq1) report.add(axioms::eq1(g, neg));
  if (p.eq2) report.add(axioms::eq2(g, neg));
  if (p.eq3) report.add(axioms::eq3(g));
}

}  // namespace detail

/// Unit laws and left adjointness.
inline VerificationReport verify_lrg_core(const LrGroupoid& g) {
  VerificationReport report;
  report.add(axioms::unit_right(g));
  report.add(axioms::unit_left(g));
  report.add(axioms::left_adjointness(g));
  if (g.lattice().trivial()) report.note("trivial lattice: bottom equals top");
  return report;
}

/// The non-core identities selected by `profile`. Negation-based identities
/// use the derived negation x -> 0.
inline VerificationReport verify_lrg_extras(const LrGroupoid& g, const AxiomProfile& profile) {
  if (!profile.any_extra()) throw Error(ErrorKind::InvalidArgument, "profile selects no identity");
  VerificationReport report;
  detail::add_extras(report, g, profile);
  return report;
}

/// Every law selected by `profile`, core included.
inline VerificationReport verify_lrg(const LrGroupoid& g, const AxiomProfile& profile) {
  if (!profile.any()) throw Error(ErrorKind::InvalidArgument, "profile selects no axiom");
  VerificationReport report;
  if (profile.unit) {
    report.add(axioms::unit_right(g));
    report.add(axioms::unit_left(g));
  }
  if (profile.left_adjointness) report.add(axioms::left_adjointness(g));
  detail::add_extras(report, g, profile);
  if (g.lattice().trivial()) report.note("trivial lattice: bottom equals top");
  return report;
}

}  // namespace ortholab
