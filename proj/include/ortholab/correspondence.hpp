#pragma once

#include <optional>
#include <string>

#include "ortholab/error.hpp"
#include "ortholab/ortho.hpp"
#include "ortholab/report.hpp"
#include "ortholab/residuated.hpp"

namespace ortholab {

namespace detail {

inline std::string describe_failure(const VerificationReport& report,
                                    std::span<const std::string> names) {
  for (const auto& r : report.results())
    if (!r.passed)
      return r.id + (r.witness ? " fails at " + render_witness(*r.witness, names) : " fails");
  return "all checks passed";
}

}  // namespace detail

/// Groupoid built from the Sasaki projection:
///   x odot y = (x v y') ^ y,   x -> y = (y ^ x) v x'.
/// The input must be an orthomodular lattice unless `allow_non_orthomodular`
/// is set, which lets counterexample studies push arbitrary complements
/// through the same formulas.
inline LrGroupoid sasaki_groupoid(const OrthoCandidate& c, bool allow_non_orthomodular = false) {
  if (!allow_non_orthomodular) {
    const auto report = verify_orthomodular_lattice(c);
    if (!report.overall())
      throw Error(ErrorKind::NotOrthomodular, detail::describe_failure(report, c.names()));
  }
  const auto& l = c.lattice();
  const std::size_t n = c.size();
  BinOpTable odot(n), imp(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = ElementId(i), y = ElementId(j);
      odot(i, j) = l.meet(l.join(x, c.comp(y)), y);
      imp(i, j) = l.join(l.meet(y, x), c.comp(x));
    }
  return LrGroupoid(l, std::move(odot), std::move(imp));
}

/// The lattice of `g` with the derived negation as complement, no checks.
inline OrthoCandidate negation_structure(const LrGroupoid& g) {
  return OrthoCandidate(g.lattice(), derived_negation(g));
}

/// Orthomodular lattice induced by a groupoid. The hypotheses in `hypothesis`
/// are checked first (HypothesisViolated); the conclusion is then verified by
/// running the orthomodular-lattice checkers (ConclusionViolated).
inline OrthoCandidate induced_oml(const LrGroupoid& g,
                                  const AxiomProfile& hypothesis = AxiomProfile::induces_orthomodular()) {
  const auto pre = verify_lrg(g, hypothesis);
  if (!pre.overall())
    throw Error(ErrorKind::HypothesisViolated, detail::describe_failure(pre, g.names()));
  auto c = negation_structure(g);
  const auto post = verify_orthomodular_lattice(c);
  if (!post.overall())
    throw Error(ErrorKind::ConclusionViolated, detail::describe_failure(post, g.names()));
  return c;
}

namespace detail {

template <typename T>
std::optional<Witness> first_difference(const SquareTable<T>& a, const SquareTable<T>& b) {
  return scan2(a.size(), [&](ElementId x, ElementId y) { return a(x, y) == b(x, y); });
}

inline AxiomResult compare_carrier(const BoundedLattice& a, const BoundedLattice& b) {
  std::optional<Witness> diff;
  if (a.size() != b.size()) {
    diff = Witness{};
  } else {
    diff = scan1(a.size(), [&](ElementId x) { return a.name(x) == b.name(x); });
  }
  return result_of("same-carrier", std::move(diff));
}

}  // namespace detail

/// L(A(L)) == L: same carrier, order and complement table, cell for cell.
inline VerificationReport round_trip_check(const OrthoCandidate& c) {
  VerificationReport report;
  const auto back = negation_structure(sasaki_groupoid(c, true));
  report.add(detail::compare_carrier(c.lattice(), back.lattice()));
  report.add(detail::result_of(
      "same-order", detail::first_difference(c.lattice().poset().relation(),
                                             back.lattice().poset().relation())));
  report.add(detail::result_of("same-complement", detail::scan1(c.size(), [&](ElementId x) {
                                 return c.comp(x) == back.comp(x);
                               })));
  return report;
}

/// A(L(A)) == A: identical odot and imp tables, cell for cell.
inline VerificationReport round_trip_check(const LrGroupoid& g) {
  VerificationReport report;
  const auto back = sasaki_groupoid(negation_structure(g), true);
  report.add(detail::compare_carrier(g.lattice(), back.lattice()));
  report.add(detail::result_of("same-odot", detail::first_difference(g.odot_table(), back.odot_table())));
  report.add(detail::result_of("same-imp", detail::first_difference(g.imp_table(), back.imp_table())));
  return report;
}

/// Postconditions of the Sasaki construction on `c`: every groupoid law and
/// identity, plus x -> 0 == x'.
inline VerificationReport sasaki_postconditions(const OrthoCandidate& c,
                                                bool allow_non_orthomodular = false) {
  const auto g = sasaki_groupoid(c, allow_non_orthomodular);
  auto report = verify_lrg(g, AxiomProfile::sasaki_image());
  const auto neg = derived_negation(g);
  report.add(detail::result_of("negation-is-complement", detail::scan1(c.size(), [&](ElementId x) {
                                 return neg[x] == c.comp(x);
                               })));
  return report;
}

}  // namespace ortholab
