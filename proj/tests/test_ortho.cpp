#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace ortholab;
using testing_support::id;

namespace {

std::string witness_text(const AxiomResult* r, const OrthoCandidate& c) {
  return r && r->witness ? render_witness(*r->witness, c.names()) : "";
}

// First (x, y, z) in row-major order violating distributivity, computed from
// the raw order matrix.
std::optional<std::array<std::size_t, 3>> first_distributivity_failure(const oracle::Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto lhs = *oracle::lub(m, x, *oracle::glb(m, y, z));
        const auto rhs = *oracle::glb(m, *oracle::lub(m, x, y), *oracle::lub(m, x, z));
        if (lhs != rhs) return std::array<std::size_t, 3>{x, y, z};
      }
  return std::nullopt;
}

}  // namespace

TEST(VerifyOrtholattice, Mo2PassesEverything) {
  const auto r = verify_ortholattice(catalog::mo2());
  EXPECT_TRUE(r.overall());
  for (const char* id : {"join-complement", "antitony", "involution", "meet-complement", "de-morgan-join",
                         "de-morgan-meet", "de-morgan-implied"})
    EXPECT_TRUE(r.passed(id)) << id;
}

TEST(VerifyOrtholattice, IdentityOnBooleanFourFailsJoinComplement) {
  const auto b = catalog::boolean_algebra(2);
  OrthoCandidate c(b.lattice(), UnaryTable{0, 1, 2, 3});
  const auto r = verify_ortholattice(c);
  EXPECT_FALSE(r.overall());
  const auto* jc = r.find("join-complement");
  ASSERT_NE(jc, nullptr);
  EXPECT_FALSE(jc->passed);
  // Row-major scan reports the bottom first; every atom fails as well.
  EXPECT_EQ(witness_text(jc, c), "x=0");
  for (const char* atom : {"a", "b"}) {
    const auto x = id(c.lattice(), atom);
    EXPECT_NE(c.lattice().join(x, c.comp(x)), c.lattice().top());
  }
  // Identity is antitone only on an antichain; here it is not.
  EXPECT_FALSE(r.passed("antitony"));
  EXPECT_TRUE(r.passed("involution"));
}

TEST(VerifyOrtholattice, HexagonIsAnOrtholattice) {
  const auto r = verify_ortholattice(catalog::hexagon());
  EXPECT_TRUE(r.overall());
}

TEST(VerifyOrtholattice, FailuresDoNotAbortLaterChecks) {
  const auto l = catalog::chain(3);
  OrthoCandidate c(l, UnaryTable{0, 0, 0});
  const auto r = verify_ortholattice(c);
  EXPECT_EQ(r.results().size(), 7u);
  for (const auto& res : r.results())
    if (!res.passed) {
      EXPECT_TRUE(res.witness.has_value()) << res.id;
    }
}

TEST(VerifyOrtholattice, TrivialLatticeIsAcceptedAndFlagged) {
  OrthoCandidate c(BoundedLattice(Poset({"0"}, Relation(1, 1))), UnaryTable{0});
  const auto r = verify_orthomodular_lattice(c);
  EXPECT_TRUE(r.overall());
  ASSERT_FALSE(r.notes().empty());
  EXPECT_NE(r.notes()[0].find("trivial"), std::string::npos);
}

TEST(CheckOrthomodularity, Mo2PassesBothForms) {
  const auto r = check_orthomodularity(catalog::mo2());
  EXPECT_TRUE(r.passed("orthomodularity-(v)"));
  EXPECT_TRUE(r.passed("orthomodularity-(vi)"));
  EXPECT_TRUE(r.passed("orthomodularity-agree"));
  EXPECT_FALSE(r.conditional());
}

TEST(CheckOrthomodularity, HexagonFailsWithSameChainWitness) {
  const auto h = catalog::hexagon();
  const auto r = check_orthomodularity(h);
  EXPECT_FALSE(r.overall());
  const auto* v = r.find("orthomodularity-(v)");
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(witness_text(v, h), "x=x y=y");
  // x v (y ^ x') = x v 0 = x != y
  const auto& l = h.lattice();
  const auto x = id(l, "x"), y = id(l, "y");
  EXPECT_EQ(l.meet(y, h.comp(x)), l.bottom());
  EXPECT_NE(l.join(x, l.meet(y, h.comp(x))), y);
  EXPECT_TRUE(r.passed("orthomodularity-agree"));
}

TEST(CheckOrthomodularity, BooleanWithTrueComplementPasses) {
  EXPECT_TRUE(check_orthomodularity(catalog::boolean_algebra(2)).overall());
}

TEST(CheckOrthomodularity, ConditionalWhenNotAnOrtholattice) {
  const auto l = catalog::chain(3);
  const auto r = check_orthomodularity(OrthoCandidate(l, UnaryTable{2, 2, 0}));
  EXPECT_TRUE(r.conditional());
}

TEST(IsBoolean, Mo2IsNot) {
  const auto mo2 = catalog::mo2();
  const auto verdict = is_boolean(mo2);
  EXPECT_FALSE(verdict);
  EXPECT_EQ(verdict.failed_law, "distributivity");
  ASSERT_TRUE(verdict.witness.has_value());
  const auto expected = first_distributivity_failure(testing_support::to_matrix(mo2.lattice()));
  ASSERT_TRUE(expected.has_value());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ((*verdict.witness)[i].element, (*expected)[i]);
  EXPECT_EQ(render_witness(*verdict.witness, mo2.names()), "x=a y=a' z=b");
}

TEST(IsBoolean, BooleanAlgebrasAndTwoChain) {
  EXPECT_TRUE(is_boolean(catalog::boolean_algebra(2)));
  EXPECT_TRUE(is_boolean(catalog::boolean2()));
  EXPECT_TRUE(is_boolean(catalog::boolean_algebra(3)));
}

TEST(IsBoolean, DistributiveButNotComplemented) {
  const auto verdict = is_boolean(OrthoCandidate(catalog::chain(3), UnaryTable{2, 1, 0}));
  EXPECT_FALSE(verdict);
  EXPECT_EQ(verdict.failed_law, "complementation");
}

// de Morgan laws follow from antitony and involution. Checked on every unary
// map of every lattice with at most 5 elements, plus antitone involutions of
// all 8-element lattices.
TEST(OrthoMetaProperty, DeMorganFollowsFromAntitonyAndInvolution) {
  std::size_t premises_held = 0;
  for (const auto& l : testing_support::lattice_corpus(5)) {
    const std::size_t n = l.size();
    UnaryTable f(n, 0);
    while (true) {
      const auto r = verify_ortholattice(OrthoCandidate(l, f));
      if (r.passed("antitony") && r.passed("involution")) {
        ++premises_held;
        ASSERT_TRUE(r.passed("de-morgan-join"));
        ASSERT_TRUE(r.passed("de-morgan-meet"));
      }
      ASSERT_TRUE(r.passed("de-morgan-implied"));
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
  }
  EXPECT_GT(premises_held, 0u);
  for (const auto& l : testing_support::lattice_corpus(8))
    for (const auto& f : enumerate_antitone_involutions(l)) {
      const auto r = verify_ortholattice(OrthoCandidate(l, f));
      ASSERT_TRUE(r.passed("de-morgan-join") && r.passed("de-morgan-meet"));
    }
}

// With antitony and involution in place, both orthomodular forms agree.
TEST(OrthoMetaProperty, BothOrthomodularFormsAgree) {
  std::size_t omod = 0, not_omod = 0;
  for (const auto& l : testing_support::lattice_corpus(8))
    for (const auto& f : enumerate_antitone_involutions(l)) {
      const auto r = check_orthomodularity(OrthoCandidate(l, f));
      ASSERT_EQ(r.passed("orthomodularity-(v)"), r.passed("orthomodularity-(vi)"));
      ASSERT_TRUE(r.passed("orthomodularity-agree"));
      (r.passed("orthomodularity-(v)") ? omod : not_omod)++;
    }
  EXPECT_GT(omod, 0u);
  EXPECT_GT(not_omod, 0u);
}

// Verification results do not depend on the labeling.
TEST(OrthoMetaProperty, ResultsAreIsomorphismInvariant) {
  std::mt19937 rng(11);
  EnumerationConfig cfg;
  cfg.max_size = 8;
  for (const auto& c : enumerate_ortholattices(cfg)) {
    const auto base = verify_orthomodular_lattice(c);
    for (int t = 0; t < 3; ++t) {
      const auto s = testing_support::shuffled(c, rng);
      const auto r = verify_orthomodular_lattice(s);
      ASSERT_EQ(r.results().size(), base.results().size());
      for (std::size_t i = 0; i < r.results().size(); ++i)
        ASSERT_EQ(r.results()[i].passed, base.results()[i].passed) << r.results()[i].id;
    }
  }
}
