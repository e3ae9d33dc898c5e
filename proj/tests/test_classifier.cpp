#include <gtest/gtest.h>

#include "cjac/classifier.hpp"
#include "cjac/error.hpp"
#include "cjac/examples.hpp"
#include "cjac/lattice.hpp"
#include "cjac/survey.hpp"
#include "oracle.hpp"

using namespace cjac;

TEST(Classifier, EEqualsFiltByBruteForce) {
  for (const auto& s : semigroups_up_to(12)) {
    bool want = true;
    for (const auto& t : oracle::value_sets(s, s.delta())) want = want && oracle::filt(s, ValueSet::parse(t));
    EXPECT_EQ(e_equals_filt(s), want) << s.to_string();
    if (lemma_2_5_1_applies(s)) EXPECT_TRUE(want) << s.to_string();
  }
  EXPECT_TRUE(e_equals_filt(NumericalSemigroup::parse("3,4,5")));
}

TEST(Classifier, ClauseReportWheneverEEqualsFilt) {
  int checked = 0;
  for (const auto& s : semigroups_up_to(14)) {
    if (!e_equals_filt(s)) {
      EXPECT_THROW(check_2_5_2(s), Error);
      continue;
    }
    const auto r = check_2_5_2(s);
    EXPECT_TRUE(r.at_least_one) << s.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Classifier, GorensteinOverringClosedForm) {
  for (const auto& s : semigroups_up_to(16)) {
    const auto l = lemma_3_4(s);
    EXPECT_EQ(l.computed, l.predicted) << s.to_string();
  }
}

TEST(Classifier, RankConditionAgreesWithMultiplicityCondition) {
  for (const auto& s : semigroups_up_to(16)) {
    const auto r = thm_3_3_report(s, ClassifierOptions{SearchBudget{}, false});
    EXPECT_TRUE(r.remark_0_6_ok) << s.to_string();
  }
}

TEST(Classifier, StatusGrades) {
  const auto s = NumericalSemigroup::parse("3,5,7");
  ClassifierOptions o;
  for (const auto& d : enumerate_E(s, s.delta())) {
    const auto m = kbar_status(s, d, o);
    if (!oracle::filt(s, d)) {
      EXPECT_EQ(m.status, KStatus::CertifiedOut);
    } else if (m.family) {
      EXPECT_EQ(limit_of(*m.family, s).delta, d);
    }
  }
  const auto r = NumericalSemigroup::parse("3,4,5");
  EXPECT_EQ(kbar_status(r, ValueSet::parse("{1}+[3,)")).status, KStatus::Witnessed);
  const auto q = NumericalSemigroup::parse("{0,4}+[6,)");
  ASSERT_EQ(rank_M_mod(q, ConductorIdeal::C), 1);
  EXPECT_EQ(kbar_status(q, ValueSet::parse("{2,4}+[6,)")).status, KStatus::TheoremBacked);
}

TEST(Classifier, NaturalNumbersHaveNoDiscrepancy) {
  const auto r = boundary_report(NumericalSemigroup());
  EXPECT_TRUE(r.discrepancies.empty());
  EXPECT_EQ(r.component_surrogate, 1);
}

TEST(Classifier, BoundaryReportFrozen) {
  const auto r = boundary_report(NumericalSemigroup::parse("3,4,5"));
  EXPECT_EQ(r.component_surrogate, 2);
  EXPECT_EQ(r.Filt_equals_Kbar_status, FiltKbar::Proved);
  EXPECT_TRUE(r.discrepancies.empty());
  EXPECT_TRUE(r.theorem_1_2_ok);
  EXPECT_EQ(r.iso_classes.size(), 4u);
}

TEST(Classifier, ThreeFiveSevenEquivalenceGap) {
  // Every member over Γ and Γ' is reached although rk(M/M² + tC) = 2.
  const auto r = thm_3_3_report(NumericalSemigroup::parse("3,5,7"));
  EXPECT_FALSE(r.condition_i);
  EXPECT_TRUE(r.condition_iii_evidence);
  ASSERT_EQ(r.discrepancies.size(), 1u);
  EXPECT_NE(r.discrepancies[0].find("rk(M/M² + tC) ≠ 1"), std::string::npos);
}

TEST(Classifier, CounterexampleConstructions) {
  EXPECT_THROW(check_2_7_and_2_8(NumericalSemigroup::parse("3,4,5")), Error);
  const auto s = NumericalSemigroup::parse("4,13,18,19");
  const auto r = check_2_7_and_2_8(s, {{"printed", ValueSet::parse("{5,9,11,13,14}+[16,)")}});
  ASSERT_EQ(r.probes.size(), 1u);
  ASSERT_TRUE(r.probes[0].closure_diagnostic.has_value());
  EXPECT_NE(r.probes[0].closure_diagnostic->find("15"), std::string::npos);
}

TEST(Classifier, StructureChain) {
  EXPECT_THROW(structure_3_8(NumericalSemigroup::parse("2,3")), Error);
  const auto r = structure_3_8(NumericalSemigroup::parse("{0,3}+[5,)"));
  EXPECT_TRUE(r.unique_case_3_7);
  EXPECT_EQ(r.conductors.front(), 5);
}

TEST(Examples, FixturesQuickSubset) {
  const auto fixtures = load_fixtures(default_fixture_path());
  for (int id : {1, 2, 5, 6, 7, 8}) {
    ReplicateOptions o;
    o.only = id;
    const auto r = replicate_examples(fixtures, o);
    ASSERT_EQ(r.size(), 1u);
    const Outcome want = (id == 5 || id == 8) ? Outcome::Diagnostic : Outcome::Pass;
    EXPECT_EQ(r[0].outcome, want) << "example " << id;
  }
}
