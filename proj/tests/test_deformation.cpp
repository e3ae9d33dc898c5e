#include <gtest/gtest.h>

#include <random>

#include "cjac/deformation.hpp"
#include "cjac/error.hpp"
#include "cjac/lattice.hpp"
#include "cjac/survey.hpp"
#include "oracle.hpp"

using namespace cjac;

namespace {

// Unit family with polynomial coefficients: c0 + Σ ±β^p t^e.
FamilyElement random_unit(std::mt19937& rng, int v0) {
  FamilyElement f = FamilyElement::term(0, 0, Rational(1 + static_cast<long>(rng() % 3)));
  const int n = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i) {
    const long c = static_cast<long>(rng() % 5) - 2;
    if (c == 0) continue;
    f.add(static_cast<int>(rng() % static_cast<unsigned>(std::max(v0, 1))),
          BetaScalar::beta_power(1 + static_cast<int>(rng() % 4), Rational(c)));
  }
  if (!f.is_unit()) f.add(0, BetaScalar(Rational(1)));
  return f;
}

}  // namespace

TEST(FlatLimit, ExampleOneFrozen) {
  const auto s = NumericalSemigroup::parse("3,4,5");
  EXPECT_EQ(limit_of(FamilyElement::parse("t + b"), s).delta, ValueSet::parse("{1}+[3,)"));
  EXPECT_EQ(limit_of(FamilyElement::parse("t^2 + b*t + b^2"), s).delta, ValueSet::parse("{2}+[3,)"));
  EXPECT_EQ(limit_of(FamilyElement::parse("t^2 + 5*b*t + 2*b^2"), s).delta, ValueSet::parse("{2}+[3,)"));
  EXPECT_EQ(limit_of(FamilyElement::parse("1"), s).delta, s.as_value_set());
}

TEST(FlatLimit, MatchesPluckerOracle) {
  std::mt19937 rng(3);
  int checked = 0;
  for (const auto& s : semigroups_up_to(9)) {
    if (s.is_natural() || s.gamma() > 5) continue;
    for (int it = 0; it < 12; ++it) {
      const auto f = random_unit(rng, s.conductor());
      const auto got = limit_of(f, s);
      EXPECT_EQ(got.delta, oracle::plucker_limit(f, s)) << s.to_string() << " " << f.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(FlatLimit, InvariantsAndReparametrization) {
  std::mt19937 rng(5);
  const BetaPoly x = BetaPoly::monomial(Rational(1), 1);
  const BetaScalar unit(BetaPoly(Rational(2)) + x * x);
  for (const auto& s : semigroups_up_to(10)) {
    for (int it = 0; it < 10; ++it) {
      const auto f = random_unit(rng, s.conductor());
      const auto l = limit_of(f, s);
      EXPECT_EQ(static_cast<int>(l.basis.size()), s.gamma());
      EXPECT_EQ(l.delta.colength(), s.delta());
      EXPECT_TRUE(is_closed_under(l.delta, s));
      EXPECT_TRUE(in_filt(s, l.delta));
      EXPECT_EQ(limit_of(f.substitute_scaled(Rational(2)), s).delta, l.delta) << f.to_string();
      EXPECT_EQ(limit_of(f.scaled(unit), s).delta, l.delta) << f.to_string();
    }
  }
}

TEST(FlatLimit, Errors) {
  const auto s = NumericalSemigroup::parse("3,4,5");
  try {
    family_module(FamilyElement::parse("t^2 + b*t"), s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAUnit);
  }
  FamilyMatrix m;
  m.v0 = 3;
  try {
    flat_limit(m, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDrop);
  }
}

TEST(Witness, TMinusBetaReachesTranslatedOverring) {
  for (const auto& s : semigroups_up_to(12)) {
    if (s.is_natural()) continue;
    const auto want = partial_normalization(s).as_value_set().translated(1);
    EXPECT_EQ(limit_of(witness_1_2(s), s).delta, want) << s.to_string();
  }
}

TEST(Witness, ChainFamilyOnRankOne) {
  int checked = 0;
  for (const auto& s : semigroups_up_to(12)) {
    if (s.is_natural() || rank_M_mod(s, ConductorIdeal::C) != 1) continue;
    for (const auto& d : enumerate_E(s, s.delta())) {
      if (!in_filt(s, d)) continue;
      EXPECT_EQ(limit_of(witness_2_6(s, d), s).delta, d) << s.to_string() << " " << d.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
  try {
    witness_2_6(NumericalSemigroup::parse("4,5,6"), ValueSet::parse("{3,4,5,7}+[8,)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisFails);
  }
}

TEST(Witness, FPlusBeta) {
  for (const auto& s : semigroups_up_to(14)) {
    if (s.is_natural() || rank_M_mod(s, ConductorIdeal::C) != 1) continue;
    const auto w = witness_1_3(s);
    EXPECT_EQ(limit_of(w.family, s).delta, w.limit) << s.to_string();
    EXPECT_EQ(w.limit.colength(), s.delta());
  }
}

TEST(Witness, OverringTranslate) {
  int checked = 0;
  for (const auto& s : semigroups_up_to(12)) {
    if (s.is_natural() || !multiplicity_condition(s)) continue;
    const auto prime = partial_normalization(s);
    for (const auto& d : enumerate_E(s, s.delta())) {
      if (!in_filt(s, d) || d.min() < 1) continue;
      const auto target = d.translated(-1);
      if (!is_closed_under(target, prime) || !in_filt(prime, target)) continue;
      const auto w = witness_3_2(s, d);
      EXPECT_EQ(w.target, target);
      EXPECT_EQ(limit_of(w.family, w.ring).delta, target) << s.to_string() << " " << d.to_string();
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Search, FindsSignedWitnesses) {
  const auto s = NumericalSemigroup::parse("4,5,6");
  for (const char* t : {"{3,4,5,7}+[8,)", "{3,4,6,7}+[8,)"}) {
    const auto target = ValueSet::parse(t);
    const auto r = search_witness(s, target);
    ASSERT_TRUE(std::holds_alternative<FamilyElement>(r)) << t;
    EXPECT_EQ(limit_of(std::get<FamilyElement>(r), s).delta, target);
  }
  EXPECT_EQ(std::get<FamilyElement>(search_witness(s, ValueSet::parse("{3,4,6,7}+[8,)"))).to_string(),
            "t^3 - b^2*t + b^3");
}

TEST(Search, SmallBudgetExhaustsOnExampleThree) {
  const auto s = NumericalSemigroup::parse("{0,5,7}+[9,)");
  const auto target = ValueSet::parse("{4,6,7}+[9,)");
  ASSERT_TRUE(in_filt(s, target));
  SearchBudget b{3, 3, 0, 100000, 1};
  const auto r1 = search_witness(s, target, b);
  ASSERT_TRUE(std::holds_alternative<Exhausted>(r1));
  const auto& e1 = std::get<Exhausted>(r1);
  EXPECT_TRUE(e1.complete);
  b.threads = 3;
  const auto r3 = search_witness(s, target, b);
  const auto& e3 = std::get<Exhausted>(r3);
  EXPECT_EQ(e1.candidates, e3.candidates);
  EXPECT_EQ(e1.reached, e3.reached);
}

TEST(Search, CertifiedOut) {
  const auto s = NumericalSemigroup::parse("3,5,7");
  for (const auto& d : enumerate_E(s, s.delta())) EXPECT_EQ(certified_not_in_K(s, d), !oracle::filt(s, d));
}
