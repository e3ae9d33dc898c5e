#include <gtest/gtest.h>

#include "cjac/error.hpp"
#include "cjac/lattice.hpp"
#include "cjac/survey.hpp"
#include "oracle.hpp"

using namespace cjac;

TEST(ValueSetText, RoundTrip) {
  for (const char* t : {"{5,9,11,13,14}+[16,)", "{}+[0,)", "{1}+[3,)", "{0,3}+[5,)"}) {
    const auto v = ValueSet::parse(t);
    EXPECT_EQ(ValueSet::parse(v.to_string()), v);
  }
  EXPECT_EQ(ValueSet::parse("{2}+[3,)"), ValueSet::interval(2));
  EXPECT_EQ(ValueSet::parse("{2}+[3,)").to_string(3), "{2}+[3,)");
  EXPECT_EQ(ValueSet::parse("{5,9,11,13,14}+[16,)").colength(), 11);
  EXPECT_THROW(ValueSet::parse("{1,2"), ParseError);
}

TEST(Lattice, EnumerateMatchesBruteForce) {
  for (const auto& s : semigroups_up_to(11)) {
    EXPECT_THROW(enumerate_E(s, s.conductor() + 1), Error);
    for (int d = 0; d <= s.conductor(); ++d) {
      const auto got = enumerate_E(s, d);
      std::set<std::string> texts;
      for (const auto& v : got) texts.insert(v.to_string());
      EXPECT_EQ(texts.size(), got.size());
      EXPECT_EQ(texts, oracle::value_sets(s, d)) << s.to_string() << " d=" << d;
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), enumeration_less));
    }
  }
}

TEST(Lattice, EnumerateFrozen) {
  const auto s = NumericalSemigroup::parse("3,4,5");
  EXPECT_EQ(enumerate_E(s, 2).size(), 3u);
  EXPECT_EQ(enumerate_E(s, 0).size(), 1u);
  EXPECT_EQ(enumerate_E(NumericalSemigroup(), 0).size(), 1u);
}

TEST(Lattice, FiltMatchesDefinitionAndIntersection) {
  for (const auto& s : semigroups_up_to(12)) {
    for (const auto& d : enumerate_E(s, s.delta())) {
      const bool want = oracle::filt(s, d);
      EXPECT_EQ(in_filt(s, d), want) << s.to_string() << " " << d.to_string();
      EXPECT_EQ(in_filt_by_intersection(s, d), want) << s.to_string() << " " << d.to_string();
    }
  }
}

TEST(Lattice, FiltRejectsWrongColength) {
  const auto s = NumericalSemigroup::parse("3,4,5");
  EXPECT_THROW(in_filt(s, ValueSet::parse("{}+[3,)")), Error);
}

TEST(Lattice, ClosureDiagnostic) {
  const auto s = NumericalSemigroup::parse("4,13,18,19");
  const auto d = closure_diagnostic(s, ValueSet::parse("{5,9,11,13,14}+[16,)"));
  ASSERT_TRUE(d.has_value());
  EXPECT_NE(d->find("11 + 4 = 15"), std::string::npos);
  EXPECT_FALSE(closure_diagnostic(s, s.as_value_set()).has_value());
}

TEST(Lattice, DualIsAntitoneAndFixesGamma) {
  for (const auto& s : semigroups_up_to(10)) {
    const auto g = dual(s, s.as_value_set());
    EXPECT_EQ(g.shift, 0);
    EXPECT_EQ(g.base, s.as_value_set()) << s.to_string();
    const auto members = enumerate_E(s, s.delta());
    for (const auto& a : members) {
      const auto da = dual(s, a);
      for (long n = da.min(); n < da.min() + 3 * s.conductor() + 3; ++n) {
        // n ∈ Δ* ⇔ n + Δ ⊆ Γ
        bool want = true;
        for (int x = 0; x <= 2 * s.conductor() + 2 && want; ++x) {
          if (a.contains(x) && !s.contains(n + x)) want = false;
        }
        EXPECT_EQ(da.contains(n), want) << s.to_string() << " " << a.to_string() << " n=" << n;
      }
    }
  }
}

TEST(Lattice, IsoClassesExampleOne) {
  const auto classes = iso_classes(NumericalSemigroup::parse("3,4,5"));
  std::set<std::string> texts;
  for (const auto& c : classes) texts.insert(c.to_string());
  const std::set<std::string> want = {"{}+[0,)", "{0,1}+[3,)", "{0}+[2,)", "{0}+[3,)"};
  EXPECT_EQ(texts, want);
}

TEST(Lattice, IsoClassesAreNormalFormsOfOverModules) {
  for (const auto& s : semigroups_up_to(9)) {
    const int v0 = s.conductor();
    std::set<std::string> want;
    // every Γ-closed Δ with 0 ∈ Δ ⊆ ℕ, [v0, ∞) ⊆ Δ is its own normal form,
    // and every class has such a representative
    for (unsigned mask = 0; mask < (1u << std::max(v0, 0)); ++mask) {
      if (v0 > 0 && !(mask & 1u)) continue;
      std::vector<int> el;
      for (int i = 0; i < v0; ++i) {
        if ((mask >> i) & 1u) el.push_back(i);
      }
      const auto d = ValueSet::from_elements(el, v0);
      if (is_closed_under(d, s)) want.insert(d.to_string());
    }
    std::set<std::string> got;
    for (const auto& c : iso_classes(s)) got.insert(c.to_string());
    EXPECT_EQ(got, want) << s.to_string();
  }
}

TEST(Lattice, RankOfMModConductor) {
  // Brute force: positive elements ≤ v0 (or < v0 for tC) that are not sums of two positive elements.
  for (const auto& s : semigroups_up_to(14)) {
    if (s.is_natural()) continue;
    const int v0 = s.conductor();
    for (auto j : {ConductorIdeal::C, ConductorIdeal::tC}) {
      const int top = j == ConductorIdeal::C ? v0 - 1 : v0;
      int want = 0;
      for (int x = 1; x <= top; ++x) {
        if (!s.contains(x)) continue;
        bool sum = false;
        for (int a = 1; a < x && !sum; ++a) sum = s.contains(a) && s.contains(x - a);
        if (!sum) ++want;
      }
      EXPECT_EQ(rank_M_mod(s, j), want) << s.to_string();
    }
  }
  EXPECT_EQ(rank_M_mod(NumericalSemigroup::parse("3,5,7"), ConductorIdeal::tC), 2);
}
