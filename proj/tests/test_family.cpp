#include <gtest/gtest.h>

#include <random>

#include "cjac/error.hpp"
#include "cjac/family.hpp"

using namespace cjac;

namespace {

FamilyElement random_family(std::mt19937& rng) {
  FamilyElement f;
  const int n = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = 1 + static_cast<long>(rng() % 3);
    if (num == 0) continue;
    Rational q(num, den);
    q.canonicalize();
    f.add(static_cast<int>(rng() % 10), BetaScalar::beta_power(static_cast<int>(rng() % 5), q));
  }
  return f;
}

}  // namespace

TEST(BetaPoly, ArithmeticAgreesWithEvaluation) {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    BetaPoly a, b;
    for (int d = 0; d < 4; ++d) {
      a += BetaPoly::monomial(Rational(static_cast<long>(rng() % 7) - 3), d);
      b += BetaPoly::monomial(Rational(static_cast<long>(rng() % 7) - 3), d);
    }
    for (int x = -2; x <= 2; ++x) {
      const Rational r(x);
      EXPECT_EQ((a + b).evaluate(r), a.evaluate(r) + b.evaluate(r));
      EXPECT_EQ((a - b).evaluate(r), a.evaluate(r) - b.evaluate(r));
      EXPECT_EQ((a * b).evaluate(r), a.evaluate(r) * b.evaluate(r));
      EXPECT_EQ(a.substitute_scaled(Rational(2)).evaluate(r), a.evaluate(2 * r));
    }
    if (!b.is_zero()) {
      BetaPoly q, rem;
      BetaPoly::divide(a, b, q, rem);
      EXPECT_EQ(q * b + rem, a);
      EXPECT_TRUE(rem.is_zero() || rem.degree() < b.degree());
    }
  }
}

TEST(BetaPoly, Gcd) {
  const BetaPoly x = BetaPoly::monomial(Rational(1), 1);
  const BetaPoly one(Rational(1));
  const BetaPoly p = (x + one) * (x - one);
  const BetaPoly q = (x + one) * (x + one + one);
  EXPECT_EQ(BetaPoly::gcd(p, q), x + one);
}

TEST(BetaScalar, UnitsAndNonUnits) {
  const BetaPoly x = BetaPoly::monomial(Rational(1), 1);
  const BetaPoly one(Rational(1));
  const BetaScalar u(one, one + x);
  EXPECT_TRUE(u.is_unit());
  EXPECT_EQ(u.at_zero(), Rational(1));
  EXPECT_FALSE(BetaScalar::beta_power(2).is_unit());
  EXPECT_THROW(BetaScalar(one, x), Error);
  EXPECT_EQ(u * BetaScalar(one + x), BetaScalar(one));
  EXPECT_EQ((BetaScalar(one) / u), BetaScalar(one + x));
}

TEST(Family, ParseFrozen) {
  EXPECT_EQ(FamilyElement::parse("t + b").to_string(), "t + b");
  EXPECT_EQ(FamilyElement::parse("b^2 + t^2 + b*t").to_string(), "t^2 + b*t + b^2");
  EXPECT_EQ(FamilyElement::parse("1").to_string(), "1");
  EXPECT_EQ(FamilyElement::parse("t - b").to_string(), "t - b");
  EXPECT_EQ(FamilyElement::parse("- t^3 + 1/2*b*t").to_string(), "- t^3 + 1/2*b*t");
  EXPECT_EQ(FamilyElement::parse("t*t*b + 2*t^2*b").to_string(), "3*b*t^2");
  EXPECT_EQ(FamilyElement::parse("t - t").to_string(), "0");
  EXPECT_TRUE(FamilyElement::parse("t^2 + 3").is_unit());
  // unit for generic β: the t⁰ coefficient is a nonzero function of β
  EXPECT_TRUE(FamilyElement::parse("t^2 + b").is_unit());
  EXPECT_FALSE(FamilyElement::parse("t^2 + b*t").is_unit());
}

TEST(Family, ParseErrorsCarryPositions) {
  auto position = [](const char* text) -> long {
    try {
      FamilyElement::parse(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position(""), 0);
  EXPECT_EQ(position("t +"), 3);
  EXPECT_EQ(position("t + x"), 4);
  EXPECT_EQ(position("t b"), 2);
  EXPECT_EQ(position("1/0"), 0);
  EXPECT_EQ(position("t^"), 2);
}

TEST(Family, RoundTripRandom) {
  std::mt19937 rng(11);
  for (int it = 0; it < 2000; ++it) {
    const auto f = random_family(rng);
    const std::string text = f.to_string();
    EXPECT_EQ(FamilyElement::parse(text), f) << text;
    EXPECT_EQ(FamilyElement::parse(text).to_string(), text);
  }
}

TEST(Family, SubstitutionAndScaling) {
  const auto f = FamilyElement::parse("t^2 + b*t + b^2");
  EXPECT_EQ(f.substitute_scaled(Rational(2)).to_string(), "t^2 + 2*b*t + 4*b^2");
  EXPECT_EQ(f.scaled(BetaScalar(Rational(3))).to_string(), "3*t^2 + 3*b*t + 3*b^2");
  EXPECT_EQ(f.max_beta_degree(), 2);
  EXPECT_EQ(f.lowest_exponent(), 0);
  EXPECT_EQ(f.highest_exponent(), 2);
}
