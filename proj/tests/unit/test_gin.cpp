#include <gtest/gtest.h>

#include <random>

#include "borelgin/gin.hpp"
#include "borelgin/hilbert.hpp"
#include "borelgin/linear_change.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace borelgin;
using fixtures::monomial_ideal_of;

namespace {

Ideal from_monomials(const MonomialIdeal& m, const Field& field = Field::prime()) {
  Ideal out{Ring{m.nvars(), field}, {}};
  for (const Monomial& g : m.generators()) out.generators.push_back(Polynomial::monomial(out.ring, g));
  return out;
}

// Sets the last variable to zero and drops it.
Ideal last_variable_to_zero(const Ideal& ideal) {
  const int n = ideal.ring.nvars;
  Ideal out{Ring{n - 1, ideal.ring.field}, {}};
  for (const Polynomial& f : ideal.generators) {
    std::vector<Term> kept;
    for (const Term& t : f.terms()) {
      if (!t.monomial.involves(n - 1)) kept.push_back(Term{t.monomial.resized(n - 1), t.coefficient});
    }
    Polynomial g = Polynomial::from_terms(out.ring, MonomialOrder::degrevlex(), std::move(kept));
    if (!g.is_zero()) out.generators.push_back(g);
  }
  return out;
}

Ideal moved(const Ideal& ideal, std::uint64_t seed) {
  LinearChange g = LinearChange::random(ideal.ring, seed);
  Ideal out{ideal.ring, {}};
  for (const Polynomial& f : ideal.generators) out.generators.push_back(g.apply(f));
  return out;
}

}  // namespace

TEST(Gin, SpaceCurve) {
  GinResult g = gin(fixtures::space_curve());
  EXPECT_EQ(g.ideal, fixtures::space_curve_gin());
  EXPECT_EQ(g.trials, 3);
  EXPECT_EQ(g.seeds.size(), 3u);
  EXPECT_TRUE(g.agreed);
  EXPECT_TRUE(g.borel_verified);
  EXPECT_TRUE(g.generic());
}

TEST(Gin, StronglyStableMonomialIdealIsFixed) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    MonomialIdeal m = oracle::random_strongly_stable(rng, 3, 3, 3);
    EXPECT_EQ(gin(from_monomials(m)).ideal, m);
  }
}

TEST(Gin, FourGeneralPointsInThePlane) {
  GinResult g = gin(vanishing_ideal(random_points(3, 4, 11)));
  EXPECT_EQ(g.ideal, monomial_ideal_of({"x1^2", "x1*x2", "x2^3"}, {"x1", "x2", "x3"}));
}

TEST(Gin, TwistedCubic) {
  EXPECT_EQ(gin(fixtures::twisted_cubic()).ideal, monomial_ideal_of({"x1^2", "x1*x2", "x2^2"}));
}

TEST(Gin, ChardinDCruzSmallCases) {
  for (unsigned m = 1; m <= 2; ++m) {
    GinResult g = gin(fixtures::imn(m, m));
    EXPECT_TRUE(g.generic());
    EXPECT_EQ(g.ideal.regularity(), 2 * m + 2);
  }
}

TEST(Gin, SeedsAreDeterministic) {
  GinOptions o;
  o.seed = 42;
  GinResult a = gin(fixtures::twisted_cubic(), MonomialOrder::degrevlex(), o);
  GinResult b = gin(fixtures::twisted_cubic(), MonomialOrder::degrevlex(), o);
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(trial_seed(42, 0), a.seeds[0]);
  EXPECT_NE(trial_seed(42, 0), trial_seed(42, 1));
}

TEST(Gin, HyperplaneRestrictionMatchesASection) {
  GinResult g = gin(fixtures::space_curve());
  MonomialIdeal restricted = gin_hyperplane_restriction(g);
  EXPECT_EQ(restricted,
            monomial_ideal_of({"x1^3", "x1^2*x2^2", "x1*x2^3", "x2^5", "x2^4*x3^2"}, {"x1", "x2", "x3"}));
  Ideal section = last_variable_to_zero(moved(fixtures::space_curve(), 99));
  EXPECT_EQ(gin(section).ideal, restricted);
}

TEST(Gin, SaturationIdentity) {
  Ideal cubic = fixtures::twisted_cubic();
  Ideal product{cubic.ring, {}};
  for (const Polynomial& f : cubic.generators) {
    for (int i = 0; i < 4; ++i) product.generators.push_back(f * Polynomial::variable(cubic.ring, i));
  }
  GinResult g = gin(product);
  EXPECT_FALSE(g.ideal.is_saturated());
  EXPECT_EQ(gin_saturation(g), gin(cubic).ideal);
  GinResult s = gin(cubic);
  EXPECT_EQ(gin_saturation(s), s.ideal);
  EXPECT_EQ(monomial_ideal_of({"x1^2", "x1*x4"}).substitute_var_one(3), monomial_ideal_of({"x1"}));
}

TEST(GinProperty, HilbertFunctionIsPreservedAndGinIsIdempotent) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 10; ++k) {
    Ideal i = oracle::random_homogeneous_ideal(rng, 3 + k % 2, 3, 3);
    GinResult g = gin(i);
    ASSERT_TRUE(g.generic());
    HilbertTable t = hilbert_table(g.ideal, 7);
    for (int d = 0; d <= 7; ++d) EXPECT_EQ(t.value(d), oracle::rank_hilbert_value(i, static_cast<unsigned>(d)));
    EXPECT_EQ(gin(from_monomials(g.ideal)).ideal, g.ideal);
    GinOptions other;
    other.seed = 977;
    EXPECT_EQ(gin(i, MonomialOrder::degrevlex(), other).ideal.regularity(), g.ideal.regularity());
  }
}

TEST(Gin, RationalModeAgreesOnTheSpaceCurve) {
  GinOptions o;
  o.trials = 2;
  EXPECT_EQ(gin(fixtures::space_curve(Field::rationals()), MonomialOrder::degrevlex(), o).ideal,
            fixtures::space_curve_gin());
}
