#include <gtest/gtest.h>

#include <random>

#include "borelgin/errors.hpp"
#include "borelgin/groebner.hpp"
#include "borelgin/hilbert.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace borelgin;

namespace {

void expect_reduced(const GroebnerBasis& gb) {
  const auto& el = gb.elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    EXPECT_TRUE(el[i].leading_coefficient().is_one());
    if (i > 0) {
      EXPECT_TRUE(gb.order().less(el[i - 1].leading_monomial(), el[i].leading_monomial()));
    }
    for (std::size_t j = 0; j < el.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : el[j].terms()) EXPECT_FALSE(el[i].leading_monomial().divides(t.monomial));
    }
  }
}

}  // namespace

TEST(Buchberger, TwistedCubicBasis) {
  GroebnerBasis gb = buchberger(fixtures::twisted_cubic());
  EXPECT_EQ(gb.elements().size(), 3u);
  expect_reduced(gb);
  EXPECT_EQ(gb.initial_ideal(), fixtures::monomial_ideal_of({"x2^2", "x2*x3", "x3^2"}));
}

TEST(Buchberger, SpaceCurveInitialIdealHasTheRightHilbertFunction) {
  GroebnerBasis gb = buchberger(fixtures::space_curve());
  expect_reduced(gb);
  HilbertTable t = hilbert_table(gb.initial_ideal(), 8);
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(t.value(d), oracle::rank_hilbert_value(fixtures::space_curve(), d));
}

TEST(Buchberger, UnitIdeal) {
  Ideal i = fixtures::ideal_of({"x1", "x2", "x3", "x4", "1"});
  GroebnerBasis gb = buchberger(i.ring, i.generators);
  EXPECT_TRUE(gb.is_unit());
}

TEST(Buchberger, RejectsInhomogeneousInput) {
  Ideal i = fixtures::ideal_of({"x1^2 - x2"});
  EXPECT_THROW(buchberger(i), PreconditionError);
}

TEST(Buchberger, NormalFormDecidesMembership) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10; ++k) {
    Ideal i = oracle::random_homogeneous_ideal(rng, 3, 3, 3);
    GroebnerBasis gb = buchberger(i);
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial f = i.generators[0] * random_form(i.ring, 1, rng) + random_form(i.ring, 1, rng) *
                     random_form(i.ring, static_cast<unsigned>(i.generators[0].degree()), rng);
      EXPECT_EQ(gb.contains(f), oracle::member_by_rank(i, f));
    }
    for (const Polynomial& g : i.generators) EXPECT_TRUE(gb.contains(g));
  }
}

TEST(Buchberger, HilbertFunctionOfInitialIdealMatchesRankOracle) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    Ideal i = oracle::random_homogeneous_ideal(rng, 3 + k % 2, 3, 3);
    for (auto ord : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
      GroebnerBasis gb = buchberger(i, ord);
      HilbertTable t = hilbert_table(gb.initial_ideal(), 6);
      for (int d = 0; d <= 6; ++d) EXPECT_EQ(t.value(d), oracle::rank_hilbert_value(i, static_cast<unsigned>(d)));
    }
  }
}

TEST(Buchberger, SelectionStrategyDoesNotChangeTheBasis) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    Ideal i = oracle::random_homogeneous_ideal(rng, 4, 3, 3);
    GroebnerOptions fifo;
    fifo.selection = PairSelection::fifo;
    GroebnerBasis a = buchberger(i);
    GroebnerBasis b = buchberger(i, MonomialOrder::degrevlex(), fifo);
    ASSERT_EQ(a.elements().size(), b.elements().size());
    for (std::size_t j = 0; j < a.elements().size(); ++j) EXPECT_EQ(a.elements()[j], b.elements()[j]);
  }
}

TEST(Buchberger, DegreeCapGivesTheBasisInLowDegrees) {
  Ideal i = fixtures::space_curve();
  GroebnerBasis full = buchberger(i);
  GroebnerOptions capped;
  capped.degree_cap = 4;
  GroebnerBasis low = buchberger(i, MonomialOrder::degrevlex(), capped);
  EXPECT_EQ(low.degree_cap(), 4u);
  for (const Polynomial& g : low.elements()) EXPECT_LE(g.degree(), 4);
  std::vector<Polynomial> expected;
  for (const Polynomial& g : full.elements()) {
    if (g.degree() <= 4) expected.push_back(g);
  }
  ASSERT_EQ(low.elements().size(), expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_EQ(low.elements()[j], expected[j]);
}

TEST(Buchberger, StatsAreCounted) {
  GroebnerBasis gb = buchberger(fixtures::space_curve());
  EXPECT_EQ(gb.stats().source_generators, 4u);
  EXPECT_GT(gb.stats().pairs_formed, 0u);
}

TEST(Buchberger, RationalCoefficients) {
  Ideal i = fixtures::space_curve(Field::rationals());
  GroebnerBasis gb = buchberger(i);
  expect_reduced(gb);
  EXPECT_EQ(gb.initial_ideal(), buchberger(fixtures::space_curve()).initial_ideal());
}

TEST(ReduceBy, DividesByLeadingTerms) {
  Ideal i = fixtures::ideal_of({"x1^2", "x2^2"});
  Polynomial f = parse_polynomial("x1^2*x3 + x1*x2 + x2^3", fixtures::kVars4, Field::prime());
  EXPECT_EQ(reduce_by(f, i.generators), parse_polynomial("x1*x2", fixtures::kVars4, Field::prime()));
}
