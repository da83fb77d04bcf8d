#include "borelgin/growth.hpp"

#include <algorithm>
#include <random>

#include "borelgin/errors.hpp"
#include "borelgin/ideal_ops.hpp"
#include "borelgin/reduction.hpp"

namespace borelgin {

Ideal truncate_ideal(const Ideal& ideal, unsigned d) {
  GroebnerOptions capped;
  capped.degree_cap = d;
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::degrevlex(), capped);
  Ideal out{ideal.ring, {}};
  for (const Polynomial& g : gb.elements()) {
    if (g.degree() <= static_cast<int>(d)) out.generators.push_back(g);
  }
  return out;
}

long long hilbert_polynomial_value(const HilbertSeries& series, long long t) {
  const int dim = series.dimension();
  if (dim <= 0) return 0;
  // sum_i h_i * C(t - i + dim - 1, dim - 1) with the binomial as a polynomial in t.
  long long total = 0;
  const std::vector<long long>& h = series.h_vector();
  for (std::size_t i = 0; i < h.size(); ++i) {
    long long x = t - static_cast<long long>(i) + dim - 1;
    long long c = 1;
    for (int j = 0; j < dim - 1; ++j) c = c * (x - j) / (j + 1);
    total += h[i] * c;
  }
  return total;
}

namespace {

GinResult generic_gin(const Ideal& ideal, const GinOptions& options, const char* what) {
  GinResult g = gin(ideal, MonomialOrder::degrevlex(), options);
  if (!g.generic()) {
    throw ComputationError(std::string("Gin of the ") + what +
                           " was not certified generic; retry with another seed");
  }
  return g;
}

void require_saturated_input(const Ideal& ideal, const MonomialIdeal& g) {
  if (!ideal.is_homogeneous()) throw PreconditionError("ideal must be homogeneous");
  if (g.is_zero() || g.is_unit()) throw PreconditionError("ideal must be proper and nonzero");
  if (!g.is_saturated()) throw PreconditionError("ideal must be saturated");
}

struct TruncationFacts {
  bool saturated;
  unsigned regularity;
  int dimension;
  long long degree;
};

TruncationFacts study_truncation(const Ideal& t, const GinOptions& options) {
  GinResult g = generic_gin(t, options, "truncation");
  HilbertSeries hs = hilbert_series(g.ideal);
  return {g.ideal.is_saturated(), g.ideal.max_generator_degree(), hs.dimension(), hs.degree()};
}

void fill_truncation(GrowthReport& r, const Ideal& t, const TruncationFacts& f, int d) {
  r.truncation = t.generators;
  r.saturated = f.saturated;
  r.truncation_regularity = f.regularity;
  r.d_regular = f.regularity <= static_cast<unsigned>(d);
  r.scheme_dimension = f.dimension;
  r.scheme_degree = f.degree;
}

}  // namespace

GrowthReport first_difference_pipeline(const Ideal& ideal, const PipelineOptions& options) {
  GrowthReport r;
  r.label = options.label;
  r.pipeline = "first_difference";
  r.seed = options.gin.seed;
  if (ideal.ring.nvars < 3) throw PreconditionError("need at least 3 variables");
  GinResult g = generic_gin(ideal, options.gin, "input");
  r.gin_generic = true;
  const MonomialIdeal& G = g.ideal;
  require_saturated_input(ideal, G);
  HilbertSeries series = hilbert_series(G);
  if (series.dimension() > 2) throw PreconditionError("the scheme must have dimension <= 1");
  const int r2 = reduction_number_from_gin(G, 2).value();
  r.r2 = r2;
  const int reg = static_cast<int>(G.max_generator_degree());
  const int window = std::max({r2, reg, options.d.value_or(0)}) + 2;
  HilbertTable table = HilbertTable::from_series(series, window + 1);
  auto dh = [&](int t) { return table.delta_at(1, t); };

  bool criterion = true;
  for (int t = r2; t <= window - 1; ++t) {
    if (dh(t) < dh(t + 1)) {
      criterion = false;
      r.violations.push_back("Delta H increases after r_2 at degree " + std::to_string(t));
    }
    if (t == r2) continue;
    bool equal = dh(t) == dh(t + 1);
    bool no_generator = G.generators_of_degree(static_cast<unsigned>(t + 1)).empty();
    if (equal != no_generator) {
      criterion = false;
      r.violations.push_back("Delta H equality at " + std::to_string(t) +
                             " disagrees with Gin generators in degree " + std::to_string(t + 1));
    }
  }
  r.decreasing_criterion = criterion;

  int d = -1;
  if (options.d) {
    d = *options.d;
    if (d <= r2) {
      r.reason = "d must exceed r_2 = " + std::to_string(r2);
      return r;
    }
    if (dh(d) != dh(d + 1) || dh(d) == 0) {
      r.reason = "Delta H(d) and Delta H(d+1) are not equal and nonzero";
      return r;
    }
  } else {
    for (int t = r2 + 1; t <= window - 1 && d < 0; ++t) {
      if (dh(t) == dh(t + 1) && dh(t) != 0) d = t;
    }
    if (d < 0) {
      r.reason = "no degree d > r_2 with Delta H(d) = Delta H(d+1) != 0";
      return r;
    }
  }
  r.applicable = true;
  r.d = d;
  r.s = dh(d);

  Ideal t = truncate_ideal(ideal, static_cast<unsigned>(d));
  TruncationFacts facts = study_truncation(t, options.gin);
  fill_truncation(r, t, facts, d);
  if (!facts.saturated) r.violations.push_back("truncation is not saturated");
  if (!*r.d_regular) r.violations.push_back("truncation is not d-regular");
  if (facts.dimension != 2) r.violations.push_back("truncation does not define a curve");
  if (facts.degree != *r.s) r.violations.push_back("curve degree differs from s");

  std::vector<long long> delta = table.delta(1);
  if (dh(d + 1) > dh(d + 2)) r.strictly_decreasing = strict_decrease_monitor(delta, d).strictly_decreasing;
  return r;
}

GrowthReport second_difference_pipeline(const Ideal& ideal, const PipelineOptions& options) {
  GrowthReport r;
  r.label = options.label;
  r.pipeline = "second_difference";
  r.seed = options.gin.seed;
  const int n = ideal.ring.nvars;
  if (n < 4) throw PreconditionError("need at least 4 variables");
  GinResult g = generic_gin(ideal, options.gin, "input");
  r.gin_generic = true;
  const MonomialIdeal& G = g.ideal;
  require_saturated_input(ideal, G);
  HilbertSeries series = hilbert_series(G);
  if (series.dimension() > 2) throw PreconditionError("the scheme must have dimension <= 1");
  const int r2 = reduction_number_from_gin(G, 2).value();
  const int r3 = reduction_number_from_gin(G, 3).value();
  r.r2 = r2;
  r.r3 = r3;

  std::mt19937_64 rng(options.gin.seed);
  Polynomial l1 = random_linear_form(ideal.ring, rng);
  Polynomial l2 = random_linear_form(ideal.ring, rng);
  HilbertTable sections = hilbert_table(ideal.plus({l1, l2}), r2 + 2);
  auto h3 = [&](int t) { return sections.value(t); };

  int d = -1;
  if (options.d) {
    d = *options.d;
    if (!(r2 > d && d > r3)) {
      r.reason = "d must satisfy r_2 > d > r_3";
      return r;
    }
    if (h3(d) != h3(d + 1)) {
      r.reason = "H(R/(I+L1+L2)) differs at d and d+1";
      return r;
    }
  } else {
    for (int t = r3 + 1; t < r2 && d < 0; ++t) {
      if (h3(t) == h3(t + 1)) d = t;
    }
    if (d < 0) {
      r.reason = "no degree r_2 > d > r_3 with H(R/(I+L1+L2)) flat at d, d+1";
      return r;
    }
  }
  r.applicable = true;
  r.d = d;
  r.s = h3(d);

  Ideal t = truncate_ideal(ideal, static_cast<unsigned>(d));
  TruncationFacts facts = study_truncation(t, options.gin);
  fill_truncation(r, t, facts, d);
  if (facts.dimension != 3) r.violations.push_back("truncation does not define a surface");
  if (facts.degree != *r.s) r.violations.push_back("surface degree differs from s");

  GroebnerBasis a = buchberger(ideal.plus({l1}));
  r.injective = multiplication_map(a, l2, static_cast<unsigned>(d)).injective();
  if (*r.injective != *r.d_regular) {
    r.violations.push_back("injectivity of x L2 disagrees with d-regularity of the truncation");
  }
  if (*r.injective && *r.d_regular && !facts.saturated) {
    r.violations.push_back("injective and d-regular but the truncation is not saturated");
  }

  if (n == 4) {
    r.common_factor = common_factor(component_basis(ideal, static_cast<unsigned>(d)));
    if (!r.common_factor) {
      r.violations.push_back("I_d has no common factor");
    } else if (r.common_factor->degree() < *r.s) {
      r.violations.push_back("common factor has degree below s");
    } else if (r.common_factor->degree() > *r.s) {
      r.warnings.push_back("gcd of I_d has degree above s");
    }
  }

  if (series.dimension() <= 1) {
    WlpResult w = wlp_test(ideal, options.gin.seed);
    if (w.conclusive) {
      r.wlp = w.holds;
      if (w.holds && !(facts.saturated && *r.d_regular)) {
        r.violations.push_back("WLP holds but the truncation is not saturated and d-regular");
      }
    } else {
      r.warnings.push_back("WLP draws disagreed");
    }
  }
  return r;
}

StrictDecreaseVerdict strict_decrease_monitor(const std::vector<long long>& delta, int d) {
  const int last = static_cast<int>(delta.size()) - 1;
  if (d < 0 || d + 2 > last) throw PreconditionError("degree window too short for the monitor");
  auto at = [&](int t) { return delta[static_cast<std::size_t>(t)]; };
  if (at(d) != at(d + 1)) throw PreconditionError("need Delta H(d) = Delta H(d+1)");
  StrictDecreaseVerdict v;
  v.checked_through = d + 1;
  if (at(d) == 0) return v;
  if (!(at(d + 1) > at(d + 2))) throw PreconditionError("need Delta H(d+1) > Delta H(d+2)");
  for (int t = d + 1; t < last && at(t) > 0; ++t) {
    v.checked_through = t + 1;
    if (at(t) <= at(t + 1)) {
      v.strictly_decreasing = false;
      v.first_failure = t;
      break;
    }
  }
  return v;
}

StrictDecreaseVerdict strict_decrease_monitor(const HilbertTable& table, int d) {
  return strict_decrease_monitor(table.delta(1), d);
}

CmVerdict cm_check(const MonomialIdeal& gin_ideal) {
  CmVerdict v;
  v.D = gin_ideal.D();
  v.M = gin_ideal.M();
  v.cm = v.D == v.M;
  return v;
}

CmVerdict cm_check(const Ideal& ideal, const GinOptions& options) {
  return cm_check(generic_gin(ideal, options, "input").ideal);
}

Cohen1Verdict cohen1_bound_check(const MonomialIdeal& gin_ideal) {
  if (gin_ideal.is_zero() || gin_ideal.is_unit()) throw PreconditionError("ideal must be proper and nonzero");
  if (!cm_check(gin_ideal).cm) throw PreconditionError("the quotient is not Cohen-Macaulay");
  Cohen1Verdict v;
  HilbertSeries hs = hilbert_series(gin_ideal);
  v.degree = hs.degree();
  v.codim = gin_ideal.D();
  v.alpha = gin_ideal.min_generator_degree();
  v.bound = v.degree - binomial(static_cast<long long>(v.alpha) - 1 + v.codim, v.alpha - 1) + v.alpha;
  v.regularity = gin_ideal.max_generator_degree();
  v.satisfied = static_cast<long long>(v.regularity) <= v.bound;
  if (v.alpha >= 2) {
    v.classical_bound = v.degree - v.codim + 1;
    v.classical_satisfied = static_cast<long long>(v.regularity) <= *v.classical_bound;
  }
  return v;
}

Cohen1Verdict cohen1_bound_check(const Ideal& ideal, const GinOptions& options) {
  return cohen1_bound_check(generic_gin(ideal, options, "input").ideal);
}

std::optional<Polynomial> common_factor(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw PreconditionError("no polynomials to take a common factor of");
  Polynomial g = polys.front().with_order(MonomialOrder::degrevlex()).monic();
  for (std::size_t i = 1; i < polys.size() && !g.is_constant(); ++i) {
    const Polynomial f = polys[i].with_order(MonomialOrder::degrevlex());
    if (f.is_zero()) continue;
    Ideal meet = ideal_intersection(Ideal{g.ring(), {g}}, Ideal{f.ring(), {f}});
    const Polynomial& lcm = meet.generators.front();
    g = (g * f).divided_by(lcm).monic();
  }
  if (g.is_constant()) return std::nullopt;
  return g;
}

std::optional<Polynomial> common_factor_P3(const Ideal& ideal, int d, const GinOptions& options) {
  if (ideal.ring.nvars != 4) throw PreconditionError("common factor extraction needs n = 4");
  GinResult g = generic_gin(ideal, options, "input");
  std::optional<int> r2 = reduction_number_from_gin(g.ideal, 2);
  std::optional<int> r3 = reduction_number_from_gin(g.ideal, 3);
  if (!r2 || !r3 || !(*r2 > d && d > *r3)) throw PreconditionError("d must satisfy r_2 > d > r_3");
  std::vector<Polynomial> basis = component_basis(ideal, static_cast<unsigned>(d));
  if (basis.empty()) throw PreconditionError("I_d is zero");
  return common_factor(basis);
}

FirstChVerdict firstCH_regularity_check(const Ideal& curve, int d, const GinOptions& options) {
  if (curve.ring.nvars <= 3) throw PreconditionError("need more than 3 variables");
  GinResult g = generic_gin(curve, options, "curve");
  require_saturated_input(curve, g.ideal);
  HilbertSeries hs = hilbert_series(g.ideal);
  if (hs.dimension() != 2) throw PreconditionError("the ideal must define a curve");
  FirstChVerdict v;
  v.d = d;
  v.r2 = reduction_number_from_gin(g.ideal, 2).value();
  if (d <= v.r2) throw PreconditionError("d must exceed r_2");
  v.regularity = g.ideal.max_generator_degree();
  v.surrogate_holds = hs.value(d - 1) == hilbert_polynomial_value(hs, d - 1);
  if (v.surrogate_holds) v.d_regular = v.regularity <= static_cast<unsigned>(d);
  return v;
}

}  // namespace borelgin
