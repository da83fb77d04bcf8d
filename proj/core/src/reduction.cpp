#include "borelgin/reduction.hpp"

#include <algorithm>
#include <random>

#include "borelgin/errors.hpp"
#include "borelgin/linear_algebra.hpp"

namespace borelgin {

namespace {

std::vector<Polynomial> linear_forms(const Ring& ring, int s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;
  for (int i = 0; i < s; ++i) out.push_back(random_linear_form(ring, rng));
  return out;
}

}  // namespace

Ideal add_random_linear_forms(const Ideal& ideal, int s, std::uint64_t seed) {
  if (s < 0 || s > ideal.ring.nvars) throw PreconditionError("number of linear forms out of range");
  return ideal.plus(linear_forms(ideal.ring, s, seed));
}

HilbertTable section_table(const Ideal& ideal, int s, std::uint64_t seed, int t_max) {
  return hilbert_table(add_random_linear_forms(ideal, s, seed), t_max);
}

std::optional<int> reduction_number_from_gin(const MonomialIdeal& gin, int s) {
  const int n = gin.nvars();
  if (s < 1 || s > n) throw PreconditionError("s must lie in 1..n");
  if (s == n) return 0;
  const int var = n - s - 1;
  for (const Monomial& g : gin.generators()) {
    if (g.degree() == g.exponent(var) && g.degree() > 0) return static_cast<int>(g.degree()) - 1;
  }
  return std::nullopt;
}

std::optional<int> reduction_number_by_sections(const Ideal& ideal, int s, std::uint64_t seed) {
  HilbertSeries series = hilbert_series(add_random_linear_forms(ideal, s, seed));
  if (series.dimension() > 0) return std::nullopt;
  // Artinian: the numerator is the h-vector, and its length gives the top degree.
  int top = static_cast<int>(series.h_vector().size()) - 1;
  return std::max(top, 0);
}

ReductionProfile reduction_number(const Ideal& ideal, int s, const GinResult& gin_result,
                                  std::uint64_t seed, int retries) {
  ReductionProfile p;
  p.s = s;
  p.value = reduction_number_from_gin(gin_result.ideal, s);
  if (!p.value) p.warning = "s is below dim(R/I); r_s is undefined";
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::uint64_t sd = trial_seed(seed ^ 0x5eed5eedull, attempt);
    p.seed = sd;
    p.attempts = attempt + 1;
    p.crosscheck = reduction_number_by_sections(ideal, s, sd);
    if (p.crosscheck == p.value) break;
  }
  p.certified = p.value && p.crosscheck == p.value && gin_result.generic();
  if (p.value && p.crosscheck != p.value) p.warning = "Gin witness and linear sections disagree";
  return p;
}

ReductionProfile reduction_number(const Ideal& ideal, int s, const GinOptions& options) {
  return reduction_number(ideal, s, gin(ideal, MonomialOrder::degrevlex(), options), options.seed);
}

MultiplicationMap multiplication_map(const GroebnerBasis& a, const Polynomial& l, unsigned d) {
  MonomialIdeal in = a.initial_ideal();
  std::vector<Monomial> source = in.standard_monomials(d);
  std::vector<Monomial> target = in.standard_monomials(d + 1);
  MultiplicationMap map;
  map.degree = d;
  map.source_dim = static_cast<long long>(source.size());
  map.target_dim = static_cast<long long>(target.size());
  if (source.empty() || target.empty()) return map;
  Matrix m(a.ring().field, target.size(), source.size());
  Polynomial lo = l.with_order(a.order());
  for (std::size_t j = 0; j < source.size(); ++j) {
    Polynomial image = a.normal_form(lo * Polynomial::monomial(a.ring(), source[j], a.order()));
    for (const Term& t : image.terms()) {
      auto it = std::find(target.begin(), target.end(), t.monomial);
      m.at(static_cast<std::size_t>(it - target.begin()), j) = t.coefficient;
    }
  }
  map.rank = static_cast<long long>(m.rank());
  return map;
}

WlpResult wlp_test(const Ideal& ideal, std::uint64_t seed, int max_draws) {
  HilbertSeries series = hilbert_series(ideal);
  if (series.dimension() > 1) {
    throw PreconditionError("WLP test needs dim(R/I) <= 1");
  }
  const bool reduce = series.dimension() == 1;
  std::vector<WlpResult> draws;
  WlpResult out;
  for (int k = 0; k < max_draws; ++k) {
    std::uint64_t sd = trial_seed(seed ^ 0x3117ull, k);
    std::vector<Polynomial> forms = linear_forms(ideal.ring, 2, sd);
    Ideal artinian = reduce ? ideal.plus({forms[0]}) : ideal;
    GroebnerBasis gb = buchberger(artinian);
    HilbertSeries hs = hilbert_series(gb.initial_ideal());
    WlpResult r;
    r.seeds = {sd};
    r.socle_degree = std::max(static_cast<int>(hs.h_vector().size()) - 1, 0);
    for (int t = 0; t <= r.socle_degree; ++t) {
      if (!multiplication_map(gb, forms[1], static_cast<unsigned>(t)).maximal_rank()) {
        r.failing_degrees.push_back(t);
      }
    }
    r.holds = r.failing_degrees.empty();
    draws.push_back(r);
    out.seeds.push_back(sd);
    if (draws.size() >= 2) {
      const WlpResult& a = draws[draws.size() - 2];
      const WlpResult& b = draws.back();
      if (a.holds == b.holds && a.failing_degrees == b.failing_degrees) {
        out.holds = b.holds;
        out.failing_degrees = b.failing_degrees;
        out.socle_degree = b.socle_degree;
        out.conclusive = true;
        return out;
      }
    }
  }
  out.holds = draws.back().holds;
  out.failing_degrees = draws.back().failing_degrees;
  out.socle_degree = draws.back().socle_degree;
  out.conclusive = false;
  return out;
}

}  // namespace borelgin
