#include "borelgin/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "borelgin/errors.hpp"

namespace borelgin {

namespace {

std::vector<long long> difference(const std::vector<long long>& v) {
  std::vector<long long> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] - (i ? v[i - 1] : 0);
  return d;
}

}  // namespace

HilbertTable HilbertTable::from_series(const HilbertSeries& series, int t_max,
                                       std::optional<unsigned> alpha) {
  if (t_max < 0) throw PreconditionError("t_max must be non-negative");
  HilbertTable t;
  for (int i = 0; i <= t_max; ++i) t.values_.push_back(series.value(i));
  t.dimension_ = series.dimension();
  t.degree_ = series.degree();
  t.h_vector_ = series.h_vector();
  t.alpha_ = alpha;
  t.exact_ = true;
  return t;
}

HilbertTable HilbertTable::from_values(std::vector<long long> values, std::optional<unsigned> alpha) {
  if (values.empty()) throw PreconditionError("empty Hilbert table");
  HilbertTable t;
  t.values_ = std::move(values);
  t.alpha_ = alpha;
  const std::size_t len = t.values_.size();
  auto constant_tail = [&](const std::vector<long long>& v, std::size_t span) {
    if (span > len) return false;
    for (std::size_t i = len - span; i < len; ++i) {
      if (v[i] != v[len - 1]) return false;
    }
    return true;
  };
  if (constant_tail(t.values_, 2) && t.values_.back() == 0) {
    t.dimension_ = 0;
    long long sum = 0;
    for (long long v : t.values_) sum += v;
    t.degree_ = sum;
    return t;
  }
  std::vector<long long> d = t.values_;
  for (int dim = 1; dim <= 4; ++dim) {
    if (constant_tail(d, static_cast<std::size_t>(dim) + 2) && d.back() != 0) {
      t.dimension_ = dim;
      t.degree_ = d.back();
      return t;
    }
    d = difference(d);
  }
  return t;
}

long long HilbertTable::value(int t) const {
  if (t < 0) return 0;
  if (t > t_max()) throw std::out_of_range("degree outside the Hilbert table window");
  return values_[static_cast<std::size_t>(t)];
}

std::vector<long long> HilbertTable::delta(int k) const {
  std::vector<long long> v = values_;
  for (int i = 0; i < k; ++i) v = difference(v);
  return v;
}

long long HilbertTable::delta_at(int k, int t) const {
  if (t < 0) return 0;
  return delta(k).at(static_cast<std::size_t>(t));
}

HilbertSeries hilbert_series(const Ideal& ideal) {
  return hilbert_series(buchberger(ideal).initial_ideal());
}

HilbertTable hilbert_table(const Ideal& ideal, int t_max) {
  GroebnerBasis gb = buchberger(ideal);
  std::optional<unsigned> a;
  if (!gb.elements().empty()) a = static_cast<unsigned>(gb.elements().front().degree());
  for (const Polynomial& g : gb.elements()) a = std::min(*a, static_cast<unsigned>(g.degree()));
  return HilbertTable::from_series(hilbert_series(gb.initial_ideal()), t_max, a);
}

HilbertTable hilbert_table(const MonomialIdeal& ideal, int t_max) {
  std::optional<unsigned> a;
  if (!ideal.is_zero()) a = ideal.min_generator_degree();
  return HilbertTable::from_series(hilbert_series(ideal), t_max, a);
}

unsigned alpha(const Ideal& ideal) {
  std::optional<unsigned> a;
  for (const Polynomial& g : ideal.generators) {
    if (g.is_zero()) continue;
    auto d = static_cast<unsigned>(g.degree());
    a = a ? std::min(*a, d) : d;
  }
  if (!a) throw PreconditionError("initial degree of the zero ideal");
  return *a;
}

std::vector<Polynomial> component_basis(const GroebnerBasis& gb, unsigned d) {
  if (gb.degree_cap() && *gb.degree_cap() < d) {
    throw PreconditionError("Groebner basis is truncated below the requested degree");
  }
  MonomialIdeal in = gb.initial_ideal();
  std::vector<Polynomial> basis;
  for (const Monomial& m : monomials_of_degree(gb.ring().nvars, d)) {
    if (!in.contains(m)) continue;
    Polynomial p = Polynomial::monomial(gb.ring(), m, gb.order());
    basis.push_back(p - gb.normal_form(p));
  }
  return basis;
}

std::vector<Polynomial> component_basis(const Ideal& ideal, unsigned d) {
  GroebnerOptions options;
  options.degree_cap = d;
  return component_basis(buchberger(ideal, MonomialOrder::degrevlex(), options), d);
}

std::vector<std::pair<long long, long long>> binomial_expansion(long long h, unsigned d) {
  std::vector<std::pair<long long, long long>> out;
  long long rest = h;
  for (long long i = d; i >= 1 && rest > 0; --i) {
    long long k = i;
    while (binomial(k + 1, i) <= rest) ++k;
    out.emplace_back(k, i);
    rest -= binomial(k, i);
  }
  return out;
}

long long macaulay_growth_bound(long long h, unsigned d) {
  if (h < 0) throw PreconditionError("Hilbert function value must be non-negative");
  if (d < 1) throw PreconditionError("degree must be at least 1");
  long long bound = 0;
  for (const auto& [k, i] : binomial_expansion(h, d)) bound += binomial(k + 1, i + 1);
  return bound;
}

CrystallizationVerdict crystallization_check(const Ideal& ideal, unsigned d,
                                             const GinOptions& options) {
  for (const Polynomial& g : ideal.generators) {
    if (!g.is_zero() && static_cast<unsigned>(g.degree()) > d) {
      throw PreconditionError("ideal has a generator of degree above " + std::to_string(d));
    }
  }
  GinResult g = gin(ideal, MonomialOrder::degrevlex(), options);
  CrystallizationVerdict v;
  v.d = d;
  v.generic = g.generic();
  v.gin_generator_in_degree_d_plus_1 = !g.ideal.generators_of_degree(d + 1).empty();
  v.gin_max_generator_degree = g.ideal.max_generator_degree();
  v.regular = v.gin_max_generator_degree <= d;
  v.consistent = v.gin_generator_in_degree_d_plus_1 || v.regular;
  return v;
}

}  // namespace borelgin
