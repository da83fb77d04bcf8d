#include "borelgin/hilbert_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace borelgin {

namespace {

using Poly = std::vector<long long>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &a[i])) throw std::overflow_error("Hilbert numerator overflow");
  }
  trim(a);
  return a;
}

Poly times_one_minus_power(const Poly& a, unsigned d) {
  Poly r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  trim(r);
  return r;
}

Poly shifted(const Poly& a, unsigned d) {
  if (a.empty()) return a;
  Poly r(d, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Poly numerator(const MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  const int n = ideal.nvars();
  if (gens.empty()) return Poly{1};
  if (ideal.is_unit()) return Poly{};

  std::uint32_t seen = 0;
  bool coprime = true;
  for (const Monomial& g : gens) {
    std::uint32_t mask = g.support_mask();
    if (seen & mask) {
      coprime = false;
      break;
    }
    seen |= mask;
  }
  if (coprime) {
    Poly r{1};
    for (const Monomial& g : gens) r = times_one_minus_power(r, g.degree());
    return r;
  }

  int pivot_var = 0;
  int best = -1;
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (const Monomial& g : gens) count += g.involves(i) ? 1 : 0;
    if (count > best) {
      best = count;
      pivot_var = i;
    }
  }
  std::vector<unsigned> exps;
  unsigned pure_power = 0;
  for (const Monomial& g : gens) {
    unsigned e = g.exponent(pivot_var);
    if (!e) continue;
    exps.push_back(e);
    if (g.degree() == e && (pure_power == 0 || e < pure_power)) pure_power = e;
  }
  std::sort(exps.begin(), exps.end());
  unsigned e = exps[exps.size() / 2];
  if (pure_power && e >= pure_power) e = pure_power - 1;
  e = std::max(e, 1u);

  Monomial p = Monomial::variable(n, pivot_var, e);
  Poly with_pivot = numerator(ideal.plus({p}));
  Poly colon = numerator(ideal.colon(p));
  return add(with_pivot, shifted(colon, e));
}

}  // namespace

HilbertSeries::HilbertSeries(int nvars, std::vector<long long> numerator)
    : nvars_(nvars), numerator_(std::move(numerator)) {
  trim(numerator_);
  if (numerator_.empty()) return;
  // Divide by (1 - t) while N(1) = 0.
  Poly h = numerator_;
  int divisions = 0;
  for (;;) {
    long long at_one = 0;
    for (long long c : h) at_one += c;
    if (at_one != 0) break;
    Poly q(h.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
      carry += h[i];
      q[i] = carry;
    }
    h = std::move(q);
    trim(h);
    ++divisions;
  }
  h_ = std::move(h);
  dimension_ = nvars_ - divisions;
  degree_ = 0;
  for (long long c : h_) degree_ += c;
}

long long HilbertSeries::value(long long t) const {
  if (t < 0) return 0;
  long long sum = 0;
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    long long s = t - static_cast<long long>(k);
    if (s < 0) break;
    long long ways = nvars_ == 0 ? (s == 0 ? 1 : 0) : binomial(s + nvars_ - 1, nvars_ - 1);
    sum += numerator_[k] * ways;
  }
  return sum;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  return HilbertSeries(ideal.nvars(), numerator(ideal));
}

}  // namespace borelgin
