#include "borelgin/monomial_ideal.hpp"

#include <algorithm>

#include "borelgin/errors.hpp"

namespace borelgin {

namespace {

__extension__ using Wide = __int128;

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return MonomialOrder::degrevlex().greater(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

}  // namespace

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<long long>(r);
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const Monomial& m : generators) {
    if (m.nvars() != nvars) throw PreconditionError("generator has the wrong number of variables");
  }
  gens_ = minimalize(std::move(generators));
  for (const Monomial& m : gens_) {
    d_ = std::max(d_, m.min_index() + 1);
    m_ = std::max(m_, m.max_index() + 1);
  }
  for (const Monomial& m : gens_) {
    for (int i = 0; i < nvars_ && strongly_stable_; ++i) {
      if (!m.involves(i)) continue;
      Monomial base = m.with_exponent(i, m.exponent(i) - 1);
      for (int j = 0; j < i; ++j) {
        if (!contains(base * Monomial::variable(nvars_, j))) {
          strongly_stable_ = false;
          break;
        }
      }
    }
    if (!strongly_stable_) break;
  }
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::D() const {
  if (is_zero()) throw PreconditionError("D is undefined for the zero ideal");
  return d_;
}

int MonomialIdeal::M() const {
  if (is_zero()) throw PreconditionError("M is undefined for the zero ideal");
  return m_;
}

void MonomialIdeal::require_strongly_stable(const char* what) const {
  if (!strongly_stable_) {
    throw PreconditionError(std::string(what) + " requires a strongly stable ideal");
  }
}

std::vector<Monomial> MonomialIdeal::spor_set() const {
  require_strongly_stable("Spor");
  std::vector<Monomial> out;
  if (is_zero() || d_ == m_) return out;
  const int last = m_ - 1;
  for (const Monomial& g : gens_) {
    if (g.max_index() != last) continue;
    for (unsigned r = 1; r <= g.exponent(last); ++r) {
      out.push_back(g.with_exponent(last, g.exponent(last) - r));
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return MonomialOrder::degrevlex().greater(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t MonomialIdeal::spor_count(unsigned degree) const {
  auto all = spor_set();
  return static_cast<std::size_t>(std::count_if(
      all.begin(), all.end(), [&](const Monomial& m) { return m.degree() == degree; }));
}

unsigned MonomialIdeal::sat_degree() const {
  require_strongly_stable("saturation degree");
  unsigned d = 0;
  for (const Monomial& g : gens_) {
    if (g.involves(nvars_ - 1)) d = std::max(d, g.degree());
  }
  return d;
}

unsigned MonomialIdeal::regularity() const {
  require_strongly_stable("regularity");
  return max_generator_degree();
}

bool MonomialIdeal::is_saturated() const {
  return std::none_of(gens_.begin(), gens_.end(),
                      [&](const Monomial& g) { return g.involves(nvars_ - 1); });
}

MonomialIdeal MonomialIdeal::substitute_last_zero() const {
  if (nvars_ == 0) throw PreconditionError("no variable to substitute");
  std::vector<Monomial> kept;
  for (const Monomial& g : gens_) {
    if (!g.involves(nvars_ - 1)) kept.push_back(g.resized(nvars_ - 1));
  }
  return MonomialIdeal(nvars_ - 1, std::move(kept));
}

MonomialIdeal MonomialIdeal::substitute_var_one(int index) const {
  if (index < 0 || index >= nvars_) throw PreconditionError("variable index out of range");
  std::vector<Monomial> erased;
  for (const Monomial& g : gens_) erased.push_back(g.with_exponent(index, 0));
  return MonomialIdeal(nvars_, std::move(erased));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const Monomial& g : gens_) out.push_back(g / Monomial::gcd(g, m));
  return MonomialIdeal(nvars_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus(const std::vector<Monomial>& more) const {
  std::vector<Monomial> all = gens_;
  all.insert(all.end(), more.begin(), more.end());
  return MonomialIdeal(nvars_, std::move(all));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> out;
  for (const Monomial& a : gens_) {
    for (const Monomial& b : other.gens_) out.push_back(Monomial::lcm(a, b));
  }
  return MonomialIdeal(nvars_, std::move(out));
}

unsigned MonomialIdeal::max_generator_degree() const noexcept {
  return gens_.empty() ? 0 : gens_.back().degree();
}

unsigned MonomialIdeal::min_generator_degree() const {
  if (is_zero()) throw PreconditionError("initial degree of the zero ideal");
  return gens_.front().degree();
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(unsigned d) const {
  std::vector<Monomial> out;
  for (const Monomial& g : gens_) {
    if (g.degree() == d) out.push_back(g);
  }
  return out;
}

std::vector<Monomial> MonomialIdeal::standard_monomials(unsigned d) const {
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(nvars_, d)) {
    if (!contains(m)) out.push_back(m);
  }
  return out;
}

std::string MonomialIdeal::to_string(const std::vector<std::string>& names) const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(names);
  }
  return out + ")";
}

EliahouKervaire eliahou_kervaire(const MonomialIdeal& ideal) {
  if (!ideal.is_strongly_stable()) {
    throw PreconditionError("Eliahou-Kervaire resolution requires a strongly stable ideal");
  }
  EliahouKervaire ek;
  ek.betti.assign(static_cast<std::size_t>(std::max(ideal.nvars(), 1)), 0);
  for (const Monomial& g : ideal.generators()) {
    int top = g.max_index() + 1;
    for (int i = 0; i < top; ++i) ek.betti[static_cast<std::size_t>(i)] += binomial(top - 1, i);
    ek.regularity = std::max(ek.regularity, g.degree());
  }
  return ek;
}

}  // namespace borelgin
