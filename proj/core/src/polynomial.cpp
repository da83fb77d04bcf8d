#include "borelgin/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace borelgin {

Polynomial::Polynomial(Ring ring, MonomialOrder order) : ring_(std::move(ring)), order_(order) {}

Polynomial Polynomial::from_terms(Ring ring, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(ring), order);
  for (const Term& t : terms) {
    if (t.monomial.nvars() != p.ring_.nvars) {
      throw std::invalid_argument("term has the wrong number of variables");
    }
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
      continue;
    }
    if (!t.coefficient.is_zero()) p.terms_.push_back(std::move(t));
  }
  return p;
}

Polynomial Polynomial::constant(Ring ring, const FieldElement& c, MonomialOrder order) {
  Polynomial p(ring, order);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(ring.nvars), c});
  return p;
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, MonomialOrder order) {
  Polynomial p(ring, order);
  p.terms_.push_back(Term{m, ring.field.one()});
  return p;
}

Polynomial Polynomial::variable(Ring ring, int index, MonomialOrder order) {
  return monomial(ring, Monomial::variable(ring.nvars, index), order);
}

Polynomial Polynomial::linear_form(Ring ring, std::span<const FieldElement> coefficients,
                                   MonomialOrder order) {
  std::vector<Term> terms;
  for (int j = 0; j < ring.nvars; ++j) {
    terms.push_back(Term{Monomial::variable(ring.nvars, j), coefficients[static_cast<std::size_t>(j)]});
  }
  return from_terms(ring, order, std::move(terms));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const Term& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  return from_terms(ring_, order, terms_);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial p(ring_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.monomial, t.coefficient * c});
  return p;
}

Polynomial Polynomial::multiplied(const FieldElement& c, const Monomial& m) const {
  Polynomial p(ring_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials from different rings");
  if (!(order_ == other.order_)) {
    throw std::invalid_argument("polynomials sorted by different monomial orders");
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.sub_mul_term(-a.field().one(), Monomial(a.nvars()), b);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.sub_mul_term(a.field().one(), Monomial(a.nvars()), b);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-field().one()); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      terms.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.ring_, a.order_, std::move(terms));
}

void Polynomial::sub_mul_term(const FieldElement& c, const Monomial& m, const Polynomial& g) {
  check_compatible(g);
  if (c.is_zero() || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto i = terms_.begin();
  auto j = g.terms_.begin();
  while (i != terms_.end() && j != g.terms_.end()) {
    Monomial mj = j->monomial * m;
    Ordering cmp = order_.compare(i->monomial, mj);
    if (cmp == Ordering::greater) {
      out.push_back(std::move(*i++));
    } else if (cmp == Ordering::less) {
      out.push_back(Term{mj, -(c * j->coefficient)});
      ++j;
    } else {
      FieldElement v = i->coefficient - c * j->coefficient;
      if (!v.is_zero()) out.push_back(Term{mj, std::move(v)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != g.terms_.end(); ++j) out.push_back(Term{j->monomial * m, -(c * j->coefficient)});
  terms_ = std::move(out);
}

Polynomial Polynomial::divided_by(const Polynomial& g) const {
  check_compatible(g);
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  // Long division by leading terms; exact division leaves no remainder.
  Polynomial rest = *this;
  std::vector<Term> quotient;
  const FieldElement inv = g.leading_coefficient().inverse();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) {
      throw std::invalid_argument("polynomial division is not exact");
    }
    Monomial q = lt.monomial / g.leading_monomial();
    FieldElement c = lt.coefficient * inv;
    quotient.push_back(Term{q, c});
    rest.sub_mul_term(c, q, g);
  }
  return from_terms(ring_, order_, std::move(quotient));
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != static_cast<std::size_t>(nvars())) {
    throw std::invalid_argument("evaluation point has the wrong dimension");
  }
  FieldElement sum = field().zero();
  for (const Term& t : terms_) {
    FieldElement v = t.coefficient;
    for (int i = 0; i < nvars(); ++i) {
      for (unsigned e = 0; e < t.monomial.exponent(i); ++e) v *= point[static_cast<std::size_t>(i)];
    }
    sum += v;
  }
  return sum;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& x) {
    return order_.greater(t.monomial, x);
  });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return field().zero();
}

Polynomial Polynomial::resized(int nvars) const {
  Ring r{nvars, ring_.field};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) terms.push_back(Term{t.monomial.resized(nvars), t.coefficient});
  return from_terms(r, order_, std::move(terms));
}

Polynomial Polynomial::shifted_up(int count) const {
  Ring r{nvars() + count, ring_.field};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::vector<unsigned> e(static_cast<std::size_t>(count), 0);
    auto rest = t.monomial.exponents();
    e.insert(e.end(), rest.begin(), rest.end());
    terms.push_back(Term{Monomial(r.nvars, e), t.coefficient});
  }
  return from_terms(r, order_, std::move(terms));
}

Polynomial Polynomial::shifted_down(int count) const {
  Ring r{nvars() - count, ring_.field};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    auto e = t.monomial.exponents();
    for (int i = 0; i < count; ++i) {
      if (e[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("cannot drop a variable that occurs in the polynomial");
      }
    }
    std::vector<unsigned> rest(e.begin() + count, e.end());
    terms.push_back(Term{Monomial(r.nvars, rest), t.coefficient});
  }
  MonomialOrder ord = order_.kind() == MonomialOrder::Kind::elimination
                          ? MonomialOrder::degrevlex()
                          : order_;
  return from_terms(r, ord, std::move(terms));
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::string c = t.coefficient.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.size() != b.size()) return false;
  const Polynomial c = b.with_order(a.order_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms_[i].monomial == c.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == c.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& p) { return p.is_homogeneous(); });
}

Ideal Ideal::cleaned() const {
  Ideal r{ring, {}};
  for (const Polynomial& p : generators) {
    if (!p.is_zero()) r.generators.push_back(p);
  }
  return r;
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
  Ideal r = *this;
  r.generators.insert(r.generators.end(), more.begin(), more.end());
  return r;
}

}  // namespace borelgin
