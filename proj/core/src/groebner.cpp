#include "borelgin/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "borelgin/errors.hpp"

namespace borelgin {

namespace {

struct Divisors {
  std::vector<const Polynomial*> polys;
  std::vector<Monomial> leads;
  std::vector<std::uint32_t> masks;

  void add(const Polynomial* p) {
    polys.push_back(p);
    leads.push_back(p->leading_monomial());
    masks.push_back(p->leading_monomial().support_mask());
  }

  int find(const Monomial& m, std::uint32_t mask, std::size_t skip = SIZE_MAX) const {
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (k == skip || (masks[k] & ~mask)) continue;
      if (leads[k].divides(m)) return static_cast<int>(k);
    }
    return -1;
  }
};

Polynomial full_reduce(const Polynomial& f, const Divisors& divs, std::size_t skip = SIZE_MAX) {
  Polynomial p = f;
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < p.terms().size()) {
    const Term& t = p.terms()[pos];
    int k = divs.find(t.monomial, t.monomial.support_mask(), skip);
    if (k < 0) {
      remainder.push_back(t);
      ++pos;
      continue;
    }
    const Polynomial& g = *divs.polys[static_cast<std::size_t>(k)];
    FieldElement c = g.leading_coefficient().is_one() ? t.coefficient
                                                      : t.coefficient / g.leading_coefficient();
    Monomial m = t.monomial / divs.leads[static_cast<std::size_t>(k)];
    if (pos > 0) {
      std::vector<Term> rest(p.terms().begin() + static_cast<std::ptrdiff_t>(pos), p.terms().end());
      p = Polynomial::from_terms(p.ring(), p.order(), std::move(rest));
      pos = 0;
    }
    p.sub_mul_term(c, m, g);
  }
  return Polynomial::from_terms(f.ring(), f.order(), std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;  // j == SIZE_MAX marks an input generator with index i
  Monomial lcm;
  unsigned degree;
  std::size_t serial;
};

class Engine {
 public:
  Engine(const Ring& ring, const MonomialOrder& order, const GroebnerOptions& options)
      : ring_(ring), order_(order), options_(options) {}

  GroebnerBasis run(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> inputs;
    for (const Polynomial& g : generators) {
      if (!(g.ring() == ring_)) throw PreconditionError("generator from a different ring");
      if (g.is_zero()) continue;
      Polynomial h = g.with_order(order_);
      unsigned d = grade(h.leading_monomial());
      for (const Term& t : h.terms()) {
        if (grade(t.monomial) != d) {
          throw PreconditionError("generator is not homogeneous: " + h.to_string());
        }
      }
      inputs.push_back(std::move(h));
    }
    stats_.source_generators = inputs.size();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      unsigned d = grade(inputs[i].leading_monomial());
      queue_.push_back(Pair{i, SIZE_MAX, inputs[i].leading_monomial(), d, serial_++});
    }
    inputs_ = std::move(inputs);

    while (!queue_.empty()) {
      std::vector<Pair> batch = next_batch();
      if (batch.empty()) break;
      for (const Pair& pr : batch) {
        Polynomial s = pr.j == SIZE_MAX ? inputs_[pr.i] : s_polynomial(pr);
        Polynomial r = full_reduce(s, divisors_);
        if (r.is_zero()) {
          ++stats_.reductions_to_zero;
          continue;
        }
        insert(r.monic());
        if (basis_.back().is_constant()) {
          queue_.clear();
          break;
        }
      }
    }
    return finish();
  }

 private:
  std::vector<Pair> next_batch() {
    std::vector<Pair> batch;
    const auto cap = options_.degree_cap;
    if (cap) {
      std::erase_if(queue_, [&](const Pair& p) { return p.degree > *cap; });
    }
    if (queue_.empty()) return batch;
    if (options_.selection == PairSelection::fifo) {
      auto it = std::min_element(queue_.begin(), queue_.end(),
                                 [](const Pair& a, const Pair& b) { return a.serial < b.serial; });
      batch.push_back(*it);
      queue_.erase(it);
      return batch;
    }
    unsigned d = std::min_element(queue_.begin(), queue_.end(), [](const Pair& a, const Pair& b) {
                   return a.degree < b.degree;
                 })->degree;
    std::vector<Pair> rest;
    for (Pair& p : queue_) (p.degree == d ? batch : rest).push_back(std::move(p));
    queue_ = std::move(rest);
    // Inputs first, then pairs by increasing lcm; keeps runs reproducible.
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      bool ga = a.j == SIZE_MAX, gb = b.j == SIZE_MAX;
      if (ga != gb) return ga;
      Ordering c = order_.compare(a.lcm, b.lcm);
      if (c != Ordering::equal) return c == Ordering::less;
      return a.serial < b.serial;
    });
    return batch;
  }

  unsigned grade(const Monomial& m) const { return m.degree_from(options_.grading_from); }

  Polynomial s_polynomial(const Pair& pr) const {
    const Polynomial& a = basis_[pr.i];
    const Polynomial& b = basis_[pr.j];
    Polynomial s = a.multiplied(ring_.field.one(), pr.lcm / a.leading_monomial());
    s.sub_mul_term(ring_.field.one(), pr.lcm / b.leading_monomial(), b);
    return s;
  }

  void insert(Polynomial h) {
    const std::size_t k = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < k; ++g) {
      if (!active_[g]) continue;
      Monomial l = Monomial::lcm(basis_[g].leading_monomial(), lh);
      candidates.push_back(Pair{g, k, l, grade(l), 0});
    }
    stats_.pairs_formed += candidates.size();
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = basis_[p.i].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o) {
          dominated = candidates[o].lcm.divides(p.lcm);
        }
        for (std::size_t o = 0; o < kept.size() && !dominated; ++o) {
          dominated = kept[o].lcm.divides(p.lcm);
        }
      }
      if (!dominated) {
        kept.push_back(p);
      } else {
        ++stats_.pairs_discarded;
      }
    }
    std::vector<Pair> fresh;
    for (const Pair& p : kept) {
      if (basis_[p.i].leading_monomial().coprime(lh)) {
        ++stats_.pairs_discarded;
      } else {
        fresh.push_back(p);
      }
    }
    std::size_t before = queue_.size();
    std::erase_if(queue_, [&](const Pair& p) {
      if (p.j == SIZE_MAX || !lh.divides(p.lcm)) return false;
      Monomial a = Monomial::lcm(basis_[p.i].leading_monomial(), lh);
      Monomial b = Monomial::lcm(basis_[p.j].leading_monomial(), lh);
      return !(a == p.lcm) && !(b == p.lcm);
    });
    stats_.pairs_discarded += before - queue_.size();
    for (Pair& p : fresh) {
      p.serial = serial_++;
      queue_.push_back(std::move(p));
    }
    for (std::size_t g = 0; g < k; ++g) {
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
    }
    divisors_ = Divisors{};
    for (std::size_t g = 0; g <= k; ++g) {
      if (active_[g]) divisors_.add(&basis_[g]);
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> minimal;
    for (std::size_t g = 0; g < basis_.size(); ++g) {
      if (active_[g]) minimal.push_back(basis_[g]);
    }
    if (std::any_of(minimal.begin(), minimal.end(),
                    [](const Polynomial& p) { return p.is_constant(); })) {
      minimal = {Polynomial::constant(ring_, ring_.field.one(), order_)};
    }
    Divisors divs;
    for (const Polynomial& p : minimal) divs.add(&p);
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      reduced.push_back(full_reduce(minimal[i], divs, i).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis(ring_, order_, std::move(reduced), stats_, options_.degree_cap);
  }

  Ring ring_;
  MonomialOrder order_;
  GroebnerOptions options_;
  GroebnerStats stats_;
  std::vector<Polynomial> inputs_;
  std::deque<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> queue_;
  Divisors divisors_;
  std::size_t serial_ = 0;
};

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements,
                             GroebnerStats stats, std::optional<unsigned> degree_cap)
    : ring_(std::move(ring)),
      order_(order),
      elements_(std::move(elements)),
      stats_(stats),
      degree_cap_(degree_cap) {
  for (const Polynomial& p : elements_) {
    leads_.push_back(p.leading_monomial());
    lead_masks_.push_back(p.leading_monomial().support_mask());
  }
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_.front().is_constant();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  Divisors divs;
  for (const Polynomial& p : elements_) divs.add(&p);
  return full_reduce(f.with_order(order_), divs);
}

MonomialIdeal GroebnerBasis::initial_ideal() const { return MonomialIdeal(ring_.nvars, leads_); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const { return leads_; }

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order, const GroebnerOptions& options) {
  return Engine(ring, order, options).run(generators);
}

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  Divisors divs;
  for (const Polynomial& p : divisors) {
    if (!p.is_zero()) divs.add(&p);
  }
  return full_reduce(f, divs);
}

}  // namespace borelgin
