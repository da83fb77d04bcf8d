#include "borelgin/ideal_ops.hpp"

#include <algorithm>

#include "borelgin/errors.hpp"
#include "borelgin/linear_change.hpp"

namespace borelgin {

namespace {

Ideal clean_degrevlex(const Ideal& ideal) {
  Ideal r{ideal.ring, {}};
  for (const Polynomial& p : ideal.generators) {
    if (!p.is_zero()) r.generators.push_back(p.with_order(MonomialOrder::degrevlex()));
  }
  return r;
}

// Colon by the last variable through a degrevlex basis: dividing every basis
// element by x_n where possible gives a basis of I : x_n.
Ideal colon_by_last_variable(const Ideal& ideal) {
  GroebnerBasis gb = buchberger(ideal);
  const int last = ideal.ring.nvars - 1;
  Ideal r{ideal.ring, {}};
  for (const Polynomial& g : gb.elements()) {
    if (g.leading_monomial().involves(last)) {
      r.generators.push_back(g.divided_by(Polynomial::variable(ideal.ring, last)));
    } else {
      r.generators.push_back(g);
    }
  }
  return r;
}

}  // namespace

Ideal to_ideal(const GroebnerBasis& gb) { return Ideal{gb.ring(), gb.elements()}; }

std::vector<Polynomial> elimination_ideal(const Ideal& ideal, const std::vector<bool>& keep) {
  const int n = ideal.ring.nvars;
  if (keep.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("keep mask has the wrong length");
  }
  // Move eliminated variables to the front.
  std::vector<int> perm;
  for (int i = 0; i < n; ++i) {
    if (!keep[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  const int block = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    if (keep[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  // New variable y_k is old x_{perm[k]}: substitute x_{perm[k]} -> y_k.
  std::vector<int> to_new(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) to_new[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
  LinearChange forward = LinearChange::permutation(ideal.ring, to_new);
  LinearChange backward = forward.inverse();

  std::vector<Polynomial> moved;
  for (const Polynomial& g : ideal.generators) {
    if (!g.is_zero()) moved.push_back(forward.apply(g.with_order(MonomialOrder::degrevlex())));
  }
  auto order = MonomialOrder::elimination(block);
  GroebnerBasis gb = buchberger(ideal.ring, moved, order);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    bool free = true;
    for (const Term& t : g.terms()) {
      for (int i = 0; i < block && free; ++i) free = !t.monomial.involves(i);
      if (!free) break;
    }
    if (free) out.push_back(backward.apply(g.with_order(MonomialOrder::degrevlex())));
  }
  return out;
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!(a.ring == b.ring)) throw PreconditionError("intersecting ideals of different rings");
  Ideal ca = clean_degrevlex(a);
  Ideal cb = clean_degrevlex(b);
  if (ca.generators.empty() || cb.generators.empty()) return Ideal{a.ring, {}};
  const int n = a.ring.nvars;
  if (n + 1 > kMaxVariables) throw PreconditionError("too many variables for intersection");
  Ring big{n + 1, a.ring.field};
  auto order = MonomialOrder::elimination(1);
  Polynomial t = Polynomial::variable(big, 0, order);
  Polynomial one_minus_t = Polynomial::constant(big, big.field.one(), order) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ca.generators) gens.push_back(t * f.shifted_up(1).with_order(order));
  for (const Polynomial& g : cb.generators) {
    gens.push_back(one_minus_t * g.shifted_up(1).with_order(order));
  }
  GroebnerOptions options;
  options.grading_from = 1;
  GroebnerBasis gb = buchberger(big, gens, order, options);
  Ideal r{a.ring, {}};
  for (const Polynomial& g : gb.elements()) {
    if (g.leading_monomial().involves(0)) continue;
    r.generators.push_back(g.shifted_down(1).with_order(MonomialOrder::degrevlex()));
  }
  return r;
}

Ideal colon_by_poly(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  Polynomial g = f.with_order(MonomialOrder::degrevlex());
  if (g.is_constant()) return clean_degrevlex(ideal);
  Ideal meet = ideal_intersection(ideal, Ideal{ideal.ring, {g}});
  Ideal r{ideal.ring, {}};
  for (const Polynomial& h : meet.generators) r.generators.push_back(h.divided_by(g));
  return r;
}

SaturationResult saturate_by_variable(const Ideal& ideal, int var) {
  if (var < 0 || var >= ideal.ring.nvars) throw PreconditionError("variable index out of range");
  const bool last = var == ideal.ring.nvars - 1;
  Polynomial x = Polynomial::variable(ideal.ring, var);
  SaturationResult result{to_ideal(buchberger(clean_degrevlex(ideal))), 0};
  for (;;) {
    Ideal next = last ? colon_by_last_variable(result.ideal) : colon_by_poly(result.ideal, x);
    if (same_ideal(next, result.ideal)) return result;
    result.ideal = to_ideal(buchberger(next));
    ++result.steps;
  }
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!(a.ring == b.ring)) return false;
  GroebnerBasis ga = buchberger(clean_degrevlex(a));
  GroebnerBasis gb = buchberger(clean_degrevlex(b));
  if (ga.elements().size() != gb.elements().size()) return false;
  for (std::size_t i = 0; i < ga.elements().size(); ++i) {
    if (!(ga.elements()[i] == gb.elements()[i])) return false;
  }
  return true;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  GroebnerBasis gb = buchberger(clean_degrevlex(outer));
  return std::all_of(inner.generators.begin(), inner.generators.end(),
                     [&](const Polynomial& p) { return gb.contains(p); });
}

}  // namespace borelgin
