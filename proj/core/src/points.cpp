#include "borelgin/points.hpp"

#include <algorithm>
#include <random>

#include "borelgin/errors.hpp"
#include "borelgin/gin.hpp"
#include "borelgin/hilbert.hpp"
#include "borelgin/ideal_ops.hpp"

namespace borelgin {

Vector normalize_point(Vector p) {
  auto first = std::find_if(p.begin(), p.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (first == p.end()) throw PreconditionError("the zero vector is not a projective point");
  FieldElement inv = first->inverse();
  for (FieldElement& c : p) c *= inv;
  return p;
}

PointSet::PointSet(int nvars, Field field) : nvars_(nvars), field_(std::move(field)) {
  if (nvars < 1) throw PreconditionError("a point set needs at least one coordinate");
}

PointSet::PointSet(int nvars, Field field, std::vector<Vector> points, std::uint64_t seed,
                   std::string provenance)
    : PointSet(nvars, std::move(field)) {
  seed_ = seed;
  provenance_ = std::move(provenance);
  for (Vector& p : points) add(std::move(p));
}

bool PointSet::contains(const Vector& p) const {
  Vector q = normalize_point(p);
  return std::find(points_.begin(), points_.end(), q) != points_.end();
}

void PointSet::add(Vector p) {
  if (static_cast<int>(p.size()) != nvars_) throw PreconditionError("point has the wrong length");
  for (const FieldElement& c : p) {
    if (!(c.field() == field_)) throw PreconditionError("point coordinates lie in another field");
  }
  Vector q = normalize_point(std::move(p));
  if (std::find(points_.begin(), points_.end(), q) != points_.end()) {
    throw PreconditionError("duplicate point");
  }
  points_.push_back(std::move(q));
}

PointSet PointSet::merged(const PointSet& other) const {
  if (other.nvars_ != nvars_) throw PreconditionError("point sets live in different spaces");
  PointSet out = *this;
  for (const Vector& p : other.points_) out.add(p);
  return out;
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  PointSet out(nvars_, field_);
  for (std::size_t i : indices) out.points_.push_back(points_.at(i));
  return out;
}

namespace {

Vector evaluations(const PointSet& points, const Monomial& m) {
  Vector v;
  v.reserve(points.size());
  for (const Vector& p : points.points()) {
    FieldElement value = points.field().one();
    for (int i = 0; i < m.nvars(); ++i) {
      for (unsigned e = 0; e < m.exponent(i); ++e) value *= p[static_cast<std::size_t>(i)];
    }
    v.push_back(value);
  }
  return v;
}

}  // namespace

GroebnerBasis buchberger_moller(const PointSet& points, const MonomialOrder& order) {
  if (order.kind() != MonomialOrder::Kind::degrevlex) {
    throw PreconditionError("Buchberger-Moeller is implemented for degrevlex only");
  }
  const Ring ring{points.nvars(), points.field()};
  const std::size_t count = points.size();
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  if (count == 0) {
    basis.push_back(Polynomial::constant(ring, ring.field.one(), order));
    return GroebnerBasis(ring, order, std::move(basis), {}, std::nullopt);
  }
  std::optional<unsigned> stable;
  for (unsigned t = 0; !stable || t <= *stable + 1; ++t) {
    std::vector<Monomial> candidates = monomials_of_degree(ring.nvars, t);
    std::reverse(candidates.begin(), candidates.end());  // increasing order
    EchelonBasis echelon(ring.field, count);
    std::vector<Monomial> standard;
    for (const Monomial& m : candidates) {
      bool divisible = std::any_of(leads.begin(), leads.end(),
                                   [&](const Monomial& l) { return l.divides(m); });
      if (divisible) continue;
      std::optional<Vector> comb = echelon.insert(evaluations(points, m));
      if (!comb) {
        standard.push_back(m);
        continue;
      }
      std::vector<Term> terms{{m, ring.field.one()}};
      for (std::size_t i = 0; i < comb->size(); ++i) {
        if (!(*comb)[i].is_zero()) terms.push_back({standard[i], -(*comb)[i]});
      }
      basis.push_back(Polynomial::from_terms(ring, order, std::move(terms)));
      leads.push_back(m);
    }
    if (!stable && standard.size() == count) stable = t;
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(ring, order, std::move(basis), {}, std::nullopt);
}

Ideal vanishing_ideal(const PointSet& points) { return to_ideal(buchberger_moller(points)); }

long long points_hilbert_value(const PointSet& points, unsigned t) {
  std::vector<Monomial> ms = monomials_of_degree(points.nvars(), t);
  if (points.size() == 0) return 0;
  Matrix m(points.field(), points.size(), ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    Vector v = evaluations(points, ms[j]);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
  }
  return static_cast<long long>(m.rank());
}

PointSet random_points(int nvars, std::size_t count, std::uint64_t seed, const Field& field) {
  std::mt19937_64 rng(seed);
  PointSet out(nvars, field, {}, seed, "random");
  while (out.size() < count) {
    Vector p;
    for (int i = 0; i < nvars; ++i) p.push_back(field.random(rng));
    if (std::all_of(p.begin(), p.end(), [](const FieldElement& c) { return c.is_zero(); })) continue;
    if (out.contains(p)) continue;
    out.add(std::move(p));
  }
  return out;
}

namespace {

// Coefficients (constant term first) of the univariate polynomial g with
// g(lambda) = f(a + lambda * b).
std::vector<std::uint64_t> restrict_to_line(const Polynomial& f, const Vector& a, const Vector& b) {
  const Field& field = f.field();
  const int d = f.degree();
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  Matrix vandermonde(field, k, k);
  Vector values;
  for (std::size_t i = 0; i < k; ++i) {
    FieldElement lambda = field.from_integer(static_cast<long long>(i));
    FieldElement power = field.one();
    for (std::size_t j = 0; j < k; ++j) {
      vandermonde.at(i, j) = power;
      power *= lambda;
    }
    Vector point;
    for (std::size_t c = 0; c < a.size(); ++c) point.push_back(a[c] + lambda * b[c]);
    values.push_back(f.evaluate(point));
  }
  Vector coeffs = vandermonde.inverse()->apply(values);
  std::vector<std::uint64_t> out;
  for (const FieldElement& c : coeffs) out.push_back(c.residue());
  return out;
}

}  // namespace

PointSet points_on_hypersurface(const Polynomial& f, std::size_t count, std::uint64_t seed) {
  const Field& field = f.field();
  if (!field.is_prime()) throw PreconditionError("points on a hypersurface need a prime field");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
    throw PreconditionError("need a nonconstant homogeneous form");
  }
  if (f.nvars() > 4) throw PreconditionError("points on a hypersurface are limited to n <= 4");
  const std::uint64_t p = field.characteristic();
  std::mt19937_64 rng(seed);
  PointSet out(f.nvars(), field, {}, seed, "hypersurface");
  const std::size_t budget = 64 + 16 * count;
  for (std::size_t line = 0; out.size() < count; ++line) {
    if (line >= budget) throw ComputationError("not enough rational points found on the hypersurface");
    Vector a, b;
    for (int i = 0; i < f.nvars(); ++i) {
      a.push_back(field.random(rng));
      b.push_back(field.random(rng));
    }
    std::vector<std::uint64_t> g = restrict_to_line(f, a, b);
    if (std::all_of(g.begin(), g.end(), [](std::uint64_t c) { return c == 0; })) continue;
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (auto it = g.rbegin(); it != g.rend(); ++it) acc = (acc * x + *it) % p;
      if (acc == 0) roots.push_back(x);
    }
    std::shuffle(roots.begin(), roots.end(), rng);
    for (std::uint64_t r : roots) {
      if (out.size() >= count) break;
      FieldElement lambda = field.from_integer(static_cast<long long>(r));
      Vector point;
      bool zero = true;
      for (std::size_t c = 0; c < a.size(); ++c) {
        point.push_back(a[c] + lambda * b[c]);
        zero = zero && point.back().is_zero();
      }
      if (zero || out.contains(point)) continue;
      out.add(std::move(point));
    }
  }
  return out;
}

Ideal intersect_point_ideals(const Ideal& a, const Ideal& b) {
  if (!a.is_homogeneous() || !b.is_homogeneous()) throw PreconditionError("ideals must be homogeneous");
  return ideal_intersection(a, b);
}

bool check_upp_bruteforce(const PointSet& points, std::size_t limit) {
  const std::size_t n = points.size();
  if (n > limit) throw PreconditionError("point set is larger than the brute-force limit");
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<long long> reference;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask[i]) idx.push_back(i);
      }
      PointSet sub = points.subset(idx);
      std::vector<long long> hf;
      for (unsigned t = 0;; ++t) {
        hf.push_back(points_hilbert_value(sub, t));
        if (hf.back() == static_cast<long long>(k)) break;
      }
      if (reference.empty()) {
        reference = hf;
      } else if (hf != reference) {
        return false;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return true;
}

Ideal complete_intersection(const Ring& ring, const std::vector<unsigned>& degrees,
                            std::uint64_t seed, int max_attempts) {
  if (degrees.size() > static_cast<std::size_t>(ring.nvars)) {
    throw PreconditionError("more forms than variables");
  }
  // Expected numerator prod (1 - t^d_i).
  std::vector<long long> expected{1};
  for (unsigned d : degrees) {
    std::vector<long long> next(expected.size() + d, 0);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      next[i] += expected[i];
      next[i + d] -= expected[i];
    }
    expected = std::move(next);
  }
  HilbertSeries target(ring.nvars, expected);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(trial_seed(seed, attempt));
    Ideal ideal{ring, {}};
    for (unsigned d : degrees) ideal.generators.push_back(random_form(ring, d, rng));
    HilbertSeries got = hilbert_series(ideal);
    if (got.numerator() == target.numerator()) return ideal;
  }
  throw ComputationError("random forms did not form a complete intersection");
}

}  // namespace borelgin
