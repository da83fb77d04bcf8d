#include "borelgin/linear_change.hpp"

#include <map>
#include <random>

#include "borelgin/errors.hpp"

namespace borelgin {

namespace {

// Multiplies p by the linear form l (given by its coefficient vector).
Polynomial times_linear(const Polynomial& p, const Vector& l) {
  std::vector<Term> terms;
  terms.reserve(p.size() * l.size());
  for (const Term& t : p.terms()) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j].is_zero()) continue;
      terms.push_back(Term{t.monomial * Monomial::variable(p.nvars(), static_cast<int>(j)),
                           t.coefficient * l[j]});
    }
  }
  return Polynomial::from_terms(p.ring(), p.order(), std::move(terms));
}

}  // namespace

LinearChange::LinearChange(Ring ring, Matrix matrix, std::optional<std::uint64_t> seed)
    : ring_(std::move(ring)), matrix_(std::move(matrix)), seed_(seed) {
  const auto n = static_cast<std::size_t>(ring_.nvars);
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw PreconditionError("linear change matrix must be n x n");
  }
  if (!(matrix_.field() == ring_.field)) {
    throw PreconditionError("linear change matrix is over a different field");
  }
  if (matrix_.determinant().is_zero()) throw PreconditionError("linear change matrix is singular");
}

LinearChange LinearChange::identity(Ring ring) {
  Matrix m = Matrix::identity(ring.field, static_cast<std::size_t>(ring.nvars));
  return LinearChange(std::move(ring), std::move(m));
}

LinearChange LinearChange::random(Ring ring, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(ring.nvars);
  for (;;) {
    Matrix m(ring.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ring.field.random(rng);
    }
    if (!m.determinant().is_zero()) return LinearChange(ring, std::move(m), seed);
  }
}

LinearChange LinearChange::permutation(Ring ring, const std::vector<int>& perm) {
  const auto n = static_cast<std::size_t>(ring.nvars);
  if (perm.size() != n) throw PreconditionError("permutation has the wrong length");
  Matrix m(ring.field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, static_cast<std::size_t>(perm[i])) = ring.field.one();
  return LinearChange(std::move(ring), std::move(m));
}

LinearChange LinearChange::inverse() const {
  auto inv = matrix_.inverse();
  return LinearChange(ring_, std::move(*inv));
}

LinearChange LinearChange::then(const LinearChange& next) const {
  return LinearChange(ring_, matrix_ * next.matrix_);
}

Polynomial LinearChange::image_of_variable(int i, const MonomialOrder& order) const {
  Vector row;
  for (int j = 0; j < ring_.nvars; ++j) {
    row.push_back(matrix_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
  return Polynomial::linear_form(ring_, row, order);
}

Polynomial LinearChange::apply(const Polynomial& f) const {
  if (!(f.ring() == ring_)) throw std::invalid_argument("polynomial is from a different ring");
  const int n = ring_.nvars;
  std::vector<Vector> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows[static_cast<std::size_t>(i)].push_back(
          matrix_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  }
  // Horner in x_1, then recursively in the remaining variables:
  // f = sum_k x_i^k f_k(x_{i+1}..x_n), image = f_0' + l_i (f_1' + l_i (...)).
  auto rec = [&](auto&& self, const std::vector<Term>& terms, int var) -> Polynomial {
    if (var == n || terms.empty()) {
      FieldElement c = ring_.field.zero();
      for (const Term& t : terms) c += t.coefficient;
      return Polynomial::constant(ring_, c, f.order());
    }
    std::map<unsigned, std::vector<Term>, std::greater<>> by_power;
    for (const Term& t : terms) {
      by_power[t.monomial.exponent(var)].push_back(
          Term{t.monomial.with_exponent(var, 0), t.coefficient});
    }
    const Vector& l = rows[static_cast<std::size_t>(var)];
    Polynomial acc(ring_, f.order());
    unsigned current = by_power.begin()->first;
    for (const auto& [power, group] : by_power) {
      while (current > power) {
        acc = times_linear(acc, l);
        --current;
      }
      acc += self(self, group, var + 1);
    }
    while (current > 0) {
      acc = times_linear(acc, l);
      --current;
    }
    return acc;
  };
  return rec(rec, f.terms(), 0);
}

Polynomial apply_change(const Polynomial& f, const LinearChange& g) { return g.apply(f); }

}  // namespace borelgin
