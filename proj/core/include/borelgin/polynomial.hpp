#pragma once

#include <span>
#include <string>
#include <vector>

#include "borelgin/field.hpp"
#include "borelgin/monomial.hpp"

namespace borelgin {

/// The polynomial ring K[x_1..x_n].
struct Ring {
  int nvars;
  Field field;

  friend bool operator==(const Ring&, const Ring&) = default;
};

struct Term {
  Monomial monomial;
  FieldElement coefficient;
};

/// A sparse polynomial whose terms are kept strictly decreasing in its order,
/// with no zero coefficients.
class Polynomial {
 public:
  Polynomial(Ring ring, MonomialOrder order = MonomialOrder::degrevlex());

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, MonomialOrder order, std::vector<Term> terms);
  static Polynomial constant(Ring ring, const FieldElement& c,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial monomial(Ring ring, const Monomial& m,
                             MonomialOrder order = MonomialOrder::degrevlex());
  static Polynomial variable(Ring ring, int index,
                             MonomialOrder order = MonomialOrder::degrevlex());
  /// sum_j coefficients[j] * x_j
  static Polynomial linear_form(Ring ring, std::span<const FieldElement> coefficients,
                                MonomialOrder order = MonomialOrder::degrevlex());

  const Ring& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_.field; }
  int nvars() const noexcept { return ring_.nvars; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Leading data; throw std::logic_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const FieldElement& leading_coefficient() const { return leading_term().coefficient; }

  /// Maximal total degree; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial with_order(const MonomialOrder& order) const;
  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial multiplied(const FieldElement& c, const Monomial& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// *this -= c * m * g. The workhorse of reduction.
  void sub_mul_term(const FieldElement& c, const Monomial& m, const Polynomial& g);

  /// Exact division; throws std::invalid_argument if g does not divide *this.
  Polynomial divided_by(const Polynomial& g) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Coefficient of m, zero if absent.
  FieldElement coefficient(const Monomial& m) const;

  /// Moves to a ring with a different number of variables. Growing appends
  /// variables at the end; shrinking requires the dropped ones to be absent.
  Polynomial resized(int nvars) const;
  /// Inserts `count` new variables before all existing ones.
  Polynomial shifted_up(int count) const;
  /// Removes `count` leading variables, which must be absent.
  Polynomial shifted_down(int count) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Same ring and same terms (orders may differ).
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;
  Ring ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// A homogeneous ideal given by generators.
struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  static Ideal zero(Ring ring) { return Ideal{std::move(ring), {}}; }
  bool is_homogeneous() const;
  /// Generators with zeros removed.
  Ideal cleaned() const;
  Ideal plus(const std::vector<Polynomial>& more) const;
};

}  // namespace borelgin
