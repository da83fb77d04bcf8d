#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>

namespace borelgin {

inline constexpr std::uint32_t kDefaultPrime = 32003;

class FieldElement;

/// Coefficient field: the prime field F_p, or Q when the characteristic is 0.
///
/// F_p is the default working field. For the degrees that occur in practice
/// (far below p) generic behaviour over F_p matches characteristic zero with
/// overwhelming probability; Q is exact but coefficients can grow quickly
/// under dense random coordinate changes.
class Field {
 public:
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p = kDefaultPrime);
  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long long v) const;
  /// Accepts an optionally signed decimal integer of any length.
  FieldElement from_decimal(const std::string& digits) const;
  /// Uniform over F_p; over Q a small integer in [-100, 100].
  FieldElement random(std::mt19937_64& rng) const;
  /// Uniform over the nonzero elements.
  FieldElement random_nonzero(std::mt19937_64& rng) const;

  /// "32003" or "Q".
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An element of a Field. Prime-field values are kept reduced in [0, p);
/// rationals are kept in lowest terms with positive denominator.
class FieldElement {
 public:
  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws std::domain_error on zero

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Prime-field residue; throws std::logic_error for rationals.
  std::uint32_t residue() const;
  /// Rational value; throws std::logic_error for prime-field elements.
  const mpq_class& rational() const;

  /// Residues print in the symmetric range (-p/2, p/2] so small negative
  /// integers read back unchanged.
  std::string to_string() const;

 private:
  friend class Field;
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit FieldElement(Residue r) : value_(r) {}
  explicit FieldElement(mpq_class q) : value_(std::move(q)) {}

  std::variant<Residue, mpq_class> value_;
};

bool is_prime_number(std::uint32_t n);

}  // namespace borelgin
