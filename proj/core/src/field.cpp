#include "borelgin/field.hpp"

#include <stdexcept>

#include "borelgin/errors.hpp"

namespace borelgin {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return Field(p);
}

FieldElement Field::zero() const { return from_integer(0); }
FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long v) const {
  if (is_rational()) return FieldElement(mpq_class(mpz_class(std::to_string(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(FieldElement::Residue{static_cast<std::uint32_t>(r), p_});
}

FieldElement Field::from_decimal(const std::string& digits) const {
  mpz_class z;
  if (z.set_str(digits, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: " + digits);
  }
  if (is_rational()) return FieldElement(mpq_class(z));
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return FieldElement(FieldElement::Residue{static_cast<std::uint32_t>(r.get_ui()), p_});
}

FieldElement Field::random(std::mt19937_64& rng) const {
  if (is_rational()) {
    std::uniform_int_distribution<long long> dist(-100, 100);
    return from_integer(dist(rng));
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  return FieldElement(FieldElement::Residue{dist(rng), p_});
}

FieldElement Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FieldElement x = random(rng);
    if (!x.is_zero()) return x;
  }
}

std::string Field::to_string() const { return is_rational() ? "Q" : std::to_string(p_); }

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

[[noreturn]] void mode_mismatch() {
  throw std::invalid_argument("field element operands belong to different fields");
}

}  // namespace

Field FieldElement::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field::prime(r->modulus);
  return Field::rationals();
}

bool FieldElement::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  }
  return FieldElement(mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto* ra = std::get_if<FieldElement::Residue>(&a.value_);
  const auto* rb = std::get_if<FieldElement::Residue>(&b.value_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) mode_mismatch();
    std::uint32_t s = ra->value + rb->value;
    if (s >= ra->modulus) s -= ra->modulus;
    return FieldElement(FieldElement::Residue{s, ra->modulus});
  }
  if (ra || rb) mode_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto* ra = std::get_if<FieldElement::Residue>(&a.value_);
  const auto* rb = std::get_if<FieldElement::Residue>(&b.value_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) mode_mismatch();
    std::uint32_t s = ra->value >= rb->value ? ra->value - rb->value
                                             : ra->value + (ra->modulus - rb->value);
    return FieldElement(FieldElement::Residue{s, ra->modulus});
  }
  if (ra || rb) mode_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto* ra = std::get_if<FieldElement::Residue>(&a.value_);
  const auto* rb = std::get_if<FieldElement::Residue>(&b.value_);
  if (ra && rb) {
    if (ra->modulus != rb->modulus) mode_mismatch();
    auto prod = static_cast<std::uint64_t>(ra->value) * rb->value % ra->modulus;
    return FieldElement(FieldElement::Residue{static_cast<std::uint32_t>(prod), ra->modulus});
  }
  if (ra || rb) mode_mismatch();
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  const auto* ra = std::get_if<FieldElement::Residue>(&a.value_);
  const auto* rb = std::get_if<FieldElement::Residue>(&b.value_);
  if (ra && rb) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra || rb) return false;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::uint32_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw std::logic_error("residue() on a rational field element");
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw std::logic_error("rational() on a prime-field element");
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->value > r->modulus / 2) {
      return "-" + std::to_string(r->modulus - r->value);
    }
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace borelgin
