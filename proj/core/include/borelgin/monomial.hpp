#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace borelgin {

inline constexpr int kMaxVariables = 16;

/// A monomial x^K over at most kMaxVariables variables. Variable 0 is x_1,
/// the largest variable in every supported order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const unsigned> exponents);
  Monomial(int nvars, std::initializer_list<unsigned> exponents);

  static Monomial variable(int nvars, int index, unsigned power = 1);

  int nvars() const noexcept { return n_; }
  unsigned exponent(int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }
  unsigned degree() const noexcept { return deg_; }
  /// Degree restricted to variables with index >= first.
  unsigned degree_from(int first) const noexcept;
  bool is_one() const noexcept { return deg_ == 0; }
  std::vector<unsigned> exponents() const;

  /// 0-based index of the first / last variable in the support; -1 for 1.
  int min_index() const noexcept;
  int max_index() const noexcept;
  bool involves(int i) const noexcept { return e_[static_cast<std::size_t>(i)] != 0; }
  std::uint32_t support_mask() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws std::invalid_argument if b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

  Monomial with_exponent(int i, unsigned e) const;
  /// Drops variable i, producing a monomial in nvars-1 variables.
  Monomial drop_variable(int i) const;
  /// Reinterprets in a ring with more or fewer trailing variables; the removed
  /// variables must have exponent 0.
  Monomial resized(int nvars) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::size_t hash() const noexcept;

  /// Names default to x1..xn. Uses '^' for powers and '*' between factors.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// All monomials of the given degree in n variables, in decreasing degrevlex
/// order.
std::vector<Monomial> monomials_of_degree(int nvars, unsigned degree);

std::vector<std::string> default_variable_names(int nvars);

enum class Ordering { less = -1, equal = 0, greater = 1 };

/// degrevlex, lex, or the block order that compares the first `block`
/// variables by degrevlex and breaks ties by degrevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(int block);

  Kind kind() const noexcept { return kind_; }
  int block() const noexcept { return block_; }

  /// Throws std::invalid_argument on mismatched variable counts.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::less; }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::greater;
  }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}
  Kind kind_;
  int block_;
};

}  // namespace borelgin
