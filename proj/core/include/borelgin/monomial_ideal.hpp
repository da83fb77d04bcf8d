#pragma once

#include <string>
#include <vector>

#include "borelgin/monomial.hpp"

namespace borelgin {

/// A monomial ideal held by its minimal generators, sorted by degree and then
/// decreasing degrevlex. D, M and strong stability are computed on
/// construction.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars, std::vector<Monomial> generators = {});

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front().is_one(); }
  bool contains(const Monomial& m) const noexcept;

  /// Generator-level test: x_j * m / x_i is in I for every generator m,
  /// every i in its support and every j < i.
  bool is_strongly_stable() const noexcept { return strongly_stable_; }

  /// 1-based D(I) and M(I); throw PreconditionError on the zero ideal.
  int D() const;
  int M() const;

  /// Throw PreconditionError unless strongly stable.
  std::vector<Monomial> spor_set() const;
  std::size_t spor_count(unsigned degree) const;
  unsigned sat_degree() const;
  unsigned regularity() const;
  /// No generator involves x_n (for strongly stable ideals: I is saturated).
  bool is_saturated() const;

  /// Drops generators involving x_n; the result lives in n-1 variables.
  MonomialIdeal substitute_last_zero() const;
  /// Sets x_index (0-based) to 1 and re-minimalizes, in the same ring.
  MonomialIdeal substitute_var_one(int index) const;

  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal plus(const std::vector<Monomial>& more) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  unsigned max_generator_degree() const noexcept;
  /// Initial degree; throws PreconditionError on the zero ideal.
  unsigned min_generator_degree() const;
  std::vector<Monomial> generators_of_degree(unsigned d) const;
  /// Monomials of degree d not in I, decreasing in degrevlex.
  std::vector<Monomial> standard_monomials(unsigned d) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  void require_strongly_stable(const char* what) const;

  int nvars_;
  std::vector<Monomial> gens_;
  bool strongly_stable_ = true;
  int d_ = 0;
  int m_ = 0;
};

/// Graded Betti numbers of the Eliahou-Kervaire resolution of a strongly
/// stable ideal: generator m contributes C(max(m)-1, i) to beta_i in internal
/// degree deg(m) + i.
struct EliahouKervaire {
  std::vector<long long> betti;  // total beta_i, i = 0..n-1
  unsigned regularity = 0;
};

/// Throws PreconditionError unless strongly stable.
EliahouKervaire eliahou_kervaire(const MonomialIdeal& ideal);

/// Binomial coefficient, 0 when k < 0 or k > n (n >= 0).
long long binomial(long long n, long long k);

}  // namespace borelgin
