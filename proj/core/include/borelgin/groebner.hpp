#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "borelgin/monomial_ideal.hpp"
#include "borelgin/polynomial.hpp"

namespace borelgin {

enum class PairSelection {
  normal,  // lowest lcm degree first
  fifo,    // creation order
};

struct GroebnerOptions {
  /// Only S-pairs and generators of degree <= cap are processed; the result
  /// is then a Groebner basis in degrees <= cap only.
  std::optional<unsigned> degree_cap;
  PairSelection selection = PairSelection::normal;
  /// Degrees are counted over variables with index >= grading_from, so that
  /// inputs like t*f + (1-t)*g are homogeneous.
  int grading_from = 0;
};

struct GroebnerStats {
  std::size_t pairs_formed = 0;
  std::size_t pairs_discarded = 0;  // by the coprime and chain criteria
  std::size_t reductions_to_zero = 0;
  std::size_t source_generators = 0;
};

/// A reduced (monic, auto-reduced) Groebner basis, sorted by increasing
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements,
                GroebnerStats stats, std::optional<unsigned> degree_cap);

  const Ring& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const GroebnerStats& stats() const noexcept { return stats_; }
  std::optional<unsigned> degree_cap() const noexcept { return degree_cap_; }
  bool is_unit() const noexcept;

  /// Fully reduced remainder of f; the result carries this basis' order.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  MonomialIdeal initial_ideal() const;
  std::vector<Monomial> leading_monomials() const;

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  std::vector<std::uint32_t> lead_masks_;
  GroebnerStats stats_;
  std::optional<unsigned> degree_cap_;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria. The inputs must
/// be homogeneous for the grading selected in `options`.
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& generators,
                         const MonomialOrder& order = MonomialOrder::degrevlex(),
                         const GroebnerOptions& options = {});

inline GroebnerBasis buchberger(const Ideal& ideal,
                                const MonomialOrder& order = MonomialOrder::degrevlex(),
                                const GroebnerOptions& options = {}) {
  return buchberger(ideal.ring, ideal.generators, order, options);
}

/// Normal form of f modulo an arbitrary list of polynomials (plain division
/// by leading terms, fully reduced).
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& divisors);

}  // namespace borelgin
