#pragma once

#include <optional>
#include <vector>

#include "borelgin/gin.hpp"
#include "borelgin/groebner.hpp"
#include "borelgin/hilbert_series.hpp"

namespace borelgin {

/// H(R/I, t) for 0 <= t <= t_max with derived views.
class HilbertTable {
 public:
  /// Exact: dimension, degree and h-vector come from the series.
  static HilbertTable from_series(const HilbertSeries& series, int t_max,
                                  std::optional<unsigned> alpha = std::nullopt);
  /// From bare values. Dimension and degree are inferred when some difference
  /// is constant (and, for dimension 0, the values vanish) over the last
  /// dim + 2 degrees of the window; otherwise they stay unknown.
  static HilbertTable from_values(std::vector<long long> values,
                                  std::optional<unsigned> alpha = std::nullopt);

  int t_max() const noexcept { return static_cast<int>(values_.size()) - 1; }
  const std::vector<long long>& values() const noexcept { return values_; }
  /// Throws std::out_of_range outside [0, t_max]; 0 for negative t.
  long long value(int t) const;

  /// k-th difference over the window, with H(-1) = 0.
  std::vector<long long> delta(int k) const;
  long long delta_at(int k, int t) const;

  std::optional<int> dimension() const noexcept { return dimension_; }
  std::optional<long long> degree() const noexcept { return degree_; }
  std::optional<std::vector<long long>> h_vector() const { return h_vector_; }
  std::optional<unsigned> alpha() const noexcept { return alpha_; }
  bool exact() const noexcept { return exact_; }

 private:
  std::vector<long long> values_;
  std::optional<int> dimension_;
  std::optional<long long> degree_;
  std::optional<std::vector<long long>> h_vector_;
  std::optional<unsigned> alpha_;
  bool exact_ = false;
};

/// HF of R/I through the initial ideal of a degrevlex basis.
HilbertTable hilbert_table(const Ideal& ideal, int t_max);
HilbertTable hilbert_table(const MonomialIdeal& ideal, int t_max);
HilbertSeries hilbert_series(const Ideal& ideal);

/// Least degree with a nonzero component; throws PreconditionError on zero.
unsigned alpha(const Ideal& ideal);

/// A basis of I_d: m - NF(m) for the monomials m of degree d in in(I).
/// The basis must be valid up to degree d.
std::vector<Polynomial> component_basis(const GroebnerBasis& gb, unsigned d);
std::vector<Polynomial> component_basis(const Ideal& ideal, unsigned d);

/// Largest H(d+1) allowed by Macaulay's theorem when H(d) = h, via the
/// d-binomial expansion of h.
long long macaulay_growth_bound(long long h, unsigned d);

/// The d-binomial expansion h = C(k_d, d) + C(k_{d-1}, d-1) + ... as pairs (k_i, i).
std::vector<std::pair<long long, long long>> binomial_expansion(long long h, unsigned d);

struct CrystallizationVerdict {
  unsigned d = 0;
  bool gin_generator_in_degree_d_plus_1 = false;
  unsigned gin_max_generator_degree = 0;
  /// Gin generated in degrees <= d, i.e. I is d-regular.
  bool regular = false;
  /// No generator in degree d+1 implies regularity.
  bool consistent = true;
  bool generic = false;
};

/// Throws PreconditionError unless I is generated in degrees <= d.
CrystallizationVerdict crystallization_check(const Ideal& ideal, unsigned d,
                                             const GinOptions& options = {});

}  // namespace borelgin
