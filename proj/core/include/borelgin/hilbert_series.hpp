#pragma once

#include <vector>

#include "borelgin/monomial_ideal.hpp"

namespace borelgin {

/// The Hilbert series of R/I written as N(t) / (1 - t)^n.
class HilbertSeries {
 public:
  HilbertSeries(int nvars, std::vector<long long> numerator);

  int nvars() const noexcept { return nvars_; }
  /// Coefficients of N(t), lowest degree first, without trailing zeros.
  const std::vector<long long>& numerator() const noexcept { return numerator_; }

  /// H(R/I, t); zero for t < 0.
  long long value(long long t) const;

  /// Krull dimension of R/I; -1 when R/I = 0.
  int dimension() const noexcept { return dimension_; }
  /// Multiplicity; 0 when R/I = 0.
  long long degree() const noexcept { return degree_; }
  /// Numerator of the reduced form h(t) / (1 - t)^dim.
  const std::vector<long long>& h_vector() const noexcept { return h_; }

 private:
  int nvars_;
  std::vector<long long> numerator_;
  std::vector<long long> h_;
  int dimension_ = -1;
  long long degree_ = 0;
};

/// Exact Hilbert series by pivot recursion:
/// N(I) = N(I + (p)) + t^deg(p) N(I : p), with p a power of the variable that
/// occurs in the most generators.
HilbertSeries hilbert_series(const MonomialIdeal& ideal);

}  // namespace borelgin
