#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borelgin/gin.hpp"
#include "borelgin/hilbert.hpp"

namespace borelgin {

/// <I_{<= d}>: the degree-capped basis elements of degree <= d. Zero ideal
/// when d < alpha(I).
Ideal truncate_ideal(const Ideal& ideal, unsigned d);

struct GrowthReport {
  std::string label;
  std::string pipeline;  // "first_difference" or "second_difference"
  /// False when the degree window or other preconditions rule the run out;
  /// `reason` says why and no verdicts are filled in.
  bool applicable = false;
  std::string reason;

  std::optional<int> d;
  std::optional<long long> s;
  std::optional<int> r2;
  std::optional<int> r3;
  std::vector<Polynomial> truncation;

  std::optional<bool> saturated;
  std::optional<bool> d_regular;
  std::optional<unsigned> truncation_regularity;
  std::optional<int> scheme_dimension;    // Krull dimension of R/T
  std::optional<long long> scheme_degree;

  std::optional<bool> injective;          // x L2 on (R/(I+L1))_d
  std::optional<bool> wlp;
  std::optional<Polynomial> common_factor;

  /// Degrees d' in the window with Delta H(d') = Delta H(d'+1) versus Gin(I)
  /// having no minimal generator in degree d'+1; false on any mismatch.
  std::optional<bool> decreasing_criterion;
  std::optional<bool> strictly_decreasing;

  bool gin_generic = false;
  std::uint64_t seed = 0;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

struct PipelineOptions {
  GinOptions gin;
  /// Fixed truncation degree; searched for when absent.
  std::optional<int> d;
  std::string label;
};

/// Truncation at a degree d > r_2 where Delta H(d) = Delta H(d+1) = s != 0.
/// I must be saturated with dim(R/I) <= 2. Asserted conclusions that fail
/// land in `violations`; a non-generic Gin throws ComputationError.
GrowthReport first_difference_pipeline(const Ideal& ideal, const PipelineOptions& options = {});

/// Truncation at r_2 > d > r_3 where H(R/(I+L1+L2)) is flat at d, d+1.
/// Needs n >= 4, I saturated and dim(R/I) <= 1.
GrowthReport second_difference_pipeline(const Ideal& ideal, const PipelineOptions& options);

struct StrictDecreaseVerdict {
  bool strictly_decreasing = true;
  /// First t with Delta H(t) <= Delta H(t+1), if any.
  std::optional<int> first_failure;
  /// Last degree examined.
  int checked_through = 0;
};

/// Whether Delta H(t) > Delta H(t+1) for t > d until Delta H vanishes (or the
/// window ends). Throws PreconditionError unless Delta H(d) = Delta H(d+1) and
/// either that value is 0 or Delta H(d+1) > Delta H(d+2).
StrictDecreaseVerdict strict_decrease_monitor(const std::vector<long long>& delta, int d);
StrictDecreaseVerdict strict_decrease_monitor(const HilbertTable& table, int d);

struct CmVerdict {
  bool cm = false;
  int D = 0;
  int M = 0;
};
CmVerdict cm_check(const MonomialIdeal& gin_ideal);
CmVerdict cm_check(const Ideal& ideal, const GinOptions& options = {});

struct Cohen1Verdict {
  long long degree = 0;
  int codim = 0;
  unsigned alpha = 0;
  long long bound = 0;
  unsigned regularity = 0;
  bool satisfied = false;
  /// deg - codim + 1, meaningful only without linear forms (alpha >= 2).
  std::optional<long long> classical_bound;
  std::optional<bool> classical_satisfied;
};
/// Throws PreconditionError for a zero or unit ideal or one that is not CM.
Cohen1Verdict cohen1_bound_check(const MonomialIdeal& gin_ideal);
Cohen1Verdict cohen1_bound_check(const Ideal& ideal, const GinOptions& options = {});

/// gcd of the polynomials, each step as f*g / lcm with lcm from (f) and (g)
/// intersected. nullopt when the gcd is a constant; throws on an empty list.
std::optional<Polynomial> common_factor(const std::vector<Polynomial>& polys);
/// Common factor of I_d for n = 4 in the window r_2 > d > r_3.
std::optional<Polynomial> common_factor_P3(const Ideal& ideal, int d, const GinOptions& options = {});

struct FirstChVerdict {
  int d = 0;
  int r2 = 0;
  /// H(R/I, d-1) agrees with the Hilbert polynomial.
  bool surrogate_holds = false;
  unsigned regularity = 0;
  /// Set only when the surrogate holds.
  std::optional<bool> d_regular;
};
/// Throws PreconditionError unless n > 3, dim(R/I) = 2 and d > r_2.
FirstChVerdict firstCH_regularity_check(const Ideal& curve, int d, const GinOptions& options = {});

/// Hilbert polynomial of R/I evaluated at t.
long long hilbert_polynomial_value(const HilbertSeries& series, long long t);

}  // namespace borelgin
