#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "borelgin/monomial_ideal.hpp"
#include "borelgin/polynomial.hpp"

namespace borelgin {

struct GinOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  /// Only compute the Gin in degrees <= cap.
  std::optional<unsigned> degree_cap;
};

struct GinResult {
  MonomialIdeal ideal;
  MonomialOrder order;
  int trials = 0;
  std::vector<std::uint64_t> seeds;
  /// All trials produced the same minimal generators.
  bool agreed = false;
  /// The result is strongly stable.
  bool borel_verified = false;

  bool generic() const noexcept { return agreed && borel_verified; }
};

/// Seed of the k-th trial derived from a base seed (splitmix64).
std::uint64_t trial_seed(std::uint64_t base, int k);

/// Initial ideal after a random dense change of coordinates, repeated over
/// independent trials. Disagreement is reported through `agreed`, not thrown;
/// the returned ideal is the one produced by the majority of trials.
/// Throws PreconditionError if trials < 2 or the ideal is not homogeneous.
GinResult gin(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex(),
              const GinOptions& options = {});

/// Gin(I) with x_n -> 0: the Gin of the restriction to a general hyperplane.
MonomialIdeal gin_hyperplane_restriction(const GinResult& g);

/// Gin(I) with x_n -> 1: the Gin of the saturation.
MonomialIdeal gin_saturation(const GinResult& g);

/// A random homogeneous polynomial of degree d with all coefficients drawn.
Polynomial random_form(const Ring& ring, unsigned degree, std::mt19937_64& rng);
/// A random linear form.
Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng);

}  // namespace borelgin
