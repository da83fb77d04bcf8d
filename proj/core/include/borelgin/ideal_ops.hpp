#pragma once

#include <vector>

#include "borelgin/groebner.hpp"
#include "borelgin/polynomial.hpp"

namespace borelgin {

/// Generators of I intersected with K[x_i : keep[i]], from a block-order basis.
/// The result lives in the original ring.
std::vector<Polynomial> elimination_ideal(const Ideal& ideal, const std::vector<bool>& keep);

/// I intersected with J, by eliminating t from t*I + (1-t)*J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// I : f, computed as (I intersected with (f)) / f. Throws PreconditionError for f = 0.
Ideal colon_by_poly(const Ideal& ideal, const Polynomial& f);

struct SaturationResult {
  Ideal ideal;
  /// Number of colon steps that enlarged the ideal; the step after the last
  /// one returned the same ideal.
  int steps = 0;
};

/// I : x_var^infinity by iterated colon.
SaturationResult saturate_by_variable(const Ideal& ideal, int var);

/// Reduced degrevlex bases agree.
bool same_ideal(const Ideal& a, const Ideal& b);
/// Every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner);

/// The ideal generated by the reduced degrevlex basis.
Ideal to_ideal(const GroebnerBasis& gb);

}  // namespace borelgin
