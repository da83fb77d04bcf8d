#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borelgin/groebner.hpp"
#include "borelgin/linear_algebra.hpp"

namespace borelgin {

/// Points of P^{n-1}, each scaled so that its first nonzero coordinate is 1.
class PointSet {
 public:
  PointSet(int nvars, Field field);
  /// Normalizes every point; throws PreconditionError on a zero point, a
  /// wrong length or a projective duplicate.
  PointSet(int nvars, Field field, std::vector<Vector> points, std::uint64_t seed = 0,
           std::string provenance = {});

  int nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// Throws PreconditionError if p is already present.
  void add(Vector p);
  bool contains(const Vector& p) const;
  PointSet merged(const PointSet& other) const;
  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  int nvars_;
  Field field_;
  std::vector<Vector> points_;
  std::uint64_t seed_ = 0;
  std::string provenance_;
};

Vector normalize_point(Vector p);

/// Reduced Groebner basis of the vanishing ideal, built degree by degree from
/// ranks of evaluation matrices. Only degree-compatible orders are accepted.
GroebnerBasis buchberger_moller(const PointSet& points,
                                const MonomialOrder& order = MonomialOrder::degrevlex());
Ideal vanishing_ideal(const PointSet& points);

/// dim_K (R/I_P)_t as a rank of evaluations.
long long points_hilbert_value(const PointSet& points, unsigned t);

PointSet random_points(int nvars, std::size_t count, std::uint64_t seed,
                       const Field& field = Field::prime());

/// Random points on V(f), found as roots of f restricted to random lines.
/// Prime fields and n <= 4 only. Throws ComputationError when the retry
/// budget is exhausted.
PointSet points_on_hypersurface(const Polynomial& f, std::size_t count, std::uint64_t seed);

/// Ideal of the union of the two schemes.
Ideal intersect_point_ideals(const Ideal& a, const Ideal& b);

/// Uniform position at the level of Hilbert functions: every two subsets of
/// the same size have the same Hilbert function. Exponential; throws
/// PreconditionError when the set is larger than `limit`.
bool check_upp_bruteforce(const PointSet& points, std::size_t limit = 12);

/// Random forms of the given degrees whose Hilbert series is that of a
/// complete intersection. Throws ComputationError after `max_attempts`.
Ideal complete_intersection(const Ring& ring, const std::vector<unsigned>& degrees,
                            std::uint64_t seed, int max_attempts = 8);

}  // namespace borelgin
