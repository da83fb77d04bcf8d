#pragma once

#include <cstdint>
#include <optional>

#include "borelgin/linear_algebra.hpp"
#include "borelgin/polynomial.hpp"

namespace borelgin {

/// An invertible linear change of coordinates x_i -> sum_j g_ij x_j.
class LinearChange {
 public:
  /// Throws PreconditionError if the matrix is singular or not n x n.
  LinearChange(Ring ring, Matrix matrix, std::optional<std::uint64_t> seed = std::nullopt);

  static LinearChange identity(Ring ring);
  /// Dense uniform draw, redrawn until invertible.
  static LinearChange random(Ring ring, std::uint64_t seed);
  /// The coordinate permutation x_i -> x_{perm[i]}.
  static LinearChange permutation(Ring ring, const std::vector<int>& perm);

  const Ring& ring() const noexcept { return ring_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  LinearChange inverse() const;
  /// Applying *this and then `next` equals applying then(next).
  LinearChange then(const LinearChange& next) const;

  /// The image of x_i.
  Polynomial image_of_variable(int i, const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  Polynomial apply(const Polynomial& f) const;

 private:
  Ring ring_;
  Matrix matrix_;
  std::optional<std::uint64_t> seed_;
};

/// f(x_1..x_n) -> f(g(x_1)..g(x_n)).
Polynomial apply_change(const Polynomial& f, const LinearChange& g);

}  // namespace borelgin
