// Ideals shared by several test programs.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "borelgin/gin.hpp"
#include "borelgin/parser.hpp"
#include "borelgin/points.hpp"

namespace fixtures {

using namespace borelgin;

inline const std::vector<std::string> kVars4{"x1", "x2", "x3", "x4"};

inline Ideal ideal_of(const std::vector<std::string>& gens, const std::vector<std::string>& vars = kVars4,
                      const Field& field = Field::prime()) {
  Ideal out{Ring{static_cast<int>(vars.size()), field}, {}};
  for (const std::string& g : gens) out.generators.push_back(parse_polynomial(g, vars, field));
  return out;
}

inline MonomialIdeal monomial_ideal_of(const std::vector<std::string>& gens,
                                       const std::vector<std::string>& vars = kVars4) {
  std::vector<Monomial> ms;
  for (const std::string& g : gens) {
    ms.push_back(parse_polynomial(g, vars, Field::prime()).leading_monomial());
  }
  return MonomialIdeal(static_cast<int>(vars.size()), ms);
}

/// The curve of the Gin example: D = 2, M = 3.
inline Ideal space_curve(const Field& field = Field::prime()) {
  return ideal_of({"x3^3 - x1*x4^2", "x1^2*x3^2 - x2^3*x4", "x2^3*x3 - x1^3*x4", "x2^6 - x1^5*x3"}, kVars4, field);
}

inline MonomialIdeal space_curve_gin() {
  return monomial_ideal_of({"x1^3", "x1^2*x2^2", "x1*x2^3", "x2^5", "x2^4*x3^2"});
}

/// (x^m t - y^m z, z^(n+2) - x t^(n+1)).
inline Ideal imn(unsigned m, unsigned n) {
  const std::string ms = std::to_string(m);
  return ideal_of({"x^" + ms + "*t - y^" + ms + "*z", "z^" + std::to_string(n + 2) + " - x*t^" + std::to_string(n + 1)},
                  {"x", "y", "z", "t"});
}

inline Ideal twisted_cubic() { return ideal_of({"x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"}); }

struct TwoPieceScheme {
  Polynomial quadric;
  Ideal ideal;
};

inline Polynomial random_quadric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_form(Ring{4, Field::prime()}, 2, rng);
}

/// A complete intersection of three quadrics together with 81 points on a
/// random quadric.
inline TwoPieceScheme ci_and_quadric_points(std::uint64_t seed = 7) {
  const Ring ring{4, Field::prime()};
  Polynomial q = random_quadric(seed);
  Ideal z2 = vanishing_ideal(points_on_hypersurface(q, 81, seed + 1));
  Ideal j = complete_intersection(ring, {2, 2, 2}, seed + 2);
  return {q, intersect_point_ideals(j, z2)};
}

/// 16 random points together with 81 points on a random quadric.
inline TwoPieceScheme random_and_quadric_points(std::uint64_t seed = 7) {
  Polynomial q = random_quadric(seed);
  PointSet z2 = points_on_hypersurface(q, 81, seed + 1);
  PointSet z1 = random_points(4, 16, seed + 3);
  return {q, vanishing_ideal(z1.merged(z2))};
}

}  // namespace fixtures
