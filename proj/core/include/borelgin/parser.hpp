#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borelgin/polynomial.hpp"

namespace borelgin {

/// A random construction whose ideal joins the explicit generators (the
/// ideals are intersected, i.e. the schemes are united).
struct SchemeDirective {
  /// "ci" (args: degrees), "points" (args: count) or "hypersurface_points"
  /// (args: count, degree).
  std::string kind;
  std::vector<unsigned> args;
  std::uint64_t seed = 1;

  friend bool operator==(const SchemeDirective&, const SchemeDirective&) = default;
};

struct Expectation {
  std::string key;    // dotted path into the JSON report
  std::string value;  // JSON text

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// Parsed input file.
///
///   # comment
///   label cd-example;
///   ring x,y,z,t;
///   char 32003;                  (0 for the rationals; default 32003)
///   ideal x^4*t - y^4*z, z^6 - x*t^5;
///   scheme ci 2,2,2 seed 3;
///   scheme points 16 seed 21;
///   scheme hypersurface_points 81 degree 2 seed 7;
///   run growth2 --d 4;
///   expect growth.r2 8;
struct IdealSource {
  std::string label;
  std::vector<std::string> variables;
  Field field = Field::prime();
  std::vector<Polynomial> generators;
  std::vector<SchemeDirective> schemes;
  std::vector<std::string> run;  // verb followed by flags
  std::vector<Expectation> expectations;

  Ring ring() const { return Ring{static_cast<int>(variables.size()), field}; }
  /// The explicit generators only.
  Ideal ideal() const { return Ideal{ring(), generators}; }

  friend bool operator==(const IdealSource&, const IdealSource&) = default;
};

/// Throws ParseError with a 1-based line and column on syntax errors,
/// unknown variables and inhomogeneous generators. `field_override`
/// replaces any `char` statement.
IdealSource parse_ideal(const std::string& text,
                        const std::optional<Field>& field_override = std::nullopt);

/// One polynomial over the given variables.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                            const Field& field);

/// Text that parses back to an equal source.
std::string emit_source(const IdealSource& source);

}  // namespace borelgin
