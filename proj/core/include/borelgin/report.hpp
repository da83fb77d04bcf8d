#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borelgin/gin.hpp"
#include "borelgin/growth.hpp"
#include "borelgin/hilbert.hpp"
#include "borelgin/reduction.hpp"

namespace borelgin {

/// Borel invariants read off a Gin. Fields stay empty for the zero ideal.
struct Invariants {
  int dimension = 0;  // Krull dimension of R/I, -1 when R/I = 0
  long long degree = 0;
  std::optional<int> D;
  std::optional<int> M;
  std::optional<unsigned> regularity;
  std::optional<unsigned> ek_regularity;  // from the Eliahou-Kervaire resolution
  std::optional<unsigned> sat_degree;
  std::optional<unsigned> alpha;
  bool saturated = true;
  std::optional<bool> cm;
  std::vector<Monomial> spor;
};

/// Throws ComputationError when the Gin is not strongly stable.
Invariants compute_invariants(const MonomialIdeal& gin_ideal);

struct TruncationSummary {
  unsigned d = 0;
  std::vector<Polynomial> generators;
  bool saturated = false;
  unsigned regularity = 0;
  bool d_regular = false;
  int dimension = 0;
  long long degree = 0;
};

struct PointsSummary {
  std::size_t count = 0;
  /// Coordinates when the ideal came from explicit points only.
  std::vector<std::vector<std::string>> coordinates;
  std::vector<long long> h_vector;
  std::optional<bool> upp;
};

struct Report {
  std::string verb;
  std::string label;
  Field field = Field::prime();
  std::uint64_t seed = 1;
  int trials = 3;
  std::vector<std::string> variables;

  std::optional<Invariants> invariants;
  std::optional<HilbertTable> hilbert;
  std::optional<GinResult> gin;
  std::optional<GrowthReport> growth;
  std::optional<ReductionProfile> reduction;
  std::optional<WlpResult> wlp;
  std::optional<TruncationSummary> truncation;
  std::optional<PointsSummary> points;
};

/// JSON with a fixed key order: label, verb, field, seed, trials, invariants,
/// hilbert, gin, growth, then the verb-specific sections. Sections that were
/// not computed are null.
std::string emit_json(const Report& report, int indent = 2);
/// One "path: value" line per leaf of the JSON form, nulls omitted.
std::string emit_text(const Report& report);

std::string emit_json(const HilbertTable& table, int indent = -1);
std::string emit_json(const Invariants& inv, const std::vector<std::string>& names, int indent = -1);
std::string emit_json(const GrowthReport& growth, const std::vector<std::string>& names, int indent = -1);

}  // namespace borelgin
