#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "borelgin/gin.hpp"
#include "borelgin/hilbert.hpp"

namespace borelgin {

/// H(R/(I + L_1 + ... + L_s)) for s random linear forms drawn from `seed`.
HilbertTable section_table(const Ideal& ideal, int s, std::uint64_t seed, int t_max);

/// The ideal I + (L_1..L_s) with the same random forms as section_table.
Ideal add_random_linear_forms(const Ideal& ideal, int s, std::uint64_t seed);

/// min{k : x_{n-s}^{k+1} in G} for a strongly stable G; nullopt when no power
/// of x_{n-s} lies in G. For s = n the value is 0.
std::optional<int> reduction_number_from_gin(const MonomialIdeal& gin, int s);

/// Last degree in which R/(I + s random linear forms) is nonzero; nullopt
/// when that quotient is not Artinian.
std::optional<int> reduction_number_by_sections(const Ideal& ideal, int s, std::uint64_t seed);

struct ReductionProfile {
  int s = 0;
  std::optional<int> value;       // witness from the Gin
  std::optional<int> crosscheck;  // from the random linear sections
  bool certified = false;         // both present and equal
  std::uint64_t seed = 0;         // seed of the sections that were used
  int attempts = 0;
  std::string warning;
};

/// Both formulations of r_s; the section crosscheck is redrawn up to
/// `retries` times on disagreement.
ReductionProfile reduction_number(const Ideal& ideal, int s, const GinResult& gin_result,
                                  std::uint64_t seed, int retries = 2);
ReductionProfile reduction_number(const Ideal& ideal, int s, const GinOptions& options = {});

struct MultiplicationMap {
  unsigned degree = 0;
  long long source_dim = 0;
  long long target_dim = 0;
  long long rank = 0;
  bool injective() const noexcept { return rank == source_dim; }
  bool surjective() const noexcept { return rank == target_dim; }
  bool maximal_rank() const noexcept { return rank == std::min(source_dim, target_dim); }
};

/// x L : (R/A)_d -> (R/A)_{d+1}, with ranks computed through normal forms
/// with respect to a degrevlex basis of A.
MultiplicationMap multiplication_map(const GroebnerBasis& a, const Polynomial& l, unsigned d);

struct WlpResult {
  bool holds = false;
  /// Two independent draws agreed.
  bool conclusive = false;
  std::vector<int> failing_degrees;
  int socle_degree = 0;
  std::vector<std::uint64_t> seeds;
};

/// WLP of the Artinian reduction of R/I. Requires dim(R/I) <= 1 (throws
/// PreconditionError otherwise); for dimension 1 one general linear form is
/// first added.
WlpResult wlp_test(const Ideal& ideal, std::uint64_t seed = 1, int max_draws = 4);

}  // namespace borelgin
