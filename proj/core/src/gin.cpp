#include "borelgin/gin.hpp"


#include "borelgin/errors.hpp"
#include "borelgin/groebner.hpp"
#include "borelgin/linear_change.hpp"

namespace borelgin {

std::uint64_t trial_seed(std::uint64_t base, int k) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

GinResult gin(const Ideal& ideal, const MonomialOrder& order, const GinOptions& options) {
  if (options.trials < 2) throw PreconditionError("gin needs at least two trials");
  if (!ideal.is_homogeneous()) throw PreconditionError("gin needs a homogeneous ideal");
  GroebnerOptions gb_options;
  gb_options.degree_cap = options.degree_cap;

  std::vector<MonomialIdeal> results;
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < options.trials; ++k) {
    std::uint64_t seed = trial_seed(options.seed, k);
    LinearChange change = LinearChange::random(ideal.ring, seed);
    std::vector<Polynomial> moved;
    for (const Polynomial& f : ideal.generators) {
      if (!f.is_zero()) moved.push_back(change.apply(f.with_order(order)));
    }
    results.push_back(buchberger(ideal.ring, moved, order, gb_options).initial_ideal());
    seeds.push_back(seed);
  }

  std::size_t best = 0;
  std::size_t best_votes = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::size_t votes = 0;
    for (const MonomialIdeal& r : results) votes += r == results[i] ? 1 : 0;
    if (votes > best_votes) {
      best_votes = votes;
      best = i;
    }
  }
  GinResult out{results[best], order, options.trials, std::move(seeds), false, false};
  out.agreed = best_votes == results.size();
  out.borel_verified = out.ideal.is_strongly_stable();
  return out;
}

MonomialIdeal gin_hyperplane_restriction(const GinResult& g) {
  return g.ideal.substitute_last_zero();
}

MonomialIdeal gin_saturation(const GinResult& g) {
  return g.ideal.substitute_var_one(g.ideal.nvars() - 1);
}

Polynomial random_form(const Ring& ring, unsigned degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(ring.nvars, degree)) {
    terms.push_back(Term{m, ring.field.random(rng)});
  }
  return Polynomial::from_terms(ring, MonomialOrder::degrevlex(), std::move(terms));
}

Polynomial random_linear_form(const Ring& ring, std::mt19937_64& rng) {
  return random_form(ring, 1, rng);
}

}  // namespace borelgin
