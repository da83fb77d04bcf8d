#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

using borelgin::Field;
using borelgin::MonomialOrder;
using borelgin::Ring;
using borelgin::Term;

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) > b.exponent(i)) return false;
  }
  return true;
}

bool in_monomial_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

// All exponent vectors of total degree d, lex-largest first.
void compositions(int n, unsigned d, std::vector<unsigned>& cur, int i, std::vector<std::vector<unsigned>>& out) {
  if (i == n - 1) {
    cur[static_cast<std::size_t>(i)] = d;
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[static_cast<std::size_t>(i)] = e;
    compositions(n, d - e, cur, i + 1, out);
  }
}

std::vector<std::uint64_t> coefficient_row(const Polynomial& f, const std::vector<Monomial>& basis) {
  std::vector<std::uint64_t> row(basis.size(), 0);
  for (const Term& t : f.terms()) {
    auto it = std::find(basis.begin(), basis.end(), t.monomial);
    row[static_cast<std::size_t>(it - basis.begin())] = t.coefficient.residue();
  }
  return row;
}

std::vector<std::vector<std::uint64_t>> multiples(const Ideal& ideal, unsigned t,
                                                  const std::vector<Monomial>& basis) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Polynomial& g : ideal.generators) {
    if (g.is_zero() || g.degree() > static_cast<int>(t)) continue;
    for (const Monomial& m : lex_monomials(ideal.ring.nvars, t - static_cast<unsigned>(g.degree()))) {
      Polynomial prod = g * Polynomial::monomial(ideal.ring, m, g.order());
      rows.push_back(coefficient_row(prod, basis));
    }
  }
  return rows;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::uint64_t inv = pow_mod(rows[rank][c], p - 2, p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      std::uint64_t f = rows[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<Monomial> lex_monomials(int nvars, unsigned d) {
  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> cur(static_cast<std::size_t>(nvars), 0);
  compositions(nvars, d, cur, 0, exps);
  std::vector<Monomial> out;
  for (const auto& e : exps) out.emplace_back(nvars, e);
  return out;
}

long long rank_hilbert_value(const Ideal& ideal, unsigned t) {
  std::vector<Monomial> basis = lex_monomials(ideal.ring.nvars, t);
  auto rows = multiples(ideal, t, basis);
  return static_cast<long long>(basis.size()) -
         static_cast<long long>(rank_mod_p(rows, ideal.ring.field.characteristic()));
}

bool member_by_rank(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return true;
  const unsigned t = static_cast<unsigned>(f.degree());
  std::vector<Monomial> basis = lex_monomials(ideal.ring.nvars, t);
  auto rows = multiples(ideal, t, basis);
  const std::uint64_t p = ideal.ring.field.characteristic();
  std::size_t before = rank_mod_p(rows, p);
  rows.push_back(coefficient_row(f.with_order(MonomialOrder::degrevlex()), basis));
  return rank_mod_p(rows, p) == before;
}

long long standard_monomial_count(const MonomialIdeal& ideal, unsigned t) {
  long long count = 0;
  for (const Monomial& m : lex_monomials(ideal.nvars(), t)) {
    if (!in_monomial_ideal(ideal.generators(), m)) ++count;
  }
  return count;
}

Betti koszul_betti(const MonomialIdeal& ideal) {
  const int n = ideal.nvars();
  const std::uint64_t p = 32003;
  Betti out;
  out.total.assign(static_cast<std::size_t>(n), 0);
  if (ideal.is_zero()) return out;
  std::vector<unsigned> top(static_cast<std::size_t>(n), 0);
  for (const Monomial& g : ideal.generators()) {
    for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i)], g.exponent(i));
  }
  std::vector<unsigned> b(static_cast<std::size_t>(n), 0);
  const int subsets = 1 << n;
  for (;;) {
    // Faces F of the upper Koszul complex: x^(b - F) in I.
    std::vector<int> faces;
    for (int mask = 0; mask < subsets; ++mask) {
      std::vector<unsigned> e = b;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (mask & (1 << i)) {
          if (e[static_cast<std::size_t>(i)] == 0) ok = false;
          else --e[static_cast<std::size_t>(i)];
        }
      }
      if (ok && in_monomial_ideal(ideal.generators(), Monomial(n, e))) faces.push_back(mask);
    }
    if (!faces.empty()) {
      auto by_size = [&](int q) {
        std::vector<int> f;
        for (int m : faces) {
          if (__builtin_popcount(static_cast<unsigned>(m)) == q) f.push_back(m);
        }
        return f;
      };
      auto boundary_rank = [&](int q) -> std::size_t {
        if (q <= 0) return 0;
        std::vector<int> src = by_size(q);
        std::vector<int> dst = by_size(q - 1);
        if (src.empty() || dst.empty()) return 0;
        std::vector<std::vector<std::uint64_t>> rows;
        for (int s : src) {
          std::vector<std::uint64_t> row(dst.size(), 0);
          int pos = 0;
          for (int i = 0; i < n; ++i) {
            if (!(s & (1 << i))) continue;
            auto it = std::find(dst.begin(), dst.end(), s & ~(1 << i));
            row[static_cast<std::size_t>(it - dst.begin())] = (pos % 2 == 0) ? 1 : p - 1;
            ++pos;
          }
          rows.push_back(row);
        }
        return rank_mod_p(rows, p);
      };
      unsigned degree = 0;
      for (unsigned e : b) degree += e;
      for (int q = 0; q <= n; ++q) {
        long long cq = static_cast<long long>(by_size(q).size());
        long long h = cq - static_cast<long long>(boundary_rank(q)) - static_cast<long long>(boundary_rank(q + 1));
        // reduced H_{q-1} gives beta_{q, b}
        if (h > 0 && q < n) {
          out.total[static_cast<std::size_t>(q)] += h;
          out.regularity = std::max(out.regularity, degree - static_cast<unsigned>(q));
        }
      }
    }
    int i = 0;
    while (i < n && b[static_cast<std::size_t>(i)] == top[static_cast<std::size_t>(i)]) b[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++b[static_cast<std::size_t>(i)];
  }
  return out;
}

long long lex_segment_growth(int nvars, unsigned d, long long h) {
  std::vector<Monomial> deg_d = lex_monomials(nvars, d);
  const long long keep = static_cast<long long>(deg_d.size()) - h;
  std::set<std::vector<unsigned>> next;
  for (long long i = 0; i < keep; ++i) {
    for (int v = 0; v < nvars; ++v) {
      std::vector<unsigned> e = deg_d[static_cast<std::size_t>(i)].exponents();
      ++e[static_cast<std::size_t>(v)];
      next.insert(e);
    }
  }
  return static_cast<long long>(lex_monomials(nvars, d + 1).size()) - static_cast<long long>(next.size());
}

MonomialIdeal borel_closure(int nvars, const std::vector<Monomial>& gens) {
  std::set<std::vector<unsigned>> seen;
  std::vector<std::vector<unsigned>> todo;
  for (const Monomial& g : gens) {
    if (seen.insert(g.exponents()).second) todo.push_back(g.exponents());
  }
  while (!todo.empty()) {
    std::vector<unsigned> e = todo.back();
    todo.pop_back();
    for (int i = 1; i < nvars; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < i; ++j) {
        std::vector<unsigned> f = e;
        --f[static_cast<std::size_t>(i)];
        ++f[static_cast<std::size_t>(j)];
        if (seen.insert(f).second) todo.push_back(f);
      }
    }
  }
  std::vector<Monomial> all;
  for (const auto& e : seen) all.emplace_back(nvars, e);
  return MonomialIdeal(nvars, all);
}

namespace {

Monomial random_monomial(std::mt19937_64& rng, int nvars, unsigned degree) {
  std::vector<unsigned> e(static_cast<std::size_t>(nvars), 0);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  for (unsigned k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(var(rng))];
  return Monomial(nvars, e);
}

}  // namespace

MonomialIdeal random_strongly_stable(std::mt19937_64& rng, int nvars, int count, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, nvars, deg(rng)));
  return borel_closure(nvars, gens);
}

MonomialIdeal random_saturated_borel_with_m(std::mt19937_64& rng, int nvars) {
  for (;;) {
    MonomialIdeal inner = random_strongly_stable(rng, nvars - 1, 3, 5);
    std::vector<Monomial> gens;
    for (const Monomial& g : inner.generators()) gens.push_back(g.resized(nvars));
    MonomialIdeal I(nvars, gens);
    if (!I.is_zero() && I.M() == nvars - 1 && I.D() < I.M()) return I;
  }
}

MonomialIdeal random_cm_borel(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> kd(1, nvars - 1);
  std::uniform_int_distribution<unsigned> pd(1, 5);
  const int k = kd(rng);
  std::vector<Monomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(random_monomial(rng, k, pd(rng)));
  gens.push_back(Monomial::variable(k, k - 1, pd(rng)));
  MonomialIdeal inner = borel_closure(k, gens);
  std::vector<Monomial> lifted;
  for (const Monomial& g : inner.generators()) lifted.push_back(g.resized(nvars));
  return MonomialIdeal(nvars, lifted);
}

Ideal random_homogeneous_ideal(std::mt19937_64& rng, int nvars, int count, unsigned max_degree) {
  const Ring ring{nvars, Field::prime()};
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::uniform_int_distribution<int> nterms(1, 4);
  Ideal out{ring, {}};
  while (static_cast<int>(out.generators.size()) < count) {
    unsigned d = deg(rng);
    std::vector<Term> terms;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) terms.push_back({random_monomial(rng, nvars, d), ring.field.random_nonzero(rng)});
    Polynomial f = Polynomial::from_terms(ring, MonomialOrder::degrevlex(), terms);
    if (!f.is_zero()) out.generators.push_back(f);
  }
  return out;
}

}  // namespace oracle
