// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "borelgin/cli.hpp"
#include "borelgin/errors.hpp"
#include "borelgin/growth.hpp"
#include "borelgin/hilbert.hpp"
#include "borelgin/ideal_ops.hpp"
#include "borelgin/reduction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace borelgin;

namespace {

using Row = std::vector<long long>;

// Time limits in seconds.
constexpr double kLimitGin = 5.0;
constexpr double kLimitChardinDCruz = 60.0;
constexpr double kLimitNotWlp = 90.0;
constexpr double kLimitDefault = 300.0;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    ok = false;
    detail << what << " mismatch; ";
  }
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    detail << what << "; ";
  }
};

std::string row_text(const Row& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s;
}

Row first_values(const HilbertTable& t, int count) {
  Row out;
  for (int i = 0; i < count; ++i) out.push_back(t.value(i));
  return out;
}

Row first_delta(const HilbertTable& t, int count) {
  Row out;
  for (int i = 0; i < count; ++i) out.push_back(t.delta_at(1, i));
  return out;
}

// Tables seen during the run, rechecked against Macaulay's bound in 6e.
std::vector<HilbertTable> g_tables;
// Pipeline reports seen during the run, rechecked in 6f and 6g.
std::vector<GrowthReport> g_first;
std::vector<GrowthReport> g_second;

HilbertTable keep(HilbertTable t) {
  g_tables.push_back(t);
  return t;
}

GrowthReport keep_growth(GrowthReport r) {
  (r.pipeline == "first_difference" ? g_first : g_second).push_back(r);
  return r;
}

Check criterion_1() {
  Check c;
  GinResult g = gin(fixtures::space_curve());
  c.equal(g.ideal, fixtures::space_curve_gin(), "Gin generators");
  c.expect(g.trials == 3 && g.agreed, "3/3 trials agree");
  c.expect(g.borel_verified, "strongly stable");
  c.equal(g.ideal.D(), 2, "D");
  c.equal(g.ideal.M(), 3, "M");
  c.equal(g.ideal.regularity(), 6u, "reg");
  c.expect(g.ideal.is_saturated(), "saturated");
  std::vector<Monomial> spor{Monomial(4, {0, 4, 0, 0}), Monomial(4, {0, 4, 1, 0})};
  c.equal(g.ideal.spor_set(), spor, "Spor");
  c.detail << "Gin = " << g.ideal.to_string() << "; ";
  return c;
}

Check criterion_2() {
  Check c;
  for (unsigned m = 1; m <= 4; ++m) {
    Ideal i = fixtures::imn(m, m);
    GinResult g = gin(i);
    c.expect(g.generic(), "Gin of I_" + std::to_string(m) + " certified");
    c.equal(g.ideal.max_generator_degree(), 2 * m + 2, "reg I_" + std::to_string(m) + "," + std::to_string(m));
    c.detail << "reg I_{" << m << "," << m << "} = " << g.ideal.max_generator_degree() << "; ";
    if (m != 4) continue;
    HilbertSeries hs = hilbert_series(g.ideal);
    c.equal(hs.degree(), 30LL, "degree of I_4,4");
    c.equal(hs.dimension(), 2, "dimension of R/I_4,4");
    HilbertTable t = keep(HilbertTable::from_series(hs, 14));
    Row want{1, 3, 6, 10, 15, 20, 24, 27, 29, 30, 30};
    c.equal(first_delta(t, 11), want, "Delta H of I_4,4");
    c.detail << "Delta H = " << row_text(first_delta(t, 11)) << "; ";
    PipelineOptions o;
    o.label = "I_{4,4}";
    GrowthReport r = keep_growth(first_difference_pipeline(i, o));
    c.expect(r.applicable && r.d == 10 && r.s == 30 && r.r2 == 9, "first-difference pipeline on I_4,4");
  }
  return c;
}

Check criterion_3() {
  Check c;
  const std::vector<std::pair<std::size_t, Row>> cases{{7, {1, 3, 3}}, {16, {1, 3, 6, 6}}, {30, {1, 3, 6, 10, 10}}};
  for (const auto& [count, want] : cases) {
    int passed = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      PointSet p = random_points(4, count, seed);
      Ideal i = vanishing_ideal(p);
      HilbertSeries hs = hilbert_series(i);
      g_tables.push_back(HilbertTable::from_series(hs, 8));
      // Second route: ranks of evaluation matrices, no Groebner basis.
      Row by_evaluation;
      for (unsigned t = 0; t < want.size(); ++t) {
        by_evaluation.push_back(points_hilbert_value(p, t) - (t ? points_hilbert_value(p, t - 1) : 0));
      }
      if (hs.h_vector() == want && by_evaluation == want) ++passed;
    }
    c.expect(passed >= 2, std::to_string(count) + " points: majority of seeds");
    c.detail << count << " points " << passed << "/3; ";
  }
  return c;
}

Check criterion_4() {
  Check c;
  Ideal ci = complete_intersection(Ring{4, Field::prime()}, {4, 4, 4}, 21);
  HilbertTable t = keep(hilbert_table(ci, 12));
  Row want{1, 3, 6, 10, 12, 12, 10, 6, 3, 1};
  c.equal(first_delta(t, 10), want, "Delta H");
  c.equal(t.delta_at(1, 10), 0LL, "Delta H(10)");
  WlpResult w = wlp_test(ci);
  c.expect(w.holds && w.conclusive, "WLP holds");
  ReductionProfile r = reduction_number(ci, 2);
  c.expect(r.certified, "both formulations of r_2 agree");
  c.equal(r.value, std::optional<int>(4), "r_2 from the Gin");
  c.equal(r.crosscheck, std::optional<int>(4), "r_2 from sections");
  c.detail << "Delta H = " << row_text(first_delta(t, 10)) << "; r_2 = " << r.value.value_or(-1) << "; ";
  return c;
}

void check_rows(Check& c, const Ideal& y, const Row& h, const Row& h1, const Row& h2, const std::string& name) {
  HilbertTable t = keep(hilbert_table(y, 10));
  c.equal(first_values(t, 10), h, name + " H(R/I_Y)");
  HilbertTable s1 = keep(section_table(y, 1, 5, 10));
  c.equal(first_values(s1, 10), h1, name + " H(R/(I_Y+L1))");
  HilbertTable s2 = keep(section_table(y, 2, 5, 10));
  c.equal(first_values(s2, 10), h2, name + " H(R/(I_Y+L1+L2))");
}

GrowthReport growth2(const Ideal& y, int d, const std::string& label) {
  PipelineOptions o;
  o.d = d;
  o.label = label;
  return keep_growth(second_difference_pipeline(y, o));
}

Check criterion_5() {
  Check c;
  {
    fixtures::TwoPieceScheme y = fixtures::ci_and_quadric_points();
    check_rows(c, y.ideal, {1, 4, 10, 20, 32, 44, 57, 72, 89, 89}, {1, 3, 6, 10, 12, 12, 13, 15, 17, 0},
               {1, 2, 3, 4, 2, 2, 2, 2, 2, 0}, "first");
    GrowthReport r = growth2(y.ideal, 4, "first Y, d=4");
    c.expect(r.applicable, "first Y pipeline applicable");
    c.equal(r.r2, std::optional<int>(8), "first r_2");
    c.equal(r.r3, std::optional<int>(3), "first r_3");
    c.expect(r.common_factor && r.common_factor->monic() == y.quadric.monic(), "first common factor is Q");
    c.equal(r.saturated, std::optional<bool>(true), "first truncation saturated");
    c.equal(r.truncation_regularity, std::optional<unsigned>(6), "first truncation reg");
    c.equal(r.d_regular, std::optional<bool>(false), "first truncation not 4-regular");
    c.equal(wlp_test(y.ideal).holds, false, "first Y fails WLP");
  }
  {
    fixtures::TwoPieceScheme y = fixtures::random_and_quadric_points();
    check_rows(c, y.ideal, {1, 4, 10, 20, 35, 52, 65, 80, 97, 97}, {1, 3, 6, 10, 15, 17, 13, 15, 17, 0},
               {1, 2, 3, 4, 5, 2, 2, 2, 2, 0}, "second");
    GrowthReport r5 = growth2(y.ideal, 5, "second Y, d=5");
    c.expect(r5.applicable, "second Y pipeline applicable at 5");
    c.equal(r5.r2, std::optional<int>(8), "second r_2");
    c.equal(r5.r3, std::optional<int>(4), "second r_3");
    c.expect(r5.common_factor && r5.common_factor->monic() == y.quadric.monic(), "second common factor is Q");
    c.equal(r5.saturated, std::optional<bool>(false), "truncation at 5 not saturated");
    GrowthReport r6 = growth2(y.ideal, 6, "second Y, d=6");
    c.equal(r6.saturated, std::optional<bool>(true), "truncation at 6 saturated");
    c.equal(r6.d_regular, std::optional<bool>(true), "truncation at 6 is 6-regular");
    c.equal(wlp_test(y.ideal).holds, false, "second Y fails WLP");
  }
  return c;
}

Check criterion_6a() {
  Check c;
  std::mt19937_64 rng(6001);
  for (int k = 0; k < 20; ++k) {
    Ideal i = oracle::random_homogeneous_ideal(rng, 3 + k % 2, 3, 4);
    HilbertTable in = keep(hilbert_table(buchberger(i).initial_ideal(), 8));
    GinResult g = gin(i);
    c.expect(g.generic(), "Gin certified");
    HilbertTable gt = hilbert_table(g.ideal, 8);
    for (int t = 0; t <= 8; ++t) {
      const long long rank = oracle::rank_hilbert_value(i, static_cast<unsigned>(t));
      c.expect(in.value(t) == rank && gt.value(t) == rank, "HF agreement for sample " + std::to_string(k));
    }
  }
  c.detail << "20 random ideals; ";
  return c;
}

Check criterion_6b() {
  Check c;
  std::mt19937_64 rng(6002);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    MonomialIdeal i = oracle::random_strongly_stable(rng, n, 3, 4);
    // dim = 1 + degree of the Hilbert polynomial, by finite differences of monomial counts.
    std::vector<long long> v;
    for (unsigned t = 20; t <= 30; ++t) v.push_back(oracle::standard_monomial_count(i, t));
    int dim = 0;
    while (std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; })) {
      ++dim;
      std::vector<long long> d;
      for (std::size_t j = 1; j < v.size(); ++j) d.push_back(v[j] - v[j - 1]);
      v = d;
    }
    c.equal(i.D(), n - dim, "D = n - dim for " + i.to_string());
    c.equal(i.is_saturated(), i.M() < n, "saturated iff M < n for " + i.to_string());
  }
  c.detail << "50 random strongly stable ideals; ";
  return c;
}

Check criterion_6c() {
  Check c;
  std::mt19937_64 rng(6003);
  for (int k = 0; k < 30; ++k) {
    const int n = 3 + k % 3;
    MonomialIdeal i = oracle::random_saturated_borel_with_m(rng, n);
    c.expect(i.is_saturated() && i.M() == n - 1, "sample shape");
    MonomialIdeal j = i.substitute_last_zero();
    MonomialIdeal jsat = j.substitute_var_one(n - 2);
    for (unsigned m = 0; m <= i.regularity() + 2; ++m) {
      const long long quotient = oracle::standard_monomial_count(j, m) - oracle::standard_monomial_count(jsat, m);
      c.equal(static_cast<long long>(i.spor_count(m)), quotient, "Spor count in degree " + std::to_string(m));
    }
  }
  c.detail << "30 random saturated ideals with M = n-1; ";
  return c;
}

Check criterion_6d() {
  Check c;
  std::mt19937_64 rng(6004);
  for (int k = 0; k < 50; ++k) {
    MonomialIdeal i = oracle::random_cm_borel(rng, 3 + k % 3);
    Cohen1Verdict v = cohen1_bound_check(i);
    c.expect(v.satisfied, "bound holds for " + i.to_string());
    if (v.alpha >= 2) c.expect(v.classical_bound && v.bound <= *v.classical_bound, "bound <= classical");
  }
  c.detail << "50 random CM Borel ideals; ";
  return c;
}

Check criterion_6e() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    for (unsigned d = 1; d <= 6; ++d) {
      const long long top = std::min<long long>(30, binomial(d + n - 1, n - 1));
      for (long long h = 0; h <= top; ++h) {
        c.equal(macaulay_growth_bound(h, d), oracle::lex_segment_growth(n, d, h), "lex-segment bound");
      }
    }
  }
  std::size_t checked = 0;
  for (const HilbertTable& t : g_tables) {
    for (int d = 1; d < t.t_max(); ++d) {
      ++checked;
      c.expect(t.value(d + 1) <= macaulay_growth_bound(t.value(d), static_cast<unsigned>(d)), "table growth");
    }
  }
  c.detail << g_tables.size() << " tables, " << checked << " steps; ";
  return c;
}

// Corpus entries running a pipeline, re-run here so their reports are visible.
void corpus_pipelines() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(BORELGIN_CORPUS_DIR)) {
    if (e.path().extension() == ".ideal") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    IdealSource src;
    try {
      src = parse_ideal(ss.str());
    } catch (const ParseError&) {
      continue;  // entries that exercise the parser's error path
    }
    if (src.run.empty() || (src.run[0] != "growth1" && src.run[0] != "growth2")) continue;
    Report r = run_command(parse_command(src.run), src);
    if (r.growth) keep_growth(*r.growth);
  }
}

Check criterion_6f() {
  Check c;
  int certified = 0;
  for (const GrowthReport& r : g_first) {
    if (!r.applicable || !r.gin_generic) continue;
    ++certified;
    c.expect(r.saturated == true, r.label + ": saturated");
    c.expect(r.d_regular == true, r.label + ": d-regular");
    c.expect(r.scheme_dimension == 2, r.label + ": curve");
    c.expect(r.scheme_degree == r.s, r.label + ": degree s");
    c.expect(r.violations.empty(), r.label + ": no violations");
  }
  c.expect(certified > 0, "at least one certified run");
  c.detail << certified << " certified first-difference runs; ";
  return c;
}

Check criterion_6g() {
  Check c;
  int runs = 0;
  for (const GrowthReport& r : g_second) {
    if (!r.applicable) continue;
    ++runs;
    c.expect(r.injective.has_value() && r.d_regular.has_value() && *r.injective == *r.d_regular,
             r.label + ": injective iff d-regular");
    c.expect(r.violations.empty(), r.label + ": no violations");
  }
  c.expect(runs > 0, "at least one second-difference run");
  c.detail << runs << " second-difference runs; ";
  return c;
}

Check criterion_7() {
  Check c;
  Ideal ci = complete_intersection(Ring{4, Field::prime()}, {2, 16}, 7);
  HilbertTable t = keep(hilbert_table(ci, 20));
  Row want;
  for (long long k = 0; k < 16; ++k) want.push_back(2 * k + 1);
  want.insert(want.end(), {32, 32, 32});
  c.equal(first_delta(t, 19), want, "Delta H");
  ReductionProfile r = reduction_number(ci, 2);
  c.expect(r.certified, "both formulations of r_2 agree");
  c.equal(r.value, std::optional<int>(16), "r_2");
  c.detail << "r_2 = " << r.value.value_or(-1) << "; ";
  return c;
}

struct Criterion {
  std::string id;
  std::string title;
  double limit;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "Gin of the space curve", kLimitGin, criterion_1},
      {"2", "Chardin-D'Cruz regularities", kLimitChardinDCruz, criterion_2},
      {"3", "general points h-vectors", kLimitDefault, criterion_3},
      {"4", "CI(4,4,4) points", kLimitDefault, criterion_4},
      {"5", "examples without WLP", kLimitNotWlp, criterion_5},
      {"6a", "HF(R/I) = HF(R/in) = HF(R/Gin)", kLimitDefault, criterion_6a},
      {"6b", "D = codim, saturation vs M", kLimitDefault, criterion_6b},
      {"6c", "Spor counts the saturation quotient", kLimitDefault, criterion_6c},
      {"6d", "Cohen bound on CM Borel ideals", kLimitDefault, criterion_6d},
      {"6e", "Macaulay bound", kLimitDefault, criterion_6e},
      {"6f", "saturated truncations of curves", kLimitDefault,
       [] {
         corpus_pipelines();
         return criterion_6f();
       }},
      {"6g", "injectivity vs d-regularity", kLimitDefault, criterion_6g},
      {"7", "CI(2,16) data layer", kLimitDefault, criterion_7},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what() << "; ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit) {
      c.ok = false;
      c.detail << "over the " << cr.limit << " s limit; ";
    }
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.title << ") " << c.detail.str()
              << "[" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
