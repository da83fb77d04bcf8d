#include "borelgin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "borelgin/errors.hpp"
#include "borelgin/ideal_ops.hpp"
#include "borelgin/points.hpp"

namespace borelgin {

namespace {

using Json = nlohmann::ordered_json;

Field parse_field(const std::string& text) {
  if (text == "Q" || text == "q" || text == "0") return Field::rationals();
  try {
    std::size_t used = 0;
    unsigned long long p = std::stoull(text, &used);
    if (used == text.size() && p < (1ull << 31) && is_prime_number(static_cast<std::uint32_t>(p))) {
      return Field::prime(static_cast<std::uint32_t>(p));
    }
  } catch (const std::exception&) {
  }
  throw ParseError("--field takes a prime below 2^31 or Q", 1, 1);
}

void configure(CLI::App& sub, Command& c, std::string& field) {
  sub.add_option("input", c.input_path, "input file (directory for corpus)");
  sub.add_option("--ideal", c.inline_text, "source text instead of a file");
  sub.add_option("--field", field, "prime p or Q");
  sub.add_option("--seed", c.seed, "base seed for random choices");
  sub.add_option("--trials", c.trials, "Gin trials")->check(CLI::Range(2, 99));
  sub.add_option("--tmax", c.tmax, "last degree of Hilbert tables")->check(CLI::Range(0, 1000));
  sub.add_option("--d", c.d, "truncation degree")->check(CLI::Range(0, 1000));
  sub.add_option("--s", c.s, "number of linear sections")->check(CLI::Range(1, 16));
  sub.add_flag("--json", c.json, "JSON output");
}

struct Parsed {
  Command command;
  std::string field;
};

std::unique_ptr<CLI::App> make_app(Parsed& p) {
  auto app = std::make_unique<CLI::App>("Generic initial ideals, Borel invariants and Hilbert function growth",
                                        "borelgin");
  app->require_subcommand(1);
  const std::pair<const char*, const char*> verbs[] = {
      {"gin", "generic initial ideal (degrevlex)"},
      {"hilbert", "Hilbert function table and differences"},
      {"invariants", "D, M, regularity, saturation degree, Spor"},
      {"reduction", "reduction number r_s, two ways"},
      {"wlp", "weak Lefschetz property of the Artinian reduction"},
      {"truncate", "the ideal generated in degrees <= d"},
      {"growth1", "first-difference growth pipeline"},
      {"growth2", "second-difference growth pipeline"},
      {"points", "vanishing ideal of the scheme's point sets"},
      {"corpus", "run every corpus file of a directory"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app->add_subcommand(name, help);
    configure(*sub, p.command, p.field);
    sub->callback([&p, verb = std::string(name)] { p.command.verb = verb; });
  }
  return app;
}

Command finish(Parsed& p) {
  if (!p.field.empty()) p.command.field = parse_field(p.field);
  return p.command;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GinOptions gin_options(const Command& c) {
  GinOptions o;
  o.trials = c.trials;
  o.seed = c.seed;
  return o;
}

TruncationSummary summarize_truncation(const Ideal& t, unsigned d, const GinOptions& options) {
  GinResult g = gin(t, MonomialOrder::degrevlex(), options);
  if (!g.generic()) throw ComputationError("Gin of the truncation was not certified generic");
  HilbertSeries hs = hilbert_series(g.ideal);
  TruncationSummary s;
  s.d = d;
  s.generators = t.generators;
  s.saturated = g.ideal.is_saturated();
  s.regularity = g.ideal.max_generator_degree();
  s.d_regular = s.regularity <= d;
  s.dimension = hs.dimension();
  s.degree = hs.degree();
  return s;
}

const Json* lookup(const Json& root, const std::string& path) {
  const Json* node = &root;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t dot = path.find('.', start);
    std::string part = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (node->is_object()) {
      auto it = node->find(part);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else if (node->is_array() && !part.empty() && std::all_of(part.begin(), part.end(), ::isdigit)) {
      std::size_t i = std::stoul(part);
      if (i >= node->size()) return nullptr;
      node = &(*node)[i];
    } else {
      return nullptr;
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return node;
}

// Files that do not parse can still declare their expected exit code.
std::optional<int> scan_expected_exit(const std::string& text) {
  static const std::regex statement(R"((?:^|;)\s*expect\s+exit\s+(\d+)\s*;)");
  std::string plain = std::regex_replace(text, std::regex("#[^\n]*"), "");
  std::smatch m;
  if (!std::regex_search(plain, m, statement)) return std::nullopt;
  return std::stoi(m[1].str());
}

CorpusEntry run_entry(const std::filesystem::path& file) {
  CorpusEntry e;
  e.file = file.filename().string();
  IdealSource src;
  const std::string text = read_file(file.string());
  try {
    src = parse_ideal(text);
  } catch (const ParseError& ex) {
    e.exit_code = exit_parse;
    std::optional<int> want = scan_expected_exit(text);
    if (!want) {
      e.failures.push_back(std::string("parse error: ") + ex.what());
    } else if (*want != exit_parse) {
      e.failures.push_back("exit: expected " + std::to_string(*want) + ", got 2 (" + ex.what() + ")");
    }
    e.passed = e.failures.empty();
    return e;
  }
  e.label = src.label;
  Json report = Json::object();
  try {
    std::vector<std::string> args = src.run.empty() ? std::vector<std::string>{"invariants"} : src.run;
    Command c = parse_command(args);
    if (c.verb == "corpus") throw PreconditionError("corpus entries cannot run the corpus verb");
    Report r = run_command(c, src);
    report = Json::parse(emit_json(r));
    e.exit_code = report_exit_code(r);
    if (r.growth) {
      for (const std::string& v : r.growth->violations) e.failures.push_back("theorem violation: " + v);
    }
  } catch (const ParseError& ex) {
    e.exit_code = exit_parse;
    report["error"] = ex.what();
  } catch (const TheoremViolation& ex) {
    e.exit_code = exit_theorem;
    report["error"] = ex.what();
  } catch (const std::exception& ex) {
    e.exit_code = exit_computation;
    report["error"] = ex.what();
  }
  report["exit"] = e.exit_code;
  bool expects_exit = false;
  for (const Expectation& x : src.expectations) {
    if (x.key == "exit") expects_exit = true;
    Json want = Json::parse(x.value);
    const Json* got = lookup(report, x.key);
    if (!got) {
      e.failures.push_back(x.key + ": missing, expected " + want.dump());
    } else if (*got != want) {
      e.failures.push_back(x.key + ": expected " + want.dump() + ", got " + got->dump());
    }
  }
  if (!expects_exit && e.exit_code != exit_ok) {
    std::string why = report.contains("error") ? report["error"].get<std::string>() : "see violations";
    e.failures.push_back("exit code " + std::to_string(e.exit_code) + ": " + why);
  }
  e.passed = e.failures.empty();
  return e;
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Parsed p;
  auto app = make_app(p);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::ParseError& ex) {
    throw ParseError(std::string("bad command: ") + ex.what(), 1, 1);
  }
  return finish(p);
}

BuiltIdeal build_ideal(const IdealSource& source) {
  const Ring ring = source.ring();
  std::vector<Ideal> parts;
  if (!source.generators.empty() || source.schemes.empty()) parts.push_back(source.ideal());
  std::optional<PointSet> points;
  for (const SchemeDirective& s : source.schemes) {
    if (s.kind == "ci") {
      parts.push_back(complete_intersection(ring, s.args, s.seed));
      continue;
    }
    PointSet set(ring.nvars, ring.field);
    if (s.kind == "points") {
      set = random_points(ring.nvars, s.args[0], s.seed, ring.field);
    } else {
      std::mt19937_64 rng(s.seed);
      Polynomial f = random_form(ring, s.args[1], rng);
      set = points_on_hypersurface(f, s.args[0], trial_seed(s.seed, 1));
    }
    points = points ? points->merged(set) : set;
  }
  BuiltIdeal out{Ideal{ring, {}}, std::nullopt};
  if (points) {
    parts.push_back(vanishing_ideal(*points));
    if (parts.size() == 1) {
      PointsSummary summary;
      summary.count = points->size();
      for (const Vector& p : points->points()) {
        std::vector<std::string> coords;
        for (const FieldElement& c : p) coords.push_back(c.to_string());
        summary.coordinates.push_back(std::move(coords));
      }
      if (points->size() <= 12) summary.upp = check_upp_bruteforce(*points);
      out.points = std::move(summary);
    }
  }
  out.ideal = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out.ideal = ideal_intersection(out.ideal, parts[i]);
  return out;
}

Report run_command(const Command& c, const IdealSource& source) {
  Report r;
  r.verb = c.verb;
  r.label = source.label;
  r.field = source.field;
  r.seed = c.seed;
  r.trials = c.trials;
  r.variables = source.variables;
  BuiltIdeal built = build_ideal(source);
  const Ideal& ideal = built.ideal;
  const GinOptions options = gin_options(c);
  auto certified_gin = [&]() {
    GinResult g = gin(ideal, MonomialOrder::degrevlex(), options);
    if (!g.generic()) throw ComputationError("Gin trials disagreed; retry with another seed");
    return g;
  };

  if (c.verb == "gin" || c.verb == "invariants") {
    r.gin = certified_gin();
    r.invariants = compute_invariants(r.gin->ideal);
  } else if (c.verb == "hilbert") {
    int tmax = c.tmax.value_or(-1);
    if (tmax < 0) {
      MonomialIdeal in = buchberger(ideal).initial_ideal();
      tmax = std::max(10, static_cast<int>(in.is_zero() ? 0 : in.max_generator_degree()) + 2);
    }
    r.hilbert = hilbert_table(ideal, tmax);
  } else if (c.verb == "reduction") {
    r.gin = certified_gin();
    int s = c.s.value_or(std::max(hilbert_series(r.gin->ideal).dimension(), 1));
    r.reduction = reduction_number(ideal, s, *r.gin, c.seed);
  } else if (c.verb == "wlp") {
    r.wlp = wlp_test(ideal, c.seed);
  } else if (c.verb == "truncate") {
    if (!c.d) throw PreconditionError("truncate needs --d");
    r.truncation = summarize_truncation(truncate_ideal(ideal, static_cast<unsigned>(*c.d)),
                                        static_cast<unsigned>(*c.d), options);
  } else if (c.verb == "growth1" || c.verb == "growth2") {
    PipelineOptions po;
    po.gin = options;
    po.d = c.d;
    po.label = source.label;
    r.growth = c.verb == "growth1" ? first_difference_pipeline(ideal, po)
                                   : second_difference_pipeline(ideal, po);
  } else if (c.verb == "points") {
    if (!built.points) throw PreconditionError("points needs point-set scheme directives only");
    r.points = built.points;
    HilbertSeries hs = hilbert_series(ideal);
    r.points->h_vector = hs.h_vector();
    int tmax = c.tmax.value_or(static_cast<int>(hs.h_vector().size()) + 1);
    r.hilbert = hilbert_table(ideal, tmax);
  } else {
    throw PreconditionError("unknown verb '" + c.verb + "'");
  }
  return r;
}

int report_exit_code(const Report& report) {
  if (report.growth && !report.growth->violations.empty()) return exit_theorem;
  return exit_ok;
}

std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw PreconditionError("no corpus directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ideal") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out(files.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::vector<std::future<CorpusEntry>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i) {
      batch.push_back(std::async(std::launch::async, run_entry, files[i]));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Parsed p;
  auto app = make_app(p);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int code = app->exit(ex, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }
  try {
    Command c = finish(p);
    if (c.verb == "corpus") {
      if (!c.input_path) throw PreconditionError("corpus needs a directory");
      std::vector<CorpusEntry> entries = run_corpus(*c.input_path);
      int code = exit_ok;
      std::size_t failed = 0;
      for (const CorpusEntry& e : entries) {
        out << (e.passed ? "PASS  " : "FAIL  ") << e.file;
        if (!e.label.empty()) out << "  (" << e.label << ")";
        out << "\n";
        for (const std::string& f : e.failures) out << "      " << f << "\n";
        if (!e.passed) {
          ++failed;
          bool violation = std::any_of(e.failures.begin(), e.failures.end(), [](const std::string& f) {
            return f.rfind("theorem violation", 0) == 0;
          });
          code = violation ? exit_theorem : std::max(code, static_cast<int>(exit_computation));
        }
      }
      out << entries.size() - failed << " passed, " << failed << " failed\n";
      return code;
    }
    std::string text;
    if (c.inline_text) {
      text = *c.inline_text;
    } else if (c.input_path) {
      text = read_file(*c.input_path);
    } else {
      throw PreconditionError("no input: give a file or --ideal");
    }
    IdealSource src = parse_ideal(text, c.field);
    Report r = run_command(c, src);
    out << (c.json ? emit_json(r) + "\n" : emit_text(r));
    return report_exit_code(r);
  } catch (const ParseError& ex) {
    err << "parse error at " << ex.line() << ":" << ex.column() << ": " << ex.what() << "\n";
    return exit_parse;
  } catch (const TheoremViolation& ex) {
    err << "theorem violation: " << ex.what() << "\n";
    return exit_theorem;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_computation;
  }
}

}  // namespace borelgin
