#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "borelgin/parser.hpp"
#include "borelgin/report.hpp"

namespace borelgin {

enum ExitCode : int {
  exit_ok = 0,
  exit_computation = 1,
  exit_parse = 2,
  exit_theorem = 3,
};

inline constexpr const char* cli_verbs[] = {"gin",      "hilbert", "invariants", "reduction", "wlp",
                                            "truncate", "growth1", "growth2",    "points",    "corpus"};

struct Command {
  std::string verb;
  std::optional<std::string> input_path;   // file, or the corpus directory
  std::optional<std::string> inline_text;  // source text given on the command line
  std::optional<Field> field;
  std::uint64_t seed = 1;
  int trials = 3;
  std::optional<int> tmax;
  std::optional<int> d;
  std::optional<int> s;
  bool json = false;
};

/// Parses `<verb> [input] [flags]`; throws ParseError on bad usage.
Command parse_command(const std::vector<std::string>& args);

struct BuiltIdeal {
  Ideal ideal;
  /// Present when every scheme directive is a point set and there are no
  /// explicit generators.
  std::optional<PointsSummary> points;
};

/// Explicit generators intersected with the ideals of the scheme directives.
BuiltIdeal build_ideal(const IdealSource& source);

/// Runs one verb other than `corpus`; errors propagate as exceptions.
Report run_command(const Command& command, const IdealSource& source);

/// Exit code that a finished report maps to.
int report_exit_code(const Report& report);

struct CorpusEntry {
  std::string file;
  std::string label;
  bool passed = false;
  int exit_code = 0;
  std::vector<std::string> failures;
};

/// Every *.ideal file of the directory, in name order. Each file runs its
/// `run` statement (default `invariants`) and is checked against its
/// `expect` statements; the key `exit` compares the exit code. Throws
/// PreconditionError if the directory does not exist.
std::vector<CorpusEntry> run_corpus(const std::filesystem::path& dir);

/// Full command line handling; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace borelgin
