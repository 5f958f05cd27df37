#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cli/report.hpp"
#include "estrada/generators.hpp"
#include "estrada/graph.hpp"
#include "estrada/matrix.hpp"

namespace estrada::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvariantViolation = 1,
  kInputError = 2,
  kHypothesisViolation = 3,
};

enum class InputFormat { automatic, edge_list, graph6, matrix_market, report_json };

struct Input {
  std::string label;
  std::variant<Graph, SymNonnegMatrix> source;
};

/// Options shared by bounds, classify, verify and plot.
struct RunConfig {
  std::string input_path;        // file or directory
  std::string family;            // inline generator spec, e.g. "complete-bipartite 2 3"
  InputFormat format = InputFormat::automatic;
  std::size_t kmax = 1000;
  double tol = 1e-10;
  enum class Output { table, csv, json, svg } output = Output::table;
  std::optional<std::uint64_t> seed;
  std::string out_path;          // empty: stdout
  bool timing = false;
  std::size_t jobs = 0;          // 0: hardware concurrency
};

/// Parses "<family> <args...>": complete N, path N, cycle N,
/// complete-bipartite P Q, star N, erdos-renyi N P. The seed defaults to 0.
FamilySpec parse_family(const std::vector<std::string>& words, std::optional<std::uint64_t> seed);

InputFormat format_from_name(const std::string& name);
InputFormat format_from_extension(const std::string& path);

/// Loads one file, every graph of a multi-line graph6 file, or every
/// recognised file of a directory (sorted by name).
std::vector<Input> load_inputs(const std::string& path, InputFormat format);

Report build_report(const Input& input, std::size_t kmax, double tol, bool timing);

/// Runs `estrada <args>` writing to the given streams; returns the exit code.
/// `color` enables ANSI styling of human-readable tables.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace estrada::cli
