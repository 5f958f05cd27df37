#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/plot.hpp"
#include "cli/verify.hpp"
#include "estrada/bounds.hpp"
#include "estrada/classify.hpp"
#include "estrada/error.hpp"
#include "estrada/graph_io.hpp"

namespace estrada::cli {
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
T parse_number(const std::string& word, const char* what) {
  T value{};
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError(std::string("invalid ") + what + " '" + word + "'");
  }
  return value;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

/// Where results go: a file from --out or the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<Input> resolve_inputs(const RunConfig& cfg) {
  if (cfg.input_path.empty() == cfg.family.empty()) {
    throw InputError("give exactly one input: a path or --generate \"<family> <args>\"");
  }
  if (!cfg.family.empty()) {
    return {{cfg.family, generate(parse_family(split_words(cfg.family), cfg.seed))}};
  }
  return load_inputs(cfg.input_path, cfg.format);
}

struct Outcome {
  std::optional<Report> report;
  int code = kSuccess;
  std::string error;
};

// Builds one report per input on a small worker pool; results keep input order.
std::vector<Outcome> build_all(const std::vector<Input>& inputs, const RunConfig& cfg) {
  std::vector<Outcome> outcomes(inputs.size());
  auto work = [&](std::size_t i) {
    try {
      outcomes[i].report = build_report(inputs[i], cfg.kmax, cfg.tol, cfg.timing);
    } catch (const HypothesisError& e) {
      outcomes[i] = {std::nullopt, kHypothesisViolation, inputs[i].label + ": " + e.what()};
    } catch (const std::exception& e) {
      outcomes[i] = {std::nullopt, kInputError, inputs[i].label + ": " + e.what()};
    }
  };
  std::size_t jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, inputs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) work(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) work(i);
    });
  }
  pool.clear();
  return outcomes;
}

void add_run_options(CLI::App& cmd, RunConfig& cfg, std::string& format_name, bool outputs) {
  cmd.add_option("input", cfg.input_path, "Input file or directory (.el, .g6, .mtx)");
  cmd.add_option("--generate", cfg.family,
                 "Generated input instead of a file, e.g. \"complete-bipartite 2 3\"");
  cmd.add_option("--kmax", cfg.kmax, "Maximum sequence index")->capture_default_str();
  cmd.add_option("--tol", cfg.tol, "Stop when successive sequence values differ by at most this")
      ->capture_default_str();
  cmd.add_option("--format", format_name,
                 "Input format: edge-list, graph6, matrix-market, json (default: by extension)");
  cmd.add_option("--seed", cfg.seed, "Seed for --generate erdos-renyi");
  cmd.add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  cmd.add_option("--jobs", cfg.jobs, "Worker threads for batch inputs (0 = all cores)");
  if (outputs) {
    auto* json = cmd.add_flag_callback("--json", [&cfg] { cfg.output = RunConfig::Output::json; },
                                       "Emit the JSON report");
    auto* csv = cmd.add_flag_callback("--csv", [&cfg] { cfg.output = RunConfig::Output::csv; },
                                      "Emit CSV rows");
    auto* svg = cmd.add_flag_callback("--svg", [&cfg] { cfg.output = RunConfig::Output::svg; },
                                      "Emit the SVG convergence chart");
    json->excludes(csv)->excludes(svg);
    csv->excludes(svg);
    cmd.add_flag("--timing", cfg.timing, "Include per-stage timings in the report");
  }
}

void validate(RunConfig& cfg, const std::string& format_name) {
  if (!(cfg.tol > 0.0)) throw InputError("--tol must be positive");
  if (!format_name.empty()) cfg.format = format_from_name(format_name);
}

int report_errors(const std::vector<Outcome>& outcomes, std::ostream& err) {
  int code = kSuccess;
  for (const auto& o : outcomes) {
    if (o.report) continue;
    err << "error: " << o.error << '\n';
    code = std::max(code, o.code);
  }
  return code;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool color) {
  const auto inputs = resolve_inputs(cfg);
  if (cfg.output == RunConfig::Output::svg && inputs.size() != 1) {
    throw InputError("SVG output needs a single input");
  }
  const auto outcomes = build_all(inputs, cfg);
  const int code = report_errors(outcomes, err);

  Sink sink(cfg.out_path, out);
  const bool batch = inputs.size() > 1;
  switch (cfg.output) {
    case RunConfig::Output::json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& o : outcomes)
        if (o.report) doc.push_back(to_json(*o.report));
      if (!batch && !doc.empty()) doc = doc.front();
      if (!doc.empty()) *sink << doc.dump(2) << '\n';
      break;
    }
    case RunConfig::Output::csv: {
      if (batch) *sink << "input,k,seq,bound_general,bound_bipartite,bound_matrix,exact_ee,gap\n";
      for (const auto& o : outcomes) {
        if (!o.report) continue;
        if (!batch) {
          *sink << to_csv(*o.report);
          continue;
        }
        std::istringstream rows(to_csv(*o.report, false));
        for (std::string line; std::getline(rows, line);) *sink << o.report->input << ',' << line << '\n';
      }
      break;
    }
    case RunConfig::Output::svg:
      if (outcomes.front().report) *sink << render_svg(*outcomes.front().report);
      break;
    case RunConfig::Output::table: {
      bool first = true;
      for (const auto& o : outcomes) {
        if (!o.report) continue;
        *sink << (first ? "" : "\n") << to_table(*o.report, color && cfg.out_path.empty());
        first = false;
      }
      break;
    }
  }
  return code;
}

int cmd_classify(const RunConfig& cfg, bool json, std::ostream& out) {
  const auto inputs = resolve_inputs(cfg);
  Sink sink(cfg.out_path, out);
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& in : inputs) {
    const auto* g = std::get_if<Graph>(&in.source);
    if (!g) throw InputError(in.label + ": classify needs a graph, not a matrix");
    const auto c = classify(*g);
    if (json) {
      doc.push_back({{"input", in.label}, {"classification", classification_to_json(c)}});
    } else {
      *sink << in.label << ": " << describe(c) << '\n';
    }
  }
  if (json) *sink << (inputs.size() == 1 ? doc.front() : doc).dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const bool json_reports =
      cfg.family.empty() &&
      (cfg.format == InputFormat::report_json ||
       (cfg.format == InputFormat::automatic && !fs::is_directory(cfg.input_path) &&
        format_from_extension(cfg.input_path) == InputFormat::report_json));

  std::vector<std::pair<std::string, VerifyResult>> results;
  if (json_reports) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(cfg.input_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) doc = nlohmann::json::array({doc});
    for (const auto& j : doc) {
      const auto report = report_from_json(j);
      results.push_back({report.input, {verify_table(report.table), {}}});
    }
  } else {
    const auto inputs = resolve_inputs(cfg);
    results.resize(inputs.size());
    std::vector<std::string> errors(inputs.size());
    std::atomic<std::size_t> next{0};
    std::size_t jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::max<std::size_t>(1, std::min(jobs, inputs.size()));
    {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
            results[i].first = inputs[i].label;
            try {
              if (const auto* g = std::get_if<Graph>(&inputs[i].source)) {
                results[i].second = verify_graph(*g, cfg.kmax, cfg.tol);
              } else {
                results[i].second =
                    verify_matrix(std::get<SymNonnegMatrix>(inputs[i].source), cfg.kmax, cfg.tol);
              }
            } catch (const std::exception& e) {
              errors[i] = e.what();
            }
          }
        });
      }
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (!errors[i].empty()) throw InputError(inputs[i].label + ": " + errors[i]);
    }
  }

  Sink sink(cfg.out_path, out);
  std::size_t failures = 0;
  for (const auto& [label, result] : results) {
    if (result.ok()) {
      *sink << "ok " << label << '\n';
    } else {
      ++failures;
      for (const auto& v : result.violations) {
        *sink << "FAIL " << label << ": " << v.invariant << ": " << v.detail << '\n';
      }
    }
    for (const auto& note : result.notes) *sink << "  note: " << note << '\n';
  }
  *sink << "verified " << results.size() << " input(s), " << failures << " failing\n";
  return failures == 0 ? kSuccess : kInvariantViolation;
}

int cmd_plot(RunConfig cfg, std::ostream& out, std::ostream& err) {
  cfg.output = RunConfig::Output::svg;
  return cmd_bounds(cfg, out, err, false);
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& format_name, std::optional<std::uint64_t> seed,
                 const std::string& out_path, std::ostream& out) {
  std::vector<std::string> words{family};
  words.insert(words.end(), params.begin(), params.end());
  const auto g = generate(parse_family(words, seed));
  const auto format = format_name.empty() ? InputFormat::edge_list : format_from_name(format_name);
  Sink sink(out_path, out);
  switch (format) {
    case InputFormat::edge_list: *sink << to_edge_list(g); break;
    case InputFormat::graph6: *sink << to_graph6(g) << '\n'; break;
    case InputFormat::matrix_market: *sink << to_matrix_market(adjacency_matrix(g)); break;
    default: throw InputError("generate writes edge-list, graph6 or matrix-market");
  }
  return kSuccess;
}

}  // namespace

FamilySpec parse_family(const std::vector<std::string>& words, std::optional<std::uint64_t> seed) {
  if (words.empty()) throw InputError("missing graph family");
  const auto& name = words.front();
  auto arity = [&](std::size_t count) {
    if (words.size() != count + 1) {
      throw InputError(name + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  auto size_arg = [&](std::size_t i) { return parse_number<std::size_t>(words[i], "size"); };
  if (name == "complete") return arity(1), family::Complete{size_arg(1)};
  if (name == "path") return arity(1), family::Path{size_arg(1)};
  if (name == "cycle") return arity(1), family::Cycle{size_arg(1)};
  if (name == "star") return arity(1), family::Star{size_arg(1)};
  if (name == "complete-bipartite") {
    arity(2);
    return family::CompleteBipartite{size_arg(1), size_arg(2)};
  }
  if (name == "erdos-renyi") {
    arity(2);
    return family::ErdosRenyi{size_arg(1), parse_number<double>(words[2], "edge probability"),
                              seed.value_or(0)};
  }
  throw InputError("unknown family '" + name +
                   "' (complete, path, cycle, complete-bipartite, star, erdos-renyi)");
}

InputFormat format_from_name(const std::string& name) {
  if (name == "edge-list" || name == "el") return InputFormat::edge_list;
  if (name == "graph6" || name == "g6") return InputFormat::graph6;
  if (name == "matrix-market" || name == "mtx") return InputFormat::matrix_market;
  if (name == "json") return InputFormat::report_json;
  if (name == "auto") return InputFormat::automatic;
  throw InputError("unknown format '" + name + "'");
}

InputFormat format_from_extension(const std::string& path) {
  const auto ext = fs::path(path).extension().string();
  if (ext == ".el" || ext == ".edges" || ext == ".edgelist") return InputFormat::edge_list;
  if (ext == ".g6" || ext == ".graph6") return InputFormat::graph6;
  if (ext == ".mtx") return InputFormat::matrix_market;
  if (ext == ".json") return InputFormat::report_json;
  return InputFormat::automatic;
}

std::vector<Input> load_inputs(const std::string& path, InputFormat format) {
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (!entry.is_regular_file()) continue;
      const auto f = format_from_extension(entry.path().string());
      if (f != InputFormat::automatic && f != InputFormat::report_json) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no .el/.g6/.mtx files in '" + path + "'");
    std::vector<Input> all;
    for (const auto& f : files) {
      auto part = load_inputs(f.string(), InputFormat::automatic);
      std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
  }

  if (format == InputFormat::automatic) format = format_from_extension(path);
  const auto text = read_file(path);
  switch (format) {
    case InputFormat::edge_list:
      return {{path, parse_edge_list(text)}};
    case InputFormat::matrix_market:
      return {{path, parse_matrix_market(text)}};
    case InputFormat::graph6: {
      auto graphs = parse_graph6_file(text);
      if (graphs.size() == 1) return {{path, std::move(graphs.front())}};
      std::vector<Input> out;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        out.push_back({path + "#" + std::to_string(i + 1), std::move(graphs[i])});
      }
      return out;
    }
    case InputFormat::report_json:
      throw InputError("'" + path + "': JSON reports are only accepted by verify");
    case InputFormat::automatic:
      break;
  }
  throw InputError("cannot infer the format of '" + path + "'; pass --format");
}

Report build_report(const Input& input, std::size_t kmax, double tol, bool timing) {
  using clock = std::chrono::steady_clock;
  std::map<std::string, double> stages;
  auto timed = [&](const char* stage, auto&& fn) {
    const auto start = clock::now();
    auto result = fn();
    stages[stage] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    return result;
  };

  Report report;
  report.input = input.label;
  if (const auto* g = std::get_if<Graph>(&input.source)) {
    report.source = SourceKind::graph;
    report.classification = timed("classify", [&] { return classify(*g); });
    report.table = timed("bounds", [&] { return bound_table_graph(*g, kmax, tol); });
    report.certificate = timed("certificate", [&] { return equality_certificate(*g, report.table); });
  } else {
    const auto& r = std::get<SymNonnegMatrix>(input.source);
    report.source = SourceKind::matrix;
    report.table = timed("bounds", [&] { return bound_table_matrix(r, kmax, tol); });
    report.certificate = timed("certificate", [&] { return equality_certificate(r, report.table); });
  }
  if (timing) report.timing_ms = std::move(stages);
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Estrada index lower-bound ladders for graphs and nonnegative symmetric matrices",
               "estrada"};
  app.require_subcommand(1);

  std::string gen_family, gen_format;
  std::vector<std::string> gen_params;
  std::optional<std::uint64_t> gen_seed;
  std::string gen_out;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph");
  generate_cmd->add_option("family", gen_family,
                           "complete | path | cycle | complete-bipartite | star | erdos-renyi")
      ->required();
  generate_cmd->add_option("params", gen_params, "Family parameters");
  generate_cmd->add_option("--format", gen_format, "edge-list (default), graph6 or matrix-market");
  generate_cmd->add_option("--seed", gen_seed, "PRNG seed for erdos-renyi (default 0)");
  generate_cmd->add_option("--out", gen_out, "Output file (default stdout)");

  RunConfig bounds_cfg, plot_cfg, verify_cfg, classify_cfg;
  std::string bounds_fmt, plot_fmt, verify_fmt, classify_fmt;
  bool classify_json = false;

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower-bound table against the exact Estrada index");
  add_run_options(*bounds_cmd, bounds_cfg, bounds_fmt, true);
  auto* classify_cmd = app.add_subcommand("classify", "Degree-class membership of a graph");
  add_run_options(*classify_cmd, classify_cfg, classify_fmt, false);
  classify_cmd->add_flag("--json", classify_json, "Emit JSON");
  auto* verify_cmd = app.add_subcommand("verify", "Check every invariant on the given inputs");
  add_run_options(*verify_cmd, verify_cfg, verify_fmt, false);
  auto* plot_cmd = app.add_subcommand("plot", "SVG convergence chart");
  add_run_options(*plot_cmd, plot_cfg, plot_fmt, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kInputError;
  }

  try {
    if (*generate_cmd) {
      return cmd_generate(gen_family, gen_params, gen_format, gen_seed, gen_out, out);
    }
    if (*bounds_cmd) {
      validate(bounds_cfg, bounds_fmt);
      return cmd_bounds(bounds_cfg, out, err, color);
    }
    if (*classify_cmd) {
      validate(classify_cfg, classify_fmt);
      return cmd_classify(classify_cfg, classify_json, out);
    }
    if (*verify_cmd) {
      validate(verify_cfg, verify_fmt);
      return cmd_verify(verify_cfg, out);
    }
    if (*plot_cmd) {
      validate(plot_cfg, plot_fmt);
      return cmd_plot(plot_cfg, out, err);
    }
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesisViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace estrada::cli
