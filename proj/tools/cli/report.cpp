#include "cli/report.hpp"

#include <cstdio>
#include <sstream>

#include "estrada/error.hpp"

namespace estrada::cli {
namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_or_null(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json ratio_json(const Ratio& r) { return json::array({r.num, r.den}); }
Ratio ratio_from(const json& j) { return Ratio{j.at(0).get<std::uint64_t>(), j.at(1).get<std::uint64_t>()}; }

std::string sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

json bounds_json(const BoundValues& b) {
  return {{"general", b.general}, {"bipartite", optional_number(b.bipartite)},
          {"matrix", optional_number(b.matrix)}};
}

BoundValues bounds_from(const json& j) {
  return {j.at("general").get<double>(), number_or_null(j.at("bipartite")),
          number_or_null(j.at("matrix"))};
}

json table_json(const BoundTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"k", r.k},
                    {"seq", r.seq_value},
                    {"bound_general", r.bounds.general},
                    {"bound_bipartite", optional_number(r.bounds.bipartite)},
                    {"bound_matrix", optional_number(r.bounds.matrix)},
                    {"gap", t.gap(r)}});
  }
  return {{"n_or_ell", t.n_or_ell},
          {"edges", t.edges},
          {"trace", t.trace},
          {"sequence_kind", to_string(t.source == SourceKind::graph ? SequenceKind::gamma_graph
                                                                     : SequenceKind::xi_matrix)},
          {"terminated_by", to_string(t.terminated_by)},
          {"tol", t.tol},
          {"exact_ee", t.exact_ee},
          {"spectral_radius", t.spectral_radius},
          {"at_radius", bounds_json(t.at_radius)},
          {"baseline_2m_over_n", optional_number(t.baseline_2m_over_n)},
          {"reducible", t.reducible},
          {"rows", rows}};
}

BoundTable table_from(const json& j, SourceKind source) {
  BoundTable t;
  t.source = source;
  t.n_or_ell = j.at("n_or_ell").get<std::size_t>();
  t.edges = j.at("edges").get<std::size_t>();
  t.trace = j.at("trace").get<double>();
  t.terminated_by = termination_from_string(j.at("terminated_by").get<std::string>());
  t.tol = j.at("tol").get<double>();
  t.exact_ee = j.at("exact_ee").get<double>();
  t.spectral_radius = j.at("spectral_radius").get<double>();
  t.at_radius = bounds_from(j.at("at_radius"));
  t.baseline_2m_over_n = number_or_null(j.at("baseline_2m_over_n"));
  t.reducible = j.at("reducible").get<bool>();
  for (const auto& r : j.at("rows")) {
    t.rows.push_back({r.at("k").get<std::size_t>(), r.at("seq").get<double>(),
                      {r.at("bound_general").get<double>(), number_or_null(r.at("bound_bipartite")),
                       number_or_null(r.at("bound_matrix"))}});
  }
  return t;
}

json certificate_json(const EqualityCertificate& c) {
  return {{"theorem", to_string(c.theorem)},
          {"holds_with_equality", c.holds_with_equality},
          {"structural", c.structural},
          {"numeric", c.numeric},
          {"strict_observed", c.strict_observed()},
          {"witness", c.witness},
          {"numeric_gap", c.numeric_gap},
          {"attains_radius", c.attains_radius},
          {"discrepancy", c.discrepancy}};
}

EqualityCertificate certificate_from(const json& j) {
  EqualityCertificate c;
  c.theorem = theorem_from_string(j.at("theorem").get<std::string>());
  c.holds_with_equality = j.at("holds_with_equality").get<bool>();
  c.structural = j.at("structural").get<bool>();
  c.numeric = j.at("numeric").get<bool>();
  c.witness = j.at("witness").get<std::string>();
  c.numeric_gap = j.at("numeric_gap").get<double>();
  c.attains_radius = j.at("attains_radius").get<std::vector<bool>>();
  c.discrepancy = j.at("discrepancy").get<std::string>();
  return c;
}

}  // namespace

json classification_to_json(const GraphClassification& c) {
  json j;
  j["connected"] = c.connected;
  j["regular"] = c.regular ? json(*c.regular) : json(nullptr);
  j["semiregular"] =
      c.semiregular ? json::array({c.semiregular->first, c.semiregular->second}) : json(nullptr);
  j["pseudoregular"] = c.pseudoregular ? ratio_json(*c.pseudoregular) : json(nullptr);
  j["semipseudoregular"] = c.semipseudoregular ? ratio_json(*c.semipseudoregular) : json(nullptr);
  j["pseudosemiregular"] =
      c.pseudosemiregular
          ? json::array({ratio_json(c.pseudosemiregular->first), ratio_json(c.pseudosemiregular->second)})
          : json(nullptr);
  j["bipartite"] = c.bipartite();
  j["bipartition"] = c.bipartition
                         ? json::array({c.bipartition->first, c.bipartition->second})
                         : json(nullptr);
  j["strictly_semiregular"] = c.strictly_semiregular();
  j["strictly_semipseudoregular"] = c.strictly_semipseudoregular();
  j["strictly_pseudosemiregular"] = c.strictly_pseudosemiregular();
  return j;
}

GraphClassification classification_from_json(const json& j) {
  GraphClassification c;
  c.connected = j.at("connected").get<bool>();
  if (!j.at("regular").is_null()) c.regular = j.at("regular").get<std::uint64_t>();
  if (const auto& s = j.at("semiregular"); !s.is_null()) {
    c.semiregular = std::pair{s.at(0).get<std::uint64_t>(), s.at(1).get<std::uint64_t>()};
  }
  if (const auto& r = j.at("pseudoregular"); !r.is_null()) c.pseudoregular = ratio_from(r);
  if (const auto& r = j.at("semipseudoregular"); !r.is_null()) c.semipseudoregular = ratio_from(r);
  if (const auto& r = j.at("pseudosemiregular"); !r.is_null()) {
    c.pseudosemiregular = std::pair{ratio_from(r.at(0)), ratio_from(r.at(1))};
  }
  if (const auto& b = j.at("bipartition"); !b.is_null()) {
    c.bipartition = Bipartition{b.at(0).get<std::vector<Vertex>>(), b.at(1).get<std::vector<Vertex>>()};
  }
  return c;
}

json to_json(const Report& report) {
  json j;
  j["input"] = report.input;
  j["source"] = to_string(report.source);
  j["classification"] =
      report.classification ? classification_to_json(*report.classification) : json(nullptr);
  j["table"] = table_json(report.table);
  j["certificate"] = certificate_json(report.certificate);
  if (report.timing_ms) j["timing_ms"] = *report.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.input = j.at("input").get<std::string>();
    r.source = source_kind_from_string(j.at("source").get<std::string>());
    if (!j.at("classification").is_null()) {
      r.classification = classification_from_json(j.at("classification"));
    }
    r.table = table_from(j.at("table"), r.source);
    r.certificate = certificate_from(j.at("certificate"));
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string to_csv(const Report& report, bool with_header) {
  const auto& t = report.table;
  std::ostringstream out;
  if (with_header) out << "k,seq,bound_general,bound_bipartite,bound_matrix,exact_ee,gap\n";
  auto opt = [](const std::optional<double>& v) { return v ? sig(*v, 17) : std::string(); };
  for (const auto& r : t.rows) {
    out << r.k << ',' << sig(r.seq_value, 17) << ',' << sig(r.bounds.general, 17) << ','
        << opt(r.bounds.bipartite) << ',' << opt(r.bounds.matrix) << ',' << sig(t.exact_ee, 17)
        << ',' << sig(t.gap(r), 17) << '\n';
  }
  return out.str();
}

std::string describe(const GraphClassification& c) {
  std::vector<std::string> parts;
  if (c.regular) parts.push_back("regular r=" + std::to_string(*c.regular));
  if (c.semiregular) {
    parts.push_back(std::string(c.strictly_semiregular() ? "strictly " : "") + "semiregular (" +
                    std::to_string(c.semiregular->first) + "," +
                    std::to_string(c.semiregular->second) + ")");
  }
  if (c.pseudoregular) parts.push_back("pseudoregular μ=" + c.pseudoregular->str());
  if (c.semipseudoregular) {
    parts.push_back(std::string(c.strictly_semipseudoregular() ? "strictly " : "") +
                    "semipseudoregular μ=" + c.semipseudoregular->str());
  }
  if (c.pseudosemiregular) {
    parts.push_back(std::string(c.strictly_pseudosemiregular() ? "strictly " : "") +
                    "pseudosemiregular (" + c.pseudosemiregular->first.str() + "," +
                    c.pseudosemiregular->second.str() + ")");
  }
  if (parts.empty()) parts.push_back("no degree class");

  std::string bip = "bipartite: ";
  if (c.bipartition) {
    bip += "yes {";
    for (std::size_t i = 0; i < c.bipartition->first.size(); ++i) {
      bip += (i ? "," : "") + std::to_string(c.bipartition->first[i]);
    }
    bip += " | ";
    for (std::size_t i = 0; i < c.bipartition->second.size(); ++i) {
      bip += (i ? "," : "") + std::to_string(c.bipartition->second[i]);
    }
    bip += "}";
  } else {
    bip += "no";
  }
  parts.push_back(bip);
  parts.push_back(std::string("connected: ") + (c.connected ? "yes" : "no"));

  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

std::string to_table(const Report& report, bool color) {
  const auto& t = report.table;
  const bool graph = t.source == SourceKind::graph;
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";

  std::ostringstream out;
  out << bold << report.input << reset << '\n';
  if (graph) {
    out << "  graph: n=" << t.n_or_ell << " m=" << t.edges << '\n';
  } else {
    out << "  matrix: order=" << t.n_or_ell << " trace=" << sig(t.trace, 6)
        << (t.reducible ? "  [warning: reducible, Perron vector may not be positive]" : "")
        << '\n';
  }
  if (report.classification) out << "  classes: " << describe(*report.classification) << '\n';

  const bool bip = t.has_bipartite_column();
  const bool mat = t.has_matrix_column();
  char line[256];
  std::snprintf(line, sizeof line, "%6s %14s %14s", "k", graph ? "gamma" : "xi", "J^k");
  out << bold << line;
  if (bip) out << ' ' << std::string(14 - 3, ' ') << "C^k";
  if (mat) out << ' ' << std::string(14 - 3, ' ') << "R^k";
  std::snprintf(line, sizeof line, " %14s %14s", "EE", "gap");
  out << line << reset << '\n';

  auto cell = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %14s", sig(v, 6).c_str());
    return std::string(buf);
  };
  auto emit = [&](const std::string& k, double seq, const BoundValues& b) {
    std::snprintf(line, sizeof line, "%6s", k.c_str());
    out << line << cell(seq) << cell(b.general);
    if (bip) out << cell(b.bipartite.value_or(0.0));
    if (mat) out << cell(b.matrix.value_or(0.0));
    out << cell(t.exact_ee) << cell(t.exact_ee - b.tightest()) << '\n';
  };
  for (const auto& r : t.rows) emit(std::to_string(r.k), r.seq_value, r.bounds);
  emit("limit", t.spectral_radius, t.at_radius);

  out << "  terminated: " << to_string(t.terminated_by) << " (tol " << sig(t.tol, 3) << ")\n";
  if (t.baseline_2m_over_n) {
    out << "  baseline e^{2m/n}+n-1-2m/n: " << sig(*t.baseline_2m_over_n, 6) << '\n';
  }
  const auto& c = report.certificate;
  out << "  equality (" << to_string(c.theorem) << "): "
      << (c.holds_with_equality ? "yes" : "no") << ", " << c.witness << ", gap "
      << sig(c.numeric_gap, 6) << '\n';
  if (!c.discrepancy.empty()) out << "  discrepancy: " << c.discrepancy << '\n';
  if (report.timing_ms) {
    out << "  timing:";
    for (const auto& [stage, ms] : *report.timing_ms) out << ' ' << stage << '=' << sig(ms, 3) << "ms";
    out << '\n';
  }
  return out.str();
}

}  // namespace estrada::cli
