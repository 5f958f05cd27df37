#include "cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace estrada::cli {
namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 620;
constexpr double kLeft = 80;
constexpr double kRight = 170;  // legend column
constexpr double kPanelHeight = 230;
constexpr double kTopPanelY = 50;
constexpr double kBottomPanelY = 340;

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Series {
  std::string name;
  std::string legend;
  std::string colour;
  std::vector<double> values;
};

struct Reference {
  std::string name;
  std::string legend;
  std::string colour;
  double value;
};

class Panel {
 public:
  Panel(double top, std::size_t k_last, std::vector<Series> series, std::vector<Reference> refs)
      : top_(top), k_last_(std::max<std::size_t>(k_last, 1)), series_(std::move(series)),
        refs_(std::move(refs)) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series_)
      for (double v : s.values) lo = std::min(lo, v), hi = std::max(hi, v);
    for (const auto& r : refs_) lo = std::min(lo, r.value), hi = std::max(hi, r.value);
    // Rounding-level spread counts as flat, otherwise it is magnified to full height.
    const bool flat = hi - lo <= 1e-9 * std::max(1.0, std::abs(hi));
    const double pad = flat ? std::max(0.5, 0.05 * std::abs(hi)) : 0.08 * (hi - lo);
    lo_ = lo - pad;
    hi_ = hi + pad;
  }

  double x(double k) const { return kLeft + (kWidth - kLeft - kRight) * k / static_cast<double>(k_last_); }
  double y(double v) const { return top_ + kPanelHeight * (hi_ - v) / (hi_ - lo_); }

  void draw(std::string& out, const std::string& title) const {
    const double right = kWidth - kRight;
    out += "<g class=\"panel\">\n";
    out += "<text x=\"" + fmt2(kLeft) + "\" y=\"" + fmt2(top_ - 10) +
           "\" font-size=\"13\" font-weight=\"bold\">" + escape(title) + "</text>\n";
    out += "<rect x=\"" + fmt2(kLeft) + "\" y=\"" + fmt2(top_) + "\" width=\"" +
           fmt2(right - kLeft) + "\" height=\"" + fmt2(kPanelHeight) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int i = 0; i <= 4; ++i) {
      const double v = lo_ + (hi_ - lo_) * i / 4.0;
      out += "<text x=\"" + fmt2(kLeft - 6) + "\" y=\"" + fmt2(y(v) + 4) +
             "\" font-size=\"11\" text-anchor=\"end\">" + label(v) + "</text>\n";
    }
    const std::size_t step = std::max<std::size_t>(1, k_last_ / 8);
    for (std::size_t k = 0; k <= k_last_; k += step) {
      out += "<text x=\"" + fmt2(x(static_cast<double>(k))) + "\" y=\"" +
             fmt2(top_ + kPanelHeight + 16) + "\" font-size=\"11\" text-anchor=\"middle\">" +
             std::to_string(k) + "</text>\n";
    }
    double legend_y = top_ + 12;
    for (const auto& r : refs_) {
      out += "<line class=\"reference " + r.name + "\" x1=\"" + fmt2(kLeft) + "\" y1=\"" +
             fmt2(y(r.value)) + "\" x2=\"" + fmt2(right) + "\" y2=\"" + fmt2(y(r.value)) +
             "\" stroke=\"" + r.colour + "\" stroke-dasharray=\"6 4\"/>\n";
      legend(out, legend_y, r.colour, r.legend + " = " + label(r.value), true);
    }
    for (const auto& s : series_) {
      out += "<polyline class=\"series " + s.name + "\" fill=\"none\" stroke=\"" + s.colour +
             "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < s.values.size(); ++k) {
        out += (k ? " " : "") + fmt2(x(static_cast<double>(k))) + "," + fmt2(y(s.values[k]));
      }
      out += "\"/>\n";
      legend(out, legend_y, s.colour, s.legend, false);
    }
    out += "</g>\n";
  }

 private:
  static void legend(std::string& out, double& ly, const std::string& colour,
                     const std::string& text, bool dashed) {
    const double lx = kWidth - kRight + 12;
    out += "<line x1=\"" + fmt2(lx) + "\" y1=\"" + fmt2(ly) + "\" x2=\"" + fmt2(lx + 22) +
           "\" y2=\"" + fmt2(ly) + "\" stroke=\"" + colour + "\"" +
           (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    out += "<text x=\"" + fmt2(lx + 28) + "\" y=\"" + fmt2(ly + 4) + "\" font-size=\"11\">" +
           escape(text) + "</text>\n";
    ly += 18;
  }

  double top_;
  std::size_t k_last_;
  std::vector<Series> series_;
  std::vector<Reference> refs_;
  double lo_ = 0;
  double hi_ = 1;
};

}  // namespace

std::string render_svg(const Report& report) {
  const auto& t = report.table;
  const bool graph = t.source == SourceKind::graph;
  const std::size_t k_last = t.rows.empty() ? 0 : t.rows.back().k;

  std::vector<double> seq, general, bipartite, matrix;
  for (const auto& r : t.rows) {
    seq.push_back(r.seq_value);
    general.push_back(r.bounds.general);
    if (r.bounds.bipartite) bipartite.push_back(*r.bounds.bipartite);
    if (r.bounds.matrix) matrix.push_back(*r.bounds.matrix);
  }

  std::vector<Series> bounds{{"bound_general", "J^k", "#1f77b4", general}};
  if (!bipartite.empty()) bounds.push_back({"bound_bipartite", "C^k", "#2ca02c", bipartite});
  if (!matrix.empty()) bounds.push_back({"bound_matrix", "R^k", "#9467bd", matrix});
  const Panel top(kTopPanelY, k_last, bounds, {{"exact_ee", "EE", "#d62728", t.exact_ee}});
  const Panel bottom(kBottomPanelY, k_last,
                     {{"seq", graph ? "gamma^(k)" : "xi^(k)", "#ff7f0e", seq}},
                     {{"spectral_radius", graph ? "lambda_1" : "rho_1", "#7f7f7f",
                       t.spectral_radius}});

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt2(kWidth) +
         "\" height=\"" + fmt2(kHeight) + "\" viewBox=\"0 0 " + fmt2(kWidth) + " " +
         fmt2(kHeight) + "\" font-family=\"sans-serif\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt2(kLeft) + "\" y=\"22\" font-size=\"15\">" + escape(report.input) +
         "</text>\n";
  top.draw(out, "Lower bounds vs exact Estrada index");
  bottom.draw(out, graph ? "gamma^(k) vs largest eigenvalue" : "xi^(k) vs spectral radius");
  out += "<text x=\"" + fmt2((kLeft + kWidth - kRight) / 2) + "\" y=\"" + fmt2(kHeight - 12) +
         "\" font-size=\"12\" text-anchor=\"middle\">k</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace estrada::cli
