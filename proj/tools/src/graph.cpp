// Copyright 2026 The Fermat Reals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermat/cli/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "fermat/errors.hpp"
#include "fermat/format.hpp"

namespace fermat::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 32.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 56.0;

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

std::string label_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

double representing_value(const FermatReal& x, double t) {
  double v = x.standard_part();
  for (const auto& term : x.terms()) v += term.coeff * std::pow(t, term.exp.to_double());
  return v;
}

GraphSample sample_graph(const FermatReal& x, double delta, std::size_t samples) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be > 0");
  if (samples < 2) throw DomainError("samples must be >= 2");
  GraphSample g;
  g.delta = delta;
  g.points.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    double t = delta * static_cast<double>(k) / static_cast<double>(samples);
    g.points.push_back({representing_value(x, t), t});
  }
  return g;
}

void write_csv(std::ostream& os, const GraphSample& g) {
  os << "value,t\n";
  for (const auto& p : g.points) os << format_double(p.value) << ',' << format_double(p.t) << '\n';
}

void write_svg(std::ostream& os, const GraphSample& g, std::string_view label) {
  double vmin = g.points.front().value;
  double vmax = vmin;
  for (const auto& p : g.points) {
    vmin = std::min(vmin, p.value);
    vmax = std::max(vmax, p.value);
  }
  double span = vmax - vmin;
  double pad = span > 0.0 ? 0.05 * span : 0.1 * std::max(1.0, std::fabs(vmin));
  vmin -= pad;
  vmax += pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const double axis_y = kHeight - kMarginBottom;
  auto sx = [&](double v) { return kMarginLeft + (v - vmin) / (vmax - vmin) * plot_w; };
  auto sy = [&](double t) { return axis_y - t / g.delta * plot_h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<title>graph_delta(" << escape_xml(label) << "), delta=" << format_double(g.delta)
     << "</title>\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // real line at t = 0, and the t direction on the left edge
  os << "<line x1=\"" << fixed(kMarginLeft) << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
     << fixed(kWidth - kMarginRight) << "\" y2=\"" << fixed(axis_y)
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << fixed(kMarginLeft) << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
     << fixed(kMarginLeft) << "\" y2=\"" << fixed(kMarginTop)
     << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
  os << "<text x=\"" << fixed(kWidth - kMarginRight + 4) << "\" y=\"" << fixed(axis_y + 4)
     << "\" font-family=\"sans-serif\" font-size=\"12\">R</text>\n";
  os << "<text x=\"" << fixed(kMarginLeft) << "\" y=\"" << fixed(axis_y + 20)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
     << label_number(vmin) << "</text>\n";
  os << "<text x=\"" << fixed(kWidth - kMarginRight) << "\" y=\"" << fixed(axis_y + 20)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
     << label_number(vmax) << "</text>\n";
  os << "<text x=\"" << fixed(kMarginLeft - 6) << "\" y=\"" << fixed(kMarginTop + 4)
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">t="
     << format_double(g.delta) << "</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (i > 0) os << ' ';
    os << fixed(sx(g.points[i].value)) << ',' << fixed(sy(g.points[i].t));
  }
  os << "\"/>\n";
  os << "</svg>\n";
}

}  // namespace fermat::cli
