// Copyright 2026 The tropnev Authors.
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

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "tropnev/report.hpp"

namespace tropnev {
namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Tick label with at most 4 significant digits.
std::string tick(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::vector<Point> sample_function(const TropicalPL& f, double lo, double hi,
                                   std::size_t max_points) {
  std::vector<double> xs = f.knots(lo, hi);
  if (xs.size() + 2 > max_points) {
    xs.clear();
    for (std::size_t i = 0; i < max_points; ++i) {
      xs.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(max_points - 1));
    }
  }
  xs.push_back(lo);
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Point> pts;
  for (double x : xs) {
    if (x >= lo && x <= hi) pts.push_back({x, f(x)});
  }
  return pts;
}

std::string render_svg(const std::vector<Series>& series, const PlotOptions& opts) {
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double w = opts.width - left - right;
  const double h = opts.height - top - bottom;
  auto ty = [&](double y) { return opts.log_y ? std::log10(y) : y; };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const Series& s : series) {
    for (const Point& p : s.points) {
      if (opts.log_y && !(p.y > 0.0)) continue;
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, ty(p.y));
      y1 = std::max(y1, ty(p.y));
    }
  }
  if (!(x1 >= x0)) x0 = 0, x1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * w; };
  auto py = [&](double y) { return top + (y1 - ty(y)) / (y1 - y0) * h; };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(opts.width) + "\" height=\"" +
                    std::to_string(opts.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fixed2(left) + "\" y=\"24\" font-size=\"15\">" +
         escape(opts.title) + "</text>\n";
  svg += "<rect x=\"" + fixed2(left) + "\" y=\"" + fixed2(top) + "\" width=\"" +
         fixed2(w) + "\" height=\"" + fixed2(h) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0;
    const double yv = y0 + (y1 - y0) * i / 5.0;
    const double gx = left + w * i / 5.0;
    const double gy = top + h - h * i / 5.0;
    svg += "<line x1=\"" + fixed2(gx) + "\" y1=\"" + fixed2(top) + "\" x2=\"" +
           fixed2(gx) + "\" y2=\"" + fixed2(top + h) + "\" stroke=\"#ddd\"/>\n";
    svg += "<line x1=\"" + fixed2(left) + "\" y1=\"" + fixed2(gy) + "\" x2=\"" +
           fixed2(left + w) + "\" y2=\"" + fixed2(gy) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + fixed2(gx) + "\" y=\"" + fixed2(top + h + 16) +
           "\" text-anchor=\"middle\">" + tick(xv) + "</text>\n";
    svg += "<text x=\"" + fixed2(left - 6) + "\" y=\"" + fixed2(gy + 4) +
           "\" text-anchor=\"end\">" +
           (opts.log_y ? "1e" + tick(yv) : tick(yv)) + "</text>\n";
  }
  svg += "<text x=\"" + fixed2(left + w / 2) + "\" y=\"" +
         fixed2(opts.height - 10.0) + "\" text-anchor=\"middle\">" +
         escape(opts.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fixed2(top + h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fixed2(top + h / 2) + ")\">" + escape(opts.y_label) + "</text>\n";

  double legend_y = top + 16;
  for (const Series& s : series) {
    std::string path;
    for (const Point& p : s.points) {
      if (opts.log_y && !(p.y > 0.0)) continue;
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
      path += (path.empty() ? "M" : " L") + fixed2(px(p.x)) + "," + fixed2(py(p.y));
    }
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + s.color +
           "\" stroke-width=\"1.5\"" +
           (s.dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    if (!s.label.empty()) {
      svg += "<text x=\"" + fixed2(left + w - 8) + "\" y=\"" + fixed2(legend_y) +
             "\" text-anchor=\"end\" fill=\"" + s.color + "\">" + escape(s.label) +
             "</text>\n";
      legend_y += 16;
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tropnev
