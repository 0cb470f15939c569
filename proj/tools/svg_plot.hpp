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

// Minimal deterministic SVG line charts.

#ifndef TROPNEV_TOOLS_SVG_PLOT_HPP_
#define TROPNEV_TOOLS_SVG_PLOT_HPP_

#include <string>
#include <vector>

#include "tropnev/tropical_pl.hpp"

namespace tropnev {

struct Series {
  std::string label;
  std::string color;
  std::vector<Point> points;
  bool dashed = false;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  bool log_y = false;
  int width = 720;
  int height = 440;
};

// Points with y <= 0 are dropped when log_y is set.
std::string render_svg(const std::vector<Series>& series, const PlotOptions& opts);

// Exact polyline of f on [lo, hi]: the endpoints plus every knot, or
// `max_points` uniform samples when f has more knots than that.
std::vector<Point> sample_function(const TropicalPL& f, double lo, double hi,
                                   std::size_t max_points = 20000);

}  // namespace tropnev

#endif  // TROPNEV_TOOLS_SVG_PLOT_HPP_
