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

// Independent reference computations for tests. Nothing here calls the
// event machinery of the library: values come from closed forms, finite
// differences and quadrature.

#ifndef TROPNEV_TESTS_ORACLES_HPP_
#define TROPNEV_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "tropnev/random_instances.hpp"
#include "tropnev/tropical_pl.hpp"

namespace oracle {

// e_alpha from its cell formula.
inline double e(double alpha, double x) {
  const double k = std::floor(x);
  const double t = x - k;
  const double w = std::pow(alpha, k);
  if (std::abs(alpha) > 1.0) return w * (t + 1.0 / (alpha - 1.0));
  return w * (1.0 / (1.0 - alpha) - t);
}

// pi^(a,b) from its max (a, b < 0) or min (a, b > 0) formula.
inline double pi(double a, double b, double x) {
  const double t = x - std::floor(x);
  const double u = a * t;
  const double v = -b * (t - 1.0);
  return (a < 0.0 ? std::max(u, v) : std::min(u, v)) / (a + b);
}

// One-sided difference quotients over a step h.
inline double left_slope(const tropnev::TropicalPL& f, double x, double h) {
  return (f(x) - f(x - h)) / h;
}
inline double right_slope(const tropnev::TropicalPL& f, double x, double h) {
  return (f(x + h) - f(x)) / h;
}

// Jumps of the slope of a finite function read straight off its points.
struct Jump {
  double x;
  double omega;
};
inline std::vector<Jump> finite_jumps(const std::vector<tropnev::Point>& pts,
                                      double slope_left, double slope_right) {
  std::vector<double> s{slope_left};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    s.push_back((pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x));
  }
  s.push_back(slope_right);
  std::vector<Jump> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back({pts[i].x, s[i + 1] - s[i]});
  return out;
}

// Trapezoid rule for a function of t on [0, r] with `panels` panels.
template <class F>
double trapezoid(F g, double r, int panels) {
  const double h = r / panels;
  double acc = 0.5 * (g(0.0) + g(r));
  for (int i = 1; i < panels; ++i) acc += g(i * h);
  return acc * h;
}

// Largest relative distance between f and g over n uniform points.
inline double max_gap(const tropnev::TropicalPL& f, const tropnev::TropicalPL& g,
                      double lo, double hi, int n = 1001) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double a = f(x), b = g(x);
    worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
  }
  return worst;
}

}  // namespace oracle

#endif  // TROPNEV_TESTS_ORACLES_HPP_
