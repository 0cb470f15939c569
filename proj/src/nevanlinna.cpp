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

#include "tropnev/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace tropnev {
namespace {

void require_radius(double r, const char* what) {
  require_finite(r, what);
  if (r < 0.0) {
    throw Error(ErrorCode::kInvalidParameters,
                std::string(what) + " must be nonnegative");
  }
}

// Events strictly inside (-r, r).
std::vector<BreakpointEvent> interior_events(const TropicalPL& f, double r,
                                             const Context& ctx) {
  if (r <= 0.0) return {};
  std::vector<BreakpointEvent> events = breakpoints_in(f, -r, r, ctx);
  std::erase_if(events,
                [r](const BreakpointEvent& e) { return !(std::abs(e.x) < r); });
  return events;
}

double least_squares_slope(const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0 ? static_cast<double>(sxy / sxx) : 0.0;
}

}  // namespace

double proximity(const TropicalPL& f, double r) {
  require_radius(r, "radius");
  return 0.5 * (std::max(f(r), 0.0) + std::max(f(-r), 0.0));
}

double count_poles(const TropicalPL& f, double t, const Context& ctx) {
  require_radius(t, "radius");
  long double n = 0;
  for (const BreakpointEvent& e : interior_events(f, t, ctx)) {
    if (e.kind == EventKind::kPole) n += e.tau;
  }
  return static_cast<double>(n);
}

double counting(const TropicalPL& f, double r, const Context& ctx) {
  require_radius(r, "radius");
  long double acc = 0;
  for (const BreakpointEvent& e : interior_events(f, r, ctx)) {
    if (e.kind == EventKind::kPole) {
      acc += static_cast<long double>(e.tau) * (r - std::abs(e.x));
    }
  }
  return static_cast<double>(acc / 2);
}

double characteristic_value(const TropicalPL& f, double r, const Context& ctx) {
  return proximity(f, r) + counting(f, r, ctx);
}

NevanlinnaSample characteristic(const TropicalPL& f, double r,
                                const Context& ctx) {
  NevanlinnaSample s;
  s.r = r;
  s.m = proximity(f, r);
  long double n = 0, acc = 0;
  for (const BreakpointEvent& e : interior_events(f, r, ctx)) {
    if (e.kind != EventKind::kPole) continue;
    n += e.tau;
    acc += static_cast<long double>(e.tau) * (r - std::abs(e.x));
  }
  s.n_poles = static_cast<double>(n);
  s.N = static_cast<double>(acc / 2);
  s.T = s.m + s.N;
  return s;
}

VerificationReport verify_jensen(const TropicalPL& f,
                                 const std::vector<double>& radii,
                                 const Context& ctx) {
  VerificationReport rep = make_report("jensen", "", Relation::kEqual);
  const TropicalPL neg = negate(f);
  const double f0 = f(0.0);
  for (double r : radii) {
    const double t = characteristic_value(f, r, ctx);
    const double t_neg = characteristic_value(neg, r, ctx);
    rep.add_row(r, t - t_neg, f0, ctx.verify_tol * std::max(1.0, t));
  }
  return rep;
}

VerificationReport verify_jensen(const TropicalPL& f, double r,
                                 const Context& ctx) {
  return verify_jensen(f, std::vector<double>{r}, ctx);
}

double poisson_jensen_rhs(const TropicalPL& f, double r, double x,
                          const Context& ctx) {
  const double fr = f(r);
  const double fmr = f(-r);
  long double value = 0.5L * (fr + fmr) + x / (2.0L * r) * (fr - fmr);
  long double roots = 0, poles = 0;
  for (const BreakpointEvent& e : interior_events(f, r, ctx)) {
    const long double term =
        static_cast<long double>(e.tau) *
        (static_cast<long double>(r) * r - std::abs(e.x - x) * r - e.x * x);
    if (e.kind == EventKind::kRoot) {
      roots += term;
    } else {
      poles += term;
    }
  }
  value += (poles - roots) / (2.0L * r);
  return static_cast<double>(value);
}

VerificationReport verify_poisson_jensen(const TropicalPL& f, double r,
                                         double x, const Context& ctx) {
  require_finite(x, "x");
  if (!(r > 0.0) || !(std::abs(x) < r)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "Poisson-Jensen needs r > 0 and |x| < r");
  }
  VerificationReport rep = make_report("poisson-jensen", "", Relation::kEqual);
  const double fx = f(x);
  rep.add_row(r, fx, poisson_jensen_rhs(f, r, x, ctx),
              ctx.verify_tol * std::max(1.0, std::abs(fx)));
  return rep;
}

double pole_floor(const TropicalPL& f, double lo, double hi,
                  const Context& ctx) {
  double best = kNoEvents;
  for (const BreakpointEvent& e : breakpoints_in(f, lo, hi, ctx)) {
    if (e.kind == EventKind::kPole) best = std::min(best, f(e.x));
  }
  return best;
}

double root_floor(const TropicalPL& f, double lo, double hi,
                  const Context& ctx) {
  double best = kNoEvents;
  for (const BreakpointEvent& e : breakpoints_in(f, lo, hi, ctx)) {
    if (e.kind == EventKind::kRoot) best = std::min(best, f(e.x));
  }
  return best;
}

std::vector<double> radius_grid(double r_min, double r_max, int points,
                                bool geometric) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) {
    throw Error(ErrorCode::kInvalidParameters,
                "radius grid needs 0 < r_min < r_max and at least 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double s = static_cast<double>(k) / (points - 1);
    grid[static_cast<std::size_t>(k)] =
        geometric ? r_min * std::pow(r_max / r_min, s)
                  : r_min + (r_max - r_min) * s;
  }
  grid.back() = r_max;
  return grid;
}

GrowthEstimate estimate_growth(const TropicalPL& f, double r_min, double r_max,
                               int points, double tail_fraction,
                               const Context& ctx) {
  if (points < 8) {
    throw Error(ErrorCode::kInvalidParameters,
                "growth estimation needs at least 8 radii");
  }
  if (!(tail_fraction > 0.0 && tail_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidParameters, "tail fraction must be in (0,1)");
  }
  GrowthEstimate g;
  g.tail_fraction = tail_fraction;
  g.grid = radius_grid(r_min, r_max, points, true);
  g.T.reserve(g.grid.size());
  for (double r : g.grid) g.T.push_back(characteristic_value(f, r, ctx));

  const auto first = static_cast<std::size_t>(
      std::floor((1.0 - tail_fraction) * static_cast<double>(points)));
  std::vector<double> lr, lt, lr2, llt;
  for (std::size_t k = first; k < g.grid.size(); ++k) {
    const double r = g.grid[k];
    const double t = g.T[k];
    if (r <= 1.0 || t <= 0.0) continue;
    const double log_r = std::log(r);
    g.order = std::max(g.order, std::log(t) / log_r);
    lr.push_back(log_r);
    lt.push_back(std::log(t));
    if (t > 1.0) {
      const double ll = std::log(std::log(t));
      g.hyper_order =
          g.hyper_defined ? std::max(g.hyper_order, ll / log_r) : ll / log_r;
      g.hyper_defined = true;
      lr2.push_back(log_r);
      llt.push_back(ll);
    }
  }
  g.fitted_order = std::max(0.0, least_squares_slope(lr, lt));
  if (g.hyper_defined) {
    g.hyper_order = std::max(0.0, g.hyper_order);
    g.fitted_hyper_order = std::max(0.0, least_squares_slope(lr2, llt));
    g.order_infinite = g.fitted_hyper_order >= kInfiniteOrderHyperThreshold;
  }
  return g;
}

std::vector<NevanlinnaSample> sweep(const TropicalPL& f,
                                    const std::vector<double>& radii,
                                    const Context& ctx) {
  std::vector<NevanlinnaSample> out;
  out.reserve(radii.size());
  for (double r : radii) out.push_back(characteristic(f, r, ctx));
  return out;
}

void write_sweep_csv(std::ostream& out,
                     const std::vector<NevanlinnaSample>& samples) {
  out << "r,m,n,N,T\n";
  for (const NevanlinnaSample& s : samples) {
    out << format_double(s.r) << ',' << format_double(s.m) << ','
        << format_double(s.n_poles) << ',' << format_double(s.N) << ','
        << format_double(s.T) << '\n';
  }
}

}  // namespace tropnev
