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

#include "tropnev/special_functions.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

namespace tropnev {
namespace {

bool is_close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Sorted, with points closer than 1e-12 (relative) dropped.
std::vector<double> unique_sorted(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs) {
    if (out.empty() || !is_close(out.back(), x)) out.push_back(x);
  }
  return out;
}

void validate_events(const std::vector<PeriodicEvent>& events, double period,
                     ErrorCode code) {
  if (events.empty()) throw Error(code, "event list must be nonempty");
  for (std::size_t i = 0; i < events.size(); ++i) {
    require_finite(events[i].x, "event position");
    require_finite(events[i].omega, "event jump");
    if (events[i].x < 0.0 || events[i].x >= period) {
      throw Error(code, "event position " + std::to_string(events[i].x) +
                            " outside [0, period)");
    }
    if (events[i].omega == 0.0) throw Error(code, "event jump must be nonzero");
    for (std::size_t k = 0; k < i; ++k) {
      if (is_close(events[i].x, events[k].x)) {
        throw Error(code, "event positions must be distinct");
      }
    }
  }
}

double cell_value(double theta, int which, double k, double t) {
  const double C = std::cos(theta);
  const double S = std::sin(theta);
  const double ck = std::cos(theta * k);
  const double sk = std::sin(theta * k);
  const double denom = 2.0 * (1.0 - C);
  if (which == 1) return ck * t + (ck * (C - 1.0) + sk * S) / denom;
  return sk * t + (sk * (C - 1.0) - ck * S) / denom;
}

class TrigGenerator final : public Generator {
 public:
  TrigGenerator(double theta, int which) : theta_(theta), which_(which) {}

  std::string name() const override { return "trig"; }
  std::vector<std::pair<std::string, double>> params() const override {
    return {{"theta", theta_}, {"which", static_cast<double>(which_)}};
  }
  double eval(double x) const override {
    const double k = std::floor(x);
    return cell_value(theta_, which_, k, x - k);
  }
  Slopes slopes(double x, const Context& ctx) const override {
    const double n = std::round(x);
    if (same_location(x, n, ctx.eps)) return {slope(n - 1.0), slope(n)};
    const double s = slope(std::floor(x));
    return {s, s};
  }
  std::vector<double> knots(double lo, double hi) const override {
    std::vector<double> out;
    for (double n = std::ceil(lo); n <= std::floor(hi); n += 1.0) out.push_back(n);
    return out;
  }

 private:
  double slope(double k) const {
    return which_ == 1 ? std::cos(theta_ * k) : std::sin(theta_ * k);
  }

  double theta_;
  int which_;
};

// Largest |g| at the knots of g in [lo, hi] and at 64 interior points.
double sup_on(const TropicalPL& g, double lo, double hi) {
  double s = 0.0;
  for (double x : g.knots(lo, hi)) s = std::max(s, std::abs(g(x)));
  for (int i = 0; i <= 64; ++i) s = std::max(s, std::abs(g(lo + (hi - lo) * i / 64.0)));
  return s;
}

// max |g(x+1) - g(x)| over the knots of g in [0, 1] and 64 interior points.
double period_defect(const TropicalPL& g) {
  double d = 0.0;
  std::vector<double> xs = g.knots(0.0, 1.0);
  for (int i = 0; i <= 64; ++i) xs.push_back(i / 64.0);
  for (double x : xs) {
    d = std::max({d, std::abs(g(x + 1.0) - g(x)), std::abs(g(x) - g(x - 1.0))});
  }
  return d;
}

// (-1)^[x - x_j] Xi(x) as the shift of a 2-periodic extension.
TropicalPL anti_periodic_term(double xj, const TropicalPL& xi) {
  const TropicalPL s = shift(xi, xj);
  std::vector<double> us = s.knots(0.0, 2.0);
  us.insert(us.end(), {0.0, 1.0, 2.0});
  us = unique_sorted(std::move(us));
  std::vector<Point> pts;
  for (double u : us) {
    if (u < 0.0 || u > 2.0) continue;
    pts.push_back({u, u <= 1.0 ? s(u) : -s(u)});
  }
  return shift(TropicalPL::periodic_extension(TropicalPL::finite(pts, 0.0, 0.0), 2.0),
               -xj);
}

}  // namespace

TropicalPL make_pi(double a, double b) {
  require_finite(a, "pi parameter a");
  require_finite(b, "pi parameter b");
  const bool both_negative = a < 0.0 && b < 0.0;
  const bool both_positive = a > 0.0 && b > 0.0;
  if (!both_negative && !both_positive) {
    throw Error(ErrorCode::kInvalidParameters,
                "pi^(a,b) needs a, b both negative or both positive");
  }
  const double s = a + b;
  const double peak_x = b / s;
  return TropicalPL::periodic_extension(
      TropicalPL::finite({{0.0, 0.0}, {peak_x, a * b / (s * s)}, {1.0, 0.0}},
                         a / s, -b / s),
      1.0);
}

TropicalPL build_periodic(const PeriodicSpec& spec, const Context& ctx) {
  require_finite(spec.period, "period");
  require_finite(spec.anchor, "anchor value");
  if (!(spec.period > 0.0)) {
    throw Error(ErrorCode::kInvalidSpec, "period must be positive");
  }
  validate_events(spec.events, spec.period, ErrorCode::kInvalidSpec);
  double total = 0.0;
  double mass = 0.0;
  for (const PeriodicEvent& e : spec.events) {
    total += e.omega;
    mass += std::abs(e.omega);
  }
  if (std::abs(total) > ctx.eps * std::max(1.0, mass)) {
    throw Error(ErrorCode::kInvalidSpec,
                "slope jumps over a period sum to " + std::to_string(total) +
                    ", a periodic function needs 0");
  }
  // On the unit period u = x/p the jumps scale by p.
  std::vector<TropicalPL> parts{TropicalPL::constant(spec.anchor)};
  std::vector<double> us{0.0, 1.0};
  for (const PeriodicEvent& e : spec.events) {
    const double c = e.x / spec.period;
    us.push_back(c);
    if (c == 0.0) continue;
    parts.push_back(tropical_scale(make_pi(c - 1.0, -c), -e.omega * spec.period));
  }
  const TropicalPL unit = tropical_sum(parts);
  us = unique_sorted(std::move(us));
  std::vector<Point> pts;
  pts.reserve(us.size());
  for (double u : us) pts.push_back({u * spec.period, unit(u)});
  pts.back().y = pts.front().y;
  return TropicalPL::periodic_extension(TropicalPL::finite(pts, 0.0, 0.0),
                                        spec.period);
}

TropicalPL make_exponential(double alpha) { return TropicalPL::exponential(alpha); }

double exponential_jump(double c) {
  if (c == 0.0 || std::abs(c) == 1.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "exponential base must avoid 0 and +-1");
  }
  return std::abs(c) > 1.0 ? 1.0 - 1.0 / c : (1.0 - c) / c;
}

UltraDiscreteSolution solve_first_order(double c,
                                        const std::vector<PeriodicEvent>& events) {
  require_finite(c, "c");
  if (c == 1.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "c = 1: solutions are the 1-periodic functions; use build_periodic");
  }
  if (c == -1.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "c = -1: solutions are anti-1-periodic (2-periodic); build a "
                "period-2 function with f(x+1) = -f(x) via build_periodic");
  }
  if (c == 0.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "c = 0: y(x+1) = 0 admits only y = 0");
  }
  validate_events(events, 1.0, ErrorCode::kInvalidParameters);
  UltraDiscreteSolution sol;
  sol.order = 1;
  sol.c = c;
  const TropicalPL e = make_exponential(c);
  const double jump = exponential_jump(c);
  std::vector<TropicalPL> parts;
  for (const PeriodicEvent& ev : events) {
    const double coeff = ev.omega / jump;
    sol.basis.push_back({"e", ev.x, coeff});
    parts.push_back(tropical_scale(shift(e, -ev.x), coeff));
  }
  sol.assembled = tropical_sum(parts);
  sol.notes.push_back(std::abs(c) > 1.0
                          ? "branch |c| > 1: e_c(x) = c^[x] (x - [x] + 1/(c-1))"
                          : "branch 0 < |c| < 1: e_c(x) = c^[x] (1/(1-c) - x + [x])");
  sol.notes.push_back("coefficient = omega_j / omega_{e_c}(0)");
  return sol;
}

double dominant_root(double c) {
  if (!(std::abs(c) > 2.0)) {
    throw Error(ErrorCode::kInvalidParameters, "dominant root needs |c| > 2");
  }
  const double d = std::sqrt(c * c - 4.0);
  return c > 0.0 ? 0.5 * (c + d) : 0.5 * (c - d);
}

UltraDiscreteSolution solve_second_order(double c, const SecondOrderData& data,
                                         const Context& ctx) {
  require_finite(c, "c");
  const bool is_two = is_close(c, 2.0);
  const bool is_minus_two = is_close(c, -2.0);
  const bool outer = !is_two && !is_minus_two && std::abs(c) > 2.0;
  const bool inner = !is_two && !is_minus_two && std::abs(c) < 2.0;
  const bool has_linear = data.linear != 0.0 || data.has_periodic;
  const bool has_exp = !data.forward.empty() || !data.backward.empty();
  auto mismatch = [](const char* what) {
    throw Error(ErrorCode::kInvalidParameters, what);
  };
  if ((has_linear && !is_two) || (!data.anti.empty() && !is_minus_two) ||
      (has_exp && !outer) || (!data.trig.empty() && !inner)) {
    mismatch("mode data does not match the case of c");
  }

  UltraDiscreteSolution sol;
  sol.order = 2;
  sol.c = c;
  std::vector<TropicalPL> parts;
  if (is_two) {
    require_finite(data.linear, "linear coefficient");
    parts.push_back(TropicalPL::affine(data.linear, 0.0));
    sol.basis.push_back({"linear", 0.0, data.linear});
    if (data.has_periodic) {
      const double defect = period_defect(data.periodic);
      if (defect > ctx.eps * std::max(1.0, sup_on(data.periodic, 0.0, 1.0))) {
        mismatch("c = 2 periodic part is not 1-periodic");
      }
      parts.push_back(data.periodic);
      sol.basis.push_back({"periodic", 0.0, 1.0});
    }
  } else if (is_minus_two) {
    if (data.anti.empty()) mismatch("c = -2 needs at least one (x_j, Xi_j) pair");
    for (const auto& [xj, xi] : data.anti) {
      require_finite(xj, "x_j");
      const double scale = std::max(1.0, sup_on(xi, xj, xj + 1.0));
      if (period_defect(xi) > ctx.eps * scale) mismatch("Xi_j must be 1-periodic");
      if (std::abs(xi(xj)) > ctx.eps * scale) {
        mismatch("continuity at x_j + n needs Xi_j(x_j) = 0");
      }
      parts.push_back(anti_periodic_term(xj, xi));
      sol.basis.push_back({"anti-periodic", xj, 1.0});
    }
  } else if (outer) {
    if (!has_exp) mismatch("|c| > 2 needs forward or backward terms");
    const double a = dominant_root(c);
    const TropicalPL ea = make_exponential(a);
    const TropicalPL eb = make_exponential(1.0 / a);
    for (const auto& [yj, alpha] : data.forward) {
      parts.push_back(tropical_scale(shift(ea, -yj), alpha));
      sol.basis.push_back({"e", yj, alpha});
    }
    for (const auto& [xj, beta] : data.backward) {
      parts.push_back(tropical_scale(shift(eb, -xj), beta / a));
      sol.basis.push_back({"e-reflected", xj, beta});
    }
    sol.notes.push_back("a = " + std::to_string(a) +
                        "; e_a(-x + x_j) = (1/a) e_{1/a}(x - x_j)");
  } else {
    if (data.trig.empty()) mismatch("|c| < 2 needs trig terms");
    const double theta = std::acos(c / 2.0);
    double gap = 0.0;
    for (const TrigTerm& t : data.trig) {
      if (t.which != 1 && t.which != 2) mismatch("trig term index must be 1 or 2");
      parts.push_back(
          tropical_scale(shift(make_trig_solution(theta, t.which), -t.shift),
                         t.coefficient));
      sol.basis.push_back({t.which == 1 ? "y1" : "y2", t.shift, t.coefficient});
      gap = std::max(gap, trig_continuity_gap(theta, t.which, -20, 20));
    }
    sol.notes.push_back("theta = " + std::to_string(theta) +
                        "; continuity gap at integers -20..20 = " +
                        std::to_string(gap));
  }
  sol.assembled = tropical_sum(parts);
  return sol;
}

UltraDiscreteSolution delta_solution_c_minus_one() {
  const double s = 1.0 / 6.0;
  const std::vector<Point> pts{
      {0.0, 0.0},       {s, -s},          {2 * s, 0.0}, {4 * s, 0.0},
      {5 * s, -s},      {1.0, 0.0},       {7 * s, s},   {8 * s, 0.0},
      {16 * s, 0.0},    {17 * s, s},      {3.0, 0.0}};
  UltraDiscreteSolution sol;
  sol.order = 2;
  sol.c = -1.0;
  sol.assembled =
      TropicalPL::periodic_extension(TropicalPL::finite(pts, -1.0, -1.0), 3.0);
  sol.basis.push_back({"delta-fixture", 0.0, 1.0});
  sol.notes.push_back("3-periodic tent solution");
  return sol;
}

TropicalPL make_trig_solution(double theta, int which) {
  require_finite(theta, "theta");
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::kInvalidParameters, "theta must lie in (0, pi)");
  }
  if (which != 1 && which != 2) {
    throw Error(ErrorCode::kInvalidParameters, "trig solution index is 1 or 2");
  }
  return TropicalPL::custom(std::make_shared<TrigGenerator>(theta, which));
}

double trig_continuity_gap(double theta, int which, int n_lo, int n_hi) {
  double gap = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double left = cell_value(theta, which, n - 1.0, 1.0);
    const double right = cell_value(theta, which, n, 0.0);
    gap = std::max(gap, std::abs(left - right));
  }
  return gap;
}

SolutionResidual solution_residual(const UltraDiscreteSolution& sol, double lo,
                                   double hi, int per_unit, const Context& ctx) {
  const TropicalPL& y = sol.assembled;
  std::vector<double> xs;
  for (double k : y.knots(lo - 1.0, hi + 1.0, ctx)) {
    for (double d : {-1.0, 0.0, 1.0}) {
      if (k + d >= lo && k + d <= hi) xs.push_back(k + d);
    }
  }
  const auto n = static_cast<long long>(std::ceil((hi - lo) * per_unit));
  for (long long i = 0; i <= n; ++i) {
    xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
  }
  SolutionResidual res{0.0, 0.0, xs.size()};
  for (double x : xs) {
    const double y0 = y(x);
    const double y1 = y(x + 1.0);
    double r;
    if (sol.order == 1) {
      r = y1 - sol.c * y0;
      res.sup_abs_y = std::max({res.sup_abs_y, std::abs(y0), std::abs(y1)});
    } else {
      const double ym = y(x - 1.0);
      r = y1 + ym - sol.c * y0;
      res.sup_abs_y =
          std::max({res.sup_abs_y, std::abs(y0), std::abs(y1), std::abs(ym)});
    }
    res.max_abs = std::max(res.max_abs, std::abs(r));
  }
  return res;
}

double casoratian_2x2(const TropicalPL& f, const TropicalPL& g, double x) {
  return f(x) * g(x + 1.0) - f(x + 1.0) * g(x);
}

EventCensus event_census(const TropicalPL& f, double lo, double hi,
                         const Context& ctx) {
  EventCensus census;
  for (const BreakpointEvent& e : breakpoints_in(f, lo, hi, ctx)) {
    if (e.x >= hi || same_location(e.x, hi, ctx.eps)) continue;
    (e.kind == EventKind::kPole ? census.poles : census.roots).push_back(e);
  }
  return census;
}

DecompositionProbe probe_delta_decomposition(const std::vector<double>& shifts,
                                             int samples_per_unit) {
  if (shifts.empty() || samples_per_unit < 1) {
    throw Error(ErrorCode::kInvalidParameters,
                "probe needs shifts and a positive sampling rate");
  }
  const TropicalPL target = delta_solution_c_minus_one().assembled;
  const double theta = 2.0 * std::numbers::pi / 3.0;
  std::vector<TropicalPL> basis;
  for (double s : shifts) {
    for (int which : {1, 2}) basis.push_back(shift(make_trig_solution(theta, which), -s));
  }
  const int m = 3 * samples_per_unit + 1;
  Eigen::MatrixXd A(m, static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    const double x = 3.0 * i / (m - 1);
    b(i) = target(x);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      A(i, static_cast<Eigen::Index>(j)) = basis[j](x);
    }
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = A * coef - b;
  DecompositionProbe probe;
  probe.basis_size = static_cast<int>(basis.size());
  probe.samples = m;
  probe.rms_residual = std::sqrt(r.squaredNorm() / m);
  probe.max_residual = r.cwiseAbs().maxCoeff();
  probe.coefficients.assign(coef.data(), coef.data() + coef.size());
  return probe;
}

}  // namespace tropnev
