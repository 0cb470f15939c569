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

// Explicit families of tropical meromorphic functions: the periodic sawtooth
// blocks pi^(a,b), periodic functions from their events, the tropical
// exponentials e_alpha, and closed-form solutions of the ultra-discrete
// equations
//
//   y(x+1) = c y(x)                 (first order)
//   y(x+1) + y(x-1) = c y(x)        (second order)

#ifndef TROPNEV_SPECIAL_FUNCTIONS_HPP_
#define TROPNEV_SPECIAL_FUNCTIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "tropnev/context.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

// pi^(a,b)(x) = max{a t, -b (t-1)} / (a+b), t = x - [x], for a, b < 0; the
// min form for a, b > 0 has the same graph. Root of multiplicity 1 at the
// integers, pole of multiplicity 1 at b/(a+b) mod 1, peak ab/(a+b)^2.
TropicalPL make_pi(double a, double b);

struct PeriodicEvent {
  double x;      // position in [0, period)
  double omega;  // jump of the slope at x
};

struct PeriodicSpec {
  double period = 1.0;
  std::vector<PeriodicEvent> events;
  double anchor = 0.0;  // f(0)
};

// The period-p function with exactly the given events per period and
// f(0) = anchor, assembled as f(0) - sum_k omega_k pi^(c_k - 1, -c_k) after
// normalizing to period 1. Throws kInvalidSpec unless sum omega == 0.
TropicalPL build_periodic(const PeriodicSpec& spec, const Context& ctx = {});

// e_alpha; alpha in {0, +-1} throws kInvalidParameters.
TropicalPL make_exponential(double alpha);

// omega of e_c at 0: 1 - 1/c for |c| > 1, (1 - c)/c for 0 < |c| < 1.
double exponential_jump(double c);

struct BasisTerm {
  std::string generator;  // "e", "e-reflected", "linear", "periodic", ...
  double shift;
  double coefficient;
};

struct UltraDiscreteSolution {
  int order = 1;
  double c = 0.0;
  std::vector<BasisTerm> basis;
  TropicalPL assembled;
  std::vector<std::string> notes;
};

// y(x+1) = c y(x) with the given events in [0,1):
//   y = sum_j (omega_j / omega_{e_c}(0)) e_c(x - x_j).
// c in {0, +-1} throws kInvalidParameters with a note on where that case is
// handled instead.
UltraDiscreteSolution solve_first_order(double c,
                                        const std::vector<PeriodicEvent>& events);

struct TrigTerm {
  int which;  // 1 or 2
  double shift;
  double coefficient;
};

// Mode data for y(x+1) + y(x-1) = c y(x). Only the fields of the case
// selected by c may be populated.
struct SecondOrderData {
  // c == 2: linear * x + periodic, periodic 1-periodic.
  double linear = 0.0;
  TropicalPL periodic;
  bool has_periodic = false;
  // c == -2: sum_j (-1)^[x - x_j] Xi_j(x), Xi_j 1-periodic with Xi_j(x_j) = 0.
  std::vector<std::pair<double, TropicalPL>> anti;
  // |c| > 2: sum alpha_j e_a(x - y_j) + sum beta_j e_a(-x + x_j), |a| > 1.
  std::vector<std::pair<double, double>> forward;   // (y_j, alpha_j)
  std::vector<std::pair<double, double>> backward;  // (x_j, beta_j)
  // |c| < 2: sum coefficient * y_which(x - shift), theta = arccos(c/2).
  std::vector<TrigTerm> trig;
};

UltraDiscreteSolution solve_second_order(double c, const SecondOrderData& data,
                                         const Context& ctx = {});

// Root of lambda^2 - c lambda + 1 = 0 with |a| > 1; requires |c| > 2.
double dominant_root(double c);

// The 3-periodic solution of y(x+1) + y(x-1) = -y(x) built from the tent
// Delta(x) = min(x, 1/3 - x) on [0, 1/3]:
//   -Delta(x) on [0,1/3], 0 on [1/3,2/3], -Delta(x-2/3) on [2/3,1],
//   Delta(x-1) on [1,4/3], 0 on [4/3,8/3], Delta(x-8/3) on [8/3,3].
UltraDiscreteSolution delta_solution_c_minus_one();

// y1 / y2 with k = [x], t = x - k, C = cos(theta), S = sin(theta):
//   y1 = cos(theta k) t + (cos(theta k)(C-1) + sin(theta k) S) / (2(1-C))
//   y2 = sin(theta k) t + (sin(theta k)(C-1) - cos(theta k) S) / (2(1-C))
// Both solve the second-order equation with c = 2 cos(theta).
TropicalPL make_trig_solution(double theta, int which);

// max over integers n in [n_lo, n_hi] of |y(n-) - y(n+)| computed from the
// cell formula on both sides.
double trig_continuity_gap(double theta, int which, int n_lo, int n_hi);

struct SolutionResidual {
  double max_abs;
  double sup_abs_y;
  std::size_t points;
};

// Residual of the solution's equation over the knots of y, y(.+1), y(.-1)
// in [lo, hi] plus `per_unit` uniform points per unit length.
SolutionResidual solution_residual(const UltraDiscreteSolution& sol,
                                   double lo = -20.0, double hi = 20.0,
                                   int per_unit = 1000, const Context& ctx = {});

// f(x) g(x+1) - f(x+1) g(x).
double casoratian_2x2(const TropicalPL& f, const TropicalPL& g, double x);

struct EventCensus {
  std::vector<BreakpointEvent> poles;
  std::vector<BreakpointEvent> roots;
};

// Events with lo <= x < hi.
EventCensus event_census(const TropicalPL& f, double lo, double hi,
                         const Context& ctx = {});

struct DecompositionProbe {
  int basis_size;
  int samples;
  double rms_residual;
  double max_residual;
  std::vector<double> coefficients;
};

// Least-squares fit of the c = -1 Delta solution on [0, 3] by shifts of y1
// and y2 (theta = 2 pi / 3) over `shifts`. Reports the fit quality only.
DecompositionProbe probe_delta_decomposition(const std::vector<double>& shifts,
                                             int samples_per_unit = 200);

}  // namespace tropnev

#endif  // TROPNEV_SPECIAL_FUNCTIONS_HPP_
