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

// Nevanlinna functionals of tropical meromorphic functions.
//
//   m(r,f) = (f+(r) + f+(-r)) / 2
//   n(t,f) = sum of tau over poles b with |b| < t
//   N(r,f) = (1/2) sum_{|b|<r} tau(b) (r - |b|)
//   T(r,f) = m(r,f) + N(r,f)
//
// Poles on the boundary |b| = r are excluded everywhere.

#ifndef TROPNEV_NEVANLINNA_HPP_
#define TROPNEV_NEVANLINNA_HPP_

#include <iosfwd>
#include <limits>
#include <vector>

#include "tropnev/context.hpp"
#include "tropnev/report.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

struct NevanlinnaSample {
  double r;
  double m;
  double n_poles;
  double N;
  double T;
};

double proximity(const TropicalPL& f, double r);
double count_poles(const TropicalPL& f, double t, const Context& ctx = {});
double counting(const TropicalPL& f, double r, const Context& ctx = {});
double characteristic_value(const TropicalPL& f, double r,
                            const Context& ctx = {});
NevanlinnaSample characteristic(const TropicalPL& f, double r,
                                const Context& ctx = {});

// |T(r,f) - T(r,-f) - f(0)| against verify_tol * max(1, T(r,f)).
VerificationReport verify_jensen(const TropicalPL& f,
                                 const std::vector<double>& radii,
                                 const Context& ctx = {});
VerificationReport verify_jensen(const TropicalPL& f, double r,
                                 const Context& ctx = {});

// Right-hand side of the Poisson-Jensen formula on (-r, r).
double poisson_jensen_rhs(const TropicalPL& f, double r, double x,
                          const Context& ctx = {});
// Compares f(x) with the formula, tolerance verify_tol * max(1, |f(x)|).
VerificationReport verify_poisson_jensen(const TropicalPL& f, double r,
                                         double x, const Context& ctx = {});

inline constexpr double kNoEvents = std::numeric_limits<double>::infinity();

// L_f and l_f on [lo, hi]: the least value of f over poles (roots) there, or
// kNoEvents when there are none.
double pole_floor(const TropicalPL& f, double lo, double hi,
                  const Context& ctx = {});
double root_floor(const TropicalPL& f, double lo, double hi,
                  const Context& ctx = {});

std::vector<double> radius_grid(double r_min, double r_max, int points,
                                bool geometric);

struct GrowthEstimate {
  // Max of log T / log r over the tail of the grid (limsup proxy), >= 0.
  double order = 0.0;
  // Least-squares slope of log T against log r over the tail.
  double fitted_order = 0.0;
  // Set when fitted_hyper_order >= kInfiniteOrderHyperThreshold.
  bool order_infinite = false;
  // False when T <= 1 on the whole tail; the hyper fields are then 0.
  bool hyper_defined = false;
  double hyper_order = 0.0;
  double fitted_hyper_order = 0.0;
  double tail_fraction = 0.5;
  std::vector<double> grid;
  std::vector<double> T;
};

inline constexpr double kInfiniteOrderHyperThreshold = 0.5;

GrowthEstimate estimate_growth(const TropicalPL& f, double r_min, double r_max,
                               int points, double tail_fraction = 0.5,
                               const Context& ctx = {});

std::vector<NevanlinnaSample> sweep(const TropicalPL& f,
                                    const std::vector<double>& radii,
                                    const Context& ctx = {});

// Header `r,m,n,N,T`, shortest round-trip decimal for every value.
void write_sweep_csv(std::ostream& out,
                     const std::vector<NevanlinnaSample>& samples);

}  // namespace tropnev

#endif  // TROPNEV_NEVANLINNA_HPP_
