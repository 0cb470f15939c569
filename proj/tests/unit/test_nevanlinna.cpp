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

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/random_instances.hpp"
#include "tropnev/special_functions.hpp"

namespace tropnev {
namespace {

TropicalPL minus_abs() { return TropicalPL::finite({{0.0, 0.0}}, 1.0, -1.0); }

TEST_CASE("proximity examples") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.1, 5), b = rng.uniform(0.1, 5);
    const double r = b / a + rng.uniform(0, 10);
    CHECK(proximity(TropicalPL::affine(a, b), r) == doctest::Approx(a * r / 2 + b / 2));
  }
  for (double r : {0.5, 3.0, 40.0}) CHECK(proximity(minus_abs(), r) == 0.0);
  const TropicalPL e2 = make_exponential(2.0);
  for (int m = 0; m < 12; ++m) {
    for (double eps : {0.0, 0.3, 0.9}) {
      const double closed =
          0.5 * (std::pow(2.0, m) * (eps + 1.0) + std::pow(2.0, -m - 1) * (1.0 - eps + 1.0));
      CHECK(proximity(e2, m + eps) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("pole counts") {
  CHECK(count_poles(minus_abs(), 1.0) == 2.0);
  CHECK(count_poles(minus_abs(), 0.0) == 0.0);
  const TropicalPL neg_pi = negate(make_pi(-1.0, -1.0));
  for (double t : {0.5, 1.5, 2.25, 7.9, 30.1}) {
    CHECK(count_poles(neg_pi, t) == doctest::Approx(2 * std::floor(t) + 1));
  }
  // Poles of -e_alpha, alpha < -1, sit at the even integers.
  for (double alpha : {-2.0, -3.0}) {
    const TropicalPL f = negate(make_exponential(alpha));
    for (int l = 0; l < 6; ++l) {
      const double t = 2.0 * l + 1.0;
      const double a2 = alpha * alpha;
      const double closed = (1.0 - 1.0 / alpha) *
                            (a2 / (a2 - 1.0) * std::pow(alpha, 2 * l) +
                             std::pow(alpha, -2 * l) / (1.0 - a2));
      CHECK(count_poles(f, t) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("counting function examples") {
  CHECK(counting(minus_abs(), 3.0) == 3.0);
  const TropicalPL neg_pi = negate(make_pi(-1.0, -1.0));
  for (double r : {3.3, 10.0, 57.5, 200.25}) {
    const double k = std::floor(r);
    const double floor_integral = k * (k - 1) / 2 + k * (r - k);
    CHECK(counting(neg_pi, r) == doctest::Approx(floor_integral + r / 2).epsilon(1e-12));
    CHECK(std::abs(counting(neg_pi, r) - r * r / 2) <= r + 1);
  }
}

TEST_CASE("counting function against quadrature of the pole count") {
  Rng rng(19);
  int with_poles = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const TropicalPL f = random_finite_pl(rng);
    const double r = rng.uniform(1, 15);
    const auto ev = breakpoints_in(f, -r, r);
    double mass = 0;
    for (const auto& e : ev) mass += e.kind == EventKind::kPole ? e.tau : 0.0;
    if (mass > 0) ++with_poles;
    const int panels = 10000;
    const double quad = 0.5 * oracle::trapezoid([&](double t) { return count_poles(f, t); }, r, panels);
    // The trapezoid rule misses at most tau * h / 2 per jump of n.
    const double bound = 0.5 * mass * (r / panels) + 1e-12;
    CHECK(std::abs(counting(f, r) - quad) <= bound);
  }
  CHECK(with_poles > 20);
}

TEST_CASE("characteristic closed forms") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.1, 5), b = rng.uniform(0.1, 5);
    const TropicalPL f = TropicalPL::affine(a, b);
    for (double r : {0.25 * b / a, 0.9 * b / a, b / a + 1.0, 3.0 * b / a + 10.0}) {
      const double expected = r < b / a ? b : a * r / 2 + b / 2;
      CHECK(characteristic_value(f, r) == doctest::Approx(expected));
    }
    const double c = rng.uniform(-10, 10);
    CHECK(characteristic_value(TropicalPL::affine(c, 0.0), 7.0) ==
          doctest::Approx(std::abs(c) * 3.5));
  }
  const TropicalPL e2 = make_exponential(2.0);
  for (int m = 1; m < 10; ++m) {
    const NevanlinnaSample s = characteristic(e2, m);
    CHECK(s.N == 0.0);
    CHECK(s.T == doctest::Approx(0.5 * (std::pow(2.0, m) + std::pow(2.0, -m))));
    CHECK(s.T == s.m + s.N);
  }
}

TEST_CASE("Jensen identity") {
  const VerificationReport rep = verify_jensen(minus_abs(), 3.0);
  CHECK(rep.pass);
  CHECK(rep.slack[0] == 0.0);
  CHECK(verify_jensen(make_exponential(-0.5), 7.3).pass);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> radii;
    for (int i = 0; i < 5; ++i) radii.push_back(rng.uniform(0.1, 30));
    CHECK(verify_jensen(random_wrapped_pl(rng), radii).pass);
  }
}

TEST_CASE("Poisson-Jensen formula") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const TropicalPL f = random_finite_pl(rng);
    const double r = rng.uniform(0.5, 15);
    // At x = 0 the right-hand side is the Jensen formula.
    const double jensen = 0.5 * (f(r) + f(-r)) + counting(f, r) - counting(negate(f), r);
    CHECK(poisson_jensen_rhs(f, r, 0.0) == doctest::Approx(jensen).epsilon(1e-12));
    const double x = rng.uniform(-r, r);
    CHECK(verify_poisson_jensen(f, r, x).pass);
  }
  const TropicalPL g = TropicalPL::affine(-2.5, 4.0);
  for (double x : {-3.0, 0.0, 1.7}) {
    const double interp = 0.5 * (g(5) + g(-5)) + x / 10.0 * (g(5) - g(-5));
    CHECK(poisson_jensen_rhs(g, 5.0, x) == doctest::Approx(interp));
  }
  CHECK(verify_poisson_jensen(make_pi(-1.0, -2.0), 4.7, 1.3).pass);
  CHECK_THROWS_AS(verify_poisson_jensen(g, 2.0, 2.0), Error);
}

TEST_CASE("pole and root floors") {
  CHECK(pole_floor(TropicalPL::affine(1, 0), -5, 5) == kNoEvents);
  CHECK(pole_floor(minus_abs(), -5, 5) == 0.0);
  CHECK(root_floor(negate(minus_abs()), -5, 5) == 0.0);
  CHECK(root_floor(make_pi(-1.0, -1.0), -5, 5) == doctest::Approx(0.0));
  // Classify the integer knots of e_{-1/2} from the cell formula alone.
  const TropicalPL eb = make_exponential(-0.5);
  double poles = kNoEvents, roots = kNoEvents;
  for (int m = -9; m <= 9; ++m) {
    const double h = 1e-3;
    const double left = (oracle::e(-0.5, m) - oracle::e(-0.5, m - h)) / h;
    const double right = (oracle::e(-0.5, m + h) - oracle::e(-0.5, m)) / h;
    double& floor = right < left ? poles : roots;
    floor = std::min(floor, oracle::e(-0.5, m));
  }
  CHECK(pole_floor(eb, -9, 9) == doctest::Approx(poles));
  CHECK(root_floor(eb, -9, 9) == doctest::Approx(roots));
}

TEST_CASE("growth estimates") {
  const GrowthEstimate p = estimate_growth(negate(make_pi(-1.0, -1.0)), 10, 200, 40);
  CHECK(std::abs(p.fitted_order - 2.0) <= 0.1);
  CHECK_FALSE(p.order_infinite);
  const GrowthEstimate e = estimate_growth(make_exponential(2.0), 5, 60, 40);
  CHECK(std::abs(e.fitted_hyper_order - 1.0) <= 0.05);
  CHECK(e.order_infinite);
  const GrowthEstimate a = estimate_growth(TropicalPL::affine(2.0, 1.0), 10, 1000, 40);
  CHECK(std::abs(a.fitted_order - 1.0) <= 0.05);
  CHECK_FALSE(a.order_infinite);
  CHECK_THROWS_AS(estimate_growth(TropicalPL::affine(1, 0), 1, 10, 4), Error);
}

TEST_CASE("property: N and T are non-decreasing in r") {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const TropicalPL f = random_wrapped_pl(rng);
    const auto rows = sweep(f, radius_grid(0.1, 20, 60, false));
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].N >= rows[i - 1].N - 1e-12 * std::max(1.0, rows[i].N));
      CHECK(rows[i].T >= rows[i - 1].T - 1e-12 * std::max(1.0, rows[i].T));
    }
  }
}

TEST_CASE("property: pole count bounded by the counting function") {
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const TropicalPL f = random_finite_pl(rng);
    for (double k : {1.5, 2.0, 4.0}) {
      const double r = rng.uniform(0.1, 10);
      CHECK(count_poles(f, r) <= 2 * counting(f, k * r) / ((k - 1) * r) + 1e-9);
    }
  }
}

TEST_CASE("property: first main theorem and its band") {
  Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const TropicalPL f = random_finite_pl(rng);
    const double a = rng.uniform(-8, 8);
    const double r = rng.uniform(0.1, 15);
    const TropicalPL g = negate(tropical_max(f, TropicalPL::constant(a)));
    const double lhs = characteristic_value(g, r);
    const double rhs = characteristic_value(f, r) + std::max(a, 0.0) - std::max(f(0), a);
    CHECK(lhs <= rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
    if (a < pole_floor(f, -r, r)) {
      const double band = lhs - characteristic_value(f, r) + std::max(f(0), a);
      CHECK(band >= -1e-9 * std::max(1.0, std::abs(lhs)));
      CHECK(band <= std::max(a, 0.0) + 1e-9 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("property: elementary functional inequalities") {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const TropicalPL f = random_finite_pl(rng), g = random_finite_pl(rng);
    const double r = rng.uniform(0.1, 15), alpha = rng.uniform(0, 4);
    const TropicalPL fg = tropical_plus(f, g);
    CHECK(proximity(tropical_scale(f, alpha), r) == doctest::Approx(alpha * proximity(f, r)));
    CHECK(proximity(fg, r) <= proximity(f, r) + proximity(g, r) + 1e-9);
    CHECK(counting(fg, r) <= counting(f, r) + counting(g, r) + 1e-9);
    CHECK(characteristic_value(fg, r) <=
          characteristic_value(f, r) + characteristic_value(g, r) + 1e-9);
    const TropicalPL upper = tropical_max(f, g);
    CHECK(proximity(f, r) <= proximity(upper, r) + 1e-12);
  }
}

TEST_CASE("counting is not monotone under f <= g") {
  // Two peaks below a single peak.
  const TropicalPL g = TropicalPL::finite({{0.0, 0.0}}, 1.0, -1.0);
  const TropicalPL f = TropicalPL::finite({{-1.0, -1.0}, {0.0, -2.0}, {1.0, -1.0}}, 1.0, -1.0);
  for (int i = 0; i <= 200; ++i) {
    const double x = -10 + i * 0.1;
    CHECK(f(x) <= g(x));
  }
  CHECK(counting(f, 5.0) > counting(g, 5.0));
}

TEST_CASE("sweep CSV layout") {
  std::ostringstream out;
  write_sweep_csv(out, sweep(minus_abs(), {1.0, 3.0}));
  CHECK(out.str() == "r,m,n,N,T\n1,0,2,1,1\n3,0,2,3,3\n");
}

}  // namespace
}  // namespace tropnev
