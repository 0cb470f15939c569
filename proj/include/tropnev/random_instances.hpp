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

// Seeded generators for randomized verification suites. Every instance is
// valid for its verifier by construction.

#ifndef TROPNEV_RANDOM_INSTANCES_HPP_
#define TROPNEV_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <random>

#include "tropnev/diff_poly.hpp"
#include "tropnev/inequalities.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

// mt19937_64 with a fixed mapping to doubles, so that a seed gives the same
// stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [a, b).
  double uniform(double a, double b) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }
  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p) { return uniform(0.0, 1.0) < p; }

 private:
  std::mt19937_64 gen_;
};

struct RandomPLOptions {
  int min_breakpoints = 3;
  int max_breakpoints = 12;
  double span = 10.0;   // breakpoints in [-span, span)
  double slope = 5.0;   // slopes in [-slope, slope)
  double value = 5.0;   // value at the first breakpoint in [-value, value)
};

TropicalPL random_finite_pl(Rng& rng, const RandomPLOptions& opts = {});

// A random finite function plus, with probability 1/4 each, a scaled
// periodic sawtooth or a scaled tropical exponential.
TropicalPL random_wrapped_pl(Rng& rng);

// f from random_wrapped_pl, c in [0.1, 3), 1..4 distinct targets drawn below
// padded L_f - 0.1 (below a uniform level in [-5,5) when f has no poles).
SmtInstance random_smt_instance(Rng& rng, double R = 20.0,
                                const Context& ctx = {});

struct PolyOptions {
  // Allow negative exponents and indices of negative norm.
  bool laurent = true;
  int max_extra_shifts = 2;
  int max_terms = 4;
};

struct PolyInstance {
  DifferenceLaurentPolynomial P;
  TropicalPL f;
};

// Random P with PL coefficients and a random finite f.
PolyInstance random_poly_instance(Rng& rng, const PolyOptions& opts = {});

struct MohonkoInstance {
  DifferenceLaurentPolynomial P;
  TropicalPL f;
  double a;
};

// P(x, f) == 0 by construction: a_lambda = -sum_j lambda_j f(x+c_j) - h_lambda
// with h_lambda = max(0, g_lambda) >= 0 and h = 0 on the first term. Every
// norm satisfies |norm| >= 0.2.
MohonkoInstance random_mohonko_instance(Rng& rng, const PolyOptions& opts = {});

struct ClunieInstance {
  DifferenceLaurentPolynomial H;
  DifferenceLaurentPolynomial P;
  DifferenceLaurentPolynomial Q;
  TropicalPL f;
};

// Q = poly_product(H, P) with deg P == 0, so H + P == Q identically and
// deg Q == deg H.
ClunieInstance random_clunie_instance(Rng& rng, const PolyOptions& opts = {});

}  // namespace tropnev

#endif  // TROPNEV_RANDOM_INSTANCES_HPP_
