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

// Verifiers for finite-radius inequalities of tropical value distribution:
// the first main theorem, the shift-quotient bound, the second main
// inequality with its lemma chain, and the characteristic sandwich for
// products of truncations f (+) a_k.
//
// Throughout, "1o (/) g" is -g and "f (+) a" is max(f, a).

#ifndef TROPNEV_INEQUALITIES_HPP_
#define TROPNEV_INEQUALITIES_HPP_

#include <span>
#include <string>
#include <vector>

#include "tropnev/context.hpp"
#include "tropnev/report.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

// kPrinted checks the bound in its usual stated shape. kRepaired uses
// the constant that the derivation actually supports; the two coincide on
// the inputs where the stated shape is valid (see README).
enum class BoundForm { kPrinted, kRepaired };

struct SmtInstance {
  TropicalPL f;
  double c = 1.0;
  std::vector<double> targets;
  double R = 1.0;
  std::string id;
};

// L_f on the padded window [-R-|c|, R+|c|].
double padded_pole_floor(const TropicalPL& f, double R, double c,
                         const Context& ctx = {});

// Validates c > 0, R > 0, nonempty distinct targets, max target < padded
// L_f. Throws kPreconditionViolated otherwise.
SmtInstance make_smt_instance(TropicalPL f, double c, std::vector<double> targets,
                              double R, std::string id = {},
                              const Context& ctx = {});

// First main theorem: T(r, -(f (+) a)) <= T(r,f) + max(a,0) - max(f(0),a).
// When a < L_f on [-r, r] a second part checks 0 <= eps(r,a) <= max(a,0).
VerificationReport verify_first_main(const TropicalPL& f, double a,
                                     const std::vector<double>& radii,
                                     const Context& ctx = {});

// m(r, f(x+c) - f(x)) <= K (T(alpha (r+|c|), f) + s f(0)/2),
// K = 12|c| / ((alpha-1)(r+|c|)), s = +1 printed, -1 repaired.
VerificationReport verify_shift_quotient_bound(
    const TropicalPL& f, double c, double alpha,
    const std::vector<double>& radii, BoundForm form = BoundForm::kPrinted,
    const Context& ctx = {});

struct SecondMainTerms {
  double qT;
  double sum_N_targets;
  double T_shift;
  double N_neg_shift;
  double m_quotient;
  double f_c;
  double max_const;
  double sum_f0_targets;
  double lhs;
  double rhs;
};

SecondMainTerms second_main_terms(const SmtInstance& inst, double r,
                                  BoundForm form = BoundForm::kPrinted,
                                  const Context& ctx = {});

// The second main inequality
//   qT(r,f) <= sum_j N(r, -(f (+) a_j)) + T(r, f(x+c)) - N(r, -f(x+c))
//              + m(r, f(x+c) - f(x)) - f(c) + C + sum_j max(f(0), a_j)
// with C = (2q-1) max_j max(a_j,0) printed, or q A + (q-1) B repaired, where
// A = max(max a, 0) and B = max(-min a, 0). Radii above inst.R are rejected.
VerificationReport verify_second_main(const SmtInstance& inst,
                                      const std::vector<double>& radii,
                                      BoundForm form = BoundForm::kPrinted,
                                      const Context& ctx = {});

// The same estimate rearranged as a sum of proximities:
//   sum_k m(r, -(f (+) a_k)) <= m(r, -f(x+c))
//       + m(r, max_k (f(x+c) - (f (+) a_k))) + C + sum_k max(a_k, 0).
VerificationReport verify_second_main_proximity_form(
    const SmtInstance& inst, const std::vector<double>& radii,
    BoundForm form = BoundForm::kPrinted, const Context& ctx = {});

// Raw trend quantities of the asymptotic second main theorem; no verdict.
struct SmtTrendRow {
  double r;
  double lhs;  // (q-1) T(r,f)
  double rhs;  // sum_j N(r, -(f (+) a_j)) - N(r, -f)
};
std::vector<SmtTrendRow> second_main_trend(const SmtInstance& inst,
                                           const std::vector<double>& radii,
                                           const Context& ctx = {});

// N(r, -f(x+c)) + 2N(r,f) - N(r, f(x+c)); may be negative.
double n1_counting(const TropicalPL& f, double c, double r,
                   const Context& ctx = {});

// sum_k max(x,a_k) >= min_k (max(x,a_k) + (p-1) a_k), up to rounding.
bool check_prod_sum_inequality(std::span<const double> a, double x);

// max{sum_k max(f,a_k), p max a} == p max(f, max a) to relative eps.
bool check_max_identity(double f_value, std::span<const double> a,
                        double eps = 1e-12);

// Product F = sum_k (f (+) a_k) of truncations.
TropicalPL truncation_product(const TropicalPL& f, std::span<const double> a);

// Upper bound T(r,F) <= pT(r,f) + sum max(a_k,0); when max a < L_f on
// [-r,r], lower bound T(r,F) >= pT(r,f) - p max max(a_k,0); when in addition
// all a_k <= 0, equality T(r,F) = pT(r,f). Parts are named "upper", "lower",
// "equality"; the last two are skipped (noted) when hypotheses fail.
VerificationReport verify_characteristic_sandwich(
    const TropicalPL& f, std::span<const double> a,
    const std::vector<double>& radii, const Context& ctx = {});

// Three independent parts:
//   "reciprocal-split":   m(r, -F) <= T(r, f(x+c)) - N(r, -f(x+c))
//                                     + m(r, f(x+c) - F) - f(c)
//   "prod-sum-transfer":  m(r, f(x+c) - F) <= m(r, max_k (f(x+c) - (f (+) a_k)))
//                                     + (p-1) K
//   "counting-subadditivity": N(r, -F) <= sum_k N(r, -(f (+) a_k))
// with K = max(max a, 0) printed or max(-min a, 0) repaired.
VerificationReport verify_lemma_chain(const TropicalPL& f, double c,
                                      std::span<const double> a,
                                      const std::vector<double>& radii,
                                      BoundForm form = BoundForm::kPrinted,
                                      const Context& ctx = {});

}  // namespace tropnev

#endif  // TROPNEV_INEQUALITIES_HPP_
