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

// Tropical difference Laurent polynomials
//
//   P(x, f) = max_{lambda in Lambda} ( a_lambda(x) + sum_j lambda_j f(x + c_j) )
//
// with real (possibly negative) exponents lambda_j and piecewise-linear
// coefficients a_lambda, plus verifiers for the proximity estimates that
// relate m(r, P(x,f)) to m(r, f).

#ifndef TROPNEV_DIFF_POLY_HPP_
#define TROPNEV_DIFF_POLY_HPP_

#include <cstddef>
#include <vector>

#include "tropnev/context.hpp"
#include "tropnev/inequalities.hpp"
#include "tropnev/report.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

struct PolyTerm {
  std::vector<double> lambda;
  TropicalPL coeff;
};

// Invariants: shifts[0] == 0, the other shifts are distinct and >= 0, every
// lambda has shifts.size() entries, Lambda is nonempty with pairwise distinct
// multi-indices.
class DifferenceLaurentPolynomial {
 public:
  DifferenceLaurentPolynomial(std::vector<double> shifts,
                              std::vector<PolyTerm> terms);

  const std::vector<double>& shifts() const { return shifts_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<double> shifts_;
  std::vector<PolyTerm> terms_;
};

// ||lambda|| = sum of entries.
double norm(const std::vector<double>& lambda);

double eval_poly(const DifferenceLaurentPolynomial& P, const TropicalPL& f,
                 double x);
// x -> P(x, f) as a combinator expression.
TropicalPL poly_as_function(const DifferenceLaurentPolynomial& P,
                            const TropicalPL& f);
// x -> max_lambda sum_j s * lambda_j (f(x+c_j) - f(x)), s = +1 or -1, over
// the given subset of term indices (all terms when empty).
TropicalPL shift_ratio_max(const DifferenceLaurentPolynomial& P,
                           const TropicalPL& f, double s,
                           const std::vector<std::size_t>& subset = {});

struct PolyStats {
  double degree;
  double min_norm;
  TropicalPL Omega;
  TropicalPL OmegaBar;
  TropicalPL Upsilon;
  // Indices of the terms with ||lambda|| == degree.
  std::vector<std::size_t> top_terms;
};

PolyStats poly_stats(const DifferenceLaurentPolynomial& P);

// Index set is the Minkowski sum over the union of shifts; coefficients add,
// and colliding indices merge by max.
DifferenceLaurentPolynomial poly_product(const DifferenceLaurentPolynomial& P,
                                         const DifferenceLaurentPolynomial& Q);

struct GridResidual {
  double max_abs;
  double scale;
  bool zero;
};

// max |g| over every knot of g in [lo, hi] plus a uniform grid of
// `per_unit` points per unit length; zero iff max_abs <= eps * max(1, scale)
// where scale is the larger of `scale_hint` and max |g| on the grid.
GridResidual grid_residual(const TropicalPL& g, double lo, double hi,
                           double scale_hint, int per_unit = 1000,
                           const Context& ctx = {});

// Proposition-style lower bound for the term with index term_index:
// ||lambda|| m(r,f) <= sum_j {lambda_j+ m(r, f - f_j) + lambda_j- m(r, f_j - f)}
//                      + m(r, -a_lambda) + m(r, P(x,f)).
VerificationReport verify_ptof(const DifferenceLaurentPolynomial& P,
                               const TropicalPL& f, std::size_t term_index,
                               const std::vector<double>& radii,
                               const Context& ctx = {});

// |m(r,P) - m(r, deg(P) f)| <= max{A, B},
//   A = m(r, Omega) + m(r, max_lambda sum lambda_j (f_j - f)),
//   B = m(r, OmegaBar) + m(r, max_lambda sum -lambda_j (f_j - f)).
// kRepaired adds m(r, max_lambda ||lambda|| f - deg(P) f) to A, which is
// zero wherever f >= 0 or all norms equal deg(P).
VerificationReport verify_valiron_mohonko(const DifferenceLaurentPolynomial& P,
                                          const TropicalPL& f,
                                          const std::vector<double>& radii,
                                          BoundForm form = BoundForm::kPrinted,
                                          const Context& ctx = {});

// For a solution of P(x,f) = 0 on [-max r, max r], both m(r,f) and
// m(r, -(f (+) a)) are bounded by
//   max_lambda |1/||lambda||| (m(r,Omega) + m(r,OmegaBar))
//   + sum_j max_lambda |lambda_j/||lambda||| (m(r, f_j - f) + m(r, f - f_j)).
// Throws kPreconditionViolated on a zero-norm index and kNotASolution when
// the grid check fails.
VerificationReport verify_mohonko(const DifferenceLaurentPolynomial& P,
                                  const TropicalPL& f, double a,
                                  const std::vector<double>& radii,
                                  const Context& ctx = {});

// For H(x,f) + P(x,f) = Q(x,f) with deg P >= 0 and deg Q <= deg H, writing
// D_S(x) = max_{lambda in S} sum_j lambda_j (f(x+c_j) - f(x)):
//   m(r,P) <= m(r,Omega[P]) + m(r,Omega[Q]) + m(r, -Upsilon[H])
//             + m(r, D_{Lambda[P]}) + m(r, D_{Lambda[Q]}) + m(r, D_{-top(H)})
// where top(H) are the indices of H of maximal norm.
// kRepaired adds m(r, kappa (-f)), kappa = max(0, -min_{Lambda[P]} ||lambda||).
VerificationReport verify_clunie(const DifferenceLaurentPolynomial& H,
                                 const DifferenceLaurentPolynomial& P,
                                 const DifferenceLaurentPolynomial& Q,
                                 const TropicalPL& f,
                                 const std::vector<double>& radii,
                                 BoundForm form = BoundForm::kPrinted,
                                 const Context& ctx = {});

}  // namespace tropnev

#endif  // TROPNEV_DIFF_POLY_HPP_
