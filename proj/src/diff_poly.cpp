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

#include "tropnev/diff_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "tropnev/nevanlinna.hpp"

namespace tropnev {
namespace {

constexpr double kIndexTol = 1e-12;

bool same_index(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (std::abs(a[j] - b[j]) >
        kIndexTol * std::max({1.0, std::abs(a[j]), std::abs(b[j])})) {
      return false;
    }
  }
  return true;
}

bool same_norm(double a, double b) {
  return std::abs(a - b) <= kIndexTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// sum_j lambda_j f(x + c_j), skipping zero exponents.
TropicalPL monomial(const std::vector<double>& shifts,
                    const std::vector<double>& lambda, const TropicalPL& f) {
  std::vector<TropicalPL> parts;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    if (lambda[j] == 0.0) continue;
    const TropicalPL fj = shifts[j] == 0.0 ? f : shift(f, shifts[j]);
    parts.push_back(tropical_scale(fj, lambda[j]));
  }
  return tropical_sum(parts);
}

double max_radius(const std::vector<double>& radii) {
  if (radii.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "no radii given");
  }
  double w = 0.0;
  for (double r : radii) {
    if (!(r > 0.0)) {
      throw Error(ErrorCode::kPreconditionViolated, "radius must be > 0");
    }
    w = std::max(w, r);
  }
  return w;
}

// Largest |term| of P at x, used to scale the zero test.
double poly_magnitude(const DifferenceLaurentPolynomial& P, const TropicalPL& f,
                      double x) {
  double big = 0.0;
  std::vector<double> fx(P.shifts().size());
  for (std::size_t j = 0; j < fx.size(); ++j) fx[j] = f(x + P.shifts()[j]);
  for (const PolyTerm& t : P.terms()) {
    double s = std::abs(t.coeff(x));
    for (std::size_t j = 0; j < fx.size(); ++j) s += std::abs(t.lambda[j] * fx[j]);
    big = std::max(big, s);
  }
  return big;
}

double magnitude_on_window(const DifferenceLaurentPolynomial& P,
                           const TropicalPL& f, double lo, double hi) {
  double big = 0.0;
  const int n = 257;
  for (int i = 0; i < n; ++i) {
    big = std::max(big, poly_magnitude(P, f, lo + (hi - lo) * i / (n - 1)));
  }
  return big;
}

}  // namespace

DifferenceLaurentPolynomial::DifferenceLaurentPolynomial(
    std::vector<double> shifts, std::vector<PolyTerm> terms)
    : shifts_(std::move(shifts)), terms_(std::move(terms)) {
  if (shifts_.empty() || shifts_[0] != 0.0) {
    throw Error(ErrorCode::kInvalidParameters, "shifts must start with c_0 = 0");
  }
  for (std::size_t j = 1; j < shifts_.size(); ++j) {
    require_finite(shifts_[j], "shift");
    if (shifts_[j] < 0.0) {
      throw Error(ErrorCode::kInvalidParameters, "shifts must be >= 0");
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (shifts_[k] == shifts_[j]) {
        throw Error(ErrorCode::kInvalidParameters, "shifts must be distinct");
      }
    }
  }
  if (terms_.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "index set must be nonempty");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].lambda.size() != shifts_.size()) {
      throw Error(ErrorCode::kInvalidParameters,
                  "multi-index length must match the number of shifts");
    }
    for (double v : terms_[i].lambda) require_finite(v, "exponent");
    for (std::size_t k = 0; k < i; ++k) {
      if (same_index(terms_[i].lambda, terms_[k].lambda)) {
        throw Error(ErrorCode::kInvalidParameters,
                    "multi-indices must be pairwise distinct");
      }
    }
  }
}

double norm(const std::vector<double>& lambda) {
  double s = 0.0;
  for (double v : lambda) s += v;
  return s;
}

double eval_poly(const DifferenceLaurentPolynomial& P, const TropicalPL& f,
                 double x) {
  std::vector<double> fx(P.shifts().size());
  for (std::size_t j = 0; j < fx.size(); ++j) fx[j] = f(x + P.shifts()[j]);
  double best = -std::numeric_limits<double>::infinity();
  for (const PolyTerm& t : P.terms()) {
    double v = t.coeff(x);
    for (std::size_t j = 0; j < fx.size(); ++j) {
      if (t.lambda[j] != 0.0) v += t.lambda[j] * fx[j];
    }
    best = std::max(best, v);
  }
  return best;
}

TropicalPL poly_as_function(const DifferenceLaurentPolynomial& P,
                            const TropicalPL& f) {
  std::vector<TropicalPL> terms;
  for (const PolyTerm& t : P.terms()) {
    terms.push_back(tropical_plus(t.coeff, monomial(P.shifts(), t.lambda, f)));
  }
  return tropical_max(terms);
}

TropicalPL shift_ratio_max(const DifferenceLaurentPolynomial& P,
                           const TropicalPL& f, double s,
                           const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> idx = subset;
  if (idx.empty()) {
    for (std::size_t i = 0; i < P.size(); ++i) idx.push_back(i);
  }
  std::vector<TropicalPL> parts;
  for (std::size_t i : idx) {
    const std::vector<double>& lambda = P.terms()[i].lambda;
    std::vector<TropicalPL> sum;
    for (std::size_t j = 1; j < P.shifts().size(); ++j) {
      if (lambda[j] == 0.0) continue;
      sum.push_back(tropical_scale(tropical_minus(shift(f, P.shifts()[j]), f),
                                   s * lambda[j]));
    }
    parts.push_back(tropical_sum(sum));
  }
  return tropical_max(parts);
}

PolyStats poly_stats(const DifferenceLaurentPolynomial& P) {
  PolyStats st;
  st.degree = -std::numeric_limits<double>::infinity();
  st.min_norm = std::numeric_limits<double>::infinity();
  std::vector<TropicalPL> coeffs;
  std::vector<TropicalPL> neg_coeffs;
  for (const PolyTerm& t : P.terms()) {
    const double n = norm(t.lambda);
    st.degree = std::max(st.degree, n);
    st.min_norm = std::min(st.min_norm, n);
    coeffs.push_back(t.coeff);
    neg_coeffs.push_back(negate(t.coeff));
  }
  std::vector<TropicalPL> top;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (same_norm(norm(P.terms()[i].lambda), st.degree)) {
      st.top_terms.push_back(i);
      top.push_back(P.terms()[i].coeff);
    }
  }
  st.Omega = tropical_max(coeffs);
  st.OmegaBar = tropical_max(neg_coeffs);
  st.Upsilon = tropical_max(top);
  return st;
}

DifferenceLaurentPolynomial poly_product(const DifferenceLaurentPolynomial& P,
                                         const DifferenceLaurentPolynomial& Q) {
  std::vector<double> shifts = P.shifts();
  for (double c : Q.shifts()) {
    if (std::find(shifts.begin(), shifts.end(), c) == shifts.end()) {
      shifts.push_back(c);
    }
  }
  std::sort(shifts.begin() + 1, shifts.end());
  auto embed = [&shifts](const DifferenceLaurentPolynomial& A,
                         const std::vector<double>& lambda) {
    std::vector<double> out(shifts.size(), 0.0);
    for (std::size_t j = 0; j < A.shifts().size(); ++j) {
      const auto pos = std::find(shifts.begin(), shifts.end(), A.shifts()[j]);
      out[static_cast<std::size_t>(pos - shifts.begin())] += lambda[j];
    }
    return out;
  };
  std::vector<PolyTerm> terms;
  for (const PolyTerm& p : P.terms()) {
    const std::vector<double> lp = embed(P, p.lambda);
    for (const PolyTerm& q : Q.terms()) {
      std::vector<double> lambda = embed(Q, q.lambda);
      for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] += lp[j];
      const TropicalPL coeff = tropical_plus(p.coeff, q.coeff);
      auto hit = std::find_if(terms.begin(), terms.end(), [&](const PolyTerm& t) {
        return same_index(t.lambda, lambda);
      });
      if (hit == terms.end()) {
        terms.push_back({std::move(lambda), coeff});
      } else {
        hit->coeff = tropical_max(hit->coeff, coeff);
      }
    }
  }
  return DifferenceLaurentPolynomial(std::move(shifts), std::move(terms));
}

GridResidual grid_residual(const TropicalPL& g, double lo, double hi,
                           double scale_hint, int per_unit, const Context& ctx) {
  GridResidual res{0.0, std::abs(scale_hint), true};
  auto visit = [&](double x) {
    const double v = std::abs(g(x));
    res.max_abs = std::max(res.max_abs, v);
  };
  for (double x : g.knots(lo, hi, ctx)) visit(x);
  const auto n = static_cast<long long>(std::ceil((hi - lo) * per_unit));
  for (long long i = 0; i <= n; ++i) {
    visit(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
  }
  res.scale = std::max(res.scale, res.max_abs);
  res.zero = res.max_abs <= ctx.eps * std::max(1.0, res.scale);
  return res;
}

VerificationReport verify_ptof(const DifferenceLaurentPolynomial& P,
                               const TropicalPL& f, std::size_t term_index,
                               const std::vector<double>& radii,
                               const Context& ctx) {
  if (term_index >= P.size()) {
    throw Error(ErrorCode::kInvalidParameters, "term index out of range");
  }
  const PolyTerm& term = P.terms()[term_index];
  const double n = norm(term.lambda);
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "selected multi-index must have positive norm");
  }
  VerificationReport rep = make_report("ptof", "");
  const TropicalPL Pf = poly_as_function(P, f);
  const TropicalPL neg_a = negate(term.coeff);
  std::vector<TropicalPL> down, up;
  for (std::size_t j = 0; j < P.shifts().size(); ++j) {
    const TropicalPL fj = shift(f, P.shifts()[j]);
    down.push_back(tropical_minus(f, fj));
    up.push_back(tropical_minus(fj, f));
  }
  for (double r : radii) {
    const double lhs = n * proximity(f, r);
    double rhs = proximity(neg_a, r) + proximity(Pf, r);
    for (std::size_t j = 0; j < P.shifts().size(); ++j) {
      const double lj = term.lambda[j];
      if (lj > 0.0) rhs += lj * proximity(down[j], r);
      if (lj < 0.0) rhs += -lj * proximity(up[j], r);
    }
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
  }
  return rep;
}

VerificationReport verify_valiron_mohonko(const DifferenceLaurentPolynomial& P,
                                          const TropicalPL& f,
                                          const std::vector<double>& radii,
                                          BoundForm form, const Context& ctx) {
  VerificationReport rep = make_report("valiron-mohonko", "");
  rep.append_note(form == BoundForm::kPrinted ? "form=printed" : "form=repaired");
  const PolyStats st = poly_stats(P);
  const TropicalPL Pf = poly_as_function(P, f);
  const TropicalPL deg_f = tropical_scale(f, st.degree);
  const TropicalPL d_plus = shift_ratio_max(P, f, 1.0);
  const TropicalPL d_minus = shift_ratio_max(P, f, -1.0);
  // max_lambda ||lambda|| f - deg(P) f, nonnegative.
  std::vector<TropicalPL> norm_gaps;
  for (const PolyTerm& t : P.terms()) {
    norm_gaps.push_back(tropical_scale(f, norm(t.lambda) - st.degree));
  }
  const TropicalPL gap = tropical_max(norm_gaps);
  if (st.min_norm < 0.0) rep.append_note("Laurent index with negative norm");
  for (double r : radii) {
    const double lhs = std::abs(proximity(Pf, r) - proximity(deg_f, r));
    double a = proximity(st.Omega, r) + proximity(d_plus, r);
    if (form == BoundForm::kRepaired) a += proximity(gap, r);
    const double b = proximity(st.OmegaBar, r) + proximity(d_minus, r);
    const double rhs = std::max(a, b);
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
  }
  return rep;
}

VerificationReport verify_mohonko(const DifferenceLaurentPolynomial& P,
                                  const TropicalPL& f, double a,
                                  const std::vector<double>& radii,
                                  const Context& ctx) {
  double inv_norm = 0.0;
  std::vector<double> shift_weight(P.shifts().size(), 0.0);
  bool weak_index = false;
  for (const PolyTerm& t : P.terms()) {
    const double n = norm(t.lambda);
    if (same_norm(n, 0.0)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "multi-index with zero norm");
    }
    if (std::abs(n) < 1.0) weak_index = true;
    inv_norm = std::max(inv_norm, std::abs(1.0 / n));
    for (std::size_t j = 0; j < t.lambda.size(); ++j) {
      shift_weight[j] = std::max(shift_weight[j], std::abs(t.lambda[j] / n));
    }
  }
  const double w = max_radius(radii);
  const TropicalPL Pf = poly_as_function(P, f);
  const GridResidual res =
      grid_residual(Pf, -w, w, magnitude_on_window(P, f, -w, w), 1000, ctx);
  if (!res.zero) {
    throw Error(ErrorCode::kNotASolution,
                "P(x,f) deviates from 0 by " + format_double(res.max_abs) +
                    " on [-" + format_double(w) + ", " + format_double(w) + "]");
  }

  VerificationReport rep = make_report("mohonko", "");
  if (weak_index) rep.append_note("some index has 0 < |norm| < 1");
  VerificationReport on_f = make_report("mohonko-f", "");
  VerificationReport on_trunc = make_report("mohonko-reciprocal", "");
  const PolyStats st = poly_stats(P);
  const TropicalPL neg_trunc = negate(tropical_max(f, TropicalPL::constant(a)));
  std::vector<TropicalPL> up, down;
  for (std::size_t j = 0; j < P.shifts().size(); ++j) {
    const TropicalPL fj = shift(f, P.shifts()[j]);
    up.push_back(tropical_minus(fj, f));
    down.push_back(tropical_minus(f, fj));
  }
  for (double r : radii) {
    double bound =
        inv_norm * (proximity(st.Omega, r) + proximity(st.OmegaBar, r));
    for (std::size_t j = 1; j < P.shifts().size(); ++j) {
      bound += shift_weight[j] * (proximity(up[j], r) + proximity(down[j], r));
    }
    const double mf = proximity(f, r);
    const double mt = proximity(neg_trunc, r);
    on_f.add_row(r, mf, bound, inequality_tol(ctx.verify_tol, mf, bound));
    on_trunc.add_row(r, mt, bound, inequality_tol(ctx.verify_tol, mt, bound));
  }
  rep.add_part(std::move(on_f));
  rep.add_part(std::move(on_trunc));
  return rep;
}

VerificationReport verify_clunie(const DifferenceLaurentPolynomial& H,
                                 const DifferenceLaurentPolynomial& P,
                                 const DifferenceLaurentPolynomial& Q,
                                 const TropicalPL& f,
                                 const std::vector<double>& radii,
                                 BoundForm form, const Context& ctx) {
  const PolyStats sh = poly_stats(H);
  const PolyStats sp = poly_stats(P);
  const PolyStats sq = poly_stats(Q);
  if (sp.degree < 0.0 && !same_norm(sp.degree, 0.0)) {
    throw Error(ErrorCode::kPreconditionViolated, "deg P must be >= 0");
  }
  if (sq.degree > sh.degree && !same_norm(sq.degree, sh.degree)) {
    throw Error(ErrorCode::kPreconditionViolated, "deg Q must be <= deg H");
  }
  const double w = max_radius(radii);
  const TropicalPL Hf = poly_as_function(H, f);
  const TropicalPL Pf = poly_as_function(P, f);
  const TropicalPL Qf = poly_as_function(Q, f);
  const double scale = std::max(
      {magnitude_on_window(H, f, -w, w) + magnitude_on_window(P, f, -w, w),
       magnitude_on_window(Q, f, -w, w)});
  const GridResidual res = grid_residual(tropical_minus(tropical_plus(Hf, Pf), Qf),
                                         -w, w, scale, 1000, ctx);
  if (!res.zero) {
    throw Error(ErrorCode::kNotASolution,
                "H + P - Q deviates from 0 by " + format_double(res.max_abs));
  }

  VerificationReport rep = make_report("clunie", "");
  rep.append_note(form == BoundForm::kPrinted ? "form=printed" : "form=repaired");
  if (sp.min_norm < 0.0) rep.append_note("P has an index with negative norm");
  const TropicalPL neg_upsilon = negate(sh.Upsilon);
  const TropicalPL d_p = shift_ratio_max(P, f, 1.0);
  const TropicalPL d_q = shift_ratio_max(Q, f, 1.0);
  const TropicalPL d_h = shift_ratio_max(H, f, -1.0, sh.top_terms);
  const double kappa = std::max(0.0, -sp.min_norm);
  const TropicalPL neg_part = tropical_scale(negate(f), kappa);
  for (double r : radii) {
    const double lhs = proximity(Pf, r);
    double rhs = proximity(sp.Omega, r) + proximity(sq.Omega, r) +
                 proximity(neg_upsilon, r) + proximity(d_p, r) +
                 proximity(d_q, r) + proximity(d_h, r);
    if (form == BoundForm::kRepaired) rhs += proximity(neg_part, r);
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
  }
  return rep;
}

}  // namespace tropnev
