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

#include "tropnev/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "tropnev/nevanlinna.hpp"

namespace tropnev {
namespace {

double pos(double v) { return std::max(v, 0.0); }

double max_of(std::span<const double> a) {
  return *std::max_element(a.begin(), a.end());
}

double min_of(std::span<const double> a) {
  return *std::min_element(a.begin(), a.end());
}

void require_targets(std::span<const double> a) {
  if (a.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "at least one target needed");
  }
  for (double v : a) require_finite(v, "target");
}

TropicalPL truncate(const TropicalPL& f, double a) {
  return tropical_max(f, TropicalPL::constant(a));
}

// Additive constant of the second main inequality.
double second_main_constant(std::span<const double> a, BoundForm form) {
  const double q = static_cast<double>(a.size());
  const double big = pos(max_of(a));
  if (form == BoundForm::kPrinted) return (2.0 * q - 1.0) * big;
  return q * big + (q - 1.0) * pos(-min_of(a));
}

double transfer_constant(std::span<const double> a, BoundForm form) {
  return form == BoundForm::kPrinted ? pos(max_of(a)) : pos(-min_of(a));
}

const char* form_note(BoundForm form) {
  return form == BoundForm::kPrinted ? "form=printed" : "form=repaired";
}

}  // namespace

double padded_pole_floor(const TropicalPL& f, double R, double c,
                         const Context& ctx) {
  const double w = R + std::abs(c);
  return pole_floor(f, -w, w, ctx);
}

SmtInstance make_smt_instance(TropicalPL f, double c,
                              std::vector<double> targets, double R,
                              std::string id, const Context& ctx) {
  require_finite(c, "c");
  require_finite(R, "R");
  if (!(c > 0.0)) throw Error(ErrorCode::kPreconditionViolated, "c must be > 0");
  if (!(R > 0.0)) throw Error(ErrorCode::kPreconditionViolated, "R must be > 0");
  require_targets(targets);
  std::vector<double> sorted = targets;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kPreconditionViolated, "targets must be distinct");
  }
  const double L = padded_pole_floor(f, R, c, ctx);
  if (!(sorted.back() < L)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "max target " + format_double(sorted.back()) +
                    " is not below L_f = " + format_double(L));
  }
  SmtInstance inst;
  inst.f = std::move(f);
  inst.c = c;
  inst.targets = std::move(targets);
  inst.R = R;
  inst.id = std::move(id);
  return inst;
}

VerificationReport verify_first_main(const TropicalPL& f, double a,
                                     const std::vector<double>& radii,
                                     const Context& ctx) {
  VerificationReport rep = make_report("first-main", "");
  VerificationReport band_lo =
      make_report("first-main-band-lower", "", Relation::kLessEqual);
  VerificationReport band_hi =
      make_report("first-main-band-upper", "", Relation::kLessEqual);
  const TropicalPL g = negate(truncate(f, a));
  const double shift_const = pos(a) - std::max(f(0.0), a);
  bool band_checked = false;
  for (double r : radii) {
    const double lhs = characteristic_value(g, r, ctx);
    const double t = characteristic_value(f, r, ctx);
    const double rhs = t + shift_const;
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
    if (a < pole_floor(f, -r, r, ctx)) {
      const double e = lhs - t + std::max(f(0.0), a);
      band_lo.add_row(r, 0.0, e, inequality_tol(ctx.verify_tol, t, lhs));
      band_hi.add_row(r, e, pos(a), inequality_tol(ctx.verify_tol, t, lhs));
      band_checked = true;
    }
  }
  if (band_checked) {
    rep.add_part(std::move(band_lo));
    rep.add_part(std::move(band_hi));
  } else {
    rep.append_note("band skipped: a >= L_f at every radius");
  }
  return rep;
}

VerificationReport verify_shift_quotient_bound(const TropicalPL& f, double c,
                                               double alpha,
                                               const std::vector<double>& radii,
                                               BoundForm form,
                                               const Context& ctx) {
  require_finite(c, "c");
  require_finite(alpha, "alpha");
  if (!(alpha > 1.0)) {
    throw Error(ErrorCode::kPreconditionViolated, "alpha must exceed 1");
  }
  VerificationReport rep = make_report("shift-quotient", "");
  rep.append_note(form_note(form));
  const TropicalPL quotient = tropical_minus(shift(f, c), f);
  const double sign = form == BoundForm::kPrinted ? 1.0 : -1.0;
  const double f0 = f(0.0);
  for (double r : radii) {
    if (!(r > 0.0)) {
      throw Error(ErrorCode::kPreconditionViolated, "radius must be > 0");
    }
    const double lhs = proximity(quotient, r);
    const double k = 12.0 * std::abs(c) / ((alpha - 1.0) * (r + std::abs(c)));
    const double big_r = alpha * (r + std::abs(c));
    const double rhs = k * (characteristic_value(f, big_r, ctx) + sign * f0 / 2.0);
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
  }
  return rep;
}

SecondMainTerms second_main_terms(const SmtInstance& inst, double r,
                                  BoundForm form, const Context& ctx) {
  const TropicalPL& f = inst.f;
  const std::span<const double> a(inst.targets);
  const TropicalPL fs = shift(f, inst.c);
  SecondMainTerms t{};
  t.qT = static_cast<double>(a.size()) * characteristic_value(f, r, ctx);
  for (double aj : a) t.sum_N_targets += counting(negate(truncate(f, aj)), r, ctx);
  t.T_shift = characteristic_value(fs, r, ctx);
  t.N_neg_shift = counting(negate(fs), r, ctx);
  t.m_quotient = proximity(tropical_minus(fs, f), r);
  t.f_c = f(inst.c);
  t.max_const = second_main_constant(a, form);
  const double f0 = f(0.0);
  for (double aj : a) t.sum_f0_targets += std::max(f0, aj);
  t.lhs = t.qT;
  t.rhs = t.sum_N_targets + t.T_shift - t.N_neg_shift + t.m_quotient - t.f_c +
          t.max_const + t.sum_f0_targets;
  return t;
}

VerificationReport verify_second_main(const SmtInstance& inst,
                                      const std::vector<double>& radii,
                                      BoundForm form, const Context& ctx) {
  VerificationReport rep = make_report("second-main", inst.id);
  rep.append_note(form_note(form));
  for (double r : radii) {
    if (!(r > 0.0) || r > inst.R) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "radius " + format_double(r) + " outside (0, R]");
    }
    const SecondMainTerms t = second_main_terms(inst, r, form, ctx);
    rep.add_row(r, t.lhs, t.rhs, inequality_tol(ctx.verify_tol, t.lhs, t.rhs));
  }
  return rep;
}

VerificationReport verify_second_main_proximity_form(
    const SmtInstance& inst, const std::vector<double>& radii, BoundForm form,
    const Context& ctx) {
  VerificationReport rep = make_report("second-main-proximity", inst.id);
  rep.append_note(form_note(form));
  const std::span<const double> a(inst.targets);
  const TropicalPL fs = shift(inst.f, inst.c);
  std::vector<TropicalPL> quotients;
  std::vector<TropicalPL> neg_truncs;
  double sum_pos = 0.0;
  for (double ak : a) {
    const TropicalPL t = truncate(inst.f, ak);
    quotients.push_back(tropical_minus(fs, t));
    neg_truncs.push_back(negate(t));
    sum_pos += pos(ak);
  }
  const TropicalPL q_max = tropical_max(quotients);
  const TropicalPL neg_fs = negate(fs);
  const double cst = second_main_constant(a, form);
  for (double r : radii) {
    if (!(r > 0.0) || r > inst.R) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "radius " + format_double(r) + " outside (0, R]");
    }
    double lhs = 0.0;
    for (const TropicalPL& g : neg_truncs) lhs += proximity(g, r);
    const double rhs = proximity(neg_fs, r) + proximity(q_max, r) + cst + sum_pos;
    rep.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
  }
  return rep;
}

std::vector<SmtTrendRow> second_main_trend(const SmtInstance& inst,
                                           const std::vector<double>& radii,
                                           const Context& ctx) {
  std::vector<SmtTrendRow> rows;
  const double q = static_cast<double>(inst.targets.size());
  const TropicalPL neg_f = negate(inst.f);
  for (double r : radii) {
    double sum_n = 0.0;
    for (double aj : inst.targets) {
      sum_n += counting(negate(truncate(inst.f, aj)), r, ctx);
    }
    rows.push_back({r, (q - 1.0) * characteristic_value(inst.f, r, ctx),
                    sum_n - counting(neg_f, r, ctx)});
  }
  return rows;
}

double n1_counting(const TropicalPL& f, double c, double r, const Context& ctx) {
  const TropicalPL fs = shift(f, c);
  return counting(negate(fs), r, ctx) + 2.0 * counting(f, r, ctx) -
         counting(fs, r, ctx);
}

bool check_prod_sum_inequality(std::span<const double> a, double x) {
  if (a.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "at least one value needed");
  }
  const double pm1 = static_cast<double>(a.size()) - 1.0;
  double lhs = 0.0;
  double rhs = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  for (double ak : a) {
    const double m = std::max(x, ak);
    lhs += m;
    rhs = std::min(rhs, m + pm1 * ak);
    scale += std::abs(m) + pm1 * std::abs(ak);
  }
  return lhs >= rhs - 1e-14 * scale;
}

bool check_max_identity(double f_value, std::span<const double> a,
                        double eps) {
  if (a.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "at least one value needed");
  }
  const double p = static_cast<double>(a.size());
  const double amax = max_of(a);
  double sum = 0.0;
  for (double ak : a) sum += std::max(f_value, ak);
  const double lhs = std::max(sum, p * amax);
  const double rhs = p * std::max(f_value, amax);
  return std::abs(lhs - rhs) <= eps * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

TropicalPL truncation_product(const TropicalPL& f, std::span<const double> a) {
  std::vector<TropicalPL> parts;
  parts.reserve(a.size());
  for (double ak : a) parts.push_back(truncate(f, ak));
  return tropical_sum(parts);
}

VerificationReport verify_characteristic_sandwich(
    const TropicalPL& f, std::span<const double> a,
    const std::vector<double>& radii, const Context& ctx) {
  require_targets(a);
  VerificationReport rep = make_report("sandwich", "");
  VerificationReport upper = make_report("sandwich-upper", "");
  VerificationReport lower = make_report("sandwich-lower", "");
  VerificationReport equal =
      make_report("sandwich-equality", "", Relation::kEqual);
  const TropicalPL F = truncation_product(f, a);
  const double p = static_cast<double>(a.size());
  const double amax = max_of(a);
  double sum_pos = 0.0;
  for (double ak : a) sum_pos += pos(ak);
  int lower_skips = 0;
  for (double r : radii) {
    const double tf = characteristic_value(f, r, ctx);
    const double tF = characteristic_value(F, r, ctx);
    const double up = p * tf + sum_pos;
    upper.add_row(r, tF, up, inequality_tol(ctx.verify_tol, tF, up));
    if (amax < pole_floor(f, -r, r, ctx)) {
      const double lo = p * tf - p * pos(amax);
      lower.add_row(r, lo, tF, inequality_tol(ctx.verify_tol, lo, tF));
      if (amax <= 0.0) {
        equal.add_row(r, tF, p * tf, inequality_tol(ctx.verify_tol, tF, p * tf));
      }
    } else {
      ++lower_skips;
    }
  }
  rep.add_part(std::move(upper));
  if (!lower.radii.empty()) {
    rep.add_part(std::move(lower));
  }
  if (!equal.radii.empty()) rep.add_part(std::move(equal));
  if (lower_skips > 0) {
    rep.append_note("lower bound skipped at " + std::to_string(lower_skips) +
                    " radii: max a >= L_f");
  }
  return rep;
}

VerificationReport verify_lemma_chain(const TropicalPL& f, double c,
                                      std::span<const double> a,
                                      const std::vector<double>& radii,
                                      BoundForm form, const Context& ctx) {
  require_targets(a);
  require_finite(c, "c");
  if (c == 0.0) {
    throw Error(ErrorCode::kPreconditionViolated, "shift c must be nonzero");
  }
  VerificationReport rep = make_report("lemma-chain", "");
  rep.append_note(form_note(form));
  VerificationReport split = make_report("reciprocal-split", "");
  VerificationReport transfer = make_report("prod-sum-transfer", "");
  VerificationReport subadd = make_report("counting-subadditivity", "");

  const TropicalPL F = truncation_product(f, a);
  const TropicalPL neg_F = negate(F);
  const TropicalPL fs = shift(f, c);
  const TropicalPL neg_fs = negate(fs);
  const TropicalPL fs_over_F = tropical_minus(fs, F);
  std::vector<TropicalPL> quotients;
  std::vector<TropicalPL> neg_truncs;
  for (double ak : a) {
    const TropicalPL t = truncate(f, ak);
    quotients.push_back(tropical_minus(fs, t));
    neg_truncs.push_back(negate(t));
  }
  const TropicalPL q_max = tropical_max(quotients);
  const double pm1 = static_cast<double>(a.size()) - 1.0;
  const double k = transfer_constant(a, form);
  const double fc = f(c);

  for (double r : radii) {
    const double m_fs_F = proximity(fs_over_F, r);
    {
      const double lhs = proximity(neg_F, r);
      const double rhs = characteristic_value(fs, r, ctx) -
                         counting(neg_fs, r, ctx) + m_fs_F - fc;
      split.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
    }
    {
      const double rhs = proximity(q_max, r) + pm1 * k;
      transfer.add_row(r, m_fs_F, rhs, inequality_tol(ctx.verify_tol, m_fs_F, rhs));
    }
    {
      const double lhs = counting(neg_F, r, ctx);
      double rhs = 0.0;
      for (const TropicalPL& g : neg_truncs) rhs += counting(g, r, ctx);
      subadd.add_row(r, lhs, rhs, inequality_tol(ctx.verify_tol, lhs, rhs));
    }
  }
  rep.add_part(std::move(split));
  rep.add_part(std::move(transfer));
  rep.add_part(std::move(subadd));
  return rep;
}

}  // namespace tropnev
