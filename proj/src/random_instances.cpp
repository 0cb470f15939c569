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

#include "tropnev/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tropnev/nevanlinna.hpp"
#include "tropnev/special_functions.hpp"

namespace tropnev {
namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

TropicalPL random_coefficient(Rng& rng) {
  RandomPLOptions opts;
  opts.min_breakpoints = 2;
  opts.max_breakpoints = 4;
  opts.slope = 0.5;
  opts.value = 3.0;
  return random_finite_pl(rng, opts);
}

std::vector<double> random_shifts(Rng& rng, const PolyOptions& opts) {
  std::vector<double> shifts{0.0};
  const int extra = rng.uniform_int(0, opts.max_extra_shifts);
  while (static_cast<int>(shifts.size()) < extra + 1) {
    const double c = round2(rng.uniform(0.05, 2.0));
    if (std::find(shifts.begin(), shifts.end(), c) == shifts.end()) {
      shifts.push_back(c);
    }
  }
  return shifts;
}

std::vector<double> random_index(Rng& rng, std::size_t n, const PolyOptions& opts) {
  const double lo = opts.laurent ? -2.0 : 0.0;
  std::vector<double> lambda(n);
  for (double& v : lambda) v = round2(rng.uniform(lo, 3.0));
  return lambda;
}

bool index_taken(const std::vector<PolyTerm>& terms,
                 const std::vector<double>& lambda) {
  return std::any_of(terms.begin(), terms.end(), [&](const PolyTerm& t) {
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      if (std::abs(t.lambda[j] - lambda[j]) > 1e-9) return false;
    }
    return true;
  });
}

}  // namespace

TropicalPL random_finite_pl(Rng& rng, const RandomPLOptions& opts) {
  const int k = rng.uniform_int(opts.min_breakpoints, opts.max_breakpoints);
  std::vector<double> xs;
  while (static_cast<int>(xs.size()) < k) {
    const double x = rng.uniform(-opts.span, opts.span);
    if (std::none_of(xs.begin(), xs.end(),
                     [x](double v) { return std::abs(v - x) < 1e-6; })) {
      xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> slopes(static_cast<std::size_t>(k) + 1);
  const double y0 = rng.uniform(-opts.value, opts.value);
  for (double& s : slopes) s = rng.uniform(-opts.slope, opts.slope);
  std::vector<Point> pts{{xs[0], y0}};
  for (std::size_t i = 1; i < xs.size(); ++i) {
    pts.push_back({xs[i], pts.back().y + slopes[i] * (xs[i] - xs[i - 1])});
  }
  return TropicalPL::finite(std::move(pts), slopes.front(), slopes.back());
}

TropicalPL random_wrapped_pl(Rng& rng) {
  TropicalPL f = random_finite_pl(rng);
  const double u = rng.uniform(0.0, 1.0);
  if (u < 0.25) {
    const TropicalPL pi = make_pi(rng.uniform(-2.0, -0.2), rng.uniform(-2.0, -0.2));
    f = tropical_plus(f, tropical_scale(pi, rng.uniform(-2.0, 2.0)));
  } else if (u < 0.5) {
    const TropicalPL e = make_exponential(rng.uniform(1.2, 1.8));
    f = tropical_plus(f, tropical_scale(e, rng.uniform(-0.05, 0.05)));
  }
  return f;
}

SmtInstance random_smt_instance(Rng& rng, double R, const Context& ctx) {
  TropicalPL f = random_wrapped_pl(rng);
  const double c = rng.uniform(0.1, 3.0);
  const int q = rng.uniform_int(1, 4);
  const double floor = padded_pole_floor(f, R, c, ctx);
  const double top = floor < kNoEvents ? floor - 0.1 : rng.uniform(-5.0, 5.0);
  std::vector<double> targets;
  while (static_cast<int>(targets.size()) < q) {
    const double a = top - rng.uniform(0.0, 6.0);
    if (std::none_of(targets.begin(), targets.end(),
                     [a](double v) { return std::abs(v - a) < 1e-6; })) {
      targets.push_back(a);
    }
  }
  std::sort(targets.begin(), targets.end());
  return make_smt_instance(std::move(f), c, std::move(targets), R, {}, ctx);
}

PolyInstance random_poly_instance(Rng& rng, const PolyOptions& opts) {
  std::vector<double> shifts = random_shifts(rng, opts);
  std::vector<PolyTerm> terms;
  const int count = rng.uniform_int(1, opts.max_terms);
  while (static_cast<int>(terms.size()) < count) {
    std::vector<double> lambda = random_index(rng, shifts.size(), opts);
    if (index_taken(terms, lambda)) continue;
    terms.push_back({std::move(lambda), random_coefficient(rng)});
  }
  TropicalPL f = random_finite_pl(rng);
  return {DifferenceLaurentPolynomial(std::move(shifts), std::move(terms)),
          std::move(f)};
}

MohonkoInstance random_mohonko_instance(Rng& rng, const PolyOptions& opts) {
  std::vector<double> shifts = random_shifts(rng, opts);
  TropicalPL f = random_finite_pl(rng);
  std::vector<TropicalPL> fs;
  for (double c : shifts) fs.push_back(c == 0.0 ? f : shift(f, c));
  std::vector<PolyTerm> terms;
  const int count = rng.uniform_int(1, opts.max_terms);
  while (static_cast<int>(terms.size()) < count) {
    std::vector<double> lambda = random_index(rng, shifts.size(), opts);
    if (std::abs(norm(lambda)) < 0.2 || index_taken(terms, lambda)) continue;
    std::vector<TropicalPL> parts;
    for (std::size_t j = 0; j < shifts.size(); ++j) {
      if (lambda[j] != 0.0) parts.push_back(tropical_scale(fs[j], -lambda[j]));
    }
    if (!terms.empty()) {
      parts.push_back(negate(positive_part(random_coefficient(rng))));
    }
    terms.push_back({std::move(lambda), tropical_sum(parts)});
  }
  const double a = rng.uniform(-5.0, 5.0);
  return {DifferenceLaurentPolynomial(std::move(shifts), std::move(terms)),
          std::move(f), a};
}

ClunieInstance random_clunie_instance(Rng& rng, const PolyOptions& opts) {
  std::vector<double> shifts = random_shifts(rng, opts);
  std::vector<PolyTerm> h_terms;
  const int h_count = rng.uniform_int(1, std::max(1, opts.max_terms - 1));
  while (static_cast<int>(h_terms.size()) < h_count) {
    std::vector<double> lambda = random_index(rng, shifts.size(), opts);
    if (index_taken(h_terms, lambda)) continue;
    h_terms.push_back({std::move(lambda), random_coefficient(rng)});
  }
  // P: norm-zero indices, plus one negative-norm index in Laurent mode. With
  // a single shift the only norm-zero index is 0.
  std::vector<PolyTerm> p_terms;
  const int p_count =
      shifts.size() == 1 ? 1 : rng.uniform_int(1, std::max(1, opts.max_terms - 1));
  while (static_cast<int>(p_terms.size()) < p_count) {
    std::vector<double> lambda = random_index(rng, shifts.size(), opts);
    lambda[0] = round2(lambda[0] - norm(lambda));
    if (std::abs(norm(lambda)) > 1e-12) continue;
    if (index_taken(p_terms, lambda)) continue;
    p_terms.push_back({std::move(lambda), random_coefficient(rng)});
  }
  if (opts.laurent && rng.coin(0.5)) {
    for (;;) {
      std::vector<double> lambda = random_index(rng, shifts.size(), opts);
      lambda[0] = round2(lambda[0] - norm(lambda) - rng.uniform(0.5, 2.0));
      if (index_taken(p_terms, lambda)) continue;
      p_terms.push_back({std::move(lambda), random_coefficient(rng)});
      break;
    }
  }
  DifferenceLaurentPolynomial H(shifts, std::move(h_terms));
  DifferenceLaurentPolynomial P(shifts, std::move(p_terms));
  DifferenceLaurentPolynomial Q = poly_product(H, P);
  return {std::move(H), std::move(P), std::move(Q), random_finite_pl(rng)};
}

}  // namespace tropnev
