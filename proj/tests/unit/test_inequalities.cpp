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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "tropnev/inequalities.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/random_instances.hpp"
#include "tropnev/special_functions.hpp"

namespace tropnev {
namespace {

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParseError;
}

TropicalPL lifted_sawtooth() {
  return tropical_plus(negate(make_pi(-1.0, -1.0)), TropicalPL::constant(2.0));
}

TEST_CASE("first main theorem") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const TropicalPL f = random_wrapped_pl(rng);
    const VerificationReport rep =
        verify_first_main(f, rng.uniform(-6, 6), {0.5, 2.0, 7.5, 15.0});
    CHECK(rep.pass);
  }
  // Far below the pole floor the band holds with eps = 0 for a <= 0.
  const VerificationReport rep = verify_first_main(lifted_sawtooth(), -1.0, {3.0, 10.0});
  CHECK(rep.pass);
  REQUIRE(rep.parts.size() == 2);
}

TEST_CASE("shift quotient bound") {
  const TropicalPL e2 = make_exponential(2.0);
  const VerificationReport rep = verify_shift_quotient_bound(e2, 1.0, 2.0, {5.0});
  CHECK(rep.pass);
  CHECK(rep.lhs[0] == doctest::Approx(proximity(e2, 5.0)));
  CHECK(verify_shift_quotient_bound(TropicalPL::affine(2.0, 1.0), 0.5, 2.0, {1.0, 9.0}).pass);
  Rng rng(5);
  std::vector<double> radii;
  for (int i = 0; i < 20; ++i) radii.push_back(rng.uniform(0.5, 30));
  CHECK(verify_shift_quotient_bound(negate(make_pi(-1.0, -1.0)), 0.3, 1.5, radii).pass);
  // A very negative f(0) breaks the printed bracket, not the repaired one.
  const TropicalPL low = TropicalPL::constant(-10.0);
  CHECK_FALSE(verify_shift_quotient_bound(low, 1.0, 2.0, {4.0}).pass);
  CHECK(verify_shift_quotient_bound(low, 1.0, 2.0, {4.0}, BoundForm::kRepaired).pass);
  CHECK(code_of([&] { verify_shift_quotient_bound(e2, 1.0, 1.0, {5.0}); }) ==
        ErrorCode::kPreconditionViolated);
}

TEST_CASE("second main inequality on the affine fixture") {
  for (double c : {0.5, 1.0, 2.5}) {
    const SmtInstance inst = make_smt_instance(TropicalPL::affine(1.0, 1.0), c, {0.0}, 100.0);
    for (double r : {5.0, 20.0, 80.0}) {
      const SecondMainTerms t = second_main_terms(inst, r);
      CHECK(t.lhs == doctest::Approx((r + 1) / 2));
      CHECK(t.rhs == doctest::Approx(r + c / 2));
      CHECK(t.rhs <= r + (c + 1) / 2);
    }
    CHECK(verify_second_main(inst, {5.0, 20.0, 80.0}).pass);
  }
}

TEST_CASE("second main inequality on a lifted sawtooth") {
  const SmtInstance inst = make_smt_instance(lifted_sawtooth(), 0.5, {-1.0}, 50.0);
  for (BoundForm form : {BoundForm::kPrinted, BoundForm::kRepaired}) {
    CHECK(verify_second_main(inst, {3.0, 10.0, 50.0}, form).pass);
    CHECK(verify_second_main_proximity_form(inst, {3.0, 10.0, 50.0}, form).pass);
  }
  CHECK(code_of([&] { verify_second_main(inst, {60.0}); }) == ErrorCode::kPreconditionViolated);
}

TEST_CASE("second main instance preconditions") {
  const TropicalPL f = lifted_sawtooth();
  CHECK(code_of([&] { make_smt_instance(f, 1.0, {-1.0, -1.0}, 10.0); }) ==
        ErrorCode::kPreconditionViolated);
  CHECK(code_of([&] { make_smt_instance(f, 1.0, {3.0}, 10.0); }) ==
        ErrorCode::kPreconditionViolated);
  CHECK(code_of([&] { make_smt_instance(f, 0.0, {-1.0}, 10.0); }) ==
        ErrorCode::kPreconditionViolated);
  CHECK(code_of([&] { make_smt_instance(f, 1.0, {}, 10.0); }) ==
        ErrorCode::kPreconditionViolated);
}

TEST_CASE("negative targets break the printed constant only") {
  const SmtInstance inst =
      make_smt_instance(TropicalPL::constant(-5.0), 1.0, {-1.0, -2.0, -3.0, -4.0}, 10.0);
  const VerificationReport printed = verify_second_main(inst, {1.0, 5.0});
  CHECK_FALSE(printed.pass);
  CHECK(printed.lhs[0] == 0.0);
  CHECK(printed.rhs[0] == doctest::Approx(-5.0));
  CHECK(verify_second_main(inst, {1.0, 5.0}, BoundForm::kRepaired).pass);
}

TEST_CASE("property: repaired second main form never fails") {
  Rng rng(71);
  int printed_failures = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const SmtInstance inst = random_smt_instance(rng);
    const std::vector<double> radii{1.0, 4.0, 9.0, 20.0};
    CHECK(verify_second_main(inst, radii, BoundForm::kRepaired).pass);
    CHECK(verify_second_main_proximity_form(inst, radii, BoundForm::kRepaired).pass);
    const bool nonneg = std::ranges::all_of(inst.targets, [](double a) { return a >= 0; });
    const bool printed = verify_second_main(inst, radii).pass;
    if (nonneg) CHECK(printed);
    printed_failures += printed ? 0 : 1;
  }
  MESSAGE("printed-constant failures: " << printed_failures << "/150");
}

TEST_CASE("second main trend rows") {
  const SmtInstance inst = make_smt_instance(lifted_sawtooth(), 0.5, {-1.0, 0.5}, 50.0);
  const auto rows = second_main_trend(inst, {10.0, 20.0});
  REQUIRE(rows.size() == 2);
  const TropicalPL f = lifted_sawtooth();
  CHECK(rows[1].lhs == doctest::Approx(characteristic_value(f, 20.0)));
}

TEST_CASE("n1 counting") {
  CHECK(n1_counting(TropicalPL::affine(3.0, -1.0), 2.0, 7.0) == 0.0);
  // N(|x+1|) = 0, 2 N(-|x|) = 10, N(-|x+1|) = (5 - 1) * 2 / 2.
  const TropicalPL f = TropicalPL::finite({{0.0, 0.0}}, 1.0, -1.0);
  CHECK(n1_counting(f, 1.0, 5.0) == doctest::Approx(6.0));
  const TropicalPL e = make_exponential(-2.0);
  const double r = 9.0;
  const double direct = counting(negate(shift(e, 2.0)), r) + 2 * counting(e, r) -
                        counting(shift(e, 2.0), r);
  CHECK(n1_counting(e, 2.0, r) == doctest::Approx(direct));
}

TEST_CASE("prod-sum inequality and max identity") {
  CHECK(check_prod_sum_inequality(std::vector<double>{1.0, 2.0, 3.0}, -4.0));
  CHECK(check_max_identity(-10.0, std::vector<double>{1.0, 2.0}));
  CHECK(check_max_identity(10.0, std::vector<double>{1.0, 2.0}));
  Rng rng(73);
  int bad_sum = 0, bad_max = 0;
  for (int i = 0; i < 100000; ++i) {
    std::vector<double> a(static_cast<std::size_t>(rng.uniform_int(1, 6)));
    for (double& v : a) v = rng.uniform(-10, 10);
    const double x = rng.uniform(-12, 12);
    bad_sum += check_prod_sum_inequality(a, x) ? 0 : 1;
    bad_max += check_max_identity(x, a) ? 0 : 1;
    if (a.size() == 1) {
      CHECK(check_prod_sum_inequality(a, x));
    }
  }
  CHECK(bad_sum == 0);
  CHECK(bad_max == 0);
  CHECK_THROWS_AS(check_prod_sum_inequality(std::vector<double>{}, 0.0), Error);
}

TEST_CASE("characteristic sandwich") {
  const TropicalPL f = lifted_sawtooth();
  const std::vector<double> a{-1.0, -0.5, 0.0};
  const VerificationReport rep = verify_characteristic_sandwich(f, a, {2.0, 7.0, 30.0});
  CHECK(rep.pass);
  REQUIRE(rep.parts.size() == 3);
  const TropicalPL F = truncation_product(f, a);
  for (double r : {2.0, 7.0, 30.0}) {
    CHECK(characteristic_value(F, r) == doctest::Approx(3 * characteristic_value(f, r)));
  }
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const TropicalPL g = random_finite_pl(rng);
    std::vector<double> t{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    CHECK(verify_characteristic_sandwich(g, t, {1.0, 5.0, 12.0}).pass);
  }
}

TEST_CASE("lemma chain") {
  CHECK(verify_lemma_chain(TropicalPL::affine(1.0, 2.0), 1.0, std::vector<double>{0.5, 1.5},
                           {1.0, 10.0})
            .pass);
  const TropicalPL e = make_exponential(-2.0);
  CHECK(verify_lemma_chain(e, 1.0, std::vector<double>{-3.0, -5.0}, {2.0, 6.0},
                           BoundForm::kRepaired)
            .pass);
  const TropicalPL s =
      tropical_plus(negate(make_pi(-1.0, -2.0)), TropicalPL::constant(1.0));
  CHECK(verify_lemma_chain(s, 0.7, std::vector<double>{-1.0, 0.0, 0.5}, {2.0, 9.0},
                           BoundForm::kRepaired)
            .pass);
  Rng rng(83);
  int printed_failures = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const TropicalPL f = random_wrapped_pl(rng);
    std::vector<double> a{rng.uniform(-6, 6), rng.uniform(-6, 6)};
    const double c = rng.uniform(0.1, 3);
    const VerificationReport printed = verify_lemma_chain(f, c, a, {1.0, 6.0});
    const VerificationReport repaired =
        verify_lemma_chain(f, c, a, {1.0, 6.0}, BoundForm::kRepaired);
    CHECK(repaired.pass);
    // The split and subadditivity parts do not depend on the form.
    CHECK(printed.parts[0].pass);
    CHECK(printed.parts[2].pass);
    printed_failures += printed.pass ? 0 : 1;
  }
  MESSAGE("printed-constant failures: " << printed_failures << "/150");
}

}  // namespace
}  // namespace tropnev
