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

// Continuous piecewise-linear functions on the real line with arbitrary real
// slopes, closed under the max-plus operations.
//
// A TropicalPL is an immutable handle to a node of a combinator tree. Leaves
// are either `finite` (a breakpoint list with linear extension to +-infinity)
// or lazy generators (`exponential`, `periodic-extension`, custom) whose
// breakpoints are only materialized inside a bounded window. Handles are cheap
// to copy and safe to share between threads.

#ifndef TROPNEV_TROPICAL_PL_HPP_
#define TROPNEV_TROPICAL_PL_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tropnev/context.hpp"

namespace tropnev {

struct Slopes {
  double left;
  double right;
};

enum class EventKind { kPole, kRoot };

// One slope discontinuity. omega = right_slope - left_slope is never zero
// under slope equality; kind is kPole iff omega < 0; tau = |omega|.
struct BreakpointEvent {
  double x;
  double left_slope;
  double right_slope;
  double omega;
  double tau;
  EventKind kind;
};

struct Point {
  double x;
  double y;
};

// Interface for user-defined lazy generators. knots() must return every
// location in [lo, hi] where the slope may change, sorted.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::string name() const = 0;
  // Named numeric parameters, used for serialization.
  virtual std::vector<std::pair<std::string, double>> params() const = 0;
  virtual double eval(double x) const = 0;
  virtual Slopes slopes(double x, const Context& ctx) const = 0;
  virtual std::vector<double> knots(double lo, double hi) const = 0;
};

namespace detail {
class Node;
struct NodeAccess;
}  // namespace detail

class TropicalPL {
 public:
  enum class Kind {
    kFinite,
    kShifted,
    kScaled,
    kNegated,
    kSum,
    kMax,
    kPeriodicExtension,
    kExponential,
    kCustom,
  };

  // The zero function.
  TropicalPL();

  // Points must have strictly increasing x. Outside [x_first, x_last] the
  // function continues with the given boundary slopes.
  static TropicalPL finite(std::vector<Point> points, double slope_left,
                           double slope_right);
  static TropicalPL constant(double value);
  static TropicalPL affine(double slope, double intercept);
  // p-periodic function agreeing with `base` on [0, p]. Requires
  // base(0) == base(p) up to eps.
  static TropicalPL periodic_extension(const TropicalPL& base, double period);
  // e_alpha for |alpha| > 1, e_beta for 0 < |beta| < 1.
  static TropicalPL exponential(double alpha);
  static TropicalPL custom(std::shared_ptr<const Generator> generator);

  double operator()(double x) const;
  Slopes slopes(double x, const Context& ctx = {}) const;
  // Sorted, deduplicated candidate breakpoint locations in [lo, hi]. Every
  // true breakpoint is included; some candidates may have omega == 0.
  std::vector<double> knots(double lo, double hi, const Context& ctx = {}) const;

  Kind kind() const;
  // Structural access for serialization.
  std::vector<TropicalPL> operands() const;
  // Shift c, scale alpha, period p or exponential base, by kind.
  double parameter() const;
  const std::vector<Point>& finite_points() const;
  Slopes boundary_slopes() const;
  std::shared_ptr<const Generator> generator() const;

 private:
  explicit TropicalPL(std::shared_ptr<const detail::Node> node)
      : node_(std::move(node)) {}
  friend struct detail::NodeAccess;

  std::shared_ptr<const detail::Node> node_;
};

const char* kind_name(TropicalPL::Kind kind);

double eval(const TropicalPL& f, double x);
Slopes one_sided_slopes(const TropicalPL& f, double x, const Context& ctx = {});
// Events with lo <= x <= hi. Throws kBreakpointBudgetExceeded when more
// candidates than ctx.breakpoint_budget would be generated.
std::vector<BreakpointEvent> breakpoints_in(const TropicalPL& f, double lo,
                                            double hi, const Context& ctx = {});

TropicalPL tropical_max(const TropicalPL& f, const TropicalPL& g);
TropicalPL tropical_max(const std::vector<TropicalPL>& fs);
TropicalPL tropical_plus(const TropicalPL& f, const TropicalPL& g);
TropicalPL tropical_sum(const std::vector<TropicalPL>& fs);
TropicalPL tropical_minus(const TropicalPL& f, const TropicalPL& g);
TropicalPL tropical_scale(const TropicalPL& f, double alpha);
// x -> f(x + c).
TropicalPL shift(const TropicalPL& f, double c);
TropicalPL negate(const TropicalPL& f);
TropicalPL positive_part(const TropicalPL& f);

// A finite function equal to f on [lo, hi], continued with f's outer
// one-sided slopes at lo and hi.
TropicalPL materialize(const TropicalPL& f, double lo, double hi,
                       const Context& ctx = {});

}  // namespace tropnev

#endif  // TROPNEV_TROPICAL_PL_HPP_
