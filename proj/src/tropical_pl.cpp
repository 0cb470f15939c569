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

#include "tropnev/tropical_pl.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>
#include <utility>

namespace tropnev {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kWindowExceeded:
      return "window-exceeded";
    case ErrorCode::kBreakpointBudgetExceeded:
      return "breakpoint-budget-exceeded";
    case ErrorCode::kPreconditionViolated:
      return "precondition-violated";
    case ErrorCode::kNotASolution:
      return "not-a-solution";
    case ErrorCode::kInvalidParameters:
      return "invalid-parameters";
    case ErrorCode::kInvalidSpec:
      return "invalid-spec";
    case ErrorCode::kParseError:
      return "parse-error";
  }
  return "unknown";
}

const char* kind_name(TropicalPL::Kind kind) {
  switch (kind) {
    case TropicalPL::Kind::kFinite:
      return "finite";
    case TropicalPL::Kind::kShifted:
      return "shifted";
    case TropicalPL::Kind::kScaled:
      return "scaled";
    case TropicalPL::Kind::kNegated:
      return "negated";
    case TropicalPL::Kind::kSum:
      return "sum";
    case TropicalPL::Kind::kMax:
      return "max";
    case TropicalPL::Kind::kPeriodicExtension:
      return "periodic-extension";
    case TropicalPL::Kind::kExponential:
      return "exponential";
    case TropicalPL::Kind::kCustom:
      return "custom-generator";
  }
  return "unknown";
}

namespace detail {

class Node {
 public:
  explicit Node(TropicalPL::Kind kind) : kind_(kind) {}
  virtual ~Node() = default;
  TropicalPL::Kind kind() const { return kind_; }
  virtual double eval(double x) const = 0;
  virtual Slopes slopes(double x, const Context& ctx) const = 0;
  virtual std::vector<double> knots(double lo, double hi,
                                    const Context& ctx) const = 0;
  virtual std::vector<TropicalPL> operands() const { return {}; }
  virtual double parameter() const { return 0.0; }

 private:
  TropicalPL::Kind kind_;
};

struct NodeAccess {
  static TropicalPL wrap(std::shared_ptr<const Node> node) {
    return TropicalPL(std::move(node));
  }
  static const Node& node(const TropicalPL& f) { return *f.node_; }
};

}  // namespace detail

namespace {

using detail::Node;
using detail::NodeAccess;

void check_budget(std::size_t count, const Context& ctx) {
  if (count > ctx.breakpoint_budget) {
    throw Error(ErrorCode::kBreakpointBudgetExceeded,
                std::to_string(count) + " candidate breakpoints exceed budget " +
                    std::to_string(ctx.breakpoint_budget));
  }
}

// Sorts and collapses runs of locations closer than eps; the first location
// of a run is kept.
std::vector<double> canonical_knots(std::vector<double> v, const Context& ctx) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (out.empty() || !same_location(out.back(), x, ctx.eps)) out.push_back(x);
  }
  check_budget(out.size(), ctx);
  return out;
}

double outward_pad(double bound, const Context& ctx) {
  return ctx.eps * std::max(1.0, std::abs(bound));
}

class FiniteNode final : public Node {
 public:
  FiniteNode(std::vector<Point> points, double slope_left, double slope_right)
      : Node(TropicalPL::Kind::kFinite),
        points_(std::move(points)),
        boundary_{slope_left, slope_right} {
    if (points_.empty()) {
      throw Error(ErrorCode::kInvalidParameters,
                  "finite function needs at least one point");
    }
    require_finite(slope_left, "slope_left");
    require_finite(slope_right, "slope_right");
    slopes_.reserve(points_.size() + 1);
    slopes_.push_back(slope_left);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      require_finite(points_[i].x, "breakpoint x");
      require_finite(points_[i].y, "breakpoint value");
      if (i > 0) {
        const double dx = points_[i].x - points_[i - 1].x;
        if (!(dx > 0.0)) {
          throw Error(ErrorCode::kInvalidParameters,
                      "breakpoints must be strictly increasing in x");
        }
        slopes_.push_back((points_[i].y - points_[i - 1].y) / dx);
      }
    }
    slopes_.push_back(slope_right);
  }

  double eval(double x) const override {
    const auto it = upper_bound_x(x);
    const std::size_t i = static_cast<std::size_t>(it - points_.begin());
    if (i == 0) return points_.front().y + slopes_[0] * (x - points_.front().x);
    const Point& p = points_[i - 1];
    if (i == points_.size()) return p.y + slopes_.back() * (x - p.x);
    const Point& q = points_[i];
    const double t = (x - p.x) / (q.x - p.x);
    return p.y + t * (q.y - p.y);
  }

  Slopes slopes(double x, const Context& ctx) const override {
    const std::size_t i =
        static_cast<std::size_t>(upper_bound_x(x) - points_.begin());
    if (i > 0 && same_location(x, points_[i - 1].x, ctx.eps)) {
      return {slopes_[i - 1], slopes_[i]};
    }
    if (i < points_.size() && same_location(x, points_[i].x, ctx.eps)) {
      return {slopes_[i], slopes_[i + 1]};
    }
    return {slopes_[i], slopes_[i]};
  }

  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    const double a = lo - outward_pad(lo, ctx);
    const double b = hi + outward_pad(hi, ctx);
    std::vector<double> out;
    for (const Point& p : points_) {
      if (p.x >= a && p.x <= b) out.push_back(p.x);
    }
    check_budget(out.size(), ctx);
    return out;
  }

  const std::vector<Point>& points() const { return points_; }
  Slopes boundary() const { return boundary_; }

 private:
  std::vector<Point>::const_iterator upper_bound_x(double x) const {
    return std::upper_bound(
        points_.begin(), points_.end(), x,
        [](double v, const Point& p) { return v < p.x; });
  }

  std::vector<Point> points_;
  Slopes boundary_;
  // slopes_[k] is the slope left of points_[k]; slopes_.back() is the right
  // boundary slope.
  std::vector<double> slopes_;
};

class ShiftedNode final : public Node {
 public:
  ShiftedNode(TropicalPL child, double c)
      : Node(TropicalPL::Kind::kShifted), child_(std::move(child)), c_(c) {}
  double eval(double x) const override { return child_(x + c_); }
  Slopes slopes(double x, const Context& ctx) const override {
    return child_.slopes(x + c_, ctx);
  }
  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    std::vector<double> out = child_.knots(lo + c_, hi + c_, ctx);
    for (double& x : out) x -= c_;
    return out;
  }
  std::vector<TropicalPL> operands() const override { return {child_}; }
  double parameter() const override { return c_; }

 private:
  TropicalPL child_;
  double c_;
};

class ScaledNode final : public Node {
 public:
  ScaledNode(TropicalPL::Kind kind, TropicalPL child, double alpha)
      : Node(kind), child_(std::move(child)), alpha_(alpha) {}
  double eval(double x) const override { return alpha_ * child_(x); }
  Slopes slopes(double x, const Context& ctx) const override {
    const Slopes s = child_.slopes(x, ctx);
    return {alpha_ * s.left, alpha_ * s.right};
  }
  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    if (alpha_ == 0.0) return {};
    return child_.knots(lo, hi, ctx);
  }
  std::vector<TropicalPL> operands() const override { return {child_}; }
  double parameter() const override { return alpha_; }

 private:
  TropicalPL child_;
  double alpha_;
};

class SumNode final : public Node {
 public:
  explicit SumNode(std::vector<TropicalPL> children)
      : Node(TropicalPL::Kind::kSum), children_(std::move(children)) {}
  double eval(double x) const override {
    double s = 0.0;
    for (const TropicalPL& c : children_) s += c(x);
    return s;
  }
  Slopes slopes(double x, const Context& ctx) const override {
    Slopes s{0.0, 0.0};
    for (const TropicalPL& c : children_) {
      const Slopes t = c.slopes(x, ctx);
      s.left += t.left;
      s.right += t.right;
    }
    return s;
  }
  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    std::vector<double> all;
    for (const TropicalPL& c : children_) {
      std::vector<double> k = c.knots(lo, hi, ctx);
      all.insert(all.end(), k.begin(), k.end());
      check_budget(all.size(), ctx);
    }
    return canonical_knots(std::move(all), ctx);
  }
  std::vector<TropicalPL> operands() const override { return children_; }

 private:
  std::vector<TropicalPL> children_;
};

class MaxNode final : public Node {
 public:
  MaxNode(TropicalPL f, TropicalPL g)
      : Node(TropicalPL::Kind::kMax), f_(std::move(f)), g_(std::move(g)) {}

  double eval(double x) const override { return std::max(f_(x), g_(x)); }

  Slopes slopes(double x, const Context& ctx) const override {
    const double fx = f_(x);
    const double gx = g_(x);
    const Slopes sf = f_.slopes(x, ctx);
    const Slopes sg = g_.slopes(x, ctx);
    // A computed crossing is off by about slope * ulp(x), so steep children
    // need a proportionally wider tie band.
    const double steep = std::max({std::abs(sf.left), std::abs(sf.right),
                                   std::abs(sg.left), std::abs(sg.right)});
    const double tol =
        ctx.eps * (std::max({1.0, std::abs(fx), std::abs(gx)}) +
                   steep * std::max(1.0, std::abs(x)));
    if (fx > gx + tol) return sf;
    if (gx > fx + tol) return sg;
    // Both active: to the left the smaller slope wins, to the right the
    // larger one.
    return {std::min(sf.left, sg.left), std::max(sf.right, sg.right)};
  }

  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    // Cell boundaries tagged with which child owns a knot there.
    struct Mark {
      double x;
      bool f_knot;
      bool g_knot;
    };
    std::vector<Mark> marks;
    for (double x : f_.knots(lo, hi, ctx)) marks.push_back({x, true, false});
    for (double x : g_.knots(lo, hi, ctx)) marks.push_back({x, false, true});
    marks.push_back({lo, false, false});
    marks.push_back({hi, false, false});
    std::sort(marks.begin(), marks.end(),
              [](const Mark& a, const Mark& b) { return a.x < b.x; });
    std::vector<Mark> cells;
    for (const Mark& m : marks) {
      if (!cells.empty() && same_location(cells.back().x, m.x, ctx.eps)) {
        cells.back().f_knot |= m.f_knot;
        cells.back().g_knot |= m.g_knot;
      } else {
        cells.push_back(m);
      }
    }
    check_budget(cells.size(), ctx);

    // f - g is affine on each cell, so a sign change pins a single crossing.
    std::vector<double> out;
    std::vector<double> diff(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const double fx = f_(cells[i].x);
      const double gx = g_(cells[i].x);
      diff[i] = fx - gx;
      const double tol = ctx.eps * std::max({1.0, std::abs(fx), std::abs(gx)});
      // A child's knot matters only where that child attains the max.
      if ((cells[i].f_knot && diff[i] >= -tol) ||
          (cells[i].g_knot && diff[i] <= tol)) {
        out.push_back(cells[i].x);
      }
    }
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      const double da = diff[i];
      const double db = diff[i + 1];
      if ((da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)) {
        const double a = cells[i].x;
        const double b = cells[i + 1].x;
        out.push_back(a + (b - a) * (da / (da - db)));
      }
    }
    return canonical_knots(std::move(out), ctx);
  }

  std::vector<TropicalPL> operands() const override { return {f_, g_}; }

 private:
  TropicalPL f_;
  TropicalPL g_;
};

class PeriodicNode final : public Node {
 public:
  PeriodicNode(TropicalPL base, double period)
      : Node(TropicalPL::Kind::kPeriodicExtension),
        base_(std::move(base)),
        p_(period) {
    require_finite(period, "period");
    if (!(period > 0.0)) {
      throw Error(ErrorCode::kInvalidParameters, "period must be positive");
    }
    const Context ctx;
    const double y0 = base_(0.0);
    const double yp = base_(p_);
    if (std::abs(y0 - yp) > ctx.eps * std::max({1.0, std::abs(y0), std::abs(yp)})) {
      throw Error(ErrorCode::kInvalidParameters,
                  "periodic extension needs base(0) == base(period)");
    }
    cell_knots_.push_back(0.0);
    for (double t : base_.knots(0.0, p_, ctx)) {
      if (t > 0.0 && t < p_ && !same_location(t, p_, ctx.eps)) {
        cell_knots_.push_back(t);
      }
    }
    cell_knots_ = canonical_knots(std::move(cell_knots_), ctx);
    left_at_zero_ = base_.slopes(p_, ctx).left;
    right_at_zero_ = base_.slopes(0.0, ctx).right;
  }

  double eval(double x) const override { return base_(reduce(x)); }

  Slopes slopes(double x, const Context& ctx) const override {
    const double t = reduce(x);
    if (same_location(t, 0.0, ctx.eps) || same_location(t, p_, ctx.eps)) {
      return {left_at_zero_, right_at_zero_};
    }
    return base_.slopes(t, ctx);
  }

  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    const double k0 = std::floor(lo / p_) - 1.0;
    const double k1 = std::floor(hi / p_) + 1.0;
    const double estimate = (k1 - k0 + 1.0) * static_cast<double>(cell_knots_.size());
    if (estimate > static_cast<double>(ctx.breakpoint_budget) * 2.0 + 16.0) {
      check_budget(static_cast<std::size_t>(std::min(estimate, 1e18)), ctx);
    }
    const double a = lo - outward_pad(lo, ctx);
    const double b = hi + outward_pad(hi, ctx);
    std::vector<double> out;
    for (double k = k0; k <= k1; k += 1.0) {
      for (double t : cell_knots_) {
        const double x = k * p_ + t;
        if (x >= a && x <= b) out.push_back(x);
      }
    }
    check_budget(out.size(), ctx);
    return out;
  }

  std::vector<TropicalPL> operands() const override { return {base_}; }
  double parameter() const override { return p_; }

 private:
  double reduce(double x) const {
    double t = x - p_ * std::floor(x / p_);
    if (t >= p_) t -= p_;
    if (t < 0.0) t = 0.0;
    return t;
  }

  TropicalPL base_;
  double p_;
  std::vector<double> cell_knots_;
  double left_at_zero_ = 0.0;
  double right_at_zero_ = 0.0;
};

class ExponentialNode final : public Node {
 public:
  explicit ExponentialNode(double alpha)
      : Node(TropicalPL::Kind::kExponential), alpha_(alpha) {
    require_finite(alpha, "exponential base");
    if (alpha == 0.0 || std::abs(alpha) == 1.0) {
      throw Error(ErrorCode::kInvalidParameters,
                  "exponential base must avoid 0 and +-1");
    }
    growing_ = std::abs(alpha) > 1.0;
    offset_ = growing_ ? 1.0 / (alpha - 1.0) : 1.0 / (1.0 - alpha);
    log_abs_ = std::log(std::abs(alpha));
    log_limit_ =
        std::log(DBL_MAX) - std::log1p(std::abs(offset_) + 1.0) - 1.0;
  }

  double eval(double x) const override {
    const double k = std::floor(x);
    const double t = x - k;
    const double w = weight(k);
    return growing_ ? w * (t + offset_) : w * (offset_ - t);
  }

  Slopes slopes(double x, const Context& ctx) const override {
    const double k = std::round(x);
    if (same_location(x, k, ctx.eps)) return {cell_slope(k - 1.0), cell_slope(k)};
    const double s = cell_slope(std::floor(x));
    return {s, s};
  }

  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    const double k0 = std::ceil(lo - outward_pad(lo, ctx));
    const double k1 = std::floor(hi + outward_pad(hi, ctx));
    if (k1 < k0) return {};
    check_budget(static_cast<std::size_t>(std::min(k1 - k0 + 1.0, 1e18)), ctx);
    weight(k0 - 1.0);
    weight(k1 + 1.0);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k1 - k0 + 1.0));
    for (double k = k0; k <= k1; k += 1.0) out.push_back(k);
    return out;
  }

  double parameter() const override { return alpha_; }

 private:
  // alpha^k, refusing cells where the function would overflow.
  double weight(double k) const {
    if (k * log_abs_ > log_limit_) {
      throw Error(ErrorCode::kWindowExceeded,
                  "exponential with base " + std::to_string(alpha_) +
                      " overflows at cell " + std::to_string(k));
    }
    return std::pow(alpha_, k);
  }
  double cell_slope(double k) const {
    return growing_ ? weight(k) : -weight(k);
  }

  double alpha_;
  bool growing_;
  double offset_;
  double log_abs_;
  double log_limit_;
};

class CustomNode final : public Node {
 public:
  explicit CustomNode(std::shared_ptr<const Generator> gen)
      : Node(TropicalPL::Kind::kCustom), gen_(std::move(gen)) {
    if (!gen_) {
      throw Error(ErrorCode::kInvalidParameters, "null generator");
    }
  }
  double eval(double x) const override { return gen_->eval(x); }
  Slopes slopes(double x, const Context& ctx) const override {
    return gen_->slopes(x, ctx);
  }
  std::vector<double> knots(double lo, double hi,
                            const Context& ctx) const override {
    const double a = lo - outward_pad(lo, ctx);
    const double b = hi + outward_pad(hi, ctx);
    return canonical_knots(gen_->knots(a, b), ctx);
  }
  const std::shared_ptr<const Generator>& generator() const { return gen_; }

 private:
  std::shared_ptr<const Generator> gen_;
};

}  // namespace

TropicalPL::TropicalPL() : TropicalPL(constant(0.0)) {}

TropicalPL TropicalPL::finite(std::vector<Point> points, double slope_left,
                              double slope_right) {
  return TropicalPL(std::make_shared<FiniteNode>(std::move(points), slope_left,
                                                 slope_right));
}

TropicalPL TropicalPL::constant(double value) {
  return finite({{0.0, require_finite(value, "constant")}}, 0.0, 0.0);
}

TropicalPL TropicalPL::affine(double slope, double intercept) {
  return finite({{0.0, require_finite(intercept, "intercept")}}, slope, slope);
}

TropicalPL TropicalPL::periodic_extension(const TropicalPL& base,
                                          double period) {
  return TropicalPL(std::make_shared<PeriodicNode>(base, period));
}

TropicalPL TropicalPL::exponential(double alpha) {
  return TropicalPL(std::make_shared<ExponentialNode>(alpha));
}

TropicalPL TropicalPL::custom(std::shared_ptr<const Generator> generator) {
  return TropicalPL(std::make_shared<CustomNode>(std::move(generator)));
}

double TropicalPL::operator()(double x) const { return node_->eval(x); }

Slopes TropicalPL::slopes(double x, const Context& ctx) const {
  return node_->slopes(x, ctx);
}

std::vector<double> TropicalPL::knots(double lo, double hi,
                                      const Context& ctx) const {
  return node_->knots(lo, hi, ctx);
}

TropicalPL::Kind TropicalPL::kind() const { return node_->kind(); }

std::vector<TropicalPL> TropicalPL::operands() const {
  return node_->operands();
}

double TropicalPL::parameter() const { return node_->parameter(); }

const std::vector<Point>& TropicalPL::finite_points() const {
  static const std::vector<Point> kEmpty;
  if (kind() != Kind::kFinite) return kEmpty;
  return static_cast<const FiniteNode&>(*node_).points();
}

Slopes TropicalPL::boundary_slopes() const {
  if (kind() != Kind::kFinite) return {0.0, 0.0};
  return static_cast<const FiniteNode&>(*node_).boundary();
}

std::shared_ptr<const Generator> TropicalPL::generator() const {
  if (kind() != Kind::kCustom) return nullptr;
  return static_cast<const CustomNode&>(*node_).generator();
}

double eval(const TropicalPL& f, double x) {
  require_finite(x, "evaluation point");
  return f(x);
}

Slopes one_sided_slopes(const TropicalPL& f, double x, const Context& ctx) {
  require_finite(x, "evaluation point");
  return f.slopes(x, ctx);
}

std::vector<BreakpointEvent> breakpoints_in(const TropicalPL& f, double lo,
                                            double hi, const Context& ctx) {
  require_finite(lo, "lo");
  require_finite(hi, "hi");
  if (!(lo < hi)) {
    throw Error(ErrorCode::kInvalidParameters, "breakpoints_in needs lo < hi");
  }
  std::vector<BreakpointEvent> events;
  for (double x : f.knots(lo, hi, ctx)) {
    if (x < lo || x > hi) continue;
    const Slopes s = f.slopes(x, ctx);
    if (slope_equal(s.left, s.right, ctx.eps)) continue;
    const double omega = s.right - s.left;
    events.push_back({x, s.left, s.right, omega, std::abs(omega),
                      omega < 0.0 ? EventKind::kPole : EventKind::kRoot});
  }
  return events;
}

TropicalPL tropical_max(const TropicalPL& f, const TropicalPL& g) {
  return NodeAccess::wrap(std::make_shared<MaxNode>(f, g));
}

TropicalPL tropical_max(const std::vector<TropicalPL>& fs) {
  if (fs.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "max of an empty family");
  }
  TropicalPL acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = tropical_max(acc, fs[i]);
  return acc;
}

TropicalPL tropical_plus(const TropicalPL& f, const TropicalPL& g) {
  return tropical_sum({f, g});
}

TropicalPL tropical_sum(const std::vector<TropicalPL>& fs) {
  if (fs.empty()) return TropicalPL::constant(0.0);
  if (fs.size() == 1) return fs.front();
  return NodeAccess::wrap(std::make_shared<SumNode>(fs));
}

TropicalPL tropical_minus(const TropicalPL& f, const TropicalPL& g) {
  return tropical_sum({f, negate(g)});
}

TropicalPL tropical_scale(const TropicalPL& f, double alpha) {
  require_finite(alpha, "scale");
  return NodeAccess::wrap(
      std::make_shared<ScaledNode>(TropicalPL::Kind::kScaled, f, alpha));
}

TropicalPL shift(const TropicalPL& f, double c) {
  require_finite(c, "shift");
  return NodeAccess::wrap(std::make_shared<ShiftedNode>(f, c));
}

TropicalPL negate(const TropicalPL& f) {
  return NodeAccess::wrap(
      std::make_shared<ScaledNode>(TropicalPL::Kind::kNegated, f, -1.0));
}

TropicalPL positive_part(const TropicalPL& f) {
  return tropical_max(f, TropicalPL::constant(0.0));
}

TropicalPL materialize(const TropicalPL& f, double lo, double hi,
                       const Context& ctx) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::kInvalidParameters, "materialize needs lo < hi");
  }
  std::vector<Point> pts;
  pts.push_back({lo, f(lo)});
  for (double x : f.knots(lo, hi, ctx)) {
    if (x <= lo || x >= hi) continue;
    if (same_location(x, lo, ctx.eps) || same_location(x, hi, ctx.eps)) continue;
    pts.push_back({x, f(x)});
  }
  pts.push_back({hi, f(hi)});
  return TropicalPL::finite(std::move(pts), f.slopes(lo, ctx).left,
                            f.slopes(hi, ctx).right);
}

}  // namespace tropnev
