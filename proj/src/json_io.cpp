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

#include "tropnev/json_io.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace tropnev {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, (path.empty() ? "$" : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(path, "expected a finite number");
  return v;
}

double number_field(const Json& j, const char* key, const std::string& path) {
  return number(field(j, key, path), path + "." + key);
}

double number_or(const Json& j, const char* key, double fallback,
                 const std::string& path) {
  return j.contains(key) ? number_field(j, key, path) : fallback;
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) bad(path + "." + key, "expected an array");
  return a;
}

std::pair<double, double> pair_at(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(path, "expected a pair [u, v]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
}

std::string index_path(const std::string& path, const char* key, std::size_t i) {
  return path + "." + key + "[" + std::to_string(i) + "]";
}

TropicalPL parse_function(const Json& j, const std::string& path);

std::vector<TropicalPL> parse_args(const Json& j, const std::string& path) {
  const Json& args = array_field(j, "args", path);
  if (args.empty()) bad(path + ".args", "expected at least one operand");
  std::vector<TropicalPL> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    out.push_back(parse_function(args[i], index_path(path, "args", i)));
  }
  return out;
}

std::vector<PeriodicEvent> parse_events(const Json& j, const std::string& path) {
  const Json& evs = array_field(j, "events", path);
  std::vector<PeriodicEvent> out;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    const auto [x, w] = pair_at(evs[i], index_path(path, "events", i));
    out.push_back({x, w});
  }
  return out;
}

TropicalPL parse_function_kind(const Json& j, const std::string& path) {
  const Json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) bad(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  auto arg = [&]() { return parse_function(field(j, "arg", path), path + ".arg"); };
  if (kind == "finite") {
    const Json& pts = array_field(j, "points", path);
    std::vector<Point> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [x, y] = pair_at(pts[i], index_path(path, "points", i));
      points.push_back({x, y});
    }
    return TropicalPL::finite(std::move(points), number_field(j, "slope_left", path),
                              number_field(j, "slope_right", path));
  }
  if (kind == "constant") return TropicalPL::constant(number_field(j, "value", path));
  if (kind == "linear") {
    return TropicalPL::affine(number_field(j, "slope", path),
                              number_or(j, "intercept", 0.0, path));
  }
  if (kind == "shift") return shift(arg(), number_field(j, "c", path));
  if (kind == "scale") return tropical_scale(arg(), number_field(j, "alpha", path));
  if (kind == "negate") return negate(arg());
  if (kind == "positive_part") return positive_part(arg());
  if (kind == "sum") return tropical_sum(parse_args(j, path));
  if (kind == "max") return tropical_max(parse_args(j, path));
  if (kind == "periodic") {
    const double p = number_field(j, "period", path);
    if (j.contains("base")) {
      return TropicalPL::periodic_extension(
          parse_function(j["base"], path + ".base"), p);
    }
    PeriodicSpec spec;
    spec.period = p;
    spec.events = parse_events(j, path);
    spec.anchor = number_or(j, "anchor", 0.0, path);
    return build_periodic(spec);
  }
  if (kind == "exponential") return make_exponential(number_field(j, "alpha", path));
  if (kind == "pi") return make_pi(number_field(j, "a", path), number_field(j, "b", path));
  if (kind == "trig") {
    const double which = number_field(j, "which", path);
    if (which != 1.0 && which != 2.0) bad(path + ".which", "expected 1 or 2");
    return make_trig_solution(number_field(j, "theta", path), static_cast<int>(which));
  }
  bad(path + ".kind", "unknown function kind \"" + kind + "\"");
}

TropicalPL parse_function(const Json& j, const std::string& path) {
  try {
    return parse_function_kind(j, path);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidSpec) throw;
    // Constructor errors carry no location; attach the node path.
    bad(path, e.what());
  }
}

Json number_array(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t pos = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                            ", column " + std::to_string(col) +
                                            ": malformed JSON");
  }
}

TropicalPL function_from_json(const Json& j) { return parse_function(j, "$"); }

Json function_to_json(const TropicalPL& f) {
  Json j;
  switch (f.kind()) {
    case TropicalPL::Kind::kFinite: {
      j["kind"] = "finite";
      Json pts = Json::array();
      for (const Point& p : f.finite_points()) pts.push_back({p.x, p.y});
      j["points"] = std::move(pts);
      j["slope_left"] = f.boundary_slopes().left;
      j["slope_right"] = f.boundary_slopes().right;
      return j;
    }
    case TropicalPL::Kind::kShifted:
      j["kind"] = "shift";
      j["c"] = f.parameter();
      j["arg"] = function_to_json(f.operands().front());
      return j;
    case TropicalPL::Kind::kScaled:
      j["kind"] = "scale";
      j["alpha"] = f.parameter();
      j["arg"] = function_to_json(f.operands().front());
      return j;
    case TropicalPL::Kind::kNegated:
      j["kind"] = "negate";
      j["arg"] = function_to_json(f.operands().front());
      return j;
    case TropicalPL::Kind::kSum:
    case TropicalPL::Kind::kMax: {
      j["kind"] = f.kind() == TropicalPL::Kind::kSum ? "sum" : "max";
      Json args = Json::array();
      for (const TropicalPL& g : f.operands()) args.push_back(function_to_json(g));
      j["args"] = std::move(args);
      return j;
    }
    case TropicalPL::Kind::kPeriodicExtension:
      j["kind"] = "periodic";
      j["period"] = f.parameter();
      j["base"] = function_to_json(f.operands().front());
      return j;
    case TropicalPL::Kind::kExponential:
      j["kind"] = "exponential";
      j["alpha"] = f.parameter();
      return j;
    case TropicalPL::Kind::kCustom: {
      j["kind"] = f.generator()->name();
      for (const auto& [key, value] : f.generator()->params()) j[key] = value;
      return j;
    }
  }
  return j;
}

DifferenceLaurentPolynomial poly_from_json(const Json& j) {
  const std::string path = "$";
  const Json& sh = array_field(j, "shifts", path);
  std::vector<double> shifts;
  for (std::size_t i = 0; i < sh.size(); ++i) {
    shifts.push_back(number(sh[i], index_path(path, "shifts", i)));
  }
  const Json& ts = array_field(j, "terms", path);
  std::vector<PolyTerm> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string tp = index_path(path, "terms", i);
    const Json& lam = array_field(ts[i], "lambda", tp);
    std::vector<double> lambda;
    for (std::size_t k = 0; k < lam.size(); ++k) {
      lambda.push_back(number(lam[k], index_path(tp, "lambda", k)));
    }
    terms.push_back({std::move(lambda),
                     parse_function(field(ts[i], "coeff", tp), tp + ".coeff")});
  }
  try {
    return DifferenceLaurentPolynomial(std::move(shifts), std::move(terms));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json poly_to_json(const DifferenceLaurentPolynomial& P) {
  Json j;
  j["shifts"] = number_array(P.shifts());
  Json terms = Json::array();
  for (const PolyTerm& t : P.terms()) {
    Json term;
    term["lambda"] = number_array(t.lambda);
    term["coeff"] = function_to_json(t.coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

EquationSpec equation_from_json(const Json& j) {
  const std::string path = "$";
  EquationSpec eq;
  const double order = number_field(j, "order", path);
  if (order != 1.0 && order != 2.0) bad(path + ".order", "expected 1 or 2");
  eq.order = static_cast<int>(order);
  eq.c = number_field(j, "c", path);
  if (eq.order == 1) {
    eq.events = parse_events(j, path);
    return eq;
  }
  if (j.contains("fixture")) {
    if (j["fixture"] != "delta") bad(path + ".fixture", "only \"delta\" is known");
    eq.delta_fixture = true;
    return eq;
  }
  SecondOrderData& d = eq.second;
  d.linear = number_or(j, "linear", 0.0, path);
  if (j.contains("periodic")) {
    d.periodic = parse_function(j["periodic"], path + ".periodic");
    d.has_periodic = true;
  }
  if (j.contains("anti")) {
    const Json& a = array_field(j, "anti", path);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = index_path(path, "anti", i);
      d.anti.emplace_back(number_field(a[i], "x", p),
                          parse_function(field(a[i], "xi", p), p + ".xi"));
    }
  }
  for (const char* key : {"forward", "backward"}) {
    if (!j.contains(key)) continue;
    const Json& a = array_field(j, key, path);
    auto& dst = std::string(key) == "forward" ? d.forward : d.backward;
    for (std::size_t i = 0; i < a.size(); ++i) {
      dst.push_back(pair_at(a[i], index_path(path, key, i)));
    }
  }
  if (j.contains("trig")) {
    const Json& a = array_field(j, "trig", path);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = index_path(path, "trig", i);
      const double which = number_field(a[i], "which", p);
      if (which != 1.0 && which != 2.0) bad(p + ".which", "expected 1 or 2");
      d.trig.push_back({static_cast<int>(which), number_or(a[i], "shift", 0.0, p),
                        number_or(a[i], "coeff", 1.0, p)});
    }
  }
  return eq;
}

UltraDiscreteSolution solve_equation(const EquationSpec& eq) {
  if (eq.order == 1) return solve_first_order(eq.c, eq.events);
  if (eq.delta_fixture) {
    if (eq.c != -1.0) {
      throw Error(ErrorCode::kInvalidParameters, "the delta fixture solves c = -1");
    }
    return delta_solution_c_minus_one();
  }
  return solve_second_order(eq.c, eq.second);
}

Json solution_to_json(const UltraDiscreteSolution& sol) {
  Json j;
  j["order"] = sol.order;
  j["c"] = sol.c;
  Json basis = Json::array();
  for (const BasisTerm& t : sol.basis) {
    Json b;
    b["generator"] = t.generator;
    b["shift"] = t.shift;
    b["coefficient"] = t.coefficient;
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);
  j["notes"] = sol.notes;
  j["function"] = function_to_json(sol.assembled);
  return j;
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["theorem_id"] = rep.theorem_id;
  j["instance"] = rep.instance;
  j["relation"] = rep.relation == Relation::kEqual ? "=" : "<=";
  j["radii"] = number_array(rep.radii);
  j["lhs"] = number_array(rep.lhs);
  j["rhs"] = number_array(rep.rhs);
  j["slack"] = number_array(rep.slack);
  j["tol"] = number_array(rep.tol);
  j["pass"] = rep.pass;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  if (!rep.parts.empty()) {
    Json parts = Json::array();
    for (const VerificationReport& p : rep.parts) parts.push_back(report_to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

}  // namespace tropnev
