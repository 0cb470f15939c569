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

// JSON forms of functions, difference polynomials, equations, solutions and
// reports. Schemas are documented in docs/schemas.md.

#ifndef TROPNEV_JSON_IO_HPP_
#define TROPNEV_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "tropnev/diff_poly.hpp"
#include "tropnev/report.hpp"
#include "tropnev/special_functions.hpp"
#include "tropnev/tropical_pl.hpp"

namespace tropnev {

using Json = nlohmann::ordered_json;

// Parses text, throwing kParseError with "line L, column C" on bad syntax.
Json parse_json_text(std::string_view text);

// Semantic errors throw kInvalidSpec naming the JSON path of the bad node.
TropicalPL function_from_json(const Json& j);
Json function_to_json(const TropicalPL& f);

DifferenceLaurentPolynomial poly_from_json(const Json& j);
Json poly_to_json(const DifferenceLaurentPolynomial& P);

struct EquationSpec {
  int order = 1;
  double c = 0.0;
  std::vector<PeriodicEvent> events;  // order 1
  SecondOrderData second;             // order 2
  bool delta_fixture = false;         // order 2, c = -1
};

EquationSpec equation_from_json(const Json& j);
// Dispatches to the solver for the equation's order and case.
UltraDiscreteSolution solve_equation(const EquationSpec& eq);
Json solution_to_json(const UltraDiscreteSolution& sol);

Json report_to_json(const VerificationReport& rep);

}  // namespace tropnev

#endif  // TROPNEV_JSON_IO_HPP_
