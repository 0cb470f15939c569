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

#ifndef TROPNEV_CONTEXT_HPP_
#define TROPNEV_CONTEXT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropnev {

// Numeric policy shared by every query. Scalars are doubles; eps is the
// relative tolerance for slope equality and for merging nearby breakpoints.
// verify_tol scales the pass/fail threshold of every verifier report.
struct Context {
  double eps = 1e-9;
  std::size_t breakpoint_budget = 1'000'000;
  double verify_tol = 1e-8;
};

enum class ErrorCode {
  kWindowExceeded,
  kBreakpointBudgetExceeded,
  kPreconditionViolated,
  kNotASolution,
  kInvalidParameters,
  kInvalidSpec,
  kParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline bool slope_equal(double a, double b, double eps) {
  return std::abs(a - b) <=
         eps * std::max({1.0, std::abs(a), std::abs(b)});
}

// True when x and y are the same breakpoint location under eps.
inline bool same_location(double x, double y, double eps) {
  return std::abs(x - y) <= eps * std::max({1.0, std::abs(x), std::abs(y)});
}

// Throws kInvalidParameters unless v is finite.
inline double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidParameters,
                std::string(what) + " must be finite");
  }
  return v;
}

}  // namespace tropnev

#endif  // TROPNEV_CONTEXT_HPP_
