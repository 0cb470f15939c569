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

#ifndef TROPNEV_REPORT_HPP_
#define TROPNEV_REPORT_HPP_

#include <string>
#include <vector>

namespace tropnev {

enum class Relation { kLessEqual, kEqual };

// Per-theorem record of both sides at sampled radii.
//
// For kLessEqual, slack = rhs - lhs. For kEqual, slack = -|lhs - rhs|. In
// both cases a row passes iff slack >= -tol, and pass is the conjunction of
// all rows and all parts.
struct VerificationReport {
  std::string theorem_id;
  std::string instance;
  Relation relation = Relation::kLessEqual;
  std::vector<double> radii;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> slack;
  std::vector<double> tol;
  bool pass = true;
  std::string notes;
  // Independent sub-checks, e.g. one per lemma of a chain.
  std::vector<VerificationReport> parts;

  void add_row(double r, double lhs_value, double rhs_value, double tolerance);
  void add_part(VerificationReport part);
  void append_note(const std::string& note);
  // Smallest slack + tol over rows and parts; negative iff pass is false.
  double worst_margin() const;
};

VerificationReport make_report(std::string theorem_id, std::string instance,
                               Relation relation = Relation::kLessEqual);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

// Inequality tolerance: verify_tol * max(1, |lhs|, |rhs|).
double inequality_tol(double verify_tol, double lhs, double rhs);

}  // namespace tropnev

#endif  // TROPNEV_REPORT_HPP_
