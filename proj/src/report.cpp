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

#include "tropnev/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

namespace tropnev {

void VerificationReport::add_row(double r, double lhs_value, double rhs_value,
                                 double tolerance) {
  radii.push_back(r);
  lhs.push_back(lhs_value);
  rhs.push_back(rhs_value);
  const double s = relation == Relation::kEqual
                       ? -std::abs(lhs_value - rhs_value)
                       : rhs_value - lhs_value;
  slack.push_back(s);
  tol.push_back(tolerance);
  // NaN slack fails.
  if (!(s >= -tolerance)) pass = false;
}

void VerificationReport::add_part(VerificationReport part) {
  if (!part.pass) pass = false;
  parts.push_back(std::move(part));
}

void VerificationReport::append_note(const std::string& note) {
  if (note.empty()) return;
  if (!notes.empty()) notes += "; ";
  notes += note;
}

double VerificationReport::worst_margin() const {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < slack.size(); ++i) {
    worst = std::min(worst, slack[i] + tol[i]);
  }
  for (const VerificationReport& p : parts) {
    worst = std::min(worst, p.worst_margin());
  }
  return worst;
}

VerificationReport make_report(std::string theorem_id, std::string instance,
                               Relation relation) {
  VerificationReport rep;
  rep.theorem_id = std::move(theorem_id);
  rep.instance = std::move(instance);
  rep.relation = relation;
  return rep;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double inequality_tol(double verify_tol, double lhs, double rhs) {
  return verify_tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace tropnev
