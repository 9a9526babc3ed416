// Copyright 2026 The gaploc Authors
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

#include <cmath>
#include <ostream>

#include "gaploc/milp.hpp"

namespace gaploc::milp {

namespace {

void WriteNumber(std::ostream& out, double v) {
  if (v == kInfinity) {
    out << "+inf";
  } else if (v == -kInfinity) {
    out << "-inf";
  } else {
    out << v;
  }
}

void WriteTerms(std::ostream& out, const Problem& p, const std::vector<Term>& terms) {
  if (terms.empty()) {
    out << " 0";
    return;
  }
  for (const Term& t : terms) {
    out << (t.coef < 0 ? " - " : " + ") << std::abs(t.coef) << ' '
        << p.variables[static_cast<size_t>(t.col)].name;
  }
}

}  // namespace

void write_lp(std::ostream& out, const Problem& problem) {
  const auto old_precision = out.precision(17);
  out << "\\ " << problem.num_cols() << " columns, " << problem.num_rows() << " rows\n";
  out << "Minimize\n obj:";
  WriteTerms(out, problem, problem.objective);
  if (problem.objective_offset != 0.0) {
    out << (problem.objective_offset < 0 ? " - " : " + ") << std::abs(problem.objective_offset);
  }
  out << "\nSubject To\n";
  for (const Row& r : problem.rows) {
    out << ' ' << r.name << ':';
    WriteTerms(out, problem, r.terms);
    switch (r.sense) {
      case Sense::kLessEqual:
        out << " <= ";
        break;
      case Sense::kEqual:
        out << " = ";
        break;
      case Sense::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << r.rhs << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : problem.variables) {
    if (v.kind == VarKind::kBinary) continue;
    out << ' ';
    WriteNumber(out, v.lower);
    out << " <= " << v.name << " <= ";
    WriteNumber(out, v.upper);
    out << '\n';
  }
  out << "General\n";
  for (const Variable& v : problem.variables) {
    if (v.kind == VarKind::kInteger) out << ' ' << v.name << '\n';
  }
  out << "Binary\n";
  for (const Variable& v : problem.variables) {
    if (v.kind == VarKind::kBinary) out << ' ' << v.name << '\n';
  }
  out << "End\n";
  out.precision(old_precision);
}

}  // namespace gaploc::milp
