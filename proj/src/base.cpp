// Copyright 2026 The Incidence Scrolls Contributors
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

#include "incidence/base.hpp"

#include <algorithm>
#include <sstream>

#include "incidence/errors.hpp"
#include "incidence/schubert.hpp"

namespace incidence {

IncidenceBase::IncidenceBase(int ambient, std::vector<int> dims)
    : ambient_(ambient), dims_(std::move(dims)) {
  if (ambient_ < 2) {
    throw DomainError("ambient dimension must be at least 2, got " +
                      std::to_string(ambient_));
  }
  for (int d : dims_) {
    if (d < 0 || d > ambient_ - 1) {
      throw DomainError("P^" + std::to_string(d) + " is not a proper subspace of P^" +
                        std::to_string(ambient_));
    }
  }
  std::sort(dims_.begin(), dims_.end());
}

std::vector<int> IncidenceBase::codims() const {
  std::vector<int> out;
  out.reserve(dims_.size());
  for (int d : dims_) out.push_back(ambient_ - 1 - d);
  return out;
}

int IncidenceBase::condition_count() const {
  int total = 0;
  for (int d : dims_) total += ambient_ - 1 - d;
  return total;
}

std::string IncidenceBase::to_string() const {
  std::string out = std::to_string(ambient_) + ":";
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(dims_[k]);
  }
  return out;
}

std::string IncidenceBase::histogram() const {
  std::string out;
  for (std::size_t k = 0; k < dims_.size();) {
    std::size_t run = 1;
    while (k + run < dims_.size() && dims_[k + run] == dims_[k]) ++run;
    if (!out.empty()) out += ", ";
    if (run > 1) out += std::to_string(run) + " ";
    out += "P^" + std::to_string(dims_[k]);
    k += run;
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  out << "incidence condition: " << (incidence_condition ? "ok" : "FAILED") << " ("
      << conditions << " conditions, need " << required << ")\n";
  out << "no hyperplanes: " << (no_hyperplanes ? "ok" : "FAILED") << "\n";
  out << "nondegenerate: " << (nondegenerate ? "ok" : "FAILED");
  if (degenerate_pair) {
    out << " (P^" << degenerate_pair->first << " and P^" << degenerate_pair->second
        << " span less than a hyperplane)";
  }
  out << "\n";
  return out.str();
}

ValidationReport validate(const IncidenceBase& b) {
  ValidationReport r;
  const int n = b.ambient();
  r.conditions = b.condition_count();
  r.required = 2 * n - 3;
  r.incidence_condition = r.conditions == r.required;
  r.no_hyperplanes = std::all_of(b.dims().begin(), b.dims().end(),
                                 [n](int d) { return d <= n - 2; });
  // Dimensions are sorted, so the two smallest give the smallest pair sum.
  r.nondegenerate = b.size() < 2 || b.dim(0) + b.dim(1) >= n - 1;
  if (!r.nondegenerate) r.degenerate_pair = std::pair{b.dim(0), b.dim(1)};
  return r;
}

InvalidBase::InvalidBase(const IncidenceBase& base, ValidationReport report)
    : std::invalid_argument("invalid incidence base " + base.to_string() + "\n" +
                            report.to_string()),
      report_(std::move(report)) {}

void require_valid(const IncidenceBase& b) {
  ValidationReport r = validate(b);
  if (!r.ok()) throw InvalidBase(b, std::move(r));
}

IncidenceBase normalize(const IncidenceBase& b) {
  int n = b.ambient();
  std::vector<int> dims(b.dims().begin(), b.dims().end());
  for (;;) {
    std::erase_if(dims, [n](int d) { return d >= n - 1; });
    if (dims.size() < 2 || dims[0] + dims[1] >= n - 1) break;
    // Lines meeting P^{n_1} and P^{n_2} lie in their span P^M; every other
    // space is cut down to its trace on that span.
    const int span = dims[0] + dims[1] + 1;
    const int drop = n - span;
    for (std::size_t k = 2; k < dims.size(); ++k) {
      dims[k] -= drop;
      if (dims[k] < 0) {
        throw Unrealizable("base " + b.to_string() +
                           " is empty: a space misses the span P^" +
                           std::to_string(span));
      }
    }
    n = span;
    std::sort(dims.begin(), dims.end());
  }
  return IncidenceBase(n, std::move(dims));
}

Count degree(const IncidenceBase& b) {
  require_valid(b);
  std::vector<int> codims = b.codims();
  codims.push_back(1);  // general P^{n-2}
  return intersection_number(b.ambient(), codims);
}

Count directrix_degree(const IncidenceBase& b, std::size_t k) {
  require_valid(b);
  if (k >= b.size()) {
    throw DomainError("base space index " + std::to_string(k) + " out of range for " +
                      b.to_string());
  }
  const int n = b.ambient();
  // A point base space carries no curve.
  if (b.dim(k) == 0) return 0;
  std::vector<int> codims = b.codims();
  codims[k] = n - b.dim(k);
  return intersection_number(n, codims);
}

}  // namespace incidence
