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

#include "incidence/classify.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "incidence/degeneration.hpp"
#include "incidence/errors.hpp"
#include "incidence/ruled.hpp"
#include "incidence/schubert.hpp"

namespace incidence {

namespace {

void extend(int n, int remaining, int min_dim, std::vector<int>& dims,
            std::vector<IncidenceBase>& out) {
  if (remaining == 0) {
    if (dims.size() < 2 || dims[0] + dims[1] >= n - 1) out.emplace_back(n, dims);
    return;
  }
  for (int d = min_dim; d <= n - 2; ++d) {
    const int codim = n - 1 - d;
    if (codim > remaining) continue;
    // The two smallest spaces must span at least a hyperplane.
    if (dims.size() == 1 && dims[0] + d < n - 1) continue;
    dims.push_back(d);
    extend(n, remaining - codim, d, dims, out);
    dims.pop_back();
  }
}

MinDirectrix min_directrix_of(const IncidenceBase& b, const ScrollInvariants& inv) {
  MinDirectrix md;
  md.degree = inv.min_directrix_degree;
  // Span of a minimal directrix: the base space carrying it.
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (directrix_degree(b, k) == md.degree) {
      md.ambient = b.dim(k);
      break;
    }
  }
  Count sections = 0;
  if (inv.genus == 0) {
    sections = h0_rational(1, 0, inv.e);
  } else if (inv.genus == 1 && inv.decomposable) {
    sections = h0_elliptic_decomposable(0, inv.e, inv.bundle.e_divisor_trivial);
  } else if (inv.genus == 1) {
    // e = -1: the minimal sections move in a family parametrized by C.
    md.kind = DirectrixCount::kFamily;
    return md;
  } else {
    return md;
  }
  if (sections >= 2) {
    md.kind = DirectrixCount::kFamily;
  } else {
    md.kind = DirectrixCount::kExact;
    // e = 0 with e !~ 0: C_0 and C_0 - e f are both minimal.
    md.count = (inv.genus == 1 && inv.e == 0) ? 2 : sections;
  }
  return md;
}

}  // namespace

std::string MinDirectrix::count_label() const {
  switch (kind) {
    case DirectrixCount::kExact: return std::to_string(count);
    case DirectrixCount::kFamily: return "∞¹";
    case DirectrixCount::kUnknown: return "?";
  }
  return "?";
}

std::vector<IncidenceBase> candidate_bases(int n) {
  if (n < 3) throw DomainError("enumeration needs n >= 3");
  std::vector<IncidenceBase> out;
  std::vector<int> dims;
  extend(n, 2 * n - 3, 1, dims, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EnumeratedBase> enumerate_bases(int n) {
  std::vector<EnumeratedBase> out;
  for (IncidenceBase& b : candidate_bases(n)) {
    ScrollInvariants inv = invariants(b);
    out.push_back({std::move(b), std::move(inv)});
  }
  return out;
}

TableRow make_row(const EnumeratedBase& entry) {
  return {entry.base, entry.invariants, min_directrix_of(entry.base, entry.invariants)};
}

Tables build_tables(int max_n) {
  if (max_n < 3) throw DomainError("tables need max_n >= 3");
  Tables t;
  for (int n = 3; n <= max_n; ++n) {
    for (const EnumeratedBase& entry : enumerate_bases(n)) {
      if (entry.invariants.genus == 0) t.rational.push_back(make_row(entry));
      if (entry.invariants.genus == 1) t.elliptic.push_back(make_row(entry));
    }
  }
  return t;
}

AuditReport audit(int max_n) {
  AuditReport report;
  report.max_n = max_n;
  using Key = std::tuple<Count, int, int, int>;
  std::map<Key, IncidenceBase> seen;
  std::map<Key, IncidenceBase> seen_higher;
  auto violation = [&report](const IncidenceBase& b, const std::string& what) {
    report.violations.push_back(b.to_string() + ": " + what);
  };

  for (int n = 3; n <= max_n; ++n) {
    for (const IncidenceBase& b : candidate_bases(n)) {
      ++report.bases_checked;
      try {
        std::vector<int> codims = b.codims();
        codims.push_back(1);
        const Count d = degree(b);
        if (d != oracle_intersection_number(n, codims)) {
          violation(b, "Pieri and bialternant degrees differ");
        }
        const Count excess = d + 1 - n;
        const int g = genus_by_degeneration(b);
        if (excess < 0 || excess % 2 != 0 || excess / 2 != g) {
          if (g <= 1) {
            violation(b, "genus by degeneration " + std::to_string(g) +
                             " disagrees with (d+1-n)/2, d = " + std::to_string(d));
            continue;
          }
          report.special.push_back(b.to_string() + ": d = " + std::to_string(d) + ", g = " +
                                   std::to_string(g) + ", speciality " +
                                   std::to_string(n - d + 2 * g - 1));
        }
        const ScrollInvariants inv = invariants(b);
        const Key key{inv.degree, inv.genus, inv.ambient, inv.e};
        if (inv.genus >= 2) {
          auto [it, fresh] = seen_higher.emplace(key, b);
          if (!fresh) {
            report.notes.push_back(b.to_string() + " shares (d,g,n,e) with " +
                                   it->second.to_string());
          }
          continue;
        }

        if (inv.genus == 0) ++report.rational_rows;
        if (inv.genus == 1) ++report.elliptic_rows;
        auto [it, fresh] = seen.emplace(key, b);
        if (!fresh) violation(b, "shares (d,g,n,e) with " + it->second.to_string());

        if (inv.genus == 1 && !inv.decomposable && inv.e == 0) {
          violation(b, "indecomposable elliptic scroll with e = 0");
        }
        const RuledSurfaceModel model = model_of(inv);
        if (!very_ample(model)) {
          violation(b, "hyperplane class not very ample for " + model.to_string());
          continue;
        }
        if (!is_incidence(model)) {
          violation(b, model.to_string() + " matches no classification clause");
          continue;
        }
        // Overlapping rational clauses are accepted when they predict the
        // same base; predicted_base throws otherwise.
        if (predicted_base(model) != b) {
          violation(b, "predicted base is " + predicted_base(model).to_string());
        }
        if (inv.decomposable && !satisfies(b, base_structure_constraints(model))) {
          violation(b, "missing the base spaces spanned by the directrices");
        }
        const int span = static_cast<int>(inv.min_directrix_degree) - inv.genus;
        if (min_directrix_of(b, inv).ambient != span) {
          violation(b, "minimal directrix does not span a base space P^" +
                           std::to_string(span));
        }
      } catch (const std::exception& ex) {
        violation(b, ex.what());
      }
    }
  }
  return report;
}

}  // namespace incidence
