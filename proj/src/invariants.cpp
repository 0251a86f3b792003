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

#include <algorithm>
#include <limits>

#include "incidence/base.hpp"
#include "incidence/degeneration.hpp"
#include "incidence/errors.hpp"
#include "incidence/ruled.hpp"

namespace incidence {

namespace {

RuledSurfaceModel trivial_elliptic_model() {
  RuledSurfaceModel model;
  model.base_genus = 1;
  model.e = 0;
  model.decomposable = true;
  model.e_divisor_trivial = true;
  model.m = 4;
  return model;
}

}  // namespace

ScrollInvariants invariants(const IncidenceBase& b) {
  require_valid(b);
  ScrollInvariants inv;
  inv.ambient = b.ambient();
  inv.degree = degree(b);

  // The degeneration recursion is the genus; n = d - 2g + 1 + i then gives
  // the speciality, which must vanish in genus 0 and 1.
  inv.genus = genus_by_degeneration(b);
  const Count speciality = b.ambient() - inv.degree + 2 * inv.genus - 1;
  if (speciality < 0 || (inv.genus <= 1 && speciality != 0)) {
    throw ConsistencyError("nonspecial assumption violated for " + b.to_string() + ": d = " +
                           std::to_string(inv.degree) + ", g = " + std::to_string(inv.genus) +
                           " by degeneration, speciality " + std::to_string(speciality));
  }
  inv.speciality = static_cast<int>(speciality);

  inv.min_directrix_degree = std::numeric_limits<Count>::max();
  for (std::size_t k = 0; k < b.size(); ++k) {
    inv.min_directrix_degree = std::min(inv.min_directrix_degree, directrix_degree(b, k));
  }
  inv.e = static_cast<int>(inv.degree - 2 * inv.min_directrix_degree);
  inv.divisor_degree = static_cast<int>(inv.degree - inv.min_directrix_degree);
  // General position: P^{n_1} and P^{n_2} are disjoint iff n_1 + n_2 < n,
  // and nondegeneracy leaves n_1 + n_2 = n - 1 as the only disjoint case.
  inv.decomposable = b.size() < 2 || b.dim(0) + b.dim(1) == b.ambient() - 1;

  inv.bundle.kind = inv.decomposable ? BundleKind::kDecomposable : BundleKind::kIndecomposable;
  inv.bundle.base_genus = inv.genus;
  inv.bundle.e = inv.e;
  if (inv.genus == 1 && inv.e == 0 && inv.decomposable) {
    const RuledSurfaceModel trivial = trivial_elliptic_model();
    inv.bundle.e_divisor_trivial =
        inv.divisor_degree == trivial.m && b == predicted_base(trivial);
  }
  if (inv.genus <= 1 && !inv.decomposable && !(inv.genus == 1 && inv.e >= -1 && inv.e <= 0)) {
    throw ConsistencyError("indecomposable scroll " + b.to_string() +
                           " outside the elliptic e = -1, 0 range");
  }
  return inv;
}

}  // namespace incidence
