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

#pragma once

// Degenerations of incidence scrolls. Moving two base spaces P^{n_i},
// P^{n_j} into a common hyperplane makes them meet in P^m, m = n_i+n_j-n+1,
// and the scroll breaks into the lines through P^m and the lines inside the
// hyperplane. Degree adds up; genus picks up the number of common
// generators minus one.

#include <cstddef>
#include <optional>
#include <set>

#include "incidence/base.hpp"
#include "incidence/checked.hpp"

namespace incidence {

struct DegenerationSplit {
  int intersection_dim = 0;  // m
  IncidenceBase beta_dot;    // {P^m} and the untouched spaces, in P^n
  IncidenceBase beta_ddot;   // {P^{n_i}, P^{n_j}} and the traces P^{n_k-1}, in P^{n-1}
  Count kappa = 0;           // common generators
  Count d1 = 0;
  int g1 = 0;
  Count d2 = 0;
  int g2 = 0;

  Count degree() const { return d1 + d2; }
  Count genus() const { return g1 + g2 + kappa - 1; }
};

// Splits b along the pair (i, j) of base-space indices. For m = 0 the first
// component is a plane (degree 1, genus 0). Components are normalized
// before their invariants are computed. Throws ConsistencyError if the
// degrees do not add up or if expected_genus is given and disagrees.
DegenerationSplit join(const IncidenceBase& b, std::size_t i, std::size_t j,
                       std::optional<int> expected_genus = std::nullopt);

// Inverse of an m = 0 join: P^{n_i} and P^{n_j} meeting in a point of P^n
// are pulled apart in P^{n+1}; every other space grows by one. With
// add_hyperplane a virtual P^{n-1} is appended and plays the role of j
// (j is then ignored).
IncidenceBase separate(const IncidenceBase& b, std::size_t i, std::size_t j,
                       bool add_hyperplane = false);

// Genus by repeated joins of the two smallest base spaces.
int genus_by_degeneration(const IncidenceBase& b);

// Every genus reachable by choosing any pair at every level of the
// recursion. A singleton when the genus does not depend on the choices.
std::set<int> genus_over_all_pairs(const IncidenceBase& b);

}  // namespace incidence
