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

// Ruled surfaces X = P(E) over curves of genus 0 and 1 embedded as scrolls
// by H ~ C_0 + b f, deg b = m. Elliptic divisors are tracked by degree and,
// where it matters, a triviality flag.

#include <string>
#include <utility>
#include <vector>

#include "incidence/base.hpp"
#include "incidence/checked.hpp"

namespace incidence {

struct RuledSurfaceModel {
  int base_genus = 0;
  int e = 0;
  bool decomposable = true;
  bool e_divisor_trivial = false;  // base_genus == 1, e == 0 only
  int a = 1;                       // coefficient of C_0; scrolls have a = 1
  int m = 0;                       // deg b

  // Throws DomainError unless the (g, e, decomposable) triple exists.
  void check() const;
  std::string to_string() const;
};

// h^0 of O(a C_0 + m f) on the rational ruled surface X_e.
Count h0_rational(int a, int m, int e);

// h^0 of O(C_0 + b f) on P(O_C + O_C(e)) over an elliptic curve, deg b = m,
// as h^0(O_C(b)) + h^0(O_C(b + e)). A degree-0 first summand is the trivial
// class; a degree-0 second summand is trivial iff e_trivial.
Count h0_elliptic_decomposable(int m, int e, bool e_trivial);

bool very_ample(const RuledSurfaceModel& model);

struct EmbeddingInvariants {
  int degree = 0;
  int ambient = 0;
  friend bool operator==(const EmbeddingInvariants&, const EmbeddingInvariants&) = default;
};

// d = 2m - e, n = 2(m - g) - e + 1 (nonspecial embedding).
EmbeddingInvariants embedding_invariants(const RuledSurfaceModel& model);

enum class IncidenceClause {
  kRationalDirectrixLine,   // g = 0, m = e + 1
  kRationalBalanced,        // g = 0, e = 0
  kRationalNearlyBalanced,  // g = 0, e = 1
  kEllipticIndecomposable,  // g = 1, e = -1, m = 2
  kEllipticTrivial,         // g = 1, e ~ 0, m = 4
  kEllipticDecomposable,    // g = 1 decomposable, 0 <= e <= 3, m = e + 3
};

std::string to_string(IncidenceClause clause);

// Every clause of the classification the model satisfies. For g = 0 the
// clauses overlap at (e, m) = (0, 1) and (1, 2).
std::vector<IncidenceClause> matching_clauses(const RuledSurfaceModel& model);

// Whether the scroll is cut out by incidences. For g = 0, e >= 1 the answer
// is cross-checked against the section-count criterion and a disagreement
// throws ConsistencyError.
bool is_incidence(const RuledSurfaceModel& model);

// m h^0(C_0) + (m - e) h^0(C_0 + e f) against 2(2m - e + 1) - 3, g = 0.
struct SectionCountCriterion {
  Count lhs = 0;
  Count rhs = 0;
  bool holds() const { return lhs == rhs; }
};
SectionCountCriterion rational_section_criterion(int e, int m);

// The base realizing an incidence model (normalized).
IncidenceBase predicted_base(const RuledSurfaceModel& model, IncidenceClause clause);
IncidenceBase predicted_base(const RuledSurfaceModel& model);

struct SpaceRequirement {
  int dimension = 0;
  int min_count = 0;
  friend bool operator==(const SpaceRequirement&, const SpaceRequirement&) = default;
};

// Base spaces any general-position base of a decomposable scroll must
// contain: the span P^{m-e-g} of C_0, the span P^{m-g} of C_0 - e f, and
// when feasible as many P^{m-g} as independent curves in |C_0 - e f|; three
// P^{m-g} when the normalizing divisor is trivial.
std::vector<SpaceRequirement> base_structure_constraints(const RuledSurfaceModel& model);

bool satisfies(const IncidenceBase& b, const std::vector<SpaceRequirement>& reqs);

// The model a validated base defines, read off its invariants.
RuledSurfaceModel model_of(const ScrollInvariants& inv);

}  // namespace incidence
