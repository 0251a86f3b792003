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

#include "incidence/ruled.hpp"

#include <algorithm>

#include "incidence/errors.hpp"

namespace incidence {

namespace {

// Speciality indices of the two directrix spans; zero for g <= 1.
constexpr int kSpecialityLow = 0;
constexpr int kSpecialityHigh = 0;

// h^0 of a degree-d class on an elliptic curve.
Count h0_elliptic_class(int degree, bool trivial) {
  if (degree > 0) return degree;
  if (degree == 0) return trivial ? 1 : 0;
  return 0;
}

bool normalizing_divisor_trivial(const RuledSurfaceModel& model) {
  if (model.e != 0) return false;
  return model.base_genus == 0 || model.e_divisor_trivial;
}

std::vector<int> repeat(std::vector<int> dims, int count, int dim) {
  dims.insert(dims.end(), static_cast<std::size_t>(count), dim);
  return dims;
}

}  // namespace

void RuledSurfaceModel::check() const {
  if (a != 1) throw DomainError("scroll models need a = 1, got " + std::to_string(a));
  if (base_genus == 0) {
    if (!decomposable) throw DomainError("rational ruled surfaces are decomposable");
    if (e < 0) throw DomainError("rational ruled surfaces have e >= 0");
  } else if (base_genus == 1) {
    if (!decomposable && e != -1 && e != 0) {
      throw DomainError("indecomposable elliptic ruled surfaces have e = -1 or 0");
    }
    if (decomposable && e < 0) throw DomainError("decomposable ruled surfaces have e >= 0");
  } else {
    throw DomainError("only base genus 0 and 1 are modeled, got " + std::to_string(base_genus));
  }
}

std::string RuledSurfaceModel::to_string() const {
  std::string out = "g=" + std::to_string(base_genus) + " e=" + std::to_string(e) +
                    " m=" + std::to_string(m);
  out += decomposable ? " decomposable" : " indecomposable";
  if (base_genus == 1 && e == 0 && decomposable) {
    out += e_divisor_trivial ? " (e~0)" : " (e!~0)";
  }
  return out;
}

Count h0_rational(int a, int m, int e) {
  if (a < 0 || e < 0) throw DomainError("h0_rational needs a >= 0 and e >= 0");
  Count total = 0;
  for (int j = 0; j <= a; ++j) {
    const Count term = static_cast<Count>(m) - static_cast<Count>(j) * e + 1;
    if (term > 0) total = checked_add(total, term);
  }
  return total;
}

Count h0_elliptic_decomposable(int m, int e, bool e_trivial) {
  return h0_elliptic_class(m, true) + h0_elliptic_class(m - e, e_trivial);
}

bool very_ample(const RuledSurfaceModel& model) {
  model.check();
  if (model.base_genus == 0) return model.m > model.e;
  return model.m >= model.e + 3;
}

EmbeddingInvariants embedding_invariants(const RuledSurfaceModel& model) {
  if (!very_ample(model)) {
    throw DomainError("C_0 + b f is not very ample for " + model.to_string());
  }
  const int g = model.base_genus;
  return {2 * model.m - model.e, 2 * (model.m - g) - model.e + 1};
}

std::string to_string(IncidenceClause clause) {
  switch (clause) {
    case IncidenceClause::kRationalDirectrixLine: return "rational, directrix line (m = e+1)";
    case IncidenceClause::kRationalBalanced: return "rational, e = 0";
    case IncidenceClause::kRationalNearlyBalanced: return "rational, e = 1";
    case IncidenceClause::kEllipticIndecomposable: return "elliptic, e = -1, m = 2";
    case IncidenceClause::kEllipticTrivial: return "elliptic, e ~ 0, m = 4";
    case IncidenceClause::kEllipticDecomposable: return "elliptic decomposable, m = e+3";
  }
  return "?";
}

std::vector<IncidenceClause> matching_clauses(const RuledSurfaceModel& model) {
  model.check();
  const int e = model.e;
  const int m = model.m;
  std::vector<IncidenceClause> out;
  if (model.base_genus == 0) {
    if (m == e + 1) out.push_back(IncidenceClause::kRationalDirectrixLine);
    if (e == 0) out.push_back(IncidenceClause::kRationalBalanced);
    if (e == 1) out.push_back(IncidenceClause::kRationalNearlyBalanced);
    return out;
  }
  if (!model.decomposable) {
    if (e == -1 && m == 2) out.push_back(IncidenceClause::kEllipticIndecomposable);
    return out;
  }
  if (e == 0 && model.e_divisor_trivial && m == 4) {
    out.push_back(IncidenceClause::kEllipticTrivial);
  }
  if (e >= 0 && e <= 3 && m == e + 3 && !(e == 0 && model.e_divisor_trivial)) {
    out.push_back(IncidenceClause::kEllipticDecomposable);
  }
  return out;
}

SectionCountCriterion rational_section_criterion(int e, int m) {
  SectionCountCriterion c;
  c.lhs = checked_add(checked_mul(m, h0_rational(1, 0, e)),
                      checked_mul(m - e, h0_rational(1, e, e)));
  c.rhs = 2 * (2 * static_cast<Count>(m) - e + 1) - 3;
  return c;
}

bool is_incidence(const RuledSurfaceModel& model) {
  if (!very_ample(model)) {
    throw DomainError("C_0 + b f is not very ample for " + model.to_string());
  }
  const bool incidence = !matching_clauses(model).empty();
  if (model.base_genus == 0 && model.e >= 1) {
    const SectionCountCriterion c = rational_section_criterion(model.e, model.m);
    if (c.holds() != incidence) {
      throw ConsistencyError("classification and section count disagree for " +
                             model.to_string());
    }
  }
  return incidence;
}

IncidenceBase predicted_base(const RuledSurfaceModel& model, IncidenceClause clause) {
  const int e = model.e;
  const int m = model.m;
  switch (clause) {
    case IncidenceClause::kRationalDirectrixLine: {
      const int n = e + 3;
      return normalize(IncidenceBase(n, repeat({1}, n - 1, n - 2)));
    }
    case IncidenceClause::kRationalBalanced:
      return normalize(IncidenceBase(2 * m + 1, repeat({m + 1}, 3, m)));
    case IncidenceClause::kRationalNearlyBalanced:
      return normalize(IncidenceBase(2 * m, repeat({m - 1}, 3, m)));
    case IncidenceClause::kEllipticIndecomposable:
      return IncidenceBase(4, {2, 2, 2, 2, 2});
    case IncidenceClause::kEllipticTrivial:
      return IncidenceBase(7, {3, 3, 3, 5, 5});
    case IncidenceClause::kEllipticDecomposable:
      return normalize(
          IncidenceBase(2 * m - e - 1, repeat(repeat({2}, e + 1, e + 2), 3 - e, e + 3)));
  }
  throw DomainError("unknown clause");
}

IncidenceBase predicted_base(const RuledSurfaceModel& model) {
  if (!is_incidence(model)) {
    throw DomainError(model.to_string() + " is not an incidence scroll");
  }
  const std::vector<IncidenceClause> clauses = matching_clauses(model);
  IncidenceBase first = predicted_base(model, clauses.front());
  for (std::size_t k = 1; k < clauses.size(); ++k) {
    if (predicted_base(model, clauses[k]) != first) {
      throw ConsistencyError("overlapping clauses predict different bases for " +
                             model.to_string());
    }
  }
  return first;
}

std::vector<SpaceRequirement> base_structure_constraints(const RuledSurfaceModel& model) {
  model.check();
  if (!model.decomposable) {
    throw DomainError("base structure constraints apply to decomposable scrolls");
  }
  const int g = model.base_genus;
  const int e = model.e;
  const int m = model.m;
  const int low = m - e - g + kSpecialityLow;    // span of C_0
  const int high = m - g + kSpecialityHigh;      // span of C_0 - e f
  if (normalizing_divisor_trivial(model)) return {{low, 3}};

  const int family = e + 2 - g;  // independent curves in |C_0 - e f|
  const int speciality = kSpecialityLow + kSpecialityHigh;
  const bool feasible = high + family * low <= 4 * (m - g) - 2 * e + 2 * speciality - 1;
  const int need = feasible ? std::max(family, 1) : 1;
  if (low == high) return {{low, 1 + need}};
  return {{low, 1}, {high, need}};
}

bool satisfies(const IncidenceBase& b, const std::vector<SpaceRequirement>& reqs) {
  return std::all_of(reqs.begin(), reqs.end(), [&b](const SpaceRequirement& r) {
    return std::count(b.dims().begin(), b.dims().end(), r.dimension) >= r.min_count;
  });
}

RuledSurfaceModel model_of(const ScrollInvariants& inv) {
  RuledSurfaceModel model;
  model.base_genus = inv.genus;
  model.e = inv.e;
  model.decomposable = inv.decomposable;
  model.e_divisor_trivial = inv.bundle.e_divisor_trivial;
  model.a = 1;
  model.m = inv.divisor_degree;
  return model;
}

}  // namespace incidence
