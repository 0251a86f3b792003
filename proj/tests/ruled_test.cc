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

#include <vector>

#include "gtest/gtest.h"
#include "incidence/errors.hpp"

namespace incidence {
namespace {

RuledSurfaceModel Rational(int e, int m) {
  RuledSurfaceModel model;
  model.e = e;
  model.m = m;
  return model;
}

RuledSurfaceModel Elliptic(int e, int m, bool decomposable = true, bool e_trivial = false) {
  RuledSurfaceModel model;
  model.base_genus = 1;
  model.e = e;
  model.m = m;
  model.decomposable = decomposable;
  model.e_divisor_trivial = e_trivial;
  return model;
}

// Every incidence model with small invariants.
std::vector<RuledSurfaceModel> IncidenceModels() {
  std::vector<RuledSurfaceModel> out;
  for (int e = 0; e <= 8; ++e) {
    for (int m = e + 1; m <= 10; ++m) {
      const RuledSurfaceModel model = Rational(e, m);
      if (is_incidence(model)) out.push_back(model);
    }
  }
  out.push_back(Elliptic(-1, 2, false));
  out.push_back(Elliptic(0, 4, true, true));
  for (int e = 0; e <= 3; ++e) out.push_back(Elliptic(e, e + 3));
  return out;
}

TEST(ModelTest, Check) {
  EXPECT_NO_THROW(Rational(3, 4).check());
  EXPECT_THROW(Rational(-1, 2).check(), DomainError);
  EXPECT_THROW(Elliptic(1, 4, false).check(), DomainError);
  EXPECT_THROW(Elliptic(-1, 4, true).check(), DomainError);
  RuledSurfaceModel genus_two = Rational(0, 3);
  genus_two.base_genus = 2;
  EXPECT_THROW(genus_two.check(), DomainError);
}

TEST(SectionCountTest, Rational) {
  EXPECT_EQ(h0_rational(1, 0, 2), 1);
  EXPECT_EQ(h0_rational(1, 2, 2), 4);
  EXPECT_EQ(h0_rational(0, 3, 5), 4);
  EXPECT_EQ(h0_rational(2, 3, 2), 4 + 2);
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(h0_rational(1, m, 0), 2 * (m + 1));
  EXPECT_THROW(h0_rational(1, 2, -1), DomainError);
}

TEST(SectionCountTest, EllipticDecomposable) {
  // C_0 - e f: deg b = e and b + e is trivial.
  for (int e = 1; e <= 6; ++e) EXPECT_EQ(h0_elliptic_decomposable(e, e, true), e + 1);
  EXPECT_EQ(h0_elliptic_decomposable(4, 0, true), 8);
  EXPECT_EQ(h0_elliptic_decomposable(0, 0, false), 1);
  EXPECT_EQ(h0_elliptic_decomposable(0, 0, true), 2);
  // Riemann-Roch: C_0 + b f is nonspecial once both summands are positive.
  for (int e = 0; e <= 4; ++e) {
    for (int m = e + 1; m <= 10; ++m) {
      EXPECT_EQ(h0_elliptic_decomposable(m, e, false), 2 * m - e);
    }
  }
}

TEST(VeryAmpleTest, Examples) {
  EXPECT_TRUE(very_ample(Rational(2, 4)));
  EXPECT_FALSE(very_ample(Elliptic(1, 3)));
  EXPECT_TRUE(very_ample(Elliptic(1, 4)));
  EXPECT_FALSE(very_ample(Rational(3, 3)));
  EXPECT_TRUE(very_ample(Elliptic(-1, 2, false)));
}

TEST(EmbeddingTest, Examples) {
  EXPECT_EQ(embedding_invariants(Elliptic(-1, 2, false)), (EmbeddingInvariants{5, 4}));
  EXPECT_EQ(embedding_invariants(Rational(1, 4)), (EmbeddingInvariants{7, 8}));
  EXPECT_EQ(embedding_invariants(Rational(0, 1)), (EmbeddingInvariants{2, 3}));
  EXPECT_THROW(embedding_invariants(Rational(2, 2)), DomainError);
}

TEST(IsIncidenceTest, Examples) {
  EXPECT_FALSE(is_incidence(Rational(2, 4)));
  EXPECT_TRUE(is_incidence(Elliptic(3, 6)));
  for (int m = 3; m <= 8; ++m) EXPECT_FALSE(is_incidence(Elliptic(0, m, false)));
  EXPECT_TRUE(is_incidence(Elliptic(0, 4, true, true)));
  EXPECT_FALSE(is_incidence(Elliptic(0, 5, true, true)));
  EXPECT_TRUE(is_incidence(Elliptic(0, 3)));
  EXPECT_FALSE(is_incidence(Elliptic(0, 3, true, true)));
  EXPECT_FALSE(is_incidence(Elliptic(4, 7)));
}

TEST(IsIncidenceTest, CounterexampleSectionCount) {
  const SectionCountCriterion c = rational_section_criterion(2, 4);
  EXPECT_EQ(c.lhs, 4 * 1 + 2 * 4);
  EXPECT_EQ(c.rhs, 11);
  EXPECT_FALSE(c.holds());
}

TEST(IsIncidenceTest, AgreesWithSectionCountOnGrid) {
  for (int e = 1; e <= 6; ++e) {
    for (int m = e + 1; m <= 12; ++m) {
      const bool incidence = is_incidence(Rational(e, m));
      EXPECT_EQ(incidence, rational_section_criterion(e, m).holds()) << "e=" << e << " m=" << m;
      EXPECT_EQ(incidence, (e - 1) * (m - e - 1) == 0) << "e=" << e << " m=" << m;
    }
  }
}

TEST(ClausesTest, RationalOverlaps) {
  EXPECT_EQ(matching_clauses(Rational(0, 1)).size(), 2u);
  EXPECT_EQ(matching_clauses(Rational(1, 2)).size(), 2u);
  EXPECT_EQ(matching_clauses(Rational(0, 2)), std::vector{IncidenceClause::kRationalBalanced});
  EXPECT_EQ(predicted_base(Rational(0, 1)), IncidenceBase(3, {1, 1, 1}));
  EXPECT_EQ(predicted_base(Rational(1, 2)), IncidenceBase(4, {1, 2, 2, 2}));
}

TEST(ClausesTest, EllipticClausesAreExclusive) {
  for (const RuledSurfaceModel& model : IncidenceModels()) {
    if (model.base_genus == 1) EXPECT_EQ(matching_clauses(model).size(), 1u) << model.to_string();
  }
}

TEST(PredictedBaseTest, Examples) {
  EXPECT_EQ(predicted_base(Rational(3, 4)), IncidenceBase(6, {1, 4, 4, 4, 4, 4}));
  EXPECT_EQ(predicted_base(Elliptic(1, 4)), IncidenceBase(6, {2, 3, 3, 4, 4}));
  EXPECT_EQ(predicted_base(Elliptic(0, 4, true, true)), IncidenceBase(7, {3, 3, 3, 5, 5}));
  EXPECT_EQ(predicted_base(Elliptic(-1, 2, false)), IncidenceBase(4, {2, 2, 2, 2, 2}));
  EXPECT_EQ(predicted_base(Rational(0, 3)), IncidenceBase(7, {3, 3, 3, 4}));
  EXPECT_EQ(predicted_base(Rational(1, 4)), IncidenceBase(8, {3, 4, 4, 4}));
  EXPECT_EQ(predicted_base(Elliptic(3, 6)), IncidenceBase(8, {2, 5, 5, 5, 5}));
  EXPECT_THROW(predicted_base(Rational(2, 4)), DomainError);
}

TEST(PredictedBaseTest, ReproducesModel) {
  for (const RuledSurfaceModel& model : IncidenceModels()) {
    const IncidenceBase b = predicted_base(model);
    ASSERT_TRUE(validate(b).ok()) << model.to_string();
    const ScrollInvariants inv = invariants(b);
    const EmbeddingInvariants emb = embedding_invariants(model);
    EXPECT_EQ(inv.degree, emb.degree) << model.to_string();
    EXPECT_EQ(inv.ambient, emb.ambient) << model.to_string();
    EXPECT_EQ(inv.genus, model.base_genus) << model.to_string();
    EXPECT_EQ(inv.e, model.e) << model.to_string();
    EXPECT_EQ(inv.divisor_degree, model.m) << model.to_string();
    EXPECT_EQ(inv.decomposable, model.decomposable) << model.to_string();
    const RuledSurfaceModel back = model_of(inv);
    EXPECT_EQ(back.e_divisor_trivial, model.base_genus == 1 && model.e_divisor_trivial);
    EXPECT_TRUE(is_incidence(back));
  }
}

TEST(BaseStructureTest, Examples) {
  EXPECT_EQ(base_structure_constraints(Elliptic(1, 4)),
            (std::vector<SpaceRequirement>{{2, 1}, {3, 2}}));
  EXPECT_EQ(base_structure_constraints(Rational(1, 3)),
            (std::vector<SpaceRequirement>{{2, 1}, {3, 3}}));
  EXPECT_EQ(base_structure_constraints(Elliptic(0, 4, true, true)),
            (std::vector<SpaceRequirement>{{3, 3}}));
  EXPECT_THROW(base_structure_constraints(Elliptic(-1, 2, false)), DomainError);
}

TEST(BaseStructureTest, SatisfiedByPredictedBases) {
  for (const RuledSurfaceModel& model : IncidenceModels()) {
    if (!model.decomposable) continue;
    EXPECT_TRUE(satisfies(predicted_base(model), base_structure_constraints(model)))
        << model.to_string();
  }
}

}  // namespace
}  // namespace incidence
