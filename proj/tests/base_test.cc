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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "incidence/classify.hpp"
#include "incidence/errors.hpp"

namespace incidence {
namespace {

// Random multiset of dimensions in [0, n-1] satisfying the incidence
// condition, possibly with hyperplanes and degenerate pairs.
IncidenceBase RandomIncidenceBase(std::mt19937& rng) {
  std::uniform_int_distribution<int> ambient(3, 9);
  const int n = ambient(rng);
  std::vector<int> dims;
  int remaining = 2 * n - 3;
  while (remaining > 0) {
    std::uniform_int_distribution<int> codim(0, std::min(remaining, n - 1));
    const int c = codim(rng);
    dims.push_back(n - 1 - c);
    remaining -= c;
  }
  return IncidenceBase(n, dims);
}

TEST(IncidenceBaseTest, SortsAndFormats) {
  const IncidenceBase b(6, {4, 2, 3, 4, 3});
  EXPECT_EQ(b.to_string(), "6:2,3,3,4,4");
  EXPECT_EQ(b.histogram(), "P^2, 2 P^3, 2 P^4");
  EXPECT_EQ(b.condition_count(), 3 + 2 + 2 + 1 + 1);
  EXPECT_EQ(b.codims(), (std::vector{3, 2, 2, 1, 1}));
}

TEST(IncidenceBaseTest, RejectsImproperSpaces) {
  EXPECT_THROW(IncidenceBase(1, {0}), DomainError);
  EXPECT_THROW(IncidenceBase(4, {4}), DomainError);
  EXPECT_THROW(IncidenceBase(4, {-1, 2}), DomainError);
}

TEST(ValidateTest, EllipticQuinticBase) {
  const ValidationReport r = validate(IncidenceBase(4, {2, 2, 2, 2, 2}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.conditions, 5);
  EXPECT_EQ(r.required, 5);
}

TEST(ValidateTest, TooFewConditions) {
  const ValidationReport r = validate(IncidenceBase(4, {2, 2}));
  EXPECT_FALSE(r.incidence_condition);
  EXPECT_EQ(r.conditions, 2);
  EXPECT_TRUE(r.no_hyperplanes);
  EXPECT_TRUE(r.nondegenerate);
  EXPECT_FALSE(r.ok());
}

TEST(ValidateTest, TooManyConditionsAndDegeneratePair) {
  const ValidationReport r = validate(IncidenceBase(4, {1, 1, 2, 2}));
  EXPECT_FALSE(r.incidence_condition);
  EXPECT_EQ(r.conditions, 6);
  EXPECT_FALSE(r.nondegenerate);
  ASSERT_TRUE(r.degenerate_pair.has_value());
  EXPECT_EQ(*r.degenerate_pair, std::make_pair(1, 1));
}

TEST(ValidateTest, Hyperplane) {
  const ValidationReport r = validate(IncidenceBase(6, {2, 2, 3, 4, 5}));
  EXPECT_TRUE(r.incidence_condition);
  EXPECT_FALSE(r.no_hyperplanes);
  EXPECT_FALSE(r.nondegenerate);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(require_valid(IncidenceBase(6, {2, 2, 3, 4, 5})), InvalidBase);
}

TEST(NormalizeTest, DropsHyperplane) {
  EXPECT_EQ(normalize(IncidenceBase(6, {3, 3, 3, 4, 5})), IncidenceBase(6, {3, 3, 3, 4}));
}

TEST(NormalizeTest, DropsHyperplaneThenReducesPair) {
  EXPECT_EQ(normalize(IncidenceBase(6, {2, 2, 3, 4, 5})), IncidenceBase(5, {2, 2, 2, 3}));
}

TEST(NormalizeTest, NormalBaseUnchanged) {
  EXPECT_EQ(normalize(IncidenceBase(4, {1, 2, 2, 2})), IncidenceBase(4, {1, 2, 2, 2}));
}

TEST(NormalizeTest, EmptyConfiguration) {
  // Two lines of P^6 span a P^3 that a third line misses.
  EXPECT_THROW(normalize(IncidenceBase(6, {1, 1, 1})), Unrealizable);
}

TEST(NormalizeTest, IdempotentAndPreservesConditionCount) {
  std::mt19937 rng(7);
  int reduced = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const IncidenceBase b = RandomIncidenceBase(rng);
    const IncidenceBase once = normalize(b);
    EXPECT_EQ(normalize(once), once) << b.to_string();
    EXPECT_EQ(once.condition_count(), 2 * once.ambient() - 3) << b.to_string();
    const ValidationReport r = validate(once);
    EXPECT_TRUE(r.no_hyperplanes && r.nondegenerate) << b.to_string();
    if (once != b) ++reduced;
  }
  EXPECT_GT(reduced, 100);
}

TEST(DegreeTest, Examples) {
  EXPECT_EQ(degree(IncidenceBase(3, {1, 1, 1})), 2);
  EXPECT_EQ(degree(IncidenceBase(4, {2, 2, 2, 2, 2})), 5);
  EXPECT_EQ(degree(IncidenceBase(5, {2, 2, 3, 3, 3})), 6);
  EXPECT_THROW(degree(IncidenceBase(4, {2, 2})), InvalidBase);
}

TEST(DirectrixDegreeTest, Examples) {
  // At m = 1 the P^2 is a plane of P^3 and imposes nothing.
  for (int m = 2; m <= 8; ++m) {
    const IncidenceBase b(2 * m + 1, {m, m, m, m + 1});
    EXPECT_EQ(directrix_degree(b, 3), m + 1) << "m=" << m;
  }
  EXPECT_EQ(directrix_degree(IncidenceBase(5, {2, 2, 2, 3}), 0), 2);
  EXPECT_EQ(directrix_degree(IncidenceBase(3, {1, 1, 1}), 0), 1);
  EXPECT_THROW(directrix_degree(IncidenceBase(3, {1, 1, 1}), 3), DomainError);
}

TEST(DegreeTest, DirectricesOfTheTwoSmallestSpaces) {
  for (int n = 3; n <= 8; ++n) {
    for (const EnumeratedBase& entry : enumerate_bases(n)) {
      const IncidenceBase& b = entry.base;
      const Count d = degree(b);
      ASSERT_GE(d, 1);
      const Count d1 = directrix_degree(b, 0);
      const Count d2 = directrix_degree(b, 1);
      const int sum = b.dim(0) + b.dim(1);
      if (sum == n - 1) {
        EXPECT_EQ(d, d1 + d2) << b.to_string();
      } else if (sum == n) {
        EXPECT_EQ(d, d1 + d2 - 1) << b.to_string();
      }
    }
  }
}

TEST(InvariantsTest, EllipticSepticInP6) {
  const ScrollInvariants inv = invariants(IncidenceBase(6, {2, 3, 3, 4, 4}));
  EXPECT_EQ(inv.degree, 7);
  EXPECT_EQ(inv.genus, 1);
  EXPECT_EQ(inv.ambient, 6);
  EXPECT_EQ(inv.e, 1);
  EXPECT_EQ(inv.divisor_degree, 4);
  EXPECT_EQ(inv.min_directrix_degree, 3);
  EXPECT_TRUE(inv.decomposable);
  EXPECT_EQ(inv.speciality, 0);
  EXPECT_EQ(inv.bundle, (BundleDescriptor{BundleKind::kDecomposable, 1, 1, false}));
}

TEST(InvariantsTest, EllipticQuinticInP4) {
  const ScrollInvariants inv = invariants(IncidenceBase(4, {2, 2, 2, 2, 2}));
  EXPECT_EQ(inv.degree, 5);
  EXPECT_EQ(inv.genus, 1);
  EXPECT_EQ(inv.e, -1);
  EXPECT_EQ(inv.divisor_degree, 2);
  EXPECT_FALSE(inv.decomposable);
  EXPECT_EQ(inv.bundle.kind, BundleKind::kIndecomposable);
}

TEST(InvariantsTest, GenusTwoFamilyMember) {
  const ScrollInvariants inv = invariants(IncidenceBase(7, {3, 3, 4, 4, 5}));
  EXPECT_EQ(inv.degree, 10);
  EXPECT_EQ(inv.genus, 2);
  EXPECT_EQ(inv.speciality, 0);
}

TEST(InvariantsTest, TrivialNormalizingDivisor) {
  const ScrollInvariants inv = invariants(IncidenceBase(7, {3, 3, 3, 5, 5}));
  EXPECT_EQ(inv.degree, 8);
  EXPECT_EQ(inv.e, 0);
  EXPECT_TRUE(inv.bundle.e_divisor_trivial);
  const ScrollInvariants other = invariants(IncidenceBase(5, {2, 2, 3, 3, 3}));
  EXPECT_EQ(other.e, 0);
  EXPECT_FALSE(other.bundle.e_divisor_trivial);
}

// Hyperplane sections of these scrolls are complete intersections of
// 2n-3 hyperplane classes in G(1,n), so adjunction gives
// 2g - 2 = (n-4) d independently of any degeneration.
TEST(InvariantsTest, SpecialScrollsFromCodimensionOneConditions) {
  const int expected_genus[] = {8, 43, 199, 859};
  for (int n = 5; n <= 8; ++n) {
    const IncidenceBase b(n, std::vector<int>(2 * n - 3, n - 2));
    const ScrollInvariants inv = invariants(b);
    EXPECT_EQ(2 * inv.genus - 2, (n - 4) * inv.degree) << b.to_string();
    EXPECT_EQ(inv.genus, expected_genus[n - 5]);
    EXPECT_EQ(inv.speciality, n - inv.degree + 2 * inv.genus - 1);
    EXPECT_GT(inv.speciality, 0);
  }
  const ScrollInvariants p5 = invariants(IncidenceBase(5, std::vector<int>(7, 3)));
  EXPECT_EQ(p5.degree, 14);
  EXPECT_EQ(p5.speciality, 6);
}

TEST(InvariantsTest, PermutationInvariant) {
  EXPECT_EQ(invariants(IncidenceBase(6, {4, 3, 2, 4, 3})),
            invariants(IncidenceBase(6, {2, 3, 3, 4, 4})));
}

}  // namespace
}  // namespace incidence
