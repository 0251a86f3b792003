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

// Schubert calculus on the Grassmannian G(1,n) of lines in P^n.
//
// Classes are indexed by two-row partitions (a,b) with n-1 >= a >= b >= 0.
// The special class sigma_c is (c,0); the lines meeting a fixed P^r form
// sigma_{n-1-r}. The point class is (n-1,n-1).

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "incidence/checked.hpp"

namespace incidence {

struct SchubertClass {
  int a = 0;
  int b = 0;

  constexpr int codimension() const { return a + b; }
  bool fits(int ambient) const { return b >= 0 && b <= a && a <= ambient - 1; }
  std::string to_string() const;

  friend auto operator<=>(const SchubertClass&, const SchubertClass&) = default;
};

// Integer combination of Schubert classes of G(1,n). Zero coefficients
// are never stored.
class CycleSum {
 public:
  explicit CycleSum(int ambient);

  // sigma_(0,0) with coefficient 1: the empty product.
  static CycleSum unit(int ambient);

  int ambient() const { return ambient_; }
  bool empty() const { return terms_.empty(); }
  const std::map<SchubertClass, Count>& terms() const { return terms_; }

  Count coefficient(SchubertClass cls) const;
  void add(SchubertClass cls, Count coefficient);

  std::string to_string() const;

  friend bool operator==(const CycleSum&, const CycleSum&) = default;

 private:
  int ambient_;
  std::map<SchubertClass, Count> terms_;
};

// s * sigma_c by the Pieri rule inside the 2 x (n-1) box.
CycleSum pieri_multiply(const CycleSum& s, int c);

// Degree of prod sigma_{c_i} in G(1,n); the codimensions must add up to
// 2n-2. Factors are applied in descending order.
Count intersection_number(int n, std::span<const int> codims);

// Same number by a route independent of Pieri: the coefficient of
// x^n y^(n-1) in (x - y) * prod h_{c_i}(x, y), i.e. the bialternant
// formula for the Schur function s_(n-1,n-1).
Count oracle_intersection_number(int n, std::span<const int> codims);

// G(l,n): l-planes in P^n.
struct GrassmannContext {
  int l = 1;
  int n = 2;
};

// Expected dimension of the lines (l-planes) meeting general subspaces of
// the given dimensions: (l+1)(n-l) - sum (n - n_j - 1). May be negative.
long expected_dimension(GrassmannContext ctx, std::span<const int> dims);

}  // namespace incidence
