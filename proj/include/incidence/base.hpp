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

// Incidence bases: sets of linear subspaces P^{n_1}, ..., P^{n_r} of P^n in
// general position. The lines meeting all of them sweep an incidence scroll
// whenever they form a curve in G(1,n).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "incidence/checked.hpp"

namespace incidence {

// Ambient dimension plus a sorted multiset of subspace dimensions.
class IncidenceBase {
 public:
  // Requires n >= 2 and 0 <= n_i <= n-1. Dimensions are sorted.
  IncidenceBase(int ambient, std::vector<int> dims);

  int ambient() const { return ambient_; }
  std::span<const int> dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  int dim(std::size_t k) const { return dims_.at(k); }

  // Codimension n-1-n_i of the Schubert condition imposed by each space.
  std::vector<int> codims() const;
  // sum (n-1-n_i); the incidence condition asks for 2n-3.
  int condition_count() const;

  // "n:d1,d2,..."
  std::string to_string() const;
  // "P^1, 3 P^2"
  std::string histogram() const;

  friend auto operator<=>(const IncidenceBase&, const IncidenceBase&) = default;

 private:
  int ambient_;
  std::vector<int> dims_;
};

struct ValidationReport {
  int conditions = 0;           // sum (n-1-n_i)
  int required = 0;             // 2n-3
  bool incidence_condition = false;
  bool no_hyperplanes = false;  // every n_i <= n-2
  bool nondegenerate = false;   // n_i + n_j >= n-1 for every pair
  // Smallest-sum pair violating nondegeneracy, as dimensions.
  std::optional<std::pair<int, int>> degenerate_pair;

  bool ok() const { return incidence_condition && no_hyperplanes && nondegenerate; }
  std::string to_string() const;
};

ValidationReport validate(const IncidenceBase& b);

class InvalidBase : public std::invalid_argument {
 public:
  InvalidBase(const IncidenceBase& base, ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Throws InvalidBase unless validate(b).ok().
void require_valid(const IncidenceBase& b);

// Fixpoint of dropping hyperplanes and restricting a degenerate pair to
// its span P^{n_i+n_j+1}. The pair with the smallest sum goes first.
// Throws Unrealizable when a dimension would become negative.
IncidenceBase normalize(const IncidenceBase& b);

// Lines meeting the base and a general P^{n-2}.
Count degree(const IncidenceBase& b);

// Degree of the directrix curve the scroll traces on the k-th base space:
// the base space is replaced by a general hyperplane section of itself.
Count directrix_degree(const IncidenceBase& b, std::size_t k);

enum class BundleKind { kDecomposable, kIndecomposable };

struct BundleDescriptor {
  BundleKind kind = BundleKind::kDecomposable;
  int base_genus = 0;
  int e = 0;
  // Whether the normalizing divisor is trivial; meaningful for
  // base_genus == 1 and e == 0 only.
  bool e_divisor_trivial = false;

  bool decomposable() const { return kind == BundleKind::kDecomposable; }
  friend bool operator==(const BundleDescriptor&, const BundleDescriptor&) = default;
};

struct ScrollInvariants {
  Count degree = 0;
  int genus = 0;
  int ambient = 0;
  int e = 0;
  int divisor_degree = 0;  // m = deg of the divisor b in H ~ C_0 + b f
  Count min_directrix_degree = 0;
  bool decomposable = true;
  int speciality = 0;  // i in n = d - 2g + 1 + i
  BundleDescriptor bundle;

  friend bool operator==(const ScrollInvariants&, const ScrollInvariants&) = default;
};

// Degree, genus (degeneration recursion), speciality, minimal directrix,
// e, m and the bundle type. Throws ConsistencyError when the speciality
// comes out negative, or nonzero for genus 0 or 1.
ScrollInvariants invariants(const IncidenceBase& b);

}  // namespace incidence
