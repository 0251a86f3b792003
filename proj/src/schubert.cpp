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

#include "incidence/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "incidence/errors.hpp"

namespace incidence {

namespace {

void check_ambient(int n) {
  if (n < 2) {
    throw DomainError("G(1,n) needs n >= 2, got n = " + std::to_string(n));
  }
}

void check_product(int n, std::span<const int> codims) {
  check_ambient(n);
  long total = 0;
  for (int c : codims) {
    if (c < 0 || c > n - 1) {
      throw DomainError("codimension " + std::to_string(c) +
                        " outside [0, " + std::to_string(n - 1) + "]");
    }
    total += c;
  }
  if (total != 2L * n - 2) {
    throw DimensionMismatch("codimensions add up to " + std::to_string(total) +
                            ", expected dim G(1," + std::to_string(n) +
                            ") = " + std::to_string(2 * n - 2));
  }
}

}  // namespace

std::string SchubertClass::to_string() const {
  return "s(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

CycleSum::CycleSum(int ambient) : ambient_(ambient) { check_ambient(ambient); }

CycleSum CycleSum::unit(int ambient) {
  CycleSum s(ambient);
  s.add({0, 0}, 1);
  return s;
}

Count CycleSum::coefficient(SchubertClass cls) const {
  auto it = terms_.find(cls);
  return it == terms_.end() ? 0 : it->second;
}

void CycleSum::add(SchubertClass cls, Count coefficient) {
  if (!cls.fits(ambient_)) {
    throw DomainError(cls.to_string() + " does not fit G(1," +
                      std::to_string(ambient_) + ")");
  }
  if (coefficient == 0) return;
  if (!terms_.empty() &&
      terms_.begin()->first.codimension() != cls.codimension()) {
    throw DomainError("mixed codimensions in a cycle sum");
  }
  Count& slot = terms_[cls];
  slot = checked_add(slot, coefficient);
  if (slot == 0) terms_.erase(cls);
}

std::string CycleSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest first row first, the order in which Pieri expansions are read.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    if (it->second != 1) out << it->second << "*";
    out << it->first.to_string();
  }
  return out.str();
}

CycleSum pieri_multiply(const CycleSum& s, int c) {
  const int n = s.ambient();
  if (c < 0 || c > n - 1) {
    throw DomainError("special class sigma_" + std::to_string(c) +
                      " outside G(1," + std::to_string(n) + ")");
  }
  CycleSum out(n);
  for (const auto& [cls, coeff] : s.terms()) {
    // (a',b') with a' >= a >= b' >= b and a'+b' = a+b+c.
    const int target = cls.codimension() + c;
    for (int b2 = cls.b; b2 <= cls.a; ++b2) {
      const int a2 = target - b2;
      if (a2 < cls.a) break;
      if (a2 > n - 1) continue;
      out.add({a2, b2}, coeff);
    }
  }
  return out;
}

Count intersection_number(int n, std::span<const int> codims) {
  check_product(n, codims);
  std::vector<int> order(codims.begin(), codims.end());
  std::sort(order.begin(), order.end(), std::greater<>());
  CycleSum product = CycleSum::unit(n);
  for (int c : order) {
    if (c == 0) continue;
    product = pieri_multiply(product, c);
    if (product.empty()) return 0;
  }
  return product.coefficient({n - 1, n - 1});
}

Count oracle_intersection_number(int n, std::span<const int> codims) {
  check_product(n, codims);
  // Homogeneous polynomial in x, y stored by the exponent of x.
  std::vector<Count> poly{1};
  for (int c : codims) {
    std::vector<Count> next(poly.size() + static_cast<std::size_t>(c), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (int k = 0; k <= c; ++k) {
        next[i + k] = checked_add(next[i + k], poly[i]);
      }
    }
    poly = std::move(next);
  }
  // poly has degree 2n-2; [x^n y^(n-1)] (x - y) poly = poly[n-1] - poly[n].
  return checked_sub(poly[n - 1], poly[n]);
}

long expected_dimension(GrassmannContext ctx, std::span<const int> dims) {
  if (ctx.n < 2 || ctx.l < 0 || ctx.l >= ctx.n) {
    throw DomainError("G(l,n) needs 0 <= l < n and n >= 2");
  }
  long dim = static_cast<long>(ctx.l + 1) * (ctx.n - ctx.l);
  for (int d : dims) {
    if (d < 0 || d > ctx.n - 1) {
      throw DomainError("subspace dimension " + std::to_string(d) +
                        " outside [0, " + std::to_string(ctx.n - 1) + "]");
    }
    dim -= ctx.n - d - 1;
  }
  return dim;
}

}  // namespace incidence
