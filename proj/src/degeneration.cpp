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

#include "incidence/degeneration.hpp"

#include <map>
#include <utility>
#include <vector>

#include "incidence/errors.hpp"
#include "incidence/schubert.hpp"

namespace incidence {

namespace {

struct Pieces {
  int m = 0;
  IncidenceBase beta_dot;
  IncidenceBase beta_ddot;
  Count kappa = 0;
};

Pieces split(const IncidenceBase& b, std::size_t i, std::size_t j) {
  if (i == j || i >= b.size() || j >= b.size()) {
    throw DomainError("join needs two distinct base spaces of " + b.to_string());
  }
  const int n = b.ambient();
  const int m = b.dim(i) + b.dim(j) - n + 1;
  if (m < 0) {
    throw DomainError("P^" + std::to_string(b.dim(i)) + " and P^" + std::to_string(b.dim(j)) +
                      " cannot meet inside a hyperplane of P^" + std::to_string(n));
  }
  std::vector<int> dot{m};
  std::vector<int> ddot{b.dim(i), b.dim(j)};
  std::vector<int> kappa_codims{n - 2 - m};
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k == i || k == j) continue;
    dot.push_back(b.dim(k));
    ddot.push_back(b.dim(k) - 1);
    kappa_codims.push_back(n - 1 - b.dim(k));
  }
  Pieces p{m, IncidenceBase(n, std::move(dot)), IncidenceBase(n - 1, std::move(ddot)), 0};
  if (p.beta_dot.condition_count() != 2 * n - 3 ||
      p.beta_ddot.condition_count() != 2 * (n - 1) - 3) {
    throw ConsistencyError("join components of " + b.to_string() +
                           " violate the incidence condition");
  }
  // Common generators: lines of the hyperplane through P^m meeting the
  // traces P^{n_k-1}.
  p.kappa = intersection_number(n - 1, kappa_codims);
  return p;
}

struct Component {
  Count degree = 0;
  int genus = 0;
};

class Recursion {
 public:
  Component evaluate(const IncidenceBase& raw) {
    const IncidenceBase b = normalize(raw);
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
    Component c{degree(b), 0};
    if (c.degree > 2) {
      const DegenerationSplit s = join_pair(b, 0, 1);
      c.genus = static_cast<int>(s.genus());
    }
    memo_.emplace(b, c);
    return c;
  }

  DegenerationSplit join_pair(const IncidenceBase& b, std::size_t i, std::size_t j) {
    require_valid(b);
    Pieces p = split(b, i, j);
    Component first{1, 0};
    if (p.m > 0) first = evaluate(p.beta_dot);
    const Component second = evaluate(p.beta_ddot);
    DegenerationSplit s{p.m,         std::move(p.beta_dot), std::move(p.beta_ddot), p.kappa,
                        first.degree, first.genus,           second.degree,          second.genus};
    const Count d = degree(b);
    if (s.degree() != d) {
      throw ConsistencyError("join of " + b.to_string() + " along (" + std::to_string(i) + "," +
                             std::to_string(j) + "): component degrees " +
                             std::to_string(s.d1) + " + " + std::to_string(s.d2) +
                             " != " + std::to_string(d));
    }
    return s;
  }

 private:
  std::map<IncidenceBase, Component> memo_;
};

class AllPairs {
 public:
  std::set<int> evaluate(const IncidenceBase& raw) {
    const IncidenceBase b = normalize(raw);
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
    std::set<int> out;
    if (degree(b) <= 2) {
      out.insert(0);
    } else {
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          // Equal dimension pairs give identical splits.
          if (i > 0 && b.dim(i) == b.dim(i - 1)) continue;
          if (j > i + 1 && b.dim(j) == b.dim(j - 1)) continue;
          const Pieces p = split(b, i, j);
          const std::set<int> first = p.m > 0 ? evaluate(p.beta_dot) : std::set<int>{0};
          const std::set<int> second = evaluate(p.beta_ddot);
          for (int g1 : first) {
            for (int g2 : second) out.insert(static_cast<int>(g1 + g2 + p.kappa - 1));
          }
        }
      }
    }
    memo_.emplace(b, out);
    return out;
  }

 private:
  std::map<IncidenceBase, std::set<int>> memo_;
};

}  // namespace

DegenerationSplit join(const IncidenceBase& b, std::size_t i, std::size_t j,
                       std::optional<int> expected_genus) {
  Recursion rec;
  DegenerationSplit s = rec.join_pair(b, i, j);
  if (expected_genus && s.genus() != *expected_genus) {
    throw ConsistencyError("join of " + b.to_string() + " gives genus " +
                           std::to_string(s.genus()) + ", expected " +
                           std::to_string(*expected_genus));
  }
  return s;
}

IncidenceBase separate(const IncidenceBase& b, std::size_t i, std::size_t j,
                       bool add_hyperplane) {
  const int n = b.ambient();
  std::vector<int> dims(b.dims().begin(), b.dims().end());
  if (add_hyperplane) {
    dims.push_back(n - 1);
    j = dims.size() - 1;
  }
  if (i == j || i >= dims.size() || j >= dims.size()) {
    throw DomainError("separate needs two distinct base spaces of " + b.to_string());
  }
  if (dims[i] + dims[j] != n) {
    throw DomainError("P^" + std::to_string(dims[i]) + " and P^" + std::to_string(dims[j]) +
                      " do not meet in a single point of P^" + std::to_string(n));
  }
  std::vector<int> out{dims[i], dims[j]};
  int conditions_before = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    conditions_before += n - 1 - dims[k];
    if (k != i && k != j) out.push_back(dims[k] + 1);
  }
  IncidenceBase result(n + 1, std::move(out));
  if (result.condition_count() - conditions_before != 2) {
    throw ConsistencyError("separate of " + b.to_string() + " broke the condition count");
  }
  return result;
}

int genus_by_degeneration(const IncidenceBase& b) {
  require_valid(b);
  Recursion rec;
  return rec.evaluate(b).genus;
}

std::set<int> genus_over_all_pairs(const IncidenceBase& b) {
  require_valid(b);
  AllPairs rec;
  return rec.evaluate(b);
}

}  // namespace incidence
