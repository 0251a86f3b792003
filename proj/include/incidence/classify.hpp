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

// Exhaustive enumeration of incidence bases and the classification tables
// of rational and elliptic incidence scrolls.

#include <string>
#include <utility>
#include <vector>

#include "incidence/base.hpp"
#include "incidence/checked.hpp"

namespace incidence {

struct EnumeratedBase {
  IncidenceBase base;
  ScrollInvariants invariants;
};

// Every multiset of dimensions satisfying the constraints below, without
// invariants.
std::vector<IncidenceBase> candidate_bases(int n);

// Every base of P^n with 1 <= n_i <= n-2, sum (n-1-n_i) = 2n-3 and
// n_i + n_j >= n-1, in lexicographic order of dims.
std::vector<EnumeratedBase> enumerate_bases(int n);

enum class DirectrixCount { kExact, kFamily, kUnknown };

struct MinDirectrix {
  Count degree = 0;
  int ambient = 0;
  DirectrixCount kind = DirectrixCount::kUnknown;
  Count count = 0;  // meaningful for kExact

  // "1", "2", "∞¹" or "?".
  std::string count_label() const;
};

struct TableRow {
  IncidenceBase base;
  ScrollInvariants invariants;
  MinDirectrix min_directrix;
};

TableRow make_row(const EnumeratedBase& entry);

struct Tables {
  std::vector<TableRow> rational;
  std::vector<TableRow> elliptic;
};

Tables build_tables(int max_n);

struct AuditReport {
  int max_n = 0;
  int bases_checked = 0;
  int rational_rows = 0;
  int elliptic_rows = 0;
  std::vector<std::string> violations;
  // Genus >= 2 bases whose scroll is special: (d+1-n)/2 is not the genus
  // found by degeneration.
  std::vector<std::string> special;
  // Genus >= 2 bases sharing (d, g, n, e) with an earlier base.
  std::vector<std::string> notes;

  bool clean() const { return violations.empty(); }
};

AuditReport audit(int max_n);

// Table rendering. Text is an aligned table; JSON is an array with one
// object per row.
std::string render_table_text(const std::vector<TableRow>& rows, int genus);
std::string render_table_json(const std::vector<TableRow>& rows);

// "Normalized" column, e.g. "O ⊕ O(-2)" or "Ext^1(O_C(P), O_C)".
std::string bundle_label(const ScrollInvariants& inv);

// Base argument: "n:d1,d2,..." or {"ambient": n, "dims": [...]}.
// Throws ParseError on malformed text and DomainError on out-of-range
// dimensions.
IncidenceBase parse_base(const std::string& text);

// One base per line, '#' starts a comment, blank lines skipped.
std::vector<IncidenceBase> parse_base_list(const std::string& contents);

}  // namespace incidence
