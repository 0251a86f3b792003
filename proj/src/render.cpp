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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "incidence/classify.hpp"
#include "incidence/errors.hpp"
#include "json.hpp"

namespace incidence {

namespace {

using Json = nlohmann::ordered_json;

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string scroll_label(const ScrollInvariants& inv) {
  return "R^" + std::to_string(inv.degree) + "_" + std::to_string(inv.genus) + " ⊂ P^" +
         std::to_string(inv.ambient);
}

std::string directrix_label(const MinDirectrix& md, int genus, bool with_count) {
  std::string out = md.degree == 1 ? "P^1"
                                   : "C^" + std::to_string(md.degree) + "_" +
                                         std::to_string(genus) + " ⊂ P^" +
                                         std::to_string(md.ambient);
  if (with_count) out += " (" + md.count_label() + ")";
  return out;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> widths;
  for (const auto& row : cells) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(row[c]));
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(widths[c] - display_width(row[c]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

int parse_int(std::string_view text, const std::string& context) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an integer in '" + context + "', got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string bundle_label(const ScrollInvariants& inv) {
  const int e = inv.e;
  if (inv.genus == 0) return e == 0 ? "O ⊕ O" : "O ⊕ O(-" + std::to_string(e) + ")";
  if (inv.genus == 1) {
    if (!inv.decomposable) return e == -1 ? "Ext^1(O_C(P), O_C)" : "Ext^1(O_C, O_C)";
    if (e == 0) return inv.bundle.e_divisor_trivial ? "O_C ⊕ O_C" : "O_C ⊕ O_C(𝔢), 𝔢≁0";
    static const std::string kPoints = "PQRSTUVW";
    if (e <= static_cast<int>(kPoints.size())) {
      std::string divisor;
      for (int k = 0; k < e; ++k) divisor += std::string("-") + kPoints[k];
      return "O_C ⊕ O_C(" + divisor + ")";
    }
  }
  if (!inv.decomposable) return "indecomposable, e = " + std::to_string(e);
  return "O_C ⊕ O_C(𝔢), deg 𝔢 = " + std::to_string(-e);
}

std::string render_table_text(const std::vector<TableRow>& rows, int genus) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"Scroll", "Base", "Min. Dir.", "Normalized", "deg(b)"});
  for (const TableRow& row : rows) {
    cells.push_back({scroll_label(row.invariants), row.base.histogram(),
                     directrix_label(row.min_directrix, row.invariants.genus, genus == 0),
                     bundle_label(row.invariants),
                     std::to_string(row.invariants.divisor_degree)});
  }
  return render_aligned(cells);
}

std::string render_table_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const TableRow& row : rows) {
    const ScrollInvariants& inv = row.invariants;
    Json count;
    switch (row.min_directrix.kind) {
      case DirectrixCount::kExact: count = row.min_directrix.count; break;
      case DirectrixCount::kFamily: count = "∞¹"; break;
      case DirectrixCount::kUnknown: count = nullptr; break;
    }
    out.push_back({
        {"ambient", row.base.ambient()},
        {"dims", std::vector<int>(row.base.dims().begin(), row.base.dims().end())},
        {"degree", inv.degree},
        {"genus", inv.genus},
        {"e", inv.e},
        {"m", inv.divisor_degree},
        {"min_directrix",
         {{"degree", row.min_directrix.degree},
          {"ambient", row.min_directrix.ambient},
          {"count", count}}},
        {"bundle",
         {{"kind", inv.bundle.decomposable() ? "decomposable" : "indecomposable"},
          {"base_genus", inv.bundle.base_genus},
          {"e", inv.bundle.e},
          {"e_trivial", inv.bundle.e_divisor_trivial}}},
    });
  }
  return out.dump(2) + "\n";
}

IncidenceBase parse_base(const std::string& text) {
  std::string_view view = text;
  while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
  if (!view.empty() && view.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(view);
    } catch (const Json::parse_error& ex) {
      throw ParseError(std::string("malformed base object: ") + ex.what());
    }
    if (!doc.contains("ambient") || !doc["ambient"].is_number_integer() ||
        !doc.contains("dims") || !doc["dims"].is_array()) {
      throw ParseError("base object needs an integer 'ambient' and an array 'dims'");
    }
    std::vector<int> dims;
    for (const Json& d : doc["dims"]) {
      if (!d.is_number_integer()) throw ParseError("'dims' must hold integers");
      dims.push_back(d.get<int>());
    }
    return IncidenceBase(doc["ambient"].get<int>(), std::move(dims));
  }
  const auto colon = view.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("base '" + text + "' is not of the form n:d1,d2,...");
  }
  const int ambient = parse_int(view.substr(0, colon), text);
  std::vector<int> dims;
  std::string_view rest = view.substr(colon + 1);
  bool blank = rest.find_first_not_of(" \t\r") == std::string_view::npos;
  while (!blank) {
    const auto comma = rest.find(',');
    dims.push_back(parse_int(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return IncidenceBase(ambient, std::move(dims));
}

std::vector<IncidenceBase> parse_base_list(const std::string& contents) {
  std::vector<IncidenceBase> out;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_base(line));
  }
  return out;
}

}  // namespace incidence
