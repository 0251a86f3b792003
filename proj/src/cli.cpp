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

#include "incidence/cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "incidence/base.hpp"
#include "incidence/classify.hpp"
#include "incidence/degeneration.hpp"
#include "incidence/errors.hpp"
#include "incidence/ruled.hpp"
#include "incidence/schubert.hpp"

namespace incidence::cli {

namespace {

struct Options {
  std::string base;
  std::string file;
  std::string out_file;
  bool json = false;
  int i = 0;
  int j = 1;
  bool add_hyperplane = false;
  int n = 0;
  std::vector<int> codims;
  int genus = 0;
  int e = 0;
  int m = 0;
  bool e_trivial = false;
  bool indecomposable = false;
  int max_n = 8;
};

std::vector<IncidenceBase> input_bases(const Options& opt) {
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw ParseError("cannot read base list '" + opt.file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_base_list(buffer.str());
  }
  if (opt.base.empty()) throw ParseError("a base argument n:d1,d2,... or --file is required");
  return {parse_base(opt.base)};
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

int cmd_validate(const Options& opt, std::ostream& out) {
  int code = kOk;
  for (const IncidenceBase& b : input_bases(opt)) {
    const ValidationReport r = validate(b);
    out << b.to_string() << " (" << b.histogram() << ")\n" << r.to_string();
    if (!r.ok()) {
      code = kInvalidBase;
      if (r.incidence_condition) {
        try {
          out << "normalizes to " << normalize(b).to_string() << "\n";
        } catch (const Unrealizable& ex) {
          out << ex.what() << "\n";
        }
      }
    }
  }
  return code;
}

int cmd_degree(const Options& opt, std::ostream& out) {
  for (const IncidenceBase& b : input_bases(opt)) {
    out << b.to_string() << " degree " << degree(b) << "\n";
  }
  return kOk;
}

int cmd_genus(const Options& opt, std::ostream& out) {
  int code = kOk;
  for (const IncidenceBase& b : input_bases(opt)) {
    const Count d = degree(b);
    const int g = genus_by_degeneration(b);
    const Count excess = d + 1 - b.ambient();
    out << b.to_string() << " degree " << d << "\n";
    out << "  genus by degeneration: " << g << "\n";
    if (excess >= 0 && excess % 2 == 0) {
      out << "  genus by (d+1-n)/2: " << excess / 2 << "\n";
    } else {
      out << "  genus by (d+1-n)/2: not an integer\n";
    }
    const Count speciality = b.ambient() - d + 2 * g - 1;
    out << "  speciality: " << speciality << "\n";
    if (speciality < 0 || (g <= 1 && speciality != 0)) {
      out << "  INCONSISTENT: genus 0 and 1 scrolls must be nonspecial\n";
      code = kInconsistent;
    }
  }
  return code;
}

int cmd_invariants(const Options& opt, std::ostream& out) {
  std::vector<TableRow> rows;
  for (const IncidenceBase& b : input_bases(opt)) {
    rows.push_back(make_row({b, invariants(b)}));
  }
  if (opt.json) {
    out << render_table_json(rows);
    return kOk;
  }
  for (const TableRow& row : rows) {
    const ScrollInvariants& inv = row.invariants;
    out << row.base.to_string() << " (" << row.base.histogram() << ")\n"
        << "  degree: " << inv.degree << "\n"
        << "  genus: " << inv.genus << "\n"
        << "  ambient: " << inv.ambient << "\n"
        << "  speciality: " << inv.speciality << "\n"
        << "  e: " << inv.e << "\n"
        << "  m: " << inv.divisor_degree << "\n"
        << "  min directrix: degree " << row.min_directrix.degree << " in P^"
        << row.min_directrix.ambient << ", count " << row.min_directrix.count_label() << "\n"
        << "  decomposable: " << yes_no(inv.decomposable) << "\n"
        << "  bundle: " << bundle_label(inv) << "\n";
  }
  return kOk;
}

int cmd_join(const Options& opt, std::ostream& out) {
  const IncidenceBase b = parse_base(opt.base);
  const DegenerationSplit s = join(b, opt.i, opt.j);
  out << "join P^" << b.dim(opt.i) << " and P^" << b.dim(opt.j) << " of " << b.to_string()
      << "\n"
      << "  meet in P^" << s.intersection_dim << "\n"
      << "  first component:  " << s.beta_dot.to_string();
  if (s.intersection_dim == 0) {
    out << " (plane)";
  } else {
    out << " -> " << normalize(s.beta_dot).to_string();
  }
  out << "  d1 = " << s.d1 << ", g1 = " << s.g1 << "\n"
      << "  second component: " << s.beta_ddot.to_string() << " -> "
      << normalize(s.beta_ddot).to_string() << "  d2 = " << s.d2 << ", g2 = " << s.g2 << "\n"
      << "  common generators: " << s.kappa << "\n"
      << "  d = " << s.degree() << ", g = " << s.genus() << "\n";
  return kOk;
}

int cmd_separate(const Options& opt, std::ostream& out) {
  const IncidenceBase b = parse_base(opt.base);
  const IncidenceBase s = separate(b, opt.i, opt.j, opt.add_hyperplane);
  out << s.to_string() << "\n";
  return kOk;
}

int cmd_schubert(const Options& opt, std::ostream& out) {
  const Count pieri = intersection_number(opt.n, opt.codims);
  const Count oracle = oracle_intersection_number(opt.n, opt.codims);
  out << pieri << "\n";
  if (pieri != oracle) {
    out << "INCONSISTENT: bialternant evaluation gives " << oracle << "\n";
    return kInconsistent;
  }
  return kOk;
}

int cmd_surface(const Options& opt, std::ostream& out) {
  RuledSurfaceModel model;
  model.base_genus = opt.genus;
  model.e = opt.e;
  model.m = opt.m;
  model.decomposable = !opt.indecomposable;
  model.e_divisor_trivial = opt.e_trivial;
  out << model.to_string() << "\n";
  const bool ample = very_ample(model);
  out << "  very ample: " << yes_no(ample) << "\n";
  if (!ample) return kOk;
  const EmbeddingInvariants emb = embedding_invariants(model);
  out << "  scroll: R^" << emb.degree << "_" << model.base_genus << " in P^" << emb.ambient
      << "\n";
  if (model.base_genus == 0 && model.e >= 1) {
    const SectionCountCriterion c = rational_section_criterion(model.e, model.m);
    out << "  section count: " << c.lhs << (c.holds() ? " == " : " != ") << c.rhs << "\n";
  }
  const bool incidence = is_incidence(model);
  out << "  incidence scroll: " << yes_no(incidence) << "\n";
  for (IncidenceClause clause : matching_clauses(model)) {
    out << "  clause: " << to_string(clause) << "\n";
  }
  if (incidence) out << "  base: " << predicted_base(model).to_string() << "\n";
  if (model.decomposable) {
    out << "  required base spaces:";
    for (const SpaceRequirement& r : base_structure_constraints(model)) {
      out << " " << r.min_count << "xP^" << r.dimension;
    }
    out << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  std::vector<TableRow> rows;
  for (const EnumeratedBase& entry : enumerate_bases(opt.n)) rows.push_back(make_row(entry));
  if (opt.json) {
    out << render_table_json(rows);
    return kOk;
  }
  for (const TableRow& row : rows) {
    const ScrollInvariants& inv = row.invariants;
    out << row.base.to_string() << "  d=" << inv.degree << " g=" << inv.genus
        << " i=" << inv.speciality << " e=" << inv.e << " m=" << inv.divisor_degree
        << (inv.decomposable ? " decomposable" : " indecomposable") << "\n";
  }
  return kOk;
}

int cmd_table(const Options& opt, std::ostream& out) {
  if (opt.genus != 0 && opt.genus != 1) throw ParseError("--genus must be 0 or 1");
  const Tables tables = build_tables(opt.max_n);
  const auto& rows = opt.genus == 0 ? tables.rational : tables.elliptic;
  out << (opt.json ? render_table_json(rows) : render_table_text(rows, opt.genus));
  return kOk;
}

int cmd_audit(const Options& opt, std::ostream& out) {
  const AuditReport r = audit(opt.max_n);
  out << "bases checked: " << r.bases_checked << " (n <= " << r.max_n << ")\n"
      << "rational rows: " << r.rational_rows << "\n"
      << "elliptic rows: " << r.elliptic_rows << "\n"
      << "violations: " << r.violations.size() << "\n";
  for (const std::string& v : r.violations) out << "  " << v << "\n";
  out << "special scrolls of genus >= 2: " << r.special.size() << "\n";
  for (const std::string& s : r.special) out << "  " << s << "\n";
  for (const std::string& s : r.notes) out << "note: " << s << "\n";
  return r.clean() ? kOk : kInconsistent;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incidence scrolls: Schubert degrees, degenerations and classification",
               "incidence"};
  app.require_subcommand(1);
  auto opt = std::make_shared<Options>();
  std::function<int(const Options&, std::ostream&)> action;
  auto on = [&action](auto fn) { return [&action, fn] { action = fn; }; };

  auto add_base_input = [&](CLI::App* sub) {
    sub->add_option("base", opt->base, "Base as n:d1,d2,... or a JSON object");
    sub->add_option("--file", opt->file, "File with one base per line ('#' comments)");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the incidence condition and general position");
  add_base_input(validate_cmd);
  validate_cmd->callback(on(cmd_validate));

  auto* degree_cmd = app.add_subcommand("degree", "Degree of the incidence scroll");
  add_base_input(degree_cmd);
  degree_cmd->callback(on(cmd_degree));

  auto* genus_cmd = app.add_subcommand("genus", "Genus by degeneration and by (d+1-n)/2");
  add_base_input(genus_cmd);
  genus_cmd->callback(on(cmd_genus));

  auto* inv_cmd = app.add_subcommand("invariants", "All scroll invariants of a base");
  add_base_input(inv_cmd);
  inv_cmd->add_flag("--json", opt->json, "Structured output");
  inv_cmd->callback(on(cmd_invariants));

  auto* join_cmd = app.add_subcommand("join", "Degenerate two base spaces into a hyperplane");
  join_cmd->add_option("base", opt->base, "Base as n:d1,d2,...")->required();
  join_cmd->add_option("-i", opt->i, "Index of the first space (sorted, from 0)")->required();
  join_cmd->add_option("-j", opt->j, "Index of the second space (sorted, from 0)")->required();
  join_cmd->callback(on(cmd_join));

  auto* sep_cmd = app.add_subcommand("separate", "Pull apart two spaces meeting in a point");
  sep_cmd->add_option("base", opt->base, "Base as n:d1,d2,...")->required();
  sep_cmd->add_option("-i", opt->i, "Index of the first space (sorted, from 0)")->required();
  sep_cmd->add_option("-j", opt->j, "Index of the second space (sorted, from 0)");
  sep_cmd->add_flag("--add-hyperplane", opt->add_hyperplane,
                    "Pair the first space with an added hyperplane");
  sep_cmd->callback(on(cmd_separate));

  auto* schubert_cmd = app.add_subcommand("schubert", "Intersection number of special classes in G(1,n)");
  schubert_cmd->add_option("-n", opt->n, "Ambient dimension")->required();
  schubert_cmd->add_option("-c", opt->codims, "Codimensions c1,c2,...")->required()->delimiter(',');
  schubert_cmd->callback(on(cmd_schubert));

  auto* surface_cmd = app.add_subcommand("surface", "Ruled surface model H ~ C_0 + b f");
  surface_cmd->add_option("-g", opt->genus, "Genus of the base curve (0 or 1)")->required();
  surface_cmd->add_option("-e", opt->e, "Invariant e")->required();
  surface_cmd->add_option("-m", opt->m, "deg b")->required();
  surface_cmd->add_flag("--e-trivial", opt->e_trivial, "The normalizing divisor is trivial");
  surface_cmd->add_flag("--indecomposable", opt->indecomposable, "Indecomposable bundle");
  surface_cmd->callback(on(cmd_surface));

  auto* enum_cmd = app.add_subcommand("enumerate", "All incidence bases of P^n");
  enum_cmd->add_option("-n", opt->n, "Ambient dimension")->required();
  enum_cmd->add_flag("--json", opt->json, "Structured output");
  enum_cmd->add_option("--out", opt->out_file, "Write to a file instead of standard output");
  enum_cmd->callback(on(cmd_enumerate));

  auto* table_cmd = app.add_subcommand("table", "Classification table of rational or elliptic scrolls");
  table_cmd->add_option("--genus", opt->genus, "0 (rational) or 1 (elliptic)")->required();
  table_cmd->add_option("--max-n", opt->max_n, "Largest ambient dimension")->capture_default_str();
  table_cmd->add_flag("--json", opt->json, "Structured output");
  table_cmd->add_option("--out", opt->out_file, "Write to a file instead of standard output");
  table_cmd->callback(on(cmd_table));

  auto* audit_cmd = app.add_subcommand("audit", "Check every base against the classification");
  audit_cmd->add_option("--max-n", opt->max_n, "Largest ambient dimension")->capture_default_str();
  audit_cmd->add_option("--out", opt->out_file, "Write to a file instead of standard output");
  audit_cmd->callback(on(cmd_audit));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kParseError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    code = action(*opt, buffer);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kParseError;
  } catch (const InvalidBase& ex) {
    err << ex.what();
    return kInvalidBase;
  } catch (const Unrealizable& ex) {
    err << "unrealizable: " << ex.what() << "\n";
    return kInvalidBase;
  } catch (const ConsistencyError& ex) {
    err << "internal consistency failure: " << ex.what() << "\n";
    return kInconsistent;
  } catch (const ArithmeticOverflow& ex) {
    err << "arithmetic overflow: " << ex.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& ex) {
    // DimensionMismatch and out-of-range indices from user input.
    err << "invalid input: " << ex.what() << "\n";
    return kInvalidBase;
  } catch (const std::domain_error& ex) {
    err << "invalid input: " << ex.what() << "\n";
    return kInvalidBase;
  }

  if (!opt->out_file.empty()) {
    std::ofstream file(opt->out_file, std::ios::binary);
    if (!file) {
      err << "cannot write '" << opt->out_file << "'\n";
      return kParseError;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace incidence::cli
