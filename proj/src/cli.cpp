// Copyright 2026 The lipfree Authors
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

#include "lipfree/cli.hpp"

#include <CLI11.hpp>
#include <string>

#include "lipfree/io.hpp"

namespace lipfree {
namespace {

struct Settings {
  std::string input;
  bool pretty = false;
  int jobs = 1;
  int k = kDefaultPolygonOrder;
  bool lip = false;
  std::string oracle = "formula";
  // remark-square builtin for bounded/opnorm/inject/surject
  std::string builtin;
  long n = 100;
  // ladders
  int ladder_lo = 4;
  int ladder_hi = 20;
  double rtol = 1e-4;
  // shift-demo
  double alpha = 1;
  double beta = 1;
  long nmax = 64;
  long psi_limit = 64;
};

WeightedMap load_operator(const Settings& s) {
  if (s.builtin.empty()) {
    if (s.input.empty()) throw InputError("an operator file or --builtin is required");
    return operator_from_json(read_json_file(s.input));
  }
  if (s.builtin != "remark-square") throw InputError("unknown builtin \"" + s.builtin + "\"");
  return remark_square_truncation(s.n);
}

Json boundedness_json(const BoundednessReport& r, const PointedMetricSpace& m) {
  Json j;
  j["a_max"] = number(r.a.value);
  j["b_max"] = number(r.b.value);
  j["sigma_max"] = number(r.sigma.value);
  j["tau_max"] = number(r.tau.value);
  j["n1_max"] = number(r.n1.value);
  j["n2_max"] = number(r.n2.value);
  j["max_ab"] = number(r.max_ab);
  j["real_weights"] = r.real_weights;
  j["estimate"] = to_json(r.estimate);
  j["witnesses"] = {{"a_max", to_json(r.a, m)},     {"b_max", to_json(r.b, m)},
                    {"sigma_max", to_json(r.sigma, m)}, {"tau_max", to_json(r.tau, m)},
                    {"n1_max", to_json(r.n1, m)},   {"n2_max", to_json(r.n2, m)}};
  j["criteria"] = {{"a_max", "Poids-v"},       {"b_max", "Poids-v"},
                   {"sigma_max", "Poids-vi"},  {"tau_max", "Poids-vi"},
                   {"n1_max", "bounded"},      {"n2_max", "bounded"},
                   {"max_ab", "Poids-norm"}};
  attach_criteria(j["estimate"], r.real_weights ? "Poids-real" : "Poids-norm");
  for (auto& [key, w] : j["witnesses"].items()) attach_criteria(w, j["criteria"][key]);
  return j;
}

Json opnorm_json(const WeightedMap& op, const Settings& s) {
  OperatorNormOptions o;
  o.polygon_order = s.k;
  o.jobs = s.jobs;
  if (s.oracle == "lp") o.real_oracle = MoleculeOracle::kLp;
  else if (s.oracle != "formula") throw InputError("--oracle must be formula or lp");
  const OperatorNorm n = operator_norm(op, o);
  const BoundednessReport b = boundedness_report(op, s.jobs);
  Json j;
  j["norm"] = to_json(n.norm);
  attach_criteria(j["norm"], op.has_real_weights() ? "Poids-real" : "lemma:formula");
  j["molecules"] = n.molecules;
  const PointedMetricSpace& m = *op.domain();
  j["witness"] = {{"x", n.x >= 0 ? Json(m.name(n.x)) : Json(nullptr)},
                  {"y", n.y >= 0 ? Json(m.name(n.y)) : Json(nullptr)}};
  j["max_ab"] = number(b.max_ab);
  j["criteria"] = {{"molecules", "lemma:AbsConvHull"}, {"max_ab", "Poids-norm"}};
  return j;
}

Json lip_json(const LipProblem& p, const Settings& s) {
  const LipBoundednessReport r = lip_boundedness_report(p, s.jobs);
  const WeightedMap lifted = to_lip0(p);
  Json original;
  original["w_sup"] = number(r.w_sup);
  original["w_lip"] = number(r.w_lip);
  original["n1_max"] = number(r.n1.value);
  original["n1_witness"] = to_json(r.n1, *p.m);
  attach_criteria(original["n1_witness"], "Lip0toLip");
  attach_criteria(original, "Lip0toLip");
  Json lifted_j = boundedness_json(r.lifted, *lifted.domain());
  lifted_j["sigma_e_defect"] = number(r.sigma_e_defect);
  lifted_j["criteria"]["sigma_e_defect"] = "Lip0toLip";
  lifted_j["operator_norm"] = opnorm_json(lifted, s);
  lifted_j["criteria"]["operator_norm"] = "Lip0toLip";
  return Json{{"original", original}, {"lifted", lifted_j}};
}

LimitOptions limit_options(const Settings& s) {
  LimitOptions o;
  o.ladder = power_ladder(s.ladder_lo, s.ladder_hi);
  o.rtol = s.rtol;
  return o;
}

Json run_validate(const Settings& s) {
  const SpacePtr space = space_from_json(read_json_file(s.input));
  const ValidationReport rep = validate(*space);
  Json v = Json::array();
  for (const auto& x : rep.violations) {
    Json e = {{"kind", to_string(x.kind)},
              {"i", space->name(x.i)},
              {"j", space->name(x.j)},
              {"excess", number(x.excess)}};
    if (x.kind == ViolationKind::kTriangle) e["k"] = space->name(x.k);
    attach_criteria(e, "metric-axioms");
    v.push_back(e);
  }
  Json j = {{"valid", rep.valid()}, {"points", space->size()}, {"diameter", number(space->diameter())},
            {"violations", v}};
  attach_criteria(j, "metric-axioms");
  return j;
}

Json run_norm(const Settings& s) {
  const FreeElement g = element_from_json(read_json_file(s.input));
  Json j;
  if (g.is_real()) {
    j["norm"] = number(real_norm_lp(g));
    j["method"] = "lp";
    j["criteria"] = {{"norm", "KR-duality"}};
  } else {
    const NormBracket b = complex_norm_bracket(g, s.k);
    j["norm"] = to_json(b);
    j["method"] = b.method;
    j["polygon_order"] = s.k;
    j["criteria"] = {{"polygon_order", "RemarkValueRC"}};
    attach_criteria(j["norm"], "RemarkValueRC");
  }
  return j;
}

Json run_bounded(const Settings& s) {
  if (s.lip) return lip_json(lip_problem_from_json(read_json_file(s.input)), s);
  const WeightedMap op = load_operator(s);
  return boundedness_json(boundedness_report(op, s.jobs), *op.domain());
}

Json run_opnorm(const Settings& s) {
  if (s.lip) {
    const LipProblem p = lip_problem_from_json(read_json_file(s.input));
    Json j = {{"lifted", opnorm_json(to_lip0(p), s)}};
    return j;
  }
  return opnorm_json(load_operator(s), s);
}

Json run_inject(const Settings& s) {
  const WeightedMap op = load_operator(s);
  const Index rank = composition_rank(op);
  Json j = {{"injective", is_injective_criterion(op)},
            {"rank", rank},
            {"rows", op.domain()->size() - 1},
            {"cols", op.codomain()->size() - 1}};
  attach_criteria(j, "injectivity");
  return j;
}

Json run_surject(const Settings& s) {
  const WeightedMap op = load_operator(s);
  const SurjectivityReport r = is_surjective_criterion(op);
  const PointedMetricSpace& m = *op.domain();
  auto name = [&](Index i) { return i >= 0 ? Json(m.name(i)) : Json(nullptr); };
  Json j = {{"surjective", r.surjective},
            {"gates", {{"weight_nonzero", r.weight_gate},
                       {"f_injective", r.injective_gate},
                       {"f_avoids_base", r.base_gate}}},
            {"sup_first", number(r.sup_first)},
            {"sup_second", number(r.sup_second)},
            {"sup_first_witness", {{"x", name(r.first_x)}, {"y", name(r.first_y)}}},
            {"sup_second_witness", {{"x", name(r.second_x)}, {"y", name(r.second_y)}}},
            {"rank", composition_rank(op)}};
  attach_criteria(j, "surjectivity");
  return j;
}

Json run_compact_family(const Settings& s) {
  std::vector<long> table_ladder;
  const PairSequenceFamily fam = family_from_json(read_json_file(s.input), &table_ladder);
  LimitOptions o = limit_options(s);
  if (!table_ladder.empty()) {
    o.ladder = table_ladder;
    o.check_neighbours = false;  // a table has no n+1 rows in general
  }
  Json j;
  j["family"] = fam.name;
  j["appendix"] = to_json(classify_appendix_case(fam, o));
  j["caraccompact"] = to_json(check_caraccompact({fam}, o));
  return j;
}

Json run_shift_demo(const Settings& s) {
  ShiftExample ex{s.alpha, s.beta};
  ShiftOptions o;
  o.psi_limit = s.psi_limit;
  o.limits = limit_options(s);
  const ShiftReport r = shift_operator_matrix(ex, s.nmax, o);
  Json t = Json::array();
  for (Index i = 0; i < r.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < r.matrix.cols(); ++c) row.push_back(number(r.matrix(i, c)));
    t.push_back(row);
  }
  Json col = Json::array(), mol = Json::array();
  for (double v : r.column_norms) col.push_back(number(v));
  for (double v : r.molecule_norms) mol.push_back(number(v));
  Json j = {{"alpha", number(s.alpha)},
            {"beta", number(s.beta)},
            {"nmax", s.nmax},
            {"T", t},
            {"verdict", r.verdict},
            {"compact", r.compact},
            {"heuristic", r.heuristic},
            {"tail", to_json(r.tail)},
            {"column_norms", col},
            {"molecule_norms", mol},
            {"psi_defect", number(r.psi_defect)},
            {"psi_checked", r.psi_checked},
            {"operator_norm", number(r.operator_norm)},
            {"max_column_norm", number(r.max_column_norm)}};
  attach_criteria(j, "AnnexeA");
  j["criteria"]["operator_norm"] = "Poids-real";
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Norms and weighted Lipschitz operators on finite pointed metric spaces", "lipfree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", s.pretty, "indent the JSON report");
  app.add_option("--jobs", s.jobs, "worker threads for pair enumeration")->check(CLI::PositiveNumber);

  auto input = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("input", s.input, "JSON input file");
    if (required) o->required();
  };
  auto builtin = [&](CLI::App* sub) {
    sub->add_option("--builtin", s.builtin, "builtin operator instead of a file (remark-square)");
    sub->add_option("--n", s.n, "truncation size for --builtin")->check(CLI::PositiveNumber);
  };
  auto polygon = [&](CLI::App* sub) {
    sub->add_option("-k,--polygon-order", s.k, "polygon order for complex norms")
        ->check(CLI::Range(8, 1 << 16));
  };
  auto ladder = [&](CLI::App* sub) {
    sub->add_option("--ladder-lo", s.ladder_lo, "smallest ladder exponent")->check(CLI::Range(0, 40));
    sub->add_option("--ladder-hi", s.ladder_hi, "largest ladder exponent")->check(CLI::Range(0, 40));
    sub->add_option("--rtol", s.rtol, "relative tolerance of limit detection")
        ->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the metric axioms of a space");
  input(validate_cmd, true);
  auto* norm_cmd = app.add_subcommand("norm", "norm of a free-space element");
  input(norm_cmd, true);
  polygon(norm_cmd);
  auto* opnorm_cmd = app.add_subcommand("opnorm", "operator norm by molecule enumeration");
  input(opnorm_cmd, false);
  builtin(opnorm_cmd);
  polygon(opnorm_cmd);
  opnorm_cmd->add_option("--oracle", s.oracle, "real molecule oracle: formula or lp");
  opnorm_cmd->add_flag("--lip", s.lip, "read the input as a Lip problem");
  auto* bounded_cmd = app.add_subcommand("bounded", "pair statistics A, B, sigma, tau, N1, N2");
  input(bounded_cmd, false);
  builtin(bounded_cmd);
  bounded_cmd->add_flag("--lip", s.lip, "read the input as a Lip problem");
  auto* inject_cmd = app.add_subcommand("inject", "injectivity of the composition operator");
  input(inject_cmd, false);
  builtin(inject_cmd);
  auto* surject_cmd = app.add_subcommand("surject", "surjectivity of the composition operator");
  input(surject_cmd, false);
  builtin(surject_cmd);
  auto* family_cmd = app.add_subcommand("compact-family", "sequential compactness checks on a family");
  input(family_cmd, true);
  ladder(family_cmd);
  auto* shift_cmd = app.add_subcommand("shift-demo", "weighted backward shift example");
  shift_cmd->add_option("--alpha", s.alpha, "metric exponent");
  shift_cmd->add_option("--beta", s.beta, "weight exponent");
  shift_cmd->add_option("--nmax", s.nmax, "truncation size");
  shift_cmd->add_option("--psi-limit", s.psi_limit, "columns compared through psi");
  ladder(shift_cmd);
  auto* lip_cmd = app.add_subcommand("lip-bounded", "boundedness of a Lip problem via the lifted space");
  input(lip_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lipfree: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Json report;
    if (*validate_cmd) report = run_validate(s);
    else if (*norm_cmd) report = run_norm(s);
    else if (*opnorm_cmd) report = run_opnorm(s);
    else if (*bounded_cmd) report = run_bounded(s);
    else if (*inject_cmd) report = run_inject(s);
    else if (*surject_cmd) report = run_surject(s);
    else if (*family_cmd) report = run_compact_family(s);
    else if (*shift_cmd) report = run_shift_demo(s);
    else if (*lip_cmd) {
      s.lip = true;
      report = run_bounded(s);
    }
    out << (s.pretty ? report.dump(2) : report.dump()) << "\n";
    return kExitOk;
  } catch (const InputError& e) {
    err << "lipfree: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "lipfree: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lipfree
