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

#include "lipfree/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lipfree {
namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

double real_value(const Json& j, const std::string& what) {
  if (!j.is_number()) throw InputError(what + " must be a number");
  return j.get<double>();
}

Complex complex_value(const Json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw InputError(what + " must be a number or a [re, im] pair");
}

std::string string_value(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

SpacePtr space_impl(const Json& j, bool base_required) {
  const Json& pts = field(j, "points", "space");
  if (!pts.is_array() || pts.empty()) throw InputError("space \"points\" must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& p : pts) names.push_back(string_value(p, "point id"));
  const Index n = static_cast<Index>(names.size());

  Index base = 0;
  if (base_required || j.contains("base")) {
    const std::string b = string_value(field(j, "base", "space"), "space \"base\"");
    auto it = std::find(names.begin(), names.end(), b);
    if (it == names.end()) throw InputError("base \"" + b + "\" is not among the points");
    base = static_cast<Index>(it - names.begin());
  }

  const Json& dist = field(j, "dist", "space");
  if (!dist.is_array() || static_cast<Index>(dist.size()) != n) {
    throw InputError("space \"dist\" must have one row per point");
  }
  Eigen::MatrixXd d(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = dist[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw InputError("space \"dist\" row " + std::to_string(r) + " has the wrong length");
    }
    for (Index c = 0; c < n; ++c) d(r, c) = real_value(row[c], "distance");
  }
  return make_space(std::move(names), base, std::move(d));
}

struct MapData {
  SpacePtr m, n;
  std::vector<Index> f;
  std::vector<Complex> w;
};

MapData map_impl(const Json& j, bool base_required) {
  MapData out;
  out.m = space_impl(field(j, "domain", "operator"), base_required);
  out.n = space_impl(field(j, "codomain", "operator"), base_required);
  require_valid(*out.m);
  require_valid(*out.n);
  const Json& f = field(j, "f", "operator");
  const Json& w = field(j, "w", "operator");
  if (!f.is_object() || !w.is_object()) throw InputError("operator \"f\" and \"w\" must be objects");
  const Index size = out.m->size();
  out.f.assign(size, -1);
  out.w.assign(size, 0.0);
  std::vector<bool> has_w(size, false);
  for (auto it = f.begin(); it != f.end(); ++it) {
    out.f[out.m->index_of(it.key())] = out.n->index_of(string_value(it.value(), "f value"));
  }
  for (auto it = w.begin(); it != w.end(); ++it) {
    const Index x = out.m->index_of(it.key());
    out.w[x] = complex_value(it.value(), "w value");
    has_w[x] = true;
  }
  for (Index x = 0; x < size; ++x) {
    if (out.f[x] < 0) throw InputError("f is not defined at \"" + out.m->name(x) + "\"");
    if (!has_w[x]) throw InputError("w is not defined at \"" + out.m->name(x) + "\"");
  }
  return out;
}

bool numeric(const Json& v) {
  if (v.is_number()) return true;
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    return s == "inf" || s == "-inf" || s == "nan";
  }
  if (v.is_array() && !v.empty()) {
    return std::all_of(v.begin(), v.end(), [](const Json& e) { return numeric(e); });
  }
  return false;
}

Json ladder_json(const std::vector<long>& ladder) {
  Json a = Json::array();
  for (long n : ladder) a.push_back(n);
  return a;
}

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

SpacePtr space_from_json(const Json& j) { return space_impl(j, true); }

Json space_to_json(const PointedMetricSpace& space) {
  Json j;
  j["points"] = space.points();
  j["base"] = space.name(space.base());
  Json dist = Json::array();
  for (Index r = 0; r < space.size(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < space.size(); ++c) row.push_back(number(space(r, c)));
    dist.push_back(row);
  }
  j["dist"] = dist;
  return j;
}

void require_valid(const PointedMetricSpace& space) {
  const ValidationReport rep = validate(space);
  if (rep.valid()) return;
  std::ostringstream msg;
  msg << "not a metric (" << rep.violations.size() << " violations), first: ";
  const Violation& v = rep.violations.front();
  msg << to_string(v.kind) << " at (" << space.name(v.i) << ", " << space.name(v.j);
  if (v.kind == ViolationKind::kTriangle) msg << ", " << space.name(v.k);
  msg << ")";
  throw InputError(msg.str());
}

FreeElement element_from_json(const Json& j) {
  SpacePtr space = space_from_json(field(j, "space", "element"));
  require_valid(*space);
  const Json& terms = field(j, "terms", "element");
  if (!terms.is_object()) throw InputError("element \"terms\" must be an object");
  FreeElement g(space);
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    g.accumulate(space->index_of(it.key()), complex_value(it.value(), "coefficient"));
  }
  return g;
}

Json element_to_json(const FreeElement& g) {
  Json j;
  j["space"] = space_to_json(*g.space());
  Json terms = Json::object();
  for (const auto& [x, c] : g.terms()) terms[g.space()->name(x)] = complex_number(c);
  j["terms"] = terms;
  return j;
}

WeightedMap operator_from_json(const Json& j) {
  MapData d = map_impl(j, true);
  return WeightedMap(d.m, d.n, std::move(d.f), std::move(d.w));
}

LipProblem lip_problem_from_json(const Json& j) {
  MapData d = map_impl(j, false);
  return LipProblem{d.m, d.n, std::move(d.f), std::move(d.w)};
}

PairSequenceFamily family_from_json(const Json& j, std::vector<long>* ladder_out) {
  if (ladder_out) ladder_out->clear();
  const std::string builtin = string_value(field(j, "builtin", "family"), "family \"builtin\"");
  auto expr = [&](const char* key, const char* fallback) {
    return parse_index_expression(j.contains(key) ? string_value(j[key], key) : fallback);
  };
  if (builtin == "appendix-shift") {
    ShiftExample ex;
    if (j.contains("alpha")) ex.alpha = real_value(j["alpha"], "alpha");
    if (j.contains("beta")) ex.beta = real_value(j["beta"], "beta");
    if (!(ex.alpha > 0) || !(ex.beta >= 0)) throw InputError("appendix-shift needs alpha > 0, beta >= 0");
    return shift_pair_family(ex, expr("xn", "n"), expr("yn", "n-1"));
  }
  if (builtin == "remark-square") {
    return remark_square_pair_family(expr("xn", "n"), expr("yn", "n+1"));
  }
  if (builtin != "custom-table") throw InputError("unknown builtin family \"" + builtin + "\"");

  auto reals = [&](const char* key) {
    const Json& a = field(j, key, "custom-table");
    if (!a.is_array()) throw InputError(std::string("custom-table \"") + key + "\" must be an array");
    std::vector<double> v;
    for (const auto& e : a) v.push_back(real_value(e, key));
    return v;
  };
  auto complexes = [&](const char* key) {
    const Json& a = field(j, key, "custom-table");
    if (!a.is_array()) throw InputError(std::string("custom-table \"") + key + "\" must be an array");
    std::vector<Complex> v;
    for (const auto& e : a) v.push_back(complex_value(e, key));
    return v;
  };
  const Json& ns = field(j, "n", "custom-table");
  if (!ns.is_array()) throw InputError("custom-table \"n\" must be an array");
  std::vector<long> index;
  for (const auto& e : ns) {
    if (!e.is_number_integer()) throw InputError("custom-table \"n\" must hold integers");
    index.push_back(e.get<long>());
  }
  auto d_xy = reals("d_xy"), df_x0 = reals("df_x0"), df_y0 = reals("df_y0"), df_xy = reals("df_xy");
  auto w_x = complexes("w_x"), w_y = complexes("w_y");
  const size_t len = index.size();
  for (size_t s : {d_xy.size(), df_x0.size(), df_y0.size(), df_xy.size(), w_x.size(), w_y.size()}) {
    if (s != len) throw InputError("custom-table channels must all match the length of \"n\"");
  }
  if (!std::is_sorted(index.begin(), index.end()) ||
      std::adjacent_find(index.begin(), index.end()) != index.end()) {
    throw InputError("custom-table \"n\" must be strictly increasing");
  }
  for (double d : d_xy) {
    if (!(d > 0)) throw InputError("custom-table d_xy must be positive");
  }
  PairSequenceFamily fam;
  fam.name = j.contains("name") ? string_value(j["name"], "name") : "custom-table";
  fam.sample = [=](long n) {
    auto it = std::lower_bound(index.begin(), index.end(), n);
    if (it == index.end() || *it != n) {
      throw InputError("custom-table has no row for n = " + std::to_string(n));
    }
    const size_t k = static_cast<size_t>(it - index.begin());
    return PairSample{d_xy[k], df_x0[k], df_y0[k], df_xy[k], w_x[k], w_y[k]};
  };
  if (ladder_out) *ladder_out = index;
  return fam;
}

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

Json complex_number(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

void attach_criteria(Json& obj, const std::string& criterion) {
  if (!obj.is_object()) return;
  Json& crit = obj["criteria"];
  if (crit.is_null()) crit = Json::object();
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it.key() == "criteria") continue;
    if (numeric(it.value()) && !crit.contains(it.key())) crit[it.key()] = criterion;
  }
  if (crit.empty()) obj.erase("criteria");
}

Json to_json(const LimitVerdict& v) {
  Json j;
  j["tag"] = to_string(v.tag);
  if (v.converges()) j["value"] = complex_number(v.value);
  j["rule"] = v.rule;
  j["heuristic"] = v.heuristic;
  j["ladder"] = ladder_json(v.ladder);
  j["evidence"] = numbers(v.evidence);
  attach_criteria(j, "detect-limit");
  return j;
}

Json to_json(const CaseReport& r) {
  Json j;
  j["label"] = r.label;
  j["theorem_case"] = r.theorem_case;
  j["mirrored"] = r.mirrored;
  j["criterion_id"] = r.criterion_id;
  j["heuristic"] = r.heuristic;
  j["a_n"] = to_json(r.a);
  j["b_n"] = to_json(r.b);
  j["a_n_minus_b_n"] = to_json(r.diff);
  j["classes"] = {{"a_n", to_string(r.a_class)},
                  {"b_n", to_string(r.b_class)},
                  {"a_n_minus_b_n", to_string(r.diff_class)}};
  j["stats"] = {{"A", to_json(r.a_stat)},
                {"B_xy", to_json(r.b_xy_stat)},
                {"B_yx", to_json(r.b_yx_stat)},
                {"sigma", to_json(r.sigma_stat)},
                {"tau", to_json(r.tau_stat)}};
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json conds = Json::array();
    for (const auto& c : b.conditions) {
      conds.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"verdict", to_json(c.verdict)}});
    }
    branches.push_back({{"name", b.name}, {"outcome", to_string(b.outcome)}, {"conditions", conds}});
  }
  j["branches"] = branches;
  j["outcome"] = to_string(r.outcome);
  attach_criteria(j, r.criterion_id);
  return j;
}

Json to_json(const CriterionReport& r) {
  Json j;
  j["criterion_id"] = r.criterion_id;
  j["outcome"] = to_string(r.outcome);
  j["verdict"] = r.verdict;
  j["heuristic"] = r.heuristic;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj = {{"name", c.name},
               {"outcome", to_string(c.outcome)},
               {"detail", c.detail},
               {"counts", c.counts},
               {"evidence", numbers(c.evidence)}};
    attach_criteria(cj, r.criterion_id);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const NormBracket& b) {
  Json j = {{"lo", number(b.lo)}, {"hi", number(b.hi)}, {"method", b.method}};
  return j;
}

Json to_json(const Witnessed& w, const PointedMetricSpace& space) {
  Json j;
  j["value"] = number(w.value);
  j["x"] = w.x >= 0 ? Json(space.name(w.x)) : Json(nullptr);
  j["y"] = w.y >= 0 ? Json(space.name(w.y)) : Json(nullptr);
  return j;
}

}  // namespace lipfree
