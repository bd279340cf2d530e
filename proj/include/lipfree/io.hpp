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

// JSON in and out. Input schemas:
//
//   space     {"points": [...], "base": "p0", "dist": [[...], ...]}
//   element   {"space": <space>, "terms": {"p3": [re, im], ...}}
//   operator  {"domain": <space>, "codomain": <space>,
//              "f": {"x": "z", ...}, "w": {"x": [re, im], ...}}
//   family    {"builtin": "appendix-shift" | "remark-square" | "custom-table", ...}
//
// Weights may also be given as plain numbers. Reports use nlohmann::json with
// sorted keys; doubles are rounded to 12 significant digits before they are
// stored, so dumps are byte-stable.

#ifndef LIPFREE_IO_HPP_
#define LIPFREE_IO_HPP_

#include <json.hpp>
#include <string>

#include "lipfree/asymptotics.hpp"
#include "lipfree/families.hpp"
#include "lipfree/lip_adapter.hpp"

namespace lipfree {

using Json = nlohmann::json;

// Throws InputError (with the underlying message) on parse failure.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

// Schema mismatches raise InputError. Metric axioms are not checked here; see
// require_valid.
SpacePtr space_from_json(const Json& j);
Json space_to_json(const PointedMetricSpace& space);

// Throws InputError listing the first violations when the space is not a
// metric.
void require_valid(const PointedMetricSpace& space);

FreeElement element_from_json(const Json& j);
Json element_to_json(const FreeElement& g);

WeightedMap operator_from_json(const Json& j);
// Same schema; spaces need no "base" (the first point is used) and no
// base-point condition is imposed.
LipProblem lip_problem_from_json(const Json& j);

// Pair family from a family spec. custom-table takes arrays "n", "d_xy",
// "df_x0", "df_y0", "df_xy", "w_x", "w_y" of equal length; its ladder is the
// "n" array itself, returned through ladder_out (empty for closed forms).
PairSequenceFamily family_from_json(const Json& j, std::vector<long>* ladder_out);

// Rounded to 12 significant digits; "inf", "-inf", "nan" strings otherwise.
Json number(double v);
Json complex_number(Complex z);

// Adds a "criteria" map naming `criterion` for every numeric field (numbers,
// numeric strings from number(), numeric arrays) of obj not already named.
void attach_criteria(Json& obj, const std::string& criterion);

Json to_json(const LimitVerdict& v);
Json to_json(const CaseReport& r);
Json to_json(const CriterionReport& r);
Json to_json(const NormBracket& b);
Json to_json(const Witnessed& w, const PointedMetricSpace& space);

}  // namespace lipfree

#endif  // LIPFREE_IO_HPP_
