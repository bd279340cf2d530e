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

// Shipped families.

#ifndef LIPFREE_FAMILIES_HPP_
#define LIPFREE_FAMILIES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "lipfree/asymptotics.hpp"

namespace lipfree {

using IndexMap = std::function<long(long)>;

// Integer expression in n: literals, n, + - * / ^, unary minus, parentheses.
// "/" is floor-free integer division (must divide exactly), "^" takes a
// non-negative exponent. Throws InputError on syntax errors, overflow, or an
// inexact division.
IndexMap parse_index_expression(const std::string& text);

// Pairs (x_n, y_n) in the backward shift space.
PairSequenceFamily shift_pair_family(const ShiftExample& ex, IndexMap xn, IndexMap yn,
                                     std::string name = "appendix-shift");

// M = {0} u [1, inf) in R, f(x) = x^2, w(x) = 1/x, sampled at integers.
PairSequenceFamily remark_square_pair_family(IndexMap xn, IndexMap yn,
                                             std::string name = "remark-square");

// The same map on {0, 1, ..., n} -> {0, 1, 4, ..., n^2}.
WeightedMap remark_square_truncation(long n);

// Truncation families used by the compactness checks.
TruncationFamily identity_discrete_family();  // 2^L points, all distances 1
TruncationFamily sqrt_bump_family();          // f(x) = sqrt(1 + x^2) - 1
TruncationFamily snowflake_family();          // (0, 1] with |x - y|^(1/2), f = id
TruncationFamily rank_one_family();           // f = 1 off the base, w(x) = x
TruncationFamily zero_map_family();           // f = 0, w = 1

}  // namespace lipfree

#endif  // LIPFREE_FAMILIES_HPP_
