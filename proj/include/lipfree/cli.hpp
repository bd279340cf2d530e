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

#ifndef LIPFREE_CLI_HPP_
#define LIPFREE_CLI_HPP_

#include <ostream>

namespace lipfree {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

// Verbs: validate, norm, opnorm, bounded, inject, surject, compact-family,
// shift-demo, lip-bounded. One JSON report on `out`; diagnostics on `err`.
// Computed verdicts (negative ones included) exit 0, bad input exits 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lipfree

#endif  // LIPFREE_CLI_HPP_
