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

#ifndef LIPFREE_SRC_PARALLEL_HPP_
#define LIPFREE_SRC_PARALLEL_HPP_

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "lipfree/metric_space.hpp"

namespace lipfree::internal {

// Splits [0, n) into contiguous blocks, runs row(i, acc) over each block on
// its own thread, then folds the block results left to right. Since blocks are
// ordered, the result does not depend on `jobs` as long as merge is
// associative.
template <typename T, typename Row, typename Merge>
T reduce_rows(Index n, int jobs, const T& init, Row row, Merge merge) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<Index>(n, 1))));
  if (jobs == 1) {
    T acc = init;
    for (Index i = 0; i < n; ++i) row(i, acc);
    return acc;
  }
  std::vector<T> partial(jobs, init);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j) {
    const Index lo = n * j / jobs;
    const Index hi = n * (j + 1) / jobs;
    threads.emplace_back([&, j, lo, hi] {
      try {
        for (Index i = lo; i < hi; ++i) row(i, partial[j]);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = init;
  for (auto& p : partial) acc = merge(acc, p);
  return acc;
}

}  // namespace lipfree::internal

#endif  // LIPFREE_SRC_PARALLEL_HPP_
