// Copyright 2026 The hjba Authors
//
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

#ifndef HJBA_PARALLEL_HPP_
#define HJBA_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace hjba {

/// Runs fn(begin, end) over disjoint index ranges covering [0, n) on up to
/// `threads` workers. Each range is written by exactly one worker, so the
/// result is identical for any thread count.
template <class Fn>
void parallel_for_ranges(std::int64_t n, int threads, Fn&& fn) {
  if (n <= 0) return;
  const int workers = static_cast<int>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(threads <= 0 ? 1 : threads, n)));
  if (workers == 1) {
    fn(std::int64_t{0}, n);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hjba

#endif  // HJBA_PARALLEL_HPP_
