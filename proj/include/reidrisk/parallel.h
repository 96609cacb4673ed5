// Copyright 2026 The reidrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REIDRISK_PARALLEL_H_
#define REIDRISK_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace reidrisk {

inline int DefaultThreadCount() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(begin, end) over [0, n) in chunks of `grain` on up to `threads`
// workers. Chunks are claimed dynamically; callers must write results into
// per-index slots so the outcome does not depend on which worker ran what.
template <typename Body>
void ParallelFor(size_t n, int threads, size_t grain, Body&& body) {
  if (n == 0) return;
  grain = std::max<size_t>(grain, 1);
  size_t chunks = (n + grain - 1) / grain;
  size_t workers = std::min<size_t>(std::max(threads, 1), chunks);
  if (workers <= 1) {
    body(size_t{0}, n);
    return;
  }
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      size_t begin = c * grain;
      body(begin, std::min(n, begin + grain));
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
}

}  // namespace reidrisk

#endif  // REIDRISK_PARALLEL_H_
