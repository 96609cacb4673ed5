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

#include "reidrisk/pareto.h"

namespace reidrisk {

bool Dominates(const ParetoPoint& q, const ParetoPoint& p) {
  return q.utility >= p.utility && q.privacy >= p.privacy &&
         (q.utility > p.utility || q.privacy > p.privacy);
}

// Quadratic in the number of points; grids here have a dozen profiles.
ParetoPartition ParetoFront(std::span<const ParetoPoint> points) {
  ParetoPartition out;
  std::vector<bool> dominated(points.size(), false);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = 0; j < points.size() && !dominated[i]; ++j) {
      if (j != i && Dominates(points[j], points[i])) dominated[i] = true;
    }
    if (!dominated[i]) out.nondominated.push_back(i);
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (!dominated[i]) continue;
    // Dominance is transitive and the set finite, so some front member
    // dominates every dominated point.
    const ParetoPoint* best = nullptr;
    size_t best_index = 0;
    for (size_t j : out.nondominated) {
      if (!Dominates(points[j], points[i])) continue;
      if (best == nullptr || points[j].utility > best->utility ||
          (points[j].utility == best->utility && points[j].privacy > best->privacy)) {
        best = &points[j];
        best_index = j;
      }
    }
    out.dominated.push_back({i, best_index});
  }
  return out;
}

}  // namespace reidrisk
