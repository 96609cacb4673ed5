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

#ifndef REIDRISK_PARETO_H_
#define REIDRISK_PARETO_H_

#include <cstddef>
#include <span>
#include <vector>

#include "reidrisk/types.h"

namespace reidrisk {

// A profile placed in the privacy-utility plane. Both axes are "higher is
// better": utility is the expert score, privacy the information ratio r.
struct ParetoPoint {
  GeneralizationProfile profile;
  double utility = 0.0;
  double privacy = 0.0;

  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

// q dominates p: no worse on both axes and strictly better on one.
bool Dominates(const ParetoPoint& q, const ParetoPoint& p);

struct DominatedEntry {
  size_t index = 0;      // into the input
  size_t dominator = 0;  // a nondominated input point dominating it

  friend bool operator==(const DominatedEntry&, const DominatedEntry&) = default;
};

struct ParetoPartition {
  std::vector<size_t> nondominated;  // ascending input indexes
  std::vector<DominatedEntry> dominated;

  friend bool operator==(const ParetoPartition&, const ParetoPartition&) = default;
};

// Splits points into the Pareto front and the rest. Each dominated point gets
// the front member with the highest utility (then privacy, then lowest
// index) among those dominating it as witness. Points equal on both axes do
// not dominate each other.
ParetoPartition ParetoFront(std::span<const ParetoPoint> points);

}  // namespace reidrisk

#endif  // REIDRISK_PARETO_H_
