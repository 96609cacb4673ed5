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

#ifndef REIDRISK_TESTS_TEST_UTIL_H_
#define REIDRISK_TESTS_TEST_UTIL_H_

#include <cstdlib>
#include <iostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/generalized_dataset.h"
#include "reidrisk/types.h"

namespace reidrisk::testing {

template <typename T>
T ValueOrDie(absl::StatusOr<T> v) {
  if (!v.ok()) {
    std::cerr << "unexpected error: " << v.status() << "\n";
    std::abort();
  }
  return *std::move(v);
}

template <typename T>
std::vector<T> ToVector(std::span<const T> s) {
  return {s.begin(), s.end()};
}

// Dataset whose points are single-slice zones named by the given labels,
// e.g. Fixture({{"u1", {"A", "B"}}, {"u2", {"A", "C"}}}).
inline GeneralizedDataset Fixture(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& users) {
  std::vector<UserTrace> traces;
  for (const auto& [id, labels] : users) {
    UserTrace t{id, {}};
    for (const std::string& l : labels) t.points.push_back(Point{l, 0});
    traces.push_back(std::move(t));
  }
  return ValueOrDie(BuildGeneralizedDataset(std::move(traces), {"zip", 1}));
}

inline PointId Pt(const GeneralizedDataset& d, const std::string& label) {
  return *d.FindPoint(Point{label, 0});
}

inline UserIndex User(const GeneralizedDataset& d, const std::string& id) {
  return *d.FindUser(id);
}

}  // namespace reidrisk::testing

#endif  // REIDRISK_TESTS_TEST_UTIL_H_
