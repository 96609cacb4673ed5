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

// Reidentification measures over a generalized dataset.
//
// An adversary knows some of a target's points and looks for every user whose
// trace contains all of them; this is the target's equivalence class. The
// target is reidentified when the class is the target alone. On top of that:
//
//   * information cost c_i: how many of the target's points, revealed in a
//     uniformly random order, it takes until the class is a singleton;
//     c is the mean of E[c_i] over users and r the mean of E[c_i / |d_i|];
//   * unicity u_p: the probability that p random points of a user single the
//     user out;
//   * k-anonymity level: smallest class size given whole traces.
//
// A user whose whole trace is contained in another user's trace can never be
// singled out. Such users are "censored": they have no cost, and the share of
// them is reported separately.
//
// All randomness comes from per-(seed, user_id, trial) sub-seeds, so results
// are bit-identical for any thread count.

#ifndef REIDRISK_REIDENT_H_
#define REIDRISK_REIDENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "reidrisk/bootstrap.h"
#include "reidrisk/generalized_dataset.h"
#include "reidrisk/types.h"

namespace reidrisk {

enum class CensoredPolicy {
  kExclude,      // dropped from c and r
  kCountAsFull,  // c_i = |d_i|, ratio 1
};

enum class TraceSizeBasis {
  kDistinctPoints,  // sample distinct generalized points
  kRawRecords,      // sample raw records; repeats of a point add no knowledge
};

std::string_view ToString(CensoredPolicy policy);
std::string_view ToString(TraceSizeBasis basis);
absl::StatusOr<CensoredPolicy> ParseCensoredPolicy(std::string_view name);
absl::StatusOr<TraceSizeBasis> ParseTraceSizeBasis(std::string_view name);

struct ReidentConfig {
  int trials_per_user = 10;
  int unicity_trials = 1000;
  std::vector<int> p_values = {1, 2, 3, 4, 5};
  uint64_t seed = 0;
  CensoredPolicy censored_policy = CensoredPolicy::kExclude;
  TraceSizeBasis trace_size_basis = TraceSizeBasis::kDistinctPoints;
  int bootstrap_resamples = 1000;
  double bootstrap_alpha = 0.05;

  friend bool operator==(const ReidentConfig&, const ReidentConfig&) = default;
};

absl::Status ValidateConfig(const ReidentConfig& config);

// Users whose trace contains every aux point, ascending. Empty aux matches
// everyone. Every aux point must belong to the target's trace.
absl::StatusOr<std::vector<UserIndex>> EquivalenceClass(const GeneralizedDataset& dataset,
                                                        const AuxPoints& aux);

struct CostOutcome {
  UserIndex user = 0;
  std::optional<uint32_t> cost;  // absent when censored
  uint64_t trace_size = 0;

  bool censored() const { return !cost.has_value(); }
};

// Shortest prefix of `ordering` (a permutation of the user's trace) whose
// class is the user alone.
absl::StatusOr<CostOutcome> CostForPermutation(const GeneralizedDataset& dataset,
                                               UserIndex user,
                                               std::span<const PointId> ordering);

// Per-user Monte Carlo estimate of E[c_i] and E[c_i / |d_i|].
struct UserCost {
  UserIndex user = 0;
  bool censored = false;
  uint64_t trace_size = 0;  // |d_i| under the configured basis
  // Mean over trials. For censored users these hold |d_i| and 1 under
  // kCountAsFull and 0 under kExclude.
  double mean_cost = 0.0;
  double mean_ratio = 0.0;
};

absl::StatusOr<std::vector<UserCost>> ExpectedCosts(const GeneralizedDataset& dataset,
                                                    const ReidentConfig& config,
                                                    int threads = 1);

struct UnicityEstimate {
  int p = 0;
  std::optional<double> value;  // absent when no user has p points
  uint64_t eligible = 0;        // users with at least p points
  uint64_t trials = 0;
  uint64_t unique = 0;          // (user, trial) pairs singled out

  friend bool operator==(const UnicityEstimate&, const UnicityEstimate&) = default;
};

// u_p over `trials` rounds. In every round each user draws one random order
// of its points and the first p of them form the sample for every p, so for a
// fixed seed a user singled out by p points is also singled out by p + 1.
absl::StatusOr<UnicityEstimate> Unicity(const GeneralizedDataset& dataset, int p, int trials,
                                        uint64_t seed,
                                        TraceSizeBasis basis = TraceSizeBasis::kDistinctPoints,
                                        int threads = 1);

// Like Unicity() for several p at once; p values nobody is eligible for get
// an absent estimate instead of an error.
absl::StatusOr<std::vector<UnicityEstimate>> UnicityTable(
    const GeneralizedDataset& dataset, std::span<const int> p_values, int trials,
    uint64_t seed, TraceSizeBasis basis = TraceSizeBasis::kDistinctPoints, int threads = 1);

// |class(full trace)| per user. A size above 1 marks a censored user.
std::vector<uint64_t> FullTraceClassSizes(const GeneralizedDataset& dataset, int threads = 1);

// min over users of |class(full trace)|.
uint64_t KAnonymityLevel(const GeneralizedDataset& dataset, int threads = 1);

// Shannon entropy in bits of the point distribution over all (user, point)
// pairs.
double EmpiricalEntropy(const GeneralizedDataset& dataset);

struct RiskMetrics {
  GeneralizationProfile profile;
  uint64_t n = 0;
  // Absent when every user is censored and censored users are excluded.
  std::optional<double> c;
  std::optional<double> r;
  std::optional<double> gain;  // 1 - r
  std::optional<Interval> ci_c;
  std::optional<Interval> ci_r;
  std::vector<UnicityEstimate> unicity;
  uint64_t censored = 0;
  double nonreident_fraction = 0.0;
  uint64_t k_anonymity = 0;
  double entropy_bits = 0.0;
  int trials_per_user = 0;
  uint64_t seed = 0;

  friend bool operator==(const RiskMetrics&, const RiskMetrics&) = default;
};

absl::StatusOr<RiskMetrics> Assess(const GeneralizedDataset& dataset,
                                   const ReidentConfig& config, int threads = 1);

}  // namespace reidrisk

#endif  // REIDRISK_REIDENT_H_
