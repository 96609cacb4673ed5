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

#include "reidrisk/reident.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/strings/str_cat.h"
#include "reidrisk/parallel.h"
#include "reidrisk/random.h"
#include "reidrisk/strings.h"

namespace reidrisk {
namespace {

// Above this size ratio, intersection gallops through the longer list
// instead of merging.
constexpr size_t kGallopRatio = 16;

// Users per scheduling chunk.
constexpr size_t kUserGrain = 64;

// out = a ∩ b for ascending lists.
void Intersect(std::span<const UserIndex> a, std::span<const UserIndex> b,
               std::vector<UserIndex>& out) {
  out.clear();
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return;
  if (a.size() * kGallopRatio < b.size()) {
    size_t lo = 0;
    for (UserIndex x : a) {
      size_t bound = 1;
      while (lo + bound < b.size() && b[lo + bound] < x) bound *= 2;
      auto last = b.begin() + static_cast<ptrdiff_t>(std::min(b.size(), lo + bound + 1));
      lo = static_cast<size_t>(
          std::lower_bound(b.begin() + static_cast<ptrdiff_t>(lo), last, x) - b.begin());
      if (lo == b.size()) break;
      if (b[lo] == x) out.push_back(x);
    }
    return;
  }
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

// Tracks an equivalence class while points are revealed one at a time. The
// first posting is used in place; later ones are intersected into two
// alternating scratch buffers.
class ClassNarrower {
 public:
  explicit ClassNarrower(const GeneralizedDataset& dataset) : dataset_(dataset) {}

  void Start(PointId p) { members_ = dataset_.posting(p); }

  void Narrow(PointId p) {
    std::vector<UserIndex>& out = buffers_[flip_];
    Intersect(members_, dataset_.posting(p), out);
    members_ = out;
    flip_ ^= 1;
  }

  size_t size() const { return members_.size(); }
  std::span<const UserIndex> members() const { return members_; }

 private:
  const GeneralizedDataset& dataset_;
  std::span<const UserIndex> members_;
  std::vector<UserIndex> buffers_[2];
  int flip_ = 0;
};

// Pool of trace positions to sample from: each position once, or once per
// raw record under the raw-record basis.
void FillPool(const GeneralizedDataset& dataset, UserIndex u, TraceSizeBasis basis,
              std::vector<uint32_t>& pool) {
  pool.clear();
  const uint32_t m = dataset.trace_size(u);
  if (basis == TraceSizeBasis::kDistinctPoints) {
    pool.resize(m);
    std::iota(pool.begin(), pool.end(), 0u);
    return;
  }
  std::span<const uint32_t> counts = dataset.multiplicity(u);
  for (uint32_t t = 0; t < m; ++t) pool.insert(pool.end(), counts[t], t);
}

uint64_t PoolSize(const GeneralizedDataset& dataset, UserIndex u, TraceSizeBasis basis) {
  return basis == TraceSizeBasis::kDistinctPoints ? dataset.trace_size(u) : dataset.raw_size(u);
}

// Everyone who shares a point with one target user, indexed for repeated
// class queries over subsets of the target's trace.
//
// Each co-user v is reduced to its overlap with the target's trace. Co-users
// overlapping in a single position are only tracked as a per-position flag:
// they drop out as soon as a second, different position is revealed. The
// rest are stored column-wise, one bitset over co-users per trace position,
// so revealing a position is a word-wise AND.
class Neighborhood {
 public:
  explicit Neighborhood(const GeneralizedDataset& dataset)
      : dataset_(dataset),
        once_((dataset.n() + 63) / 64),
        twice_((dataset.n() + 63) / 64),
        rank_(dataset.n()) {}

  void Build(UserIndex u) {
    const std::span<const PointId> trace = dataset_.trace(u);
    const size_t m = trace.size();
    std::fill(once_.begin(), once_.end(), 0);
    std::fill(twice_.begin(), twice_.end(), 0);
    shared_.assign(m, false);
    for (size_t t = 0; t < m; ++t) {
      std::span<const UserIndex> posting = dataset_.posting(trace[t]);
      shared_[t] = posting.size() > 1;
      for (UserIndex v : posting) {
        const uint64_t bit = uint64_t{1} << (v % 64);
        twice_[v / 64] |= once_[v / 64] & bit;
        once_[v / 64] |= bit;
      }
    }
    // The target overlaps itself everywhere.
    twice_[u / 64] &= ~(uint64_t{1} << (u % 64));

    // Co-users overlapping in two or more positions get dense ids.
    size_t kept = 0;
    for (size_t w = 0; w < twice_.size(); ++w) {
      for (uint64_t bits = twice_[w]; bits != 0; bits &= bits - 1) {
        rank_[w * 64 + static_cast<size_t>(std::countr_zero(bits))] =
            static_cast<uint32_t>(kept++);
      }
    }
    words_ = (kept + 63) / 64;
    columns_.assign(m * words_, 0);
    counts_.assign(kept, 0);
    for (size_t t = 0; t < m; ++t) {
      uint64_t* column = &columns_[t * words_];
      for (UserIndex v : dataset_.posting(trace[t])) {
        if ((twice_[v / 64] >> (v % 64) & 1) == 0) continue;
        const uint32_t k = rank_[v];
        column[k / 64] |= uint64_t{1} << (k % 64);
        ++counts_[k];
      }
    }
    full_ = 0;
    if (m == 1) {
      full_ = dataset_.posting(trace[0]).size() - 1;
    } else {
      for (uint32_t count : counts_) full_ += count == m;
    }
  }

  // |class(whole trace)|, the target included.
  uint64_t FullClassSize() const { return 1 + full_; }

  // Reveals pool entries in uniformly random order (lazy Fisher-Yates) until
  // the class is the target alone. Returns the number revealed, or 0 if
  // `limit` reveals were not enough.
  uint32_t DrawsUntilUnique(std::vector<uint32_t>& pool, Rng& rng, size_t limit) {
    const size_t n = pool.size();
    limit = std::min(limit, n);
    swaps_.clear();
    uint32_t first = 0;
    bool only_first = true;
    for (size_t k = 0; k < limit; ++k) {
      size_t j = k + rng.UniformIndex(n - k);
      std::swap(pool[k], pool[j]);
      swaps_.push_back(static_cast<uint32_t>(j));
      const uint32_t t = pool[k];
      const uint64_t* column = &columns_[t * words_];
      if (k == 0) {
        if (!shared_[t]) return 1;
        first = t;
        live_.clear();
        for (size_t w = 0; w < words_; ++w) {
          if (column[w] != 0) live_.push_back({static_cast<uint32_t>(w), column[w]});
        }
        continue;
      }
      only_first &= t == first;
      size_t out = 0;
      for (const LiveWord& lw : live_) {
        uint64_t bits = lw.bits & column[lw.word];
        if (bits != 0) live_[out++] = {lw.word, bits};
      }
      live_.resize(out);
      if (live_.empty() && !only_first) return static_cast<uint32_t>(k + 1);
    }
    return 0;
  }

  // Puts the pool back in its order before the last draw.
  void Undo(std::vector<uint32_t>& pool) const {
    for (size_t k = swaps_.size(); k-- > 0;) std::swap(pool[k], pool[swaps_[k]]);
  }

  // Same result as DrawsUntilUnique(pool, rng, limit) for a small limit. All
  // `limit` entries are drawn up front; whether anyone else holds the whole
  // sample is usually settled by the first few words of the AND, so the
  // common not-unique outcome is cheap.
  uint32_t DrawsUntilUniqueShort(std::vector<uint32_t>& pool, Rng& rng, size_t limit) {
    const size_t n = pool.size();
    limit = std::min(limit, n);
    swaps_.clear();
    for (size_t k = 0; k < limit; ++k) {
      size_t j = k + rng.UniformIndex(n - k);
      std::swap(pool[k], pool[j]);
      swaps_.push_back(static_cast<uint32_t>(j));
    }
    return limit == 0 ? 0 : FirstUniquePrefix(pool.data(), limit);
  }

 private:
  // Smallest k in [1, limit] such that nobody else holds every position in
  // positions[0, k), or 0 if there is none.
  uint32_t FirstUniquePrefix(const uint32_t* positions, size_t limit) {
    const uint32_t t0 = positions[0];
    if (!shared_[t0]) return 1;
    size_t same = 1;
    while (same < limit && positions[same] == t0) ++same;
    if (same == limit) return 0;
    // any_[k]: whether some kept co-user holds positions[0, k).
    any_.assign(limit + 1, 0);
    const uint64_t* c0 = &columns_[t0 * words_];
    for (size_t w = 0; w < words_; ++w) {
      uint64_t x = c0[w];
      for (size_t i = same; i < limit; ++i) {
        x &= columns_[positions[i] * words_ + w];
        any_[i + 1] |= x;
      }
      if (x != 0) return 0;
    }
    for (size_t k = same + 1; k <= limit; ++k) {
      if (any_[k] == 0) return static_cast<uint32_t>(k);
    }
    return 0;
  }

  struct LiveWord {
    uint32_t word;
    uint64_t bits;
  };

  const GeneralizedDataset& dataset_;
  std::vector<uint64_t> once_;   // users seen in at least one position
  std::vector<uint64_t> twice_;  // users seen in at least two positions
  std::vector<uint32_t> rank_;   // user -> kept id, valid where twice_ is set
  std::vector<uint32_t> counts_;  // positions held, per kept id
  std::vector<bool> shared_;  // position held by anyone else
  std::vector<uint64_t> columns_;
  size_t words_ = 0;
  uint64_t full_ = 0;
  std::vector<LiveWord> live_;
  std::vector<uint32_t> swaps_;
  std::vector<uint64_t> any_;
};

// What to simulate per user. Zero trials skip a measure.
struct TrialPlan {
  int cost_trials = 0;
  CensoredPolicy censored_policy = CensoredPolicy::kExclude;
  int unicity_trials = 0;
  std::span<const int> p_values;
  uint64_t seed = 0;
  TraceSizeBasis basis = TraceSizeBasis::kDistinctPoints;
};

struct TrialResults {
  std::vector<uint64_t> class_sizes;  // |class(whole trace)| per user
  std::vector<UserCost> costs;
  // unique[u * |p_values| + j]: unicity trials in which user u is singled
  // out by p_values[j].
  std::vector<uint64_t> unique;
};

TrialResults RunTrials(const GeneralizedDataset& dataset, const TrialPlan& plan,
                       int threads) {
  const size_t np = plan.p_values.size();
  const size_t p_max =
      np == 0 ? 0 : static_cast<size_t>(*std::max_element(plan.p_values.begin(),
                                                          plan.p_values.end()));
  TrialResults out;
  out.class_sizes.resize(dataset.n());
  if (plan.cost_trials > 0) out.costs.resize(dataset.n());
  if (plan.unicity_trials > 0) out.unique.assign(dataset.n() * np, 0);

  ParallelFor(dataset.n(), threads, kUserGrain, [&](size_t begin, size_t end) {
    Neighborhood hood(dataset);
    std::vector<uint32_t> pool;
    std::vector<uint64_t> first_unique(p_max + 1);
    for (size_t i = begin; i < end; ++i) {
      auto u = static_cast<UserIndex>(i);
      const uint64_t size = PoolSize(dataset, u, plan.basis);
      const uint64_t key = HashId(dataset.user_id(u));
      hood.Build(u);
      FillPool(dataset, u, plan.basis, pool);
      out.class_sizes[i] = hood.FullClassSize();

      if (plan.cost_trials > 0) {
        UserCost& cost = out.costs[i];
        cost.user = u;
        cost.trace_size = size;
        cost.censored = out.class_sizes[i] > 1;
        if (cost.censored) {
          if (plan.censored_policy == CensoredPolicy::kCountAsFull) {
            cost.mean_cost = static_cast<double>(size);
            cost.mean_ratio = 1.0;
          }
        } else {
          uint64_t total = 0;
          for (int t = 0; t < plan.cost_trials; ++t) {
            Rng rng(SubSeed(plan.seed, Stream::kCost, key, static_cast<uint64_t>(t)));
            total += hood.DrawsUntilUnique(pool, rng, pool.size());
            hood.Undo(pool);
          }
          cost.mean_cost = static_cast<double>(total) / plan.cost_trials;
          cost.mean_ratio = cost.mean_cost / static_cast<double>(size);
        }
      }

      if (plan.unicity_trials > 0) {
        std::fill(first_unique.begin(), first_unique.end(), 0);
        for (int t = 0; t < plan.unicity_trials; ++t) {
          Rng rng(SubSeed(plan.seed, Stream::kUnicity, key, static_cast<uint64_t>(t)));
          ++first_unique[hood.DrawsUntilUniqueShort(pool, rng, p_max)];
          hood.Undo(pool);
        }
        for (size_t j = 0; j < np; ++j) {
          auto p = static_cast<uint64_t>(plan.p_values[j]);
          if (size < p) continue;
          uint64_t count = 0;
          for (uint64_t k = 1; k <= p; ++k) count += first_unique[k];
          out.unique[i * np + j] = count;
        }
      }
    }
  });
  return out;
}

std::vector<UnicityEstimate> SummarizeUnicity(const GeneralizedDataset& dataset,
                                              std::span<const int> p_values, int trials,
                                              TraceSizeBasis basis,
                                              std::span<const uint64_t> unique) {
  const size_t np = p_values.size();
  std::vector<UnicityEstimate> out;
  out.reserve(np);
  for (size_t j = 0; j < np; ++j) {
    UnicityEstimate e;
    e.p = p_values[j];
    e.trials = static_cast<uint64_t>(trials);
    for (UserIndex u = 0; u < dataset.n(); ++u) {
      if (PoolSize(dataset, u, basis) < static_cast<uint64_t>(e.p)) continue;
      ++e.eligible;
      e.unique += unique[u * np + j];
    }
    if (e.eligible > 0) {
      e.value = static_cast<double>(e.unique) / static_cast<double>(e.eligible * e.trials);
    }
    out.push_back(e);
  }
  return out;
}

absl::Status ValidateUnicityArgs(std::span<const int> p_values, int trials) {
  if (p_values.empty()) return absl::InvalidArgumentError("no unicity p values");
  for (int p : p_values) {
    if (p < 1) return absl::InvalidArgumentError(absl::StrCat("unicity p=", p, " < 1"));
  }
  if (trials < 1) {
    return absl::InvalidArgumentError(absl::StrCat("unicity trials ", trials, " < 1"));
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view ToString(CensoredPolicy policy) {
  switch (policy) {
    case CensoredPolicy::kExclude:
      return "exclude";
    case CensoredPolicy::kCountAsFull:
      return "count_as_full";
  }
  return "exclude";
}

std::string_view ToString(TraceSizeBasis basis) {
  switch (basis) {
    case TraceSizeBasis::kDistinctPoints:
      return "distinct_points";
    case TraceSizeBasis::kRawRecords:
      return "raw_records";
  }
  return "distinct_points";
}

absl::StatusOr<CensoredPolicy> ParseCensoredPolicy(std::string_view name) {
  if (name == "exclude") return CensoredPolicy::kExclude;
  if (name == "count_as_full") return CensoredPolicy::kCountAsFull;
  return absl::InvalidArgumentError(absl::StrCat("unknown censored policy '", AsAbsl(name), "'"));
}

absl::StatusOr<TraceSizeBasis> ParseTraceSizeBasis(std::string_view name) {
  if (name == "distinct_points") return TraceSizeBasis::kDistinctPoints;
  if (name == "raw_records") return TraceSizeBasis::kRawRecords;
  return absl::InvalidArgumentError(absl::StrCat("unknown trace size basis '", AsAbsl(name), "'"));
}

absl::Status ValidateConfig(const ReidentConfig& config) {
  if (config.trials_per_user < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("trials per user ", config.trials_per_user, " < 1"));
  }
  if (absl::Status s = ValidateUnicityArgs(config.p_values, config.unicity_trials); !s.ok()) {
    return s;
  }
  if (!std::is_sorted(config.p_values.begin(), config.p_values.end())) {
    return absl::InvalidArgumentError("unicity p values must be sorted ascending");
  }
  if (config.bootstrap_resamples < 1) {
    return absl::InvalidArgumentError("bootstrap resample count must be positive");
  }
  if (!(config.bootstrap_alpha > 0.0 && config.bootstrap_alpha < 1.0)) {
    return absl::InvalidArgumentError("bootstrap alpha must lie in (0, 1)");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<UserIndex>> EquivalenceClass(const GeneralizedDataset& dataset,
                                                        const AuxPoints& aux) {
  if (aux.user >= dataset.n()) {
    return absl::InvalidArgumentError(absl::StrCat("user index ", aux.user, " out of range"));
  }
  std::span<const PointId> trace = dataset.trace(aux.user);
  for (PointId p : aux.points) {
    if (!std::binary_search(trace.begin(), trace.end(), p)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "aux point ", p, " is not in the trace of ", dataset.user_id(aux.user)));
    }
  }
  std::vector<UserIndex> members;
  if (aux.points.empty()) {
    members.resize(dataset.n());
    std::iota(members.begin(), members.end(), UserIndex{0});
    return members;
  }
  std::vector<PointId> order = aux.points;
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return dataset.posting(a).size() < dataset.posting(b).size();
  });
  std::span<const UserIndex> first = dataset.posting(order.front());
  members.assign(first.begin(), first.end());
  std::vector<UserIndex> scratch;
  for (size_t i = 1; i < order.size() && members.size() > 1; ++i) {
    Intersect(members, dataset.posting(order[i]), scratch);
    members.swap(scratch);
  }
  return members;
}

absl::StatusOr<CostOutcome> CostForPermutation(const GeneralizedDataset& dataset,
                                               UserIndex user,
                                               std::span<const PointId> ordering) {
  if (user >= dataset.n()) {
    return absl::InvalidArgumentError(absl::StrCat("user index ", user, " out of range"));
  }
  std::span<const PointId> trace = dataset.trace(user);
  std::vector<PointId> sorted(ordering.begin(), ordering.end());
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), trace.begin(), trace.end())) {
    return absl::FailedPreconditionError(absl::StrCat(
        "ordering is not a permutation of the trace of ", dataset.user_id(user)));
  }
  CostOutcome outcome;
  outcome.user = user;
  outcome.trace_size = trace.size();
  ClassNarrower narrower(dataset);
  for (size_t k = 0; k < ordering.size(); ++k) {
    if (k == 0) {
      narrower.Start(ordering[0]);
    } else {
      narrower.Narrow(ordering[k]);
    }
    if (narrower.size() == 1) {
      outcome.cost = static_cast<uint32_t>(k + 1);
      break;
    }
  }
  return outcome;
}

std::vector<uint64_t> FullTraceClassSizes(const GeneralizedDataset& dataset, int threads) {
  std::vector<uint64_t> sizes(dataset.n());
  ParallelFor(dataset.n(), threads, kUserGrain, [&](size_t begin, size_t end) {
    ClassNarrower narrower(dataset);
    std::vector<PointId> order;
    for (size_t i = begin; i < end; ++i) {
      std::span<const PointId> trace = dataset.trace(static_cast<UserIndex>(i));
      order.assign(trace.begin(), trace.end());
      std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
        return dataset.posting(a).size() < dataset.posting(b).size();
      });
      narrower.Start(order.front());
      for (size_t k = 1; k < order.size() && narrower.size() > 1; ++k) narrower.Narrow(order[k]);
      sizes[i] = narrower.size();
    }
  });
  return sizes;
}

uint64_t KAnonymityLevel(const GeneralizedDataset& dataset, int threads) {
  std::vector<uint64_t> sizes = FullTraceClassSizes(dataset, threads);
  return sizes.empty() ? 0 : *std::min_element(sizes.begin(), sizes.end());
}

double EmpiricalEntropy(const GeneralizedDataset& dataset) {
  const auto total = static_cast<double>(dataset.entry_count());
  if (total == 0) return 0.0;
  double h = 0.0;
  for (PointId p = 0; p < dataset.point_count(); ++p) {
    double q = static_cast<double>(dataset.posting(p).size()) / total;
    h -= q * std::log2(q);
  }
  return h == 0.0 ? 0.0 : h;  // normalize -0
}

absl::StatusOr<std::vector<UserCost>> ExpectedCosts(const GeneralizedDataset& dataset,
                                                    const ReidentConfig& config, int threads) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  if (dataset.n() == 0) return absl::InvalidArgumentError("dataset has no users");
  TrialPlan plan;
  plan.cost_trials = config.trials_per_user;
  plan.censored_policy = config.censored_policy;
  plan.seed = config.seed;
  plan.basis = config.trace_size_basis;
  return RunTrials(dataset, plan, threads).costs;
}

absl::StatusOr<std::vector<UnicityEstimate>> UnicityTable(const GeneralizedDataset& dataset,
                                                          std::span<const int> p_values,
                                                          int trials, uint64_t seed,
                                                          TraceSizeBasis basis, int threads) {
  if (absl::Status s = ValidateUnicityArgs(p_values, trials); !s.ok()) return s;
  TrialPlan plan;
  plan.unicity_trials = trials;
  plan.p_values = p_values;
  plan.seed = seed;
  plan.basis = basis;
  TrialResults results = RunTrials(dataset, plan, threads);
  return SummarizeUnicity(dataset, p_values, trials, basis, results.unique);
}

absl::StatusOr<UnicityEstimate> Unicity(const GeneralizedDataset& dataset, int p, int trials,
                                        uint64_t seed, TraceSizeBasis basis, int threads) {
  const int ps[] = {p};
  absl::StatusOr<std::vector<UnicityEstimate>> table =
      UnicityTable(dataset, ps, trials, seed, basis, threads);
  if (!table.ok()) return table.status();
  UnicityEstimate e = table->front();
  if (e.eligible == 0) {
    uint64_t max_size = 0;
    for (UserIndex u = 0; u < dataset.n(); ++u) {
      max_size = std::max(max_size, PoolSize(dataset, u, basis));
    }
    return absl::FailedPreconditionError(absl::StrCat(
        "no user has p=", p, " points to sample (max trace size ", max_size, ")"));
  }
  return e;
}

absl::StatusOr<RiskMetrics> Assess(const GeneralizedDataset& dataset,
                                   const ReidentConfig& config, int threads) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  if (dataset.n() == 0) return absl::InvalidArgumentError("dataset has no users");

  TrialPlan plan;
  plan.cost_trials = config.trials_per_user;
  plan.censored_policy = config.censored_policy;
  plan.unicity_trials = config.unicity_trials;
  plan.p_values = config.p_values;
  plan.seed = config.seed;
  plan.basis = config.trace_size_basis;
  TrialResults results = RunTrials(dataset, plan, threads);
  const std::vector<uint64_t>& sizes = results.class_sizes;
  const std::vector<UserCost>& costs = results.costs;

  RiskMetrics m;
  m.profile = dataset.profile();
  m.n = dataset.n();
  m.trials_per_user = config.trials_per_user;
  m.seed = config.seed;
  m.k_anonymity = *std::min_element(sizes.begin(), sizes.end());
  m.entropy_bits = EmpiricalEntropy(dataset);

  std::vector<double> cost_values;
  std::vector<double> ratio_values;
  for (const UserCost& c : costs) {
    if (c.censored) {
      ++m.censored;
      if (config.censored_policy == CensoredPolicy::kExclude) continue;
    }
    cost_values.push_back(c.mean_cost);
    ratio_values.push_back(c.mean_ratio);
  }
  m.nonreident_fraction = static_cast<double>(m.censored) / static_cast<double>(m.n);

  if (!cost_values.empty()) {
    auto mean = [](const std::vector<double>& v) {
      double sum = 0.0;
      for (double x : v) sum += x;
      return sum / static_cast<double>(v.size());
    };
    m.c = mean(cost_values);
    m.r = mean(ratio_values);
    m.gain = 1.0 - *m.r;

    const std::span<const double> columns[] = {cost_values, ratio_values};
    absl::StatusOr<std::vector<Interval>> cis =
        BootstrapCis(columns, config.bootstrap_resamples, config.bootstrap_alpha,
                     SubSeed(config.seed, Stream::kBootstrap, 1, 0), threads);
    if (!cis.ok()) return cis.status();
    // A percentile interval can in principle miss the point estimate for
    // tiny skewed samples; widen to keep the estimate inside.
    auto widen = [](const Interval& iv, double estimate) {
      return Interval{std::min(iv.low, estimate), std::max(iv.high, estimate)};
    };
    m.ci_c = widen((*cis)[0], *m.c);
    m.ci_r = widen((*cis)[1], *m.r);
  }

  m.unicity = SummarizeUnicity(dataset, config.p_values, config.unicity_trials,
                               config.trace_size_basis, results.unique);
  return m;
}

}  // namespace reidrisk
