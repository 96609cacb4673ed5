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

#include "reidrisk/synthgen.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "reidrisk/io/timestamp_format.h"
#include "reidrisk/parallel.h"
#include "reidrisk/random.h"
#include "reidrisk/strings.h"

namespace reidrisk {
namespace {

std::string Padded(std::string_view prefix, uint64_t value, uint64_t count) {
  int width = 1;
  for (uint64_t c = count; c >= 10; c /= 10) ++width;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*llu", width, static_cast<unsigned long long>(value));
  return absl::StrCat(AsAbsl(prefix), buf);
}

// 22 upper-case hex digits, the shape of a hashed phone number.
std::string Pseudonym(uint64_t seed, uint64_t index) {
  uint64_t a = SubSeed(seed, Stream::kSynthId, index, 0);
  uint64_t b = SubSeed(seed, Stream::kSynthId, index, 1);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%016llX%06llX", static_cast<unsigned long long>(a),
                static_cast<unsigned long long>(b & 0xFFFFFF));
  return buf;
}

// Index drawn with probability proportional to the increments of `cumulative`.
size_t DrawWeighted(const std::vector<double>& cumulative, Rng& rng) {
  double x = rng.UniformDouble() * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
  return std::min(static_cast<size_t>(it - cumulative.begin()), cumulative.size() - 1);
}

SpatialHierarchy::Row TowerRow(const SynthConfig& config, uint32_t tower) {
  SpatialHierarchy::Row row;
  row.tower_id = Padded("", tower, config.n_towers);
  uint64_t zone = tower;
  uint64_t parent_count = config.n_towers;
  for (size_t l = 0; l < config.level_names.size(); ++l) {
    zone = zone * config.zone_counts[l] / parent_count;
    parent_count = config.zone_counts[l];
    char prefix = static_cast<char>(
        std::toupper(static_cast<unsigned char>(config.level_names[l].front())));
    row.zones.push_back(Padded(std::string(1, prefix), zone, config.zone_counts[l]));
  }
  return row;
}

struct Call {
  uint32_t tower;
  uint64_t receiver;  // user index, or n_users for none
  LocalMinutes time;
};

}  // namespace

absl::Status ValidateSynthConfig(const SynthConfig& c) {
  if (c.n_users == 0) return absl::InvalidArgumentError("n_users must be positive");
  if (c.n_users > UINT32_MAX) return absl::InvalidArgumentError("n_users too large");
  if (c.n_towers == 0) return absl::InvalidArgumentError("n_towers must be positive");
  if (c.level_names.empty() || c.level_names.size() != c.zone_counts.size()) {
    return absl::InvalidArgumentError("need one zone count per spatial level");
  }
  uint64_t parent = c.n_towers;
  for (size_t l = 0; l < c.zone_counts.size(); ++l) {
    if (c.level_names[l].empty()) return absl::InvalidArgumentError("empty level name");
    if (c.zone_counts[l] == 0 || c.zone_counts[l] > parent) {
      return absl::InvalidArgumentError(absl::StrCat(
          "infeasible branching: ", c.zone_counts[l], " ", c.level_names[l], " zones under ",
          parent, l == 0 ? " towers" : " finer zones"));
    }
    parent = c.zone_counts[l];
  }
  if (c.period_days == 0) return absl::InvalidArgumentError("period_days must be positive");
  if (!(c.calls_median > 0) || !(c.calls_sigma >= 0)) {
    return absl::InvalidArgumentError("call-count median must be > 0 and sigma >= 0");
  }
  if (c.anchors == 0) return absl::InvalidArgumentError("need at least one anchor tower");
  if (!(c.zipf_exponent >= 0)) return absl::InvalidArgumentError("zipf exponent must be >= 0");
  double total = 0;
  for (double w : c.diurnal) {
    if (!(w >= 0)) return absl::InvalidArgumentError("diurnal weights must be >= 0");
    total += w;
  }
  if (!(total > 0)) return absl::InvalidArgumentError("diurnal weights sum to zero");
  return absl::OkStatus();
}

absl::StatusOr<SynthOutput> Generate(const SynthConfig& config, int threads) {
  if (absl::Status s = ValidateSynthConfig(config); !s.ok()) return s;

  std::vector<SpatialHierarchy::Row> rows;
  rows.reserve(config.n_towers);
  for (uint32_t t = 0; t < config.n_towers; ++t) rows.push_back(TowerRow(config, t));
  std::vector<std::string> tower_ids;
  tower_ids.reserve(rows.size());
  for (const auto& r : rows) tower_ids.push_back(r.tower_id);
  absl::StatusOr<SpatialHierarchy> hierarchy =
      SpatialHierarchy::Create(config.level_names, std::move(rows));
  if (!hierarchy.ok()) return hierarchy.status();

  const uint64_t n = config.n_users;
  std::vector<std::string> ids(n);
  for (uint64_t i = 0; i < n; ++i) ids[i] = Pseudonym(config.seed, i);
  {
    absl::flat_hash_set<std::string_view> seen;
    for (const std::string& id : ids) {
      if (!seen.insert(id).second) {
        return absl::InternalError(absl::StrCat("pseudonym collision on ", id));
      }
    }
  }

  std::vector<double> hour_cumulative(24);
  std::partial_sum(config.diurnal.begin(), config.diurnal.end(), hour_cumulative.begin());
  const LocalMinutes start =
      io::CivilToMinutes(config.start_year, config.start_month, config.start_day, 0, 0);
  const LocalMinutes end = start + static_cast<LocalMinutes>(config.period_days) * kMinutesPerDay;
  const double log_median = std::log(config.calls_median);
  const uint32_t spread = std::min<uint32_t>(2 * config.anchor_radius + 1, config.n_towers);
  const uint32_t anchor_count = std::min(config.anchors, spread);

  std::vector<std::vector<Call>> calls(n);
  ParallelFor(n, threads, 256, [&](size_t begin, size_t stop) {
    std::vector<uint32_t> anchors;
    std::vector<double> anchor_cumulative;
    for (size_t i = begin; i < stop; ++i) {
      Rng rng(SubSeed(config.seed, Stream::kSynthUser, i, 0));
      double draw = std::exp(log_median + config.calls_sigma * rng.Normal());
      auto count = static_cast<uint64_t>(std::max(1.0, std::round(draw)));

      const auto home = static_cast<uint32_t>(rng.UniformIndex(config.n_towers));
      anchors.assign(1, home);
      while (anchors.size() < anchor_count) {
        auto offset = static_cast<int64_t>(rng.UniformIndex(spread)) -
                      static_cast<int64_t>(spread / 2);
        auto t = static_cast<uint32_t>(
            ((static_cast<int64_t>(home) + offset) % config.n_towers + config.n_towers) %
            config.n_towers);
        if (std::find(anchors.begin(), anchors.end(), t) == anchors.end()) anchors.push_back(t);
      }
      anchor_cumulative.resize(anchors.size());
      double acc = 0;
      for (size_t k = 0; k < anchors.size(); ++k) {
        acc += 1.0 / std::pow(static_cast<double>(k + 1), config.zipf_exponent);
        anchor_cumulative[k] = acc;
      }

      std::vector<Call>& out = calls[i];
      out.reserve(count);
      for (uint64_t c = 0; c < count; ++c) {
        Call call;
        call.tower = anchors[DrawWeighted(anchor_cumulative, rng)];
        LocalMinutes day = static_cast<LocalMinutes>(rng.UniformIndex(config.period_days));
        auto hour = static_cast<LocalMinutes>(DrawWeighted(hour_cumulative, rng));
        auto minute = static_cast<LocalMinutes>(rng.UniformIndex(60));
        call.time = start + day * kMinutesPerDay + hour * kMinutesPerHour + minute;
        call.receiver = n;
        if (n > 1) {
          uint64_t other = rng.UniformIndex(n - 1);
          call.receiver = other >= i ? other + 1 : other;
        }
        out.push_back(call);
      }
    }
  });

  RawDataset::Builder builder;
  for (uint64_t i = 0; i < n; ++i) {
    for (const Call& call : calls[i]) {
      std::optional<std::string_view> receiver;
      if (call.receiver < n) receiver = ids[call.receiver];
      builder.Add(ids[i], receiver, tower_ids[call.tower], call.time);
    }
    calls[i] = {};
  }
  absl::StatusOr<RawDataset> raw = std::move(builder).Build(config.timezone, start, end);
  if (!raw.ok()) return raw.status();
  return SynthOutput{*std::move(raw), *std::move(hierarchy)};
}

}  // namespace reidrisk
