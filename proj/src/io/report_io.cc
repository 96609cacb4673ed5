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

#include "reidrisk/io/report_io.h"

#include <cstdio>
#include <optional>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "reidrisk/io/csv.h"
#include "reidrisk/strings.h"

namespace reidrisk::io {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json OrNull(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json IntervalJson(const std::optional<Interval>& iv) {
  if (!iv) return nullptr;
  return Json{{"low", iv->low}, {"high", iv->high}};
}

Json ConfigJson(const ReidentConfig& c) {
  return Json{{"trials_per_user", c.trials_per_user},
              {"unicity_trials", c.unicity_trials},
              {"p_values", c.p_values},
              {"seed", c.seed},
              {"censored_policy", ToString(c.censored_policy)},
              {"trace_size_basis", ToString(c.trace_size_basis)},
              {"bootstrap_resamples", c.bootstrap_resamples},
              {"bootstrap_alpha", c.bootstrap_alpha}};
}

Json RowJson(const ReportRow& row) {
  const RiskMetrics& m = row.metrics;
  Json unicity = Json::array();
  for (const UnicityEstimate& u : m.unicity) {
    unicity.push_back(Json{{"p", u.p},
                           {"value", OrNull(u.value)},
                           {"eligible", u.eligible},
                           {"trials", u.trials},
                           {"unique", u.unique}});
  }
  Json utility = nullptr;
  if (row.utility) {
    utility = Json{{"mean", row.utility->mean},
                   {"ci_low", OrNull(row.utility->ci_low)},
                   {"ci_high", OrNull(row.utility->ci_high)}};
  }
  return Json{{"profile", m.profile.Label()},
              {"spatial_level", m.profile.spatial_level},
              {"temporal_hours", m.profile.temporal_hours},
              {"n", m.n},
              {"c", OrNull(m.c)},
              {"r", OrNull(m.r)},
              {"gain", OrNull(m.gain)},
              {"ci_c", IntervalJson(m.ci_c)},
              {"ci_r", IntervalJson(m.ci_r)},
              {"censored", m.censored},
              {"nonreident_fraction", m.nonreident_fraction},
              {"k_anonymity", m.k_anonymity},
              {"entropy_bits", m.entropy_bits},
              {"unicity", unicity},
              {"trials_per_user", m.trials_per_user},
              {"seed", m.seed},
              {"utility", utility}};
}

Json ParetoJson(const ParetoSection& p) {
  Json points = Json::array();
  for (const ParetoPoint& pt : p.points) {
    points.push_back(Json{{"profile", pt.profile.Label()},
                          {"spatial_level", pt.profile.spatial_level},
                          {"temporal_hours", pt.profile.temporal_hours},
                          {"utility", pt.utility},
                          {"privacy", pt.privacy}});
  }
  Json front = Json::array();
  for (size_t i : p.partition.nondominated) front.push_back(i);
  Json dominated = Json::array();
  for (const DominatedEntry& d : p.partition.dominated) {
    dominated.push_back(Json{{"index", d.index},
                             {"dominator", d.dominator},
                             {"profile", p.points[d.index].profile.Label()},
                             {"dominated_by", p.points[d.dominator].profile.Label()}});
  }
  return Json{{"points", points}, {"nondominated", front}, {"dominated", dominated}};
}

std::string WriteJson(const AssessmentReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  Json rows = Json::array();
  for (const ReportRow& row : report.rows) rows.push_back(RowJson(row));
  Json doc{{"config", ConfigJson(report.config)},
           {"inputs", inputs},
           {"profiles", rows},
           {"pareto", report.pareto ? ParetoJson(*report.pareto) : Json(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string Fixed(const std::optional<double>& v) {
  return v ? FormatFixed(*v) : std::string();
}

std::string WriteCsv(const AssessmentReport& report) {
  bool any_utility = false;
  for (const ReportRow& row : report.rows) any_utility |= row.utility.has_value();

  std::string out =
      "profile,spatial_level,temporal_hours,n,c,r,gain,nonreident_fraction,"
      "c_ci_low,c_ci_high,r_ci_low,r_ci_high,censored,k_anonymity,entropy_bits";
  for (int p : report.config.p_values) absl::StrAppend(&out, ",u", p, ",u", p, "_eligible");
  if (any_utility) out += ",utility";
  if (report.pareto) out += ",pareto,dominated_by";
  out += "\n";

  for (size_t i = 0; i < report.rows.size(); ++i) {
    const RiskMetrics& m = report.rows[i].metrics;
    absl::StrAppend(&out, m.profile.Label(), ",", CsvField(m.profile.spatial_level), ",",
                    m.profile.temporal_hours, ",", m.n, ",", Fixed(m.c), ",", Fixed(m.r), ",",
                    Fixed(m.gain), ",", FormatFixed(m.nonreident_fraction));
    for (const std::optional<Interval>& iv : {m.ci_c, m.ci_r}) {
      absl::StrAppend(&out, ",", iv ? FormatFixed(iv->low) : "", ",",
                      iv ? FormatFixed(iv->high) : "");
    }
    absl::StrAppend(&out, ",", m.censored, ",", m.k_anonymity, ",", FormatFixed(m.entropy_bits));
    for (int p : report.config.p_values) {
      const UnicityEstimate* est = nullptr;
      for (const UnicityEstimate& u : m.unicity) {
        if (u.p == p) est = &u;
      }
      absl::StrAppend(&out, ",", est ? Fixed(est->value) : "", ",",
                      est ? absl::StrCat(est->eligible) : "");
    }
    if (any_utility) {
      const auto& u = report.rows[i].utility;
      absl::StrAppend(&out, ",", u ? FormatFixed(u->mean) : "");
    }
    if (report.pareto) {
      std::string status = "nondominated";
      std::string by;
      for (const DominatedEntry& d : report.pareto->partition.dominated) {
        if (d.index == i) {
          status = "dominated";
          by = report.pareto->points[d.dominator].profile.Label();
        }
      }
      absl::StrAppend(&out, ",", status, ",", by);
    }
    out += "\n";
  }
  return out;
}

std::optional<double> OptDouble(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::optional<Interval> OptInterval(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Interval{j.at("low").get<double>(), j.at("high").get<double>()};
}

}  // namespace

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  return absl::InvalidArgumentError(absl::StrCat("unknown report format '", AsAbsl(name), "'"));
}

std::string FormatFixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string WriteReport(const AssessmentReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? WriteJson(report) : WriteCsv(report);
}

absl::StatusOr<AssessmentReport> ReadReportJson(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    AssessmentReport report;

    const Json& c = doc.at("config");
    ReidentConfig& config = report.config;
    config.trials_per_user = c.at("trials_per_user").get<int>();
    config.unicity_trials = c.at("unicity_trials").get<int>();
    config.p_values = c.at("p_values").get<std::vector<int>>();
    config.seed = c.at("seed").get<uint64_t>();
    auto policy = ParseCensoredPolicy(c.at("censored_policy").get<std::string>());
    if (!policy.ok()) return policy.status();
    config.censored_policy = *policy;
    auto basis = ParseTraceSizeBasis(c.at("trace_size_basis").get<std::string>());
    if (!basis.ok()) return basis.status();
    config.trace_size_basis = *basis;
    config.bootstrap_resamples = c.at("bootstrap_resamples").get<int>();
    config.bootstrap_alpha = c.at("bootstrap_alpha").get<double>();

    for (const auto& [k, v] : doc.at("inputs").items()) {
      report.inputs.emplace_back(k, v.get<std::string>());
    }

    for (const Json& r : doc.at("profiles")) {
      ReportRow row;
      RiskMetrics& m = row.metrics;
      m.profile.spatial_level = r.at("spatial_level").get<std::string>();
      m.profile.temporal_hours = r.at("temporal_hours").get<int>();
      m.n = r.at("n").get<uint64_t>();
      m.c = OptDouble(r.at("c"));
      m.r = OptDouble(r.at("r"));
      m.gain = OptDouble(r.at("gain"));
      m.ci_c = OptInterval(r.at("ci_c"));
      m.ci_r = OptInterval(r.at("ci_r"));
      m.censored = r.at("censored").get<uint64_t>();
      m.nonreident_fraction = r.at("nonreident_fraction").get<double>();
      m.k_anonymity = r.at("k_anonymity").get<uint64_t>();
      m.entropy_bits = r.at("entropy_bits").get<double>();
      for (const Json& u : r.at("unicity")) {
        UnicityEstimate e;
        e.p = u.at("p").get<int>();
        e.value = OptDouble(u.at("value"));
        e.eligible = u.at("eligible").get<uint64_t>();
        e.trials = u.at("trials").get<uint64_t>();
        e.unique = u.at("unique").get<uint64_t>();
        m.unicity.push_back(e);
      }
      m.trials_per_user = r.at("trials_per_user").get<int>();
      m.seed = r.at("seed").get<uint64_t>();
      if (const Json& u = r.at("utility"); !u.is_null()) {
        row.utility = UtilityScore{u.at("mean").get<double>(), OptDouble(u.at("ci_low")),
                                   OptDouble(u.at("ci_high"))};
      }
      report.rows.push_back(std::move(row));
    }

    if (const Json& p = doc.at("pareto"); !p.is_null()) {
      ParetoSection section;
      for (const Json& pt : p.at("points")) {
        section.points.push_back(
            {GeneralizationProfile{pt.at("spatial_level").get<std::string>(),
                                   pt.at("temporal_hours").get<int>()},
             pt.at("utility").get<double>(), pt.at("privacy").get<double>()});
      }
      section.partition.nondominated = p.at("nondominated").get<std::vector<size_t>>();
      for (const Json& d : p.at("dominated")) {
        section.partition.dominated.push_back(
            {d.at("index").get<size_t>(), d.at("dominator").get<size_t>()});
      }
      report.pareto = std::move(section);
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed report JSON: ", e.what()));
  }
}

}  // namespace reidrisk::io
