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

// reidrisk command-line tool.
//
//   reidrisk generate --users N --days D --seed S --out DIR
//   reidrisk assess   --cdr F --hierarchy H [--spatial ...] [--temporal ...] --out F2
//   reidrisk unicity  --cdr F --hierarchy H --p 1,2,3,4 [--out F2]
//
// Exit codes: 0 success, 2 usage or validation error, 3 input-data error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "reidrisk/generalize.h"
#include "reidrisk/hierarchy.h"
#include "reidrisk/io/cdr_io.h"
#include "reidrisk/io/csv.h"
#include "reidrisk/io/hierarchy_io.h"
#include "reidrisk/io/report_io.h"
#include "reidrisk/io/timestamp_format.h"
#include "reidrisk/io/utility_io.h"
#include "reidrisk/parallel.h"
#include "reidrisk/reident.h"
#include "reidrisk/report.h"
#include "reidrisk/synthgen.h"

namespace reidrisk {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

// A failure with the exit code it maps to.
struct Failure {
  int code;
  std::string message;
};

Failure Usage(std::string message) { return {kExitUsage, std::move(message)}; }
Failure Data(std::string message) { return {kExitData, std::move(message)}; }

Failure Usage(const absl::Status& s) { return Usage(std::string(s.message())); }
Failure Data(const absl::Status& s) { return Data(std::string(s.message())); }

Failure Data(const std::string& file, const absl::Status& s) {
  return Data(absl::StrCat(file, ": ", s.message()));
}

template <typename T>
using Result = std::variant<T, Failure>;

int Report(const Failure& f) {
  std::cerr << "reidrisk: " << f.message << "\n";
  return f.code;
}

// Writes `content` to `path`, or to stdout when the path is empty.
std::optional<Failure> WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return std::nullopt;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return Usage(absl::StrCat("cannot write ", path));
  out << content;
  out.close();
  if (!out) return Usage(absl::StrCat("failed writing ", path));
  return std::nullopt;
}

// Flags shared by assess and unicity.
struct InputFlags {
  std::string cdr;
  std::string hierarchy;
  std::vector<std::string> spatial;
  std::vector<int> temporal = {1};
  uint64_t seed = 0;
  std::string format;
  std::string out;
  std::string basis = "distinct_points";
  std::string time_format = "yyyy-MM-dd HH:mm";
  std::string timezone = "UTC";
  std::string caller_column = "caller_id";
  std::string receiver_column = "receiver_id";
  std::string tower_column = "tower_id";
  std::string time_column = "time";
  char delimiter = ',';
  int threads = DefaultThreadCount();
};

void AddInputFlags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--cdr", f.cdr, "CDR CSV file")->required();
  cmd->add_option("--hierarchy", f.hierarchy, "tower-to-zone hierarchy CSV")->required();
  cmd->add_option("--spatial", f.spatial, "spatial levels (default: finest)")->delimiter(',');
  cmd->add_option("--temporal", f.temporal, "temporal granularities in hours")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "random seed")->capture_default_str();
  cmd->add_option("--out", f.out, "output file (default: stdout)");
  cmd->add_option("--basis", f.basis, "trace size basis: distinct_points|raw_records")
      ->capture_default_str();
  cmd->add_option("--time-format", f.time_format, "timestamp pattern")->capture_default_str();
  cmd->add_option("--timezone", f.timezone, "timezone of the timestamps")
      ->capture_default_str();
  cmd->add_option("--caller-column", f.caller_column)->capture_default_str();
  cmd->add_option("--receiver-column", f.receiver_column)->capture_default_str();
  cmd->add_option("--tower-column", f.tower_column)->capture_default_str();
  cmd->add_option("--time-column", f.time_column)->capture_default_str();
  cmd->add_option("--delimiter", f.delimiter, "CDR field delimiter")->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

struct Inputs {
  RawDataset raw;
  SpatialHierarchy hierarchy;
  std::vector<GeneralizationProfile> profiles;
};

Result<Inputs> LoadInputs(const InputFlags& f) {
  std::ifstream hin(f.hierarchy, std::ios::binary);
  if (!hin) return Data(absl::StrCat("cannot open ", f.hierarchy));
  absl::StatusOr<SpatialHierarchy> hierarchy = io::ParseSpatialMap(hin);
  if (!hierarchy.ok()) return Data(f.hierarchy, hierarchy.status());

  std::vector<std::string> levels = f.spatial;
  if (levels.empty()) levels.push_back(hierarchy->levels().front());
  std::vector<GeneralizationProfile> profiles;
  for (const std::string& level : levels) {
    for (int hours : f.temporal) {
      absl::StatusOr<GeneralizationProfile> p =
          ResolveProfile(GeneralizationProfile{level, hours}, *hierarchy);
      if (!p.ok()) return Usage(p.status());
      profiles.push_back(*std::move(p));
    }
  }

  io::CdrSchemaConfig schema;
  schema.caller = {f.caller_column, std::nullopt};
  schema.receiver = {f.receiver_column, std::nullopt};
  schema.tower = {f.tower_column, std::nullopt};
  schema.time = {f.time_column, std::nullopt};
  schema.time_format = f.time_format;
  schema.timezone = f.timezone;
  schema.delimiter = f.delimiter;
  if (absl::StatusOr<io::TimestampFormat> tf = io::TimestampFormat::Create(f.time_format);
      !tf.ok()) {
    return Usage(tf.status());
  }
  std::ifstream cin(f.cdr, std::ios::binary);
  if (!cin) return Data(absl::StrCat("cannot open ", f.cdr));
  absl::StatusOr<RawDataset> raw = io::ParseCdr(cin, schema);
  if (!raw.ok()) return Data(f.cdr, raw.status());
  return Inputs{*std::move(raw), *std::move(hierarchy), std::move(profiles)};
}

std::vector<std::pair<std::string, std::string>> Provenance(const InputFlags& f,
                                                            const Inputs& in) {
  std::vector<std::string> levels;
  std::vector<int> hours;
  for (const GeneralizationProfile& p : in.profiles) {
    if (std::find(levels.begin(), levels.end(), p.spatial_level) == levels.end()) {
      levels.push_back(p.spatial_level);
    }
    if (std::find(hours.begin(), hours.end(), p.temporal_hours) == hours.end()) {
      hours.push_back(p.temporal_hours);
    }
  }
  return {{"cdr", f.cdr},
          {"hierarchy", f.hierarchy},
          {"time_format", f.time_format},
          {"timezone", f.timezone},
          {"records", absl::StrCat(in.raw.record_count())},
          {"users", absl::StrCat(in.raw.users().size())},
          {"spatial", absl::StrJoin(levels, ",")},
          {"temporal", absl::StrJoin(hours, ",")}};
}

Result<GeneralizedDataset> Generalized(const Inputs& in, const GeneralizationProfile& profile,
                                       int threads) {
  absl::StatusOr<GeneralizedDataset> g = GeneralizeDataset(in.raw, profile, in.hierarchy, threads);
  if (!g.ok()) {
    if (absl::IsInvalidArgument(g.status())) return Usage(g.status());
    return Data(g.status());
  }
  return *std::move(g);
}

// --- generate ---------------------------------------------------------------

struct GenerateFlags {
  SynthConfig config;
  std::string out;
  int threads = DefaultThreadCount();
};

int RunGenerate(const GenerateFlags& f) {
  if (absl::Status s = ValidateSynthConfig(f.config); !s.ok()) return Report(Usage(s));
  std::error_code ec;
  std::filesystem::create_directories(f.out, ec);
  if (ec || !std::filesystem::is_directory(f.out)) {
    return Report(Usage(absl::StrCat("cannot create output directory ", f.out)));
  }
  absl::StatusOr<SynthOutput> synth = Generate(f.config, f.threads);
  if (!synth.ok()) return Report(Usage(synth.status()));

  std::ostringstream cdr;
  if (absl::Status s = io::WriteCdr(cdr, synth->raw); !s.ok()) return Report(Usage(s));
  std::ostringstream hierarchy;
  if (absl::Status s = io::WriteSpatialMap(hierarchy, synth->hierarchy); !s.ok()) {
    return Report(Usage(s));
  }
  std::filesystem::path dir(f.out);
  if (auto e = WriteOutput((dir / "cdr.csv").string(), cdr.str())) return Report(*e);
  if (auto e = WriteOutput((dir / "hierarchy.csv").string(), hierarchy.str())) {
    return Report(*e);
  }
  return kExitOk;
}

// --- assess -----------------------------------------------------------------

struct AssessFlags {
  InputFlags input;
  ReidentConfig config;
  std::string policy = "exclude";
  std::string utility;
  bool pareto = false;
};

int RunAssess(AssessFlags& f) {
  if (f.pareto && f.utility.empty()) return Report(Usage("--pareto requires --utility"));
  absl::StatusOr<io::ReportFormat> format =
      io::ParseReportFormat(f.input.format.empty() ? "json" : f.input.format);
  if (!format.ok()) return Report(Usage(format.status()));
  absl::StatusOr<CensoredPolicy> policy = ParseCensoredPolicy(f.policy);
  if (!policy.ok()) return Report(Usage(policy.status()));
  absl::StatusOr<TraceSizeBasis> basis = ParseTraceSizeBasis(f.input.basis);
  if (!basis.ok()) return Report(Usage(basis.status()));
  f.config.censored_policy = *policy;
  f.config.trace_size_basis = *basis;
  f.config.seed = f.input.seed;
  if (absl::Status s = ValidateConfig(f.config); !s.ok()) return Report(Usage(s));

  std::optional<UtilityTable> utilities;
  if (!f.utility.empty()) {
    std::ifstream uin(f.utility, std::ios::binary);
    if (!uin) return Report(Data(absl::StrCat("cannot open ", f.utility)));
    absl::StatusOr<UtilityTable> table = io::ParseUtilityScores(uin);
    if (!table.ok()) return Report(Data(f.utility, table.status()));
    utilities = *std::move(table);
  }

  Result<Inputs> loaded = LoadInputs(f.input);
  if (auto* e = std::get_if<Failure>(&loaded)) return Report(*e);
  const Inputs& in = std::get<Inputs>(loaded);

  std::vector<RiskMetrics> metrics;
  for (const GeneralizationProfile& profile : in.profiles) {
    Result<GeneralizedDataset> g = Generalized(in, profile, f.input.threads);
    if (auto* e = std::get_if<Failure>(&g)) return Report(*e);
    absl::StatusOr<RiskMetrics> m =
        Assess(std::get<GeneralizedDataset>(g), f.config, f.input.threads);
    if (!m.ok()) return Report(Data(m.status()));
    metrics.push_back(*std::move(m));
  }

  auto inputs = Provenance(f.input, in);
  if (!f.utility.empty()) inputs.emplace_back("utility", f.utility);
  absl::StatusOr<AssessmentReport> report =
      BuildReport(std::move(metrics), utilities ? &*utilities : nullptr, f.pareto, f.config,
                  std::move(inputs));
  if (!report.ok()) return Report(Data(report.status()));
  if (auto e = WriteOutput(f.input.out, io::WriteReport(*report, *format))) return Report(*e);
  return kExitOk;
}

// --- unicity ----------------------------------------------------------------

struct UnicityFlags {
  InputFlags input;
  std::vector<int> p = {1, 2, 3, 4};
  int trials = 1000;
};

std::string UnicityCsv(const std::vector<std::pair<GeneralizationProfile,
                                                   std::vector<UnicityEstimate>>>& rows) {
  std::string out = "profile,spatial_level,temporal_hours,p,u_p,eligible,trials,unique\n";
  for (const auto& [profile, estimates] : rows) {
    for (const UnicityEstimate& u : estimates) {
      absl::StrAppend(&out, profile.Label(), ",", io::CsvField(profile.spatial_level), ",",
                      profile.temporal_hours, ",", u.p, ",",
                      u.value ? io::FormatFixed(*u.value) : "", ",", u.eligible, ",", u.trials,
                      ",", u.unique, "\n");
    }
  }
  return out;
}

int RunUnicity(UnicityFlags& f) {
  absl::StatusOr<io::ReportFormat> format =
      io::ParseReportFormat(f.input.format.empty() ? "csv" : f.input.format);
  if (!format.ok()) return Report(Usage(format.status()));
  absl::StatusOr<TraceSizeBasis> basis = ParseTraceSizeBasis(f.input.basis);
  if (!basis.ok()) return Report(Usage(basis.status()));
  ReidentConfig config;
  config.p_values = f.p;
  config.unicity_trials = f.trials;
  config.seed = f.input.seed;
  config.trace_size_basis = *basis;
  if (absl::Status s = ValidateConfig(config); !s.ok()) return Report(Usage(s));

  Result<Inputs> loaded = LoadInputs(f.input);
  if (auto* e = std::get_if<Failure>(&loaded)) return Report(*e);
  const Inputs& in = std::get<Inputs>(loaded);

  std::vector<std::pair<GeneralizationProfile, std::vector<UnicityEstimate>>> rows;
  for (const GeneralizationProfile& profile : in.profiles) {
    Result<GeneralizedDataset> g = Generalized(in, profile, f.input.threads);
    if (auto* e = std::get_if<Failure>(&g)) return Report(*e);
    absl::StatusOr<std::vector<UnicityEstimate>> table =
        UnicityTable(std::get<GeneralizedDataset>(g), config.p_values, config.unicity_trials,
                     config.seed, config.trace_size_basis, f.input.threads);
    if (!table.ok()) return Report(Data(table.status()));
    rows.emplace_back(profile, *std::move(table));
  }

  std::string text;
  if (*format == io::ReportFormat::kCsv) {
    text = UnicityCsv(rows);
  } else {
    // The assessment JSON layout with only the unicity fields populated.
    AssessmentReport report;
    report.config = config;
    report.inputs = Provenance(f.input, in);
    for (auto& [profile, estimates] : rows) {
      ReportRow row;
      row.metrics.profile = profile;
      row.metrics.unicity = std::move(estimates);
      row.metrics.seed = config.seed;
      report.rows.push_back(std::move(row));
    }
    text = io::WriteReport(report, *format);
  }
  if (auto e = WriteOutput(f.input.out, text)) return Report(*e);
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Reidentification risk of generalized spatio-temporal event data"};
  app.require_subcommand(1);

  GenerateFlags gen;
  CLI::App* generate = app.add_subcommand("generate", "write a synthetic CDR dataset");
  generate->add_option("--users", gen.config.n_users, "number of users")->required();
  generate->add_option("--days", gen.config.period_days, "days in the period")
      ->capture_default_str();
  generate->add_option("--seed", gen.config.seed, "random seed")->capture_default_str();
  generate->add_option("--out", gen.out, "output directory")->required();
  generate->add_option("--towers", gen.config.n_towers, "number of towers")
      ->capture_default_str();
  generate->add_option("--zones", gen.config.zone_counts, "zones per level, finest first")
      ->delimiter(',')
      ->capture_default_str();
  generate->add_option("--median-calls", gen.config.calls_median, "median calls per user")
      ->capture_default_str();
  generate->add_option("--sigma", gen.config.calls_sigma, "log-normal sigma of calls per user")
      ->capture_default_str();
  generate->add_option("--anchors", gen.config.anchors, "anchor towers per user")
      ->capture_default_str();
  generate->add_option("--threads", gen.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  AssessFlags assess;
  CLI::App* assess_cmd = app.add_subcommand("assess", "compute risk metrics over a grid");
  AddInputFlags(assess_cmd, assess.input);
  assess_cmd->add_option("--format", assess.input.format, "json|csv (default json)");
  assess_cmd->add_option("--trials", assess.config.trials_per_user, "cost trials per user")
      ->capture_default_str();
  assess_cmd->add_option("--unicity-trials", assess.config.unicity_trials,
                         "unicity trials per user")
      ->capture_default_str();
  assess_cmd->add_option("--p", assess.config.p_values, "unicity p values")
      ->delimiter(',')
      ->capture_default_str();
  assess_cmd->add_option("--policy", assess.policy, "censored users: exclude|count_as_full")
      ->capture_default_str();
  assess_cmd->add_option("--bootstrap", assess.config.bootstrap_resamples,
                         "bootstrap resamples")
      ->capture_default_str();
  assess_cmd->add_option("--alpha", assess.config.bootstrap_alpha, "CI miscoverage")
      ->capture_default_str();
  assess_cmd->add_option("--utility", assess.utility, "utility scores CSV");
  assess_cmd->add_flag("--pareto", assess.pareto, "append the Pareto analysis");

  UnicityFlags uni;
  CLI::App* unicity_cmd = app.add_subcommand("unicity", "estimate u_p");
  AddInputFlags(unicity_cmd, uni.input);
  unicity_cmd->add_option("--format", uni.input.format, "csv|json (default csv)");
  unicity_cmd->add_option("--p", uni.p, "p values")->delimiter(',')->capture_default_str();
  unicity_cmd->add_option("--trials", uni.trials, "trials per user")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (generate->parsed()) return RunGenerate(gen);
  if (assess_cmd->parsed()) return RunAssess(assess);
  return RunUnicity(uni);
}

}  // namespace
}  // namespace reidrisk

int main(int argc, char** argv) { return reidrisk::Main(argc, argv); }
