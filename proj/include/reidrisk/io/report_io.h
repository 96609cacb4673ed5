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

#ifndef REIDRISK_IO_REPORT_IO_H_
#define REIDRISK_IO_REPORT_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "reidrisk/report.h"

namespace reidrisk::io {

enum class ReportFormat { kJson, kCsv };

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);

// JSON keeps every number at full precision and reads back into an equal
// report. CSV is one row per profile with reals fixed at 6 decimals; absent
// values are empty fields.
std::string WriteReport(const AssessmentReport& report, ReportFormat format);

absl::StatusOr<AssessmentReport> ReadReportJson(std::string_view text);

// Fixed 6-decimal rendering used for every real in CSV output.
std::string FormatFixed(double value);

}  // namespace reidrisk::io

#endif  // REIDRISK_IO_REPORT_IO_H_
