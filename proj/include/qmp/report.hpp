// Copyright 2026 The qmprog Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qmp/qaoa.hpp"
#include "qmp/simulator.hpp"
#include "qmp/suite.hpp"

namespace qmp {

enum class ReportFormat { Structured, Csv };

/// Self-contained JSON documents (provenance included). Loading an emitted
/// document yields a report equal to the original.
std::string suite_report_json(const SuiteReport& report);
SuiteReport parse_suite_report(std::string_view json_text);

std::string qaoa_report_json(const ParallelQaoaReport& report);
ParallelQaoaReport parse_qaoa_report(std::string_view json_text);

/// Columns: pair,slot,benchmark_id,benchmark,mode,seed,shots,pst
/// One row per pair x slot x mode x seed; mode is standalone or simultaneous.
inline constexpr std::string_view kSuiteCsvHeader = "pair,slot,benchmark_id,benchmark,mode,seed,shots,pst";
std::string suite_report_csv(const SuiteReport& report);

/// Columns: run,copy,bitstring,count,frequency,cut_value
/// run is merged or standalone; one row per observed outcome.
inline constexpr std::string_view kQaoaCsvHeader = "run,copy,bitstring,count,frequency,cut_value";
std::string qaoa_report_csv(const ParallelQaoaReport& report);

std::string histogram_json(const OutcomeHistogram& hist);

/// Writes `content` to a temporary sibling and renames it over `path`.
/// Throws Error when the location is not writable.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void emit_report(const SuiteReport& report, ReportFormat format, const std::filesystem::path& path);
void emit_report(const ParallelQaoaReport& report, ReportFormat format, const std::filesystem::path& path);

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double value);

}  // namespace qmp
