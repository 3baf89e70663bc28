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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmp/device.hpp"
#include "qmp/suite.hpp"

namespace qmp {

/// Parses "1..20" (inclusive range), "1,4,9" or a single integer.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

/// Parses "1:2,3:4" into benchmark-id pairs.
std::vector<BenchmarkPair> parse_pairing(std::string_view text);

struct NoiseOverrides {
  std::optional<double> p1q;
  std::optional<double> p2q;
  std::optional<double> p_ro;
  std::optional<bool> crosstalk_enabled;
  std::optional<double> crosstalk_lambda;

  NoiseModel apply(NoiseModel base) const;
};

/// Campaign document (JSON). Every field is optional so command-line flags
/// can fill in or override it; relative paths resolve against the config
/// file's directory.
struct CampaignConfig {
  std::optional<std::string> device;  // builtin name or path
  std::optional<std::vector<BenchmarkPair>> pairing;
  std::optional<std::uint64_t> shots;
  std::optional<std::vector<std::uint64_t>> seeds;
  NoiseOverrides noise;
  std::optional<CostParams> cost;
  std::optional<ScheduleWeights> schedule;  // slice weights
  std::optional<std::filesystem::path> manifest;
  std::optional<std::filesystem::path> output;
};

/// Throws ValidationError naming the offending field.
CampaignConfig parse_campaign(std::string_view json_text, const std::filesystem::path& base_dir = {});
CampaignConfig load_campaign(const std::filesystem::path& path);

/// Device plus its noise model after config overrides.
struct ResolvedDevice {
  DeviceModel device;
  NoiseModel noise;
};

ResolvedDevice resolve_campaign_device(const std::string& device, const NoiseOverrides& noise,
                                       const std::optional<CostParams>& cost);

}  // namespace qmp
