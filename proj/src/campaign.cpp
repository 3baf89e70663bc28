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

#include "qmp/campaign.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qmp/error.hpp"

namespace qmp {

using nlohmann::json;

namespace {

std::uint64_t parse_u64(std::string_view s, const std::string& field) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ValidationError(field, "'" + std::string(s) + "' is not a non-negative integer");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ValidationError(prefix + key, "unknown field");
  }
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& field) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(field, "has the wrong type");
  }
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dots), "seeds");
    const std::uint64_t hi = parse_u64(text.substr(dots + 2), "seeds");
    if (hi < lo) throw ValidationError("seeds", "empty range '" + std::string(text) + "'");
    if (hi - lo >= 1000000) throw ValidationError("seeds", "range too long");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  for (std::string_view part : split(text, ',')) seeds.push_back(parse_u64(part, "seeds"));
  return seeds;
}

std::vector<BenchmarkPair> parse_pairing(std::string_view text) {
  std::vector<BenchmarkPair> pairs;
  for (std::string_view part : split(text, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw ValidationError("pairing", "expected a:b, got '" + std::string(part) + "'");
    pairs.emplace_back(static_cast<int>(parse_u64(part.substr(0, colon), "pairing")),
                       static_cast<int>(parse_u64(part.substr(colon + 1), "pairing")));
  }
  return pairs;
}

NoiseModel NoiseOverrides::apply(NoiseModel base) const {
  if (p1q) base.p1q = *p1q;
  if (p2q) base.p2q = *p2q;
  if (p_ro) base.p_ro = *p_ro;
  if (crosstalk_enabled) base.crosstalk_enabled = *crosstalk_enabled;
  if (crosstalk_lambda) base.crosstalk_lambda = *crosstalk_lambda;
  base.validate();
  return base;
}

CampaignConfig parse_campaign(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config", "expected a JSON object");
  reject_unknown(doc, {"device", "pairing", "shots", "seeds", "noise", "cost", "schedule", "manifest", "output"}, "");

  const auto resolve = [&](const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base_dir.empty() ? path : base_dir / path;
  };

  CampaignConfig cfg;
  if (doc.contains("device")) {
    const std::string d = get<std::string>(doc, "device", "device");
    cfg.device = builtin_device(d) ? d : resolve(d).string();
  }
  if (doc.contains("pairing")) {
    std::vector<BenchmarkPair> pairs;
    for (const auto& p : doc.at("pairing")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw ValidationError("pairing", "each pair must be [a, b] with integer benchmark ids");
      }
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    if (pairs.empty()) throw ValidationError("pairing", "must list at least one pair");
    cfg.pairing = std::move(pairs);
  }
  if (doc.contains("shots")) {
    if (!doc.at("shots").is_number_integer() || doc.at("shots").get<long long>() < 1) {
      throw ValidationError("shots", "must be an integer >= 1");
    }
    cfg.shots = doc.at("shots").get<std::uint64_t>();
  }
  if (doc.contains("seeds")) {
    const auto& s = doc.at("seeds");
    if (s.is_string()) {
      cfg.seeds = parse_seed_list(s.get<std::string>());
    } else if (s.is_array()) {
      std::vector<std::uint64_t> seeds;
      for (const auto& v : s) {
        if (!v.is_number_unsigned()) throw ValidationError("seeds", "seeds must be non-negative integers");
        seeds.push_back(v.get<std::uint64_t>());
      }
      cfg.seeds = std::move(seeds);
    } else {
      throw ValidationError("seeds", "expected a list or a range string like \"1..20\"");
    }
    if (cfg.seeds->empty()) throw ValidationError("seeds", "seed list must be non-empty");
  }
  if (doc.contains("noise")) {
    const auto& n = doc.at("noise");
    if (!n.is_object()) throw ValidationError("noise", "expected an object");
    reject_unknown(n, {"p1q", "p2q", "p_ro", "crosstalk_enabled", "crosstalk_lambda"}, "noise.");
    if (n.contains("p1q")) cfg.noise.p1q = get<double>(n, "p1q", "noise.p1q");
    if (n.contains("p2q")) cfg.noise.p2q = get<double>(n, "p2q", "noise.p2q");
    if (n.contains("p_ro")) cfg.noise.p_ro = get<double>(n, "p_ro", "noise.p_ro");
    if (n.contains("crosstalk_enabled")) cfg.noise.crosstalk_enabled = get<bool>(n, "crosstalk_enabled", "noise.crosstalk_enabled");
    if (n.contains("crosstalk_lambda")) cfg.noise.crosstalk_lambda = get<double>(n, "crosstalk_lambda", "noise.crosstalk_lambda");
  }
  if (doc.contains("cost")) {
    const auto& c = doc.at("cost");
    if (!c.is_object()) throw ValidationError("cost", "expected an object");
    reject_unknown(c, {"fixed_per_submission", "w1q", "w2q", "wmeas", "divisor"}, "cost.");
    CostParams cp;
    const auto opt = [&](const char* key, double& slot) {
      if (c.contains(key)) slot = get<double>(c, key, std::string("cost.") + key);
    };
    opt("fixed_per_submission", cp.fixed_per_submission);
    opt("w1q", cp.w1q);
    opt("w2q", cp.w2q);
    opt("wmeas", cp.wmeas);
    opt("divisor", cp.divisor);
    cp.validate();
    cfg.cost = cp;
  }
  if (doc.contains("schedule")) {
    const auto& w = doc.at("schedule");
    if (!w.is_object()) throw ValidationError("schedule", "expected an object");
    reject_unknown(w, {"one_qubit", "two_qubit", "measure"}, "schedule.");
    ScheduleWeights sw;
    const auto opt = [&](const char* key, std::size_t& slot) {
      if (!w.contains(key)) return;
      const auto& v = w.at(key);
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ValidationError(std::string("schedule.") + key, "must be an integer >= 1");
      }
      slot = v.get<std::size_t>();
    };
    opt("one_qubit", sw.one_qubit);
    opt("two_qubit", sw.two_qubit);
    opt("measure", sw.measure);
    cfg.schedule = sw;
  }
  if (doc.contains("manifest")) cfg.manifest = resolve(get<std::string>(doc, "manifest", "manifest"));
  if (doc.contains("output")) cfg.output = resolve(get<std::string>(doc, "output", "output"));
  return cfg;
}

CampaignConfig load_campaign(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("config", "cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_campaign(buf.str(), path.parent_path());
}

ResolvedDevice resolve_campaign_device(const std::string& device, const NoiseOverrides& noise,
                                       const std::optional<CostParams>& cost) {
  ResolvedDevice r;
  r.device = resolve_device(device);
  if (cost) r.device.cost = *cost;
  if (noise.crosstalk_enabled) r.device.crosstalk.enabled = *noise.crosstalk_enabled;
  if (noise.crosstalk_lambda) r.device.crosstalk.lambda = *noise.crosstalk_lambda;
  r.noise = noise.apply(derive_noise_model(r.device));
  return r;
}

}  // namespace qmp
