// Copyright 2026 The GIC Region Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gic/scenario.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gic {

using nlohmann::json;

namespace {

[[noreturn]] void ConfigError(const std::string& msg) {
  throw GicError(ErrorCode::kConfig, msg);
}

double GetNumber(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int GetInt(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    ConfigError(std::string("'") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

std::vector<double> GetNumberList(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_array() || v.empty()) {
    ConfigError(std::string("'") + key + "' must be a nonempty array");
  }
  std::vector<double> out;
  for (const json& x : v) {
    if (!x.is_number()) {
      ConfigError(std::string("'") + key + "' must contain numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

void CheckIncreasing(const std::vector<double>& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] >= 0.0)) ConfigError("mu values must be >= 0");
    if (i > 0 && !(mu[i] > mu[i - 1])) {
      ConfigError("mu grid must be strictly increasing");
    }
  }
}

}  // namespace

PowerSplit Scenario::LayerSplit() const {
  if (layer_split) return *layer_split;
  return PowerSplit::FromPrivate(params, 0.5 * params.p1, 0.5 * params.p2);
}

namespace {

Scenario FromDocument(const json& doc) {
  if (!doc.is_object()) ConfigError("config must be a JSON object");

  Scenario sc;
  if (doc.contains("channel")) {
    const json& ch = doc.at("channel");
    if (!ch.is_object()) ConfigError("'channel' must be an object");
    sc.params.a = GetNumber(ch, "a", sc.params.a);
    sc.params.b = GetNumber(ch, "b", sc.params.b);
    sc.params.p1 = GetNumber(ch, "p1", sc.params.p1);
    sc.params.p2 = GetNumber(ch, "p2", sc.params.p2);
    sc.params.sigma2 = GetNumber(ch, "sigma2", 1.0);
  }
  sc.params = ValidateParams(sc.params);

  if (doc.contains("mu_grid")) {
    sc.mu_grid = GetNumberList(doc, "mu_grid");
    CheckIncreasing(sc.mu_grid);
  }
  if (doc.contains("optimizer")) {
    const json& opt = doc.at("optimizer");
    sc.optimizer.all_private_grid =
        GetInt(opt, "all_private_grid", sc.optimizer.all_private_grid);
    sc.optimizer.outer_grid = GetInt(opt, "outer_grid", sc.optimizer.outer_grid);
    sc.optimizer.refine_rounds =
        GetInt(opt, "refine_rounds", sc.optimizer.refine_rounds);
  }
  if (doc.contains("layers")) {
    const json& ly = doc.at("layers");
    if (ly.contains("deltas")) sc.deltas = GetNumberList(ly, "deltas");
    if (ly.contains("split")) {
      const json& s = ly.at("split");
      PowerSplit ps{GetNumber(s, "pu1", 0.0), GetNumber(s, "pv1", 0.0),
                    GetNumber(s, "pu2", 0.0), GetNumber(s, "pv2", 0.0)};
      if (!SplitMatchesBudgets(sc.params, ps)) {
        ConfigError("layers.split must spend exactly p1 and p2");
      }
      sc.layer_split = ps;
    }
    if (ly.contains("band")) {
      const std::string band = ly.at("band").get<std::string>();
      if (band == "interleaved") {
        sc.band = PublicBand::kInterleaved;
      } else if (band == "stacked") {
        sc.band = PublicBand::kStacked;
      } else {
        ConfigError("layers.band must be 'interleaved' or 'stacked'");
      }
    }
  }
  if (doc.contains("validate")) {
    sc.validate_instances =
        GetInt(doc.at("validate"), "instances", sc.validate_instances);
  }
  if (doc.contains("seed")) {
    const json& s = doc.at("seed");
    if (!s.is_number_unsigned()) ConfigError("'seed' must be an unsigned integer");
    sc.seed = s.get<std::uint64_t>();
  }
  if (doc.contains("out_dir")) sc.out_dir = doc.at("out_dir").get<std::string>();
  if (doc.contains("plot")) sc.plot = doc.at("plot").get<bool>();
  return sc;
}

}  // namespace

Scenario ParseScenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    ConfigError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return FromDocument(doc);
  } catch (const json::exception& e) {
    ConfigError(std::string("bad config value: ") + e.what());
  }
}

Scenario LoadScenario(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) {
    ConfigError("config not found: " + path);
  }
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

std::vector<double> ParseMuList(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(pos, end - pos));
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      ConfigError("bad mu value '" + item + "'");
    }
    pos = end + 1;
  }
  if (out.empty()) ConfigError("empty mu list");
  CheckIncreasing(out);
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace gic
