// Copyright 2026 The qwalk Authors
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

/**
 * @file
 * Run configuration: a flat JSON document describing one walk, optional
 * sweep grid and output settings.
 *
 * Angles are plain numbers (radians) or strings "pi:<k>" meaning k·π.
 *
 *   {
 *     "dimensionality": 2,
 *     "steps": 10,
 *     "coin": "hadamard",
 *     "defect": "cross_xy",
 *     "phi": "pi:1",
 *     "initial_coin": "symmetric",
 *     "out": "results"
 *   }
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

/// Configuration problem tied to one key.
class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : ValidationError("config key '" + key + "': " + message), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

inline constexpr int kDefaultMaxSteps = 2000;

struct RunConfig {
  WalkSpec walk;
  std::string defect_kind = "none";
  double phi = 0.0;
  std::filesystem::path out_dir = "qwalk_out";
  bool write_csv = true;
  bool write_json = true;
  bool per_step = false;
  std::vector<double> phi_grid;
  std::vector<std::string> sweep_defects;
  /// "threads" key, else QWALK_THREADS, else 1.
  unsigned threads = 1;
  int max_steps = kDefaultMaxSteps;
  std::optional<std::filesystem::path> reference;
  /// The document this config was parsed from, after overrides.
  nlohmann::json echo;
};

/// Command-line overrides applied on top of a config document.
struct Overrides {
  std::optional<int> steps;
  std::optional<std::string> phi;
  std::optional<std::string> defect;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::string> reference;
  bool per_step = false;
};

/// Number, or "pi:<k>" for k·π. Throws ConfigError naming `key`.
double parse_angle(const nlohmann::json& value, const std::string& key);

/// Builds a DefectMap from a layout name and angle ("none", "line_y",
/// "cross_xy", "point"; "custom" needs a table and is handled by the parser).
DefectMap make_defect(const std::string& kind, double phi);

RunConfig parse_config(const nlohmann::json& doc);
nlohmann::json read_config_file(const std::filesystem::path& path);
void apply_overrides(nlohmann::json& doc, const Overrides& overrides);

/// Worker count from QWALK_THREADS, or 1 when unset or invalid.
unsigned threads_from_environment();

}  // namespace qwalk
