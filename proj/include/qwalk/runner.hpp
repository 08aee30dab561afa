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
 * Command implementations behind the CLI: single runs, φ sweeps and the
 * isomorphism check, plus the CSV/JSON formats they emit.
 *
 * Distribution CSV: header `x,y,p` (2D) or `x,p` (1D), one row per site in
 * row-major order, probabilities with 12 significant digits and values
 * below 1e-15 written as 0.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/config.hpp"
#include "qwalk/isomorphism.hpp"

namespace qwalk {

std::string format_number(double value);
std::string distribution_csv(const Distribution& p);

/// Parses a distribution CSV. Accepts a total within 1e-9 of 1 and
/// rescales it to exactly sum to 1 before validation.
Distribution parse_distribution_csv(std::istream& in);
Distribution read_distribution_csv(const std::filesystem::path& path);

struct ResultRecord {
  nlohmann::json config;
  std::vector<WalkSummary> summaries;
  std::vector<double> norm_residuals;
  Distribution final_distribution;
  double seconds = 0.0;
};

/// Runs the walk in `cfg`. When `cfg.per_step` is set, each step's
/// distribution is written as step_NNNN.csv under cfg.out_dir.
ResultRecord run_walk(const RunConfig& cfg);

/// Summary document; excludes wall-clock timing so reruns are byte-identical.
nlohmann::json summary_json(const ResultRecord& record);

/// run_walk plus distribution.csv / summary.json / timing.json.
ResultRecord cmd_run(const RunConfig& cfg);

struct SweepRow {
  std::string defect;
  double phi = 0.0;
  double recurrence = 0.0;
  double variance_x = 0.0;
  std::optional<double> variance_y;
  std::optional<double> l1_to_reference;
};

/// One row per (defect, φ) in grid order, defects outermost. Points run on
/// up to cfg.threads workers; results do not depend on scheduling.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// run_sweep plus sweep.csv / sweep.json.
std::vector<SweepRow> cmd_sweep(const RunConfig& cfg);

struct IsocheckResult {
  IsomorphismSuiteReport suite;
  DecompositionReport decomposition;
  nlohmann::json report;
  /// True iff every isomorphism deviation is below kIsomorphismTolerance.
  bool passed = false;
};

IsocheckResult run_isocheck(int halfwidth, int trials, std::uint64_t seed, unsigned threads);

/// run_isocheck plus isocheck.json under `out_dir`.
IsocheckResult cmd_isocheck(int halfwidth, int trials, std::uint64_t seed, unsigned threads,
                            const std::filesystem::path& out_dir);

}  // namespace qwalk
