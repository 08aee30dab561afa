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

// qwalk: command-line front end.
//
//   qwalk run      --config run.json [--steps N] [--phi A] [--defect K] [--out DIR]
//   qwalk sweep    --config sweep.json [...same overrides]
//   qwalk isocheck [--halfwidth L] [--trials N] [--seed S] [--out DIR]
//
// Exit codes: 0 success, 1 validation error, 2 runtime error (including a
// failed isomorphism check).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qwalk/config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/runner.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct WalkFlags {
  std::string config;
  std::optional<int> steps;
  std::optional<std::string> phi;
  std::optional<std::string> defect;
  std::optional<std::string> out;
  std::optional<unsigned> threads;
  std::optional<std::string> reference;
  bool per_step = false;
};

void add_walk_flags(CLI::App* cmd, WalkFlags& f) {
  cmd->add_option("--config", f.config, "JSON run configuration")->required();
  cmd->add_option("--steps", f.steps, "Override step count");
  cmd->add_option("--phi", f.phi, "Override defect angle (radians or pi:<k>)");
  cmd->add_option("--defect", f.defect, "Override defect: none, line_y, cross_xy, point");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--threads", f.threads, "Worker threads (default: QWALK_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--reference", f.reference, "Distribution CSV to compare against");
  cmd->add_flag("--per-step", f.per_step, "Write every step's distribution");
}

qwalk::RunConfig load(const WalkFlags& f) {
  nlohmann::json doc = qwalk::read_config_file(f.config);
  qwalk::apply_overrides(doc, qwalk::Overrides{f.steps, f.phi, f.defect, f.out, f.threads,
                                               f.reference, f.per_step});
  return qwalk::parse_config(doc);
}

int do_run(const WalkFlags& f) {
  const qwalk::RunConfig cfg = load(f);
  const qwalk::ResultRecord r = qwalk::cmd_run(cfg);
  const qwalk::WalkSummary last =
      r.summaries.empty() ? qwalk::summarize(0, r.final_distribution) : r.summaries.back();
  std::cout << "steps=" << cfg.walk.steps
            << " recurrence=" << qwalk::format_number(last.recurrence)
            << " variance_x=" << qwalk::format_number(last.variance_x);
  if (last.variance_y) std::cout << " variance_y=" << qwalk::format_number(*last.variance_y);
  if (last.l1_to_reference) std::cout << " l1=" << qwalk::format_number(*last.l1_to_reference);
  std::cout << "\nwrote " << cfg.out_dir.string() << "\n";
  return 0;
}

int do_sweep(const WalkFlags& f) {
  const qwalk::RunConfig cfg = load(f);
  std::cout << qwalk::sweep_csv(qwalk::cmd_sweep(cfg));
  return 0;
}

int do_isocheck(int halfwidth, int trials, std::uint64_t seed, std::optional<unsigned> threads,
                const std::string& out) {
  const unsigned workers = threads.value_or(qwalk::threads_from_environment());
  const qwalk::IsocheckResult r = qwalk::cmd_isocheck(halfwidth, trials, seed, workers, out);
  std::cout << "isomorphism max deviation " << r.suite.max_deviation << " over "
            << r.suite.trials.size() << " trials: " << (r.passed ? "PASS" : "FAIL") << "\n"
            << "separable decomposition max deviation "
            << r.decomposition.separable_max_deviation << "\n"
            << "entangled decomposition relation: "
            << qwalk::to_string(r.decomposition.entangled_match) << "\n";
  return r.passed ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coined quantum walks on 1D and 2D lattices with phase defects"};
  app.require_subcommand(1);

  WalkFlags run_flags;
  auto* run = app.add_subcommand("run", "Evolve one walk and write its distribution");
  add_walk_flags(run, run_flags);

  WalkFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Evolve a walk for every phi in phi_grid");
  add_walk_flags(sweep, sweep_flags);

  int iso_halfwidth = 2;
  int iso_trials = 50;
  std::uint64_t iso_seed = qwalk::kDefaultSeed;
  std::optional<unsigned> iso_threads;
  std::string iso_out = "qwalk_out";
  auto* iso = app.add_subcommand("isocheck", "Verify the two-walker / 2D-walker isomorphism");
  iso->add_option("-L,--halfwidth", iso_halfwidth, "Lattice halfwidth")->capture_default_str();
  iso->add_option("--trials", iso_trials, "Random coins per halfwidth")->capture_default_str();
  iso->add_option("--seed", iso_seed, "64-bit RNG seed")->capture_default_str();
  iso->add_option("--threads", iso_threads, "Worker threads")->check(CLI::PositiveNumber);
  iso->add_option("--out", iso_out, "Output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return do_run(run_flags);
    if (*sweep) return do_sweep(sweep_flags);
    return do_isocheck(iso_halfwidth, iso_trials, iso_seed, iso_threads, iso_out);
  } catch (const qwalk::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const qwalk::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
