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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qwalk/analysis.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/isomorphism.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Largest |1 - Σ|a|²| seen over every step of every run below.
double g_max_residual = 0.0;
long g_steps_checked = 0;

WalkerState run(const WalkSpec& spec) {
  return evolve(spec, [](const StepView& v) {
    g_max_residual = std::max(g_max_residual, v.norm_residual);
    ++g_steps_checked;
  });
}

WalkSpec walk_2d(int steps, DefectMap defect) {
  WalkSpec spec;
  spec.steps = steps;
  spec.defect = std::move(defect);
  return spec;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Outcome main_localization() {
  const auto start = std::chrono::steady_clock::now();
  const double p = recurrence_probability(distribution(run(walk_2d(10, DefectMap::cross_xy(kPi)))));
  const double secs = seconds_since(start);
  return {std::abs(p - 0.441) <= 0.005 && secs < 1.0,
          fmt("P10(0,0) = %.12f (target 0.441 +/- 0.005), %.3f s", p, secs)};
}

Outcome monotone_localization() {
  std::vector<double> p;
  for (double k : {0.25, 0.5, 0.75, 1.0}) {
    p.push_back(recurrence_probability(distribution(run(walk_2d(10, DefectMap::cross_xy(k * kPi))))));
  }
  bool increasing = true;
  for (std::size_t i = 1; i < p.size(); ++i) increasing = increasing && p[i] > p[i - 1];
  return {increasing, fmt("P10(0,0) at phi = pi/4, pi/2, 3pi/4, pi: %.6g, %.6g, %.6g, %.6g", p[0],
                          p[1], p[2], p[3])};
}

Outcome line_anisotropy() {
  const double var_x_flat = variance(distribution(run(walk_2d(10, DefectMap::none()))), Axis::X);
  double worst_x = 0.0;
  std::array<double, 4> var_y{};
  const std::array<double, 4> phis{kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const Distribution p = distribution(run(walk_2d(10, DefectMap::line_y(phis[i]))));
    worst_x = std::max(worst_x, std::abs(variance(p, Axis::X) - var_x_flat));
    var_y[i] = variance(p, Axis::Y);
  }
  const bool ok = var_y[3] < 10.0 && worst_x < 1e-12 && var_y[0] > var_y[1];
  return {ok, fmt("Var_y(pi) = %.6f < 10, max |Var_x - %.6f| = %.2e, Var_y(pi/4) = %.6f > "
                  "Var_y(pi/2) = %.6f",
                  var_y[3], var_x_flat, worst_x, var_y[0], var_y[1])};
}

Outcome factorization() {
  const double err = max_factorization_error(distribution(run(walk_2d(10, DefectMap::none()))));
  return {err < 1e-12, fmt("max |P(x,y) - Px(x) Py(y)| = %.2e", err)};
}

Outcome isomorphism_suite() {
  const std::array<int, 3> halfwidths{1, 2, 3};
  const IsomorphismSuiteReport r = run_isomorphism_suite(halfwidths, 50, kDefaultSeed);
  double worst_translation = 0.0;
  for (const auto& [L, dev] : r.translation) worst_translation = std::max(worst_translation, dev);
  return {r.passed && r.max_deviation < 1e-12 && worst_translation == 0.0,
          fmt("%zu coins over L = 1,2,3: max deviation %.2e, translation deviation %.1f",
              r.trials.size(), r.max_deviation, worst_translation)};
}

Outcome small_oracle() {
  double worst = 0.0;
  for (const CoinState& init : {CoinState({1.0, 0.0}), CoinState::symmetric()}) {
    WalkSpec spec;
    spec.dimensionality = 1;
    spec.steps = 2;
    spec.coin = CoinField1D(hadamard());
    spec.initial_coin = init;
    const Distribution p = distribution(run(spec));
    const auto c = init.components();
    const auto expansion = oracle::path_sum_1d(oracle::to_array<2>(hadamard().matrix()),
                                               {c[0], c[1]}, 2, [](int) { return 0.0; });
    for (int x = -2; x <= 2; ++x) {
      const double expected = x == 0 ? 0.5 : (std::abs(x) == 2 ? 0.25 : 0.0);
      const auto it = expansion.find(x);
      const double brute = it == expansion.end() ? 0.0 : it->second;
      worst = std::max({worst, std::abs(p.at({x, 0}) - expected), std::abs(brute - expected)});
    }
  }
  return {worst < 1e-12, fmt("1D Hadamard t=2 vs {-2:1/4, 0:1/2, 2:1/4}: max error %.2e", worst)};
}

Outcome desk_scale() {
  const auto start = std::chrono::steady_clock::now();
  const WalkSpec spec = walk_2d(500, DefectMap::none());
  const WalkerState final_state = run(spec);
  const double secs = seconds_since(start);
  return {secs < 60.0, fmt("t=500, %zu amplitudes, %.2f s", final_state.amplitudes().size(), secs)};
}

Outcome decomposition() {
  const DecompositionReport r = check_decomposition_claims();
  return {r.separable_confirmed && r.separable_trials >= 100 &&
              r.entangled_match != EntangledMatch::None,
          fmt("separable max deviation %.2e over %d trials, entangled relation: %s",
              r.separable_max_deviation, r.separable_trials,
              to_string(r.entangled_match).c_str())};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  std::array<Outcome, 10> results;
  results[1] = guarded(main_localization);
  results[2] = guarded(monotone_localization);
  results[3] = guarded(line_anisotropy);
  results[4] = guarded(factorization);
  results[5] = guarded(isomorphism_suite);
  results[7] = guarded(small_oracle);
  results[8] = guarded(desk_scale);
  results[9] = guarded(decomposition);
  results[6] = {g_max_residual <= 1e-12 && g_steps_checked > 0,
                fmt("max |1 - sum |a|^2| = %.2e over %ld steps", g_max_residual,
                    g_steps_checked)};

  const char* names[] = {"",
                         "main localization",
                         "monotone localization",
                         "line-defect anisotropy",
                         "factorization",
                         "isomorphism suite",
                         "normalization",
                         "small-instance oracle",
                         "desk-scale performance",
                         "decomposition report"};
  int failures = 0;
  for (int i = 1; i <= 9; ++i) {
    std::printf("[%s] %d %s: %s\n", results[i].pass ? "PASS" : "FAIL", i, names[i],
                results[i].detail.c_str());
    failures += !results[i].pass;
  }
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
