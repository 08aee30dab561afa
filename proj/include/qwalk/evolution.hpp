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
 * Walk evolution: single steps, multi-step runs and dense step matrices.
 *
 * One step acts as
 *
 *   1. the coin on each site's coin subspace,
 *   2. the defect phase of the SOURCE site,
 *   3. the conditional shift x -> x + (-1)^c (and y -> y + (-1)^d in 2D),
 *
 * so coin bit 0 moves the walker toward +1 on its axis.
 */
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/defects.hpp"
#include "qwalk/statespace.hpp"

namespace qwalk {

/// Open: amplitude leaving the lattice is an error (unreachable when the
/// halfwidth covers the run). Periodic: |±(L+1)> ≡ |∓L>.
enum class Boundary { Open, Periodic };

/// Largest matrix side accepted by the dense builders.
inline constexpr std::size_t kMaxDenseDimension = 16384;

/// Largest norm drift tolerated by evolve() before it reports an error.
inline constexpr double kStepNormResidualLimit = 1e-10;

using AnyCoinField = std::variant<CoinField1D, CoinField2D>;

/// Shift direction on one axis for a coin bit: (-1)^bit.
constexpr int shift_of(int bit) { return bit == 0 ? 1 : -1; }

WalkerState apply_step_1d(const WalkerState& state, const CoinField1D& coin,
                          const DefectMap& defect,
                          Boundary boundary = Boundary::Open);

WalkerState apply_step_2d(const WalkerState& state, const CoinField2D& coin,
                          const DefectMap& defect,
                          Boundary boundary = Boundary::Open);

/// Full walk configuration. The defaults describe a zero-step homogeneous
/// 2D Hadamard walk from the origin with the symmetric coin state.
struct WalkSpec {
  int dimensionality = 2;
  int steps = 0;
  /// Lattice halfwidth; defaults to max(steps, 1).
  std::optional<int> halfwidth;
  AnyCoinField coin = CoinField2D(tensor(hadamard(), hadamard()));
  DefectMap defect;
  Position origin;
  CoinState initial_coin = CoinState::symmetric_pair();
  Boundary boundary = Boundary::Open;

  int resolved_halfwidth() const;
  Lattice lattice() const { return Lattice(dimensionality, resolved_halfwidth()); }
  /// Throws ValidationError describing the first inconsistent field.
  void validate() const;
  WalkerState initial_state() const;
};

struct StepReport {
  int step = 0;
  WalkerState state;
  double norm_residual = 0.0;
};

/// Non-owning view handed to streaming observers.
struct StepView {
  int step;
  const WalkerState& state;
  double norm_residual;
};

using StepObserver = std::function<void(const StepView&)>;

/// Runs `spec.steps` steps, calling `observer` after each one, and returns
/// the final state. Memory stays at two amplitude tables regardless of t.
WalkerState evolve(const WalkSpec& spec, const StepObserver& observer);

/// Convenience form that keeps a copy of every intermediate state; meant
/// for small runs.
std::vector<StepReport> evolve(const WalkSpec& spec);

/**
 * Dense matrix of one step on `lattice`, columns and rows in the packed
 * basis order. Under Open boundary, transitions leaving the lattice are
 * dropped (the matrix is then not unitary at the edge). Throws SizeError
 * when the basis dimension exceeds kMaxDenseDimension.
 */
Eigen::MatrixXcd build_step_matrix(const Lattice& lattice,
                                   const AnyCoinField& coin,
                                   const DefectMap& defect,
                                   Boundary boundary = Boundary::Periodic);

/// Throws SizeError if a dense matrix of side `dimension` is not allowed.
void check_dense_dimension(std::size_t dimension);

}  // namespace qwalk
