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
 * Observables computed from walker states: position distributions,
 * marginals, variances, recurrence probability, the 1-norm discrepancy and
 * the classical random-walk baseline.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qwalk/statespace.hpp"

namespace qwalk {

enum class Axis { X, Y };

/// Tolerance on Σ P for a Distribution.
inline constexpr double kDistributionSumTolerance = 1e-10;

/// Probability per lattice site, stored in row-major site order.
class Distribution {
 public:
  /// Throws ValidationError on negative entries, a size mismatch or a sum
  /// further than kDistributionSumTolerance from 1.
  Distribution(Lattice lattice, std::vector<double> probabilities);

  const Lattice& lattice() const { return lattice_; }
  int dimensionality() const { return lattice_.dimensionality(); }
  int halfwidth() const { return lattice_.halfwidth(); }
  std::span<const double> probabilities() const { return p_; }

  /// P at `p`; zero for sites outside the lattice.
  double at(Position p) const;

 private:
  Lattice lattice_;
  std::vector<double> p_;
};

/// Traces out the coin: P(site) = Σ_coin |a|².
Distribution distribution(const WalkerState& state);

/// (1/2) Σ |P - Q| over the union of both lattices (zero-padded).
double l1_distance(const Distribution& p, const Distribution& q);

/// 1D distribution along `axis` of a 2D distribution.
Distribution marginal(const Distribution& p, Axis axis);

double mean(const Distribution& p, Axis axis = Axis::X);

/// Variance about the mean along `axis` (Axis::X for 1D distributions).
double variance(const Distribution& p, Axis axis = Axis::X);

/// P at the origin.
double recurrence_probability(const Distribution& p);

/// max |P(x,y) - Px(x) Py(y)| for a 2D distribution.
double max_factorization_error(const Distribution& p);

/// Symmetric binomial walk after t unit steps, on halfwidth t.
Distribution classical_rw_distribution(int steps);

struct WalkSummary {
  int step = 0;
  double recurrence = 0.0;
  double variance_x = 0.0;
  std::optional<double> variance_y;
  std::optional<double> l1_to_reference;
};

WalkSummary summarize(int step, const Distribution& p,
                      const Distribution* reference = nullptr);

}  // namespace qwalk
