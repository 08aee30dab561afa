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
 * Numerical check that two 1D walkers sharing a four-dimensional coin are
 * the same dynamics as one 2D walker, after relabeling positions with
 * (x, y) -> (x + y, x - y).
 *
 * Two-walker side: joint lattice [-L, L]², coin |c,d>, walker 1 moves by
 * (-1)^c along x and walker 2 by (-1)^d along y (diagonal moves in the
 * joint plane), periodic wrap on each walker's ring of 2L+1 sites.
 *
 * 2D side: one walker on the grid [-2L, 2L]² moving along the axes. The
 * image of the joint lattice is a diamond on the even-parity sublattice,
 * whose axis neighbours are 2 apart, so each coin value selects one of the
 * four axis moves of length 2:
 *
 *   |00> -> +X,  |01> -> +Y,  |10> -> -Y,  |11> -> -X
 *
 * Wrapping on the 2D side reduces positions modulo the image of the
 * joint torus. Sites outside the image are inert (identity).
 *
 * BasisPermutation Π sends two-walker label (x, y, c, d) to 2D label
 * (map(x, y), c, d) and pairs every unused 2D label with itself, so the
 * comparison is U_1D1D = (Π† U_2D Π) restricted to the image block.
 */
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/coins.hpp"
#include "qwalk/defects.hpp"
#include "qwalk/statespace.hpp"

namespace qwalk {

/// Seed used by isomorphism trials when none is given.
inline constexpr std::uint64_t kDefaultSeed = 7;

/// Deviations at or above this fail an isomorphism check.
inline constexpr double kIsomorphismTolerance = 1e-12;

/// Integer linear map (x, y) -> (a x + b y, c x + d y).
struct CoordinateMap {
  int a = 1;
  int b = 1;
  int c = 1;
  int d = -1;

  /// x -> x + y, y -> x - y.
  static CoordinateMap standard() { return {}; }

  Position forward(Position p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  int determinant() const { return a * d - b * c; }
  /// Preimage of `image` if it is an integer point.
  std::optional<Position> inverse(Position image) const;
  /// Smallest halfwidth whose grid contains the image of [-L, L]².
  int image_halfwidth(int halfwidth) const;
};

class BasisPermutation {
 public:
  /// Throws ValidationError for a singular map.
  BasisPermutation(int halfwidth, const CoordinateMap& map = CoordinateMap::standard());

  int halfwidth() const { return halfwidth_; }
  int image_halfwidth() const { return image_halfwidth_; }
  /// Size of the two-walker basis, 4(2L+1)².
  std::size_t source_dimension() const { return source_dimension_; }
  /// Size of the 2D basis on the image grid; Π is square of this size.
  std::size_t dimension() const { return target_.size(); }

  /// Column i of Π has its single 1 in row target(i).
  std::size_t target(std::size_t i) const { return target_[i]; }
  std::span<const std::size_t> targets() const { return target_; }

  /// True when every row and column holds exactly one 1.
  bool is_permutation() const;
  Eigen::MatrixXi matrix() const;

 private:
  int halfwidth_;
  int image_halfwidth_;
  std::size_t source_dimension_;
  std::vector<std::size_t> target_;
};

/// T^{1D1D}: both walkers shift by their coin bit, periodic on [-L, L].
Eigen::MatrixXcd two_walker_translation(int halfwidth);

/// One joint step T · Φ · C with the shared coin and source-site phases.
Eigen::MatrixXcd build_two_walker_matrix(int halfwidth, const CoinField2D& coin,
                                         const DefectMap& defect = DefectMap::none());

/// T^{2D}: axis moves of length 2 on the image grid of `map`.
Eigen::MatrixXcd cardinal_translation(int halfwidth,
                                      const CoordinateMap& map = CoordinateMap::standard());

/// One 2D-walker step on the image grid. `coin` and `defect` are given in
/// two-walker coordinates and carried through `map`.
Eigen::MatrixXcd build_cardinal_walk_matrix(int halfwidth, const CoinField2D& coin,
                                            const DefectMap& defect = DefectMap::none(),
                                            const CoordinateMap& map = CoordinateMap::standard());

/// Carries site-dependent coins into image coordinates.
CoinField2D transform_coin_field(const CoinField2D& coin, const CoordinateMap& map);

/// Tabulates `defect` on [-L, L]² and moves every entry to its image site.
DefectMap transform_defect(const DefectMap& defect, int halfwidth,
                           const CoordinateMap& map);

/**
 * max over the image block of |U_1D1D - (Π† U_2D Π)|, together with the
 * leakage of U_2D out of the image subspace (which must be zero).
 */
double conjugated_deviation(const Eigen::MatrixXcd& two_walker,
                            const Eigen::MatrixXcd& cardinal,
                            const BasisPermutation& perm);

/// Builds both step matrices and returns conjugated_deviation.
double verify_isomorphism(int halfwidth, const CoinField2D& coin,
                          const DefectMap& defect = DefectMap::none(),
                          const CoordinateMap& map = CoordinateMap::standard());

/// Same comparison for the bare translation operators (values 0 or 1).
double check_translation_equivalence(int halfwidth,
                                     const CoordinateMap& map = CoordinateMap::standard());

/// Π ψ: moves a two-walker state onto the image grid.
WalkerState map_state(const WalkerState& two_walker, const CoordinateMap& map);

/// Pushes a two-walker joint distribution onto the image grid.
Distribution map_distribution(const Distribution& two_walker, const CoordinateMap& map);

/**
 * One 2D-walker step on a 2D lattice (coin, source-site phase, axis move of
 * length 2) with open boundary. `coin` and `defect` are in image
 * coordinates.
 */
WalkerState apply_cardinal_step(const WalkerState& state, const CoinField2D& coin,
                                const DefectMap& defect = DefectMap::none());

/// Haar-random 2x2 unitary.
Coin2 random_unitary2(std::mt19937_64& rng);

enum class TrialKind { Tensor, FractionalSwap, Product, SiteDependent };
std::string to_string(TrialKind kind);

struct IsomorphismTrial {
  int halfwidth = 0;
  TrialKind kind = TrialKind::Tensor;
  double deviation = 0.0;
};

struct IsomorphismSuiteReport {
  std::vector<IsomorphismTrial> trials;
  /// (halfwidth, translation deviation) per halfwidth checked.
  std::vector<std::pair<int, double>> translation;
  double max_deviation = 0.0;
  bool passed = false;
};

/**
 * For each halfwidth, `trials` random coins cycling through tensor
 * products, fractional swaps, products of both, and site-dependent fields
 * of such coins. Coins are drawn sequentially from `seed`; evaluation runs
 * on up to `threads` workers and does not affect the result.
 */
IsomorphismSuiteReport run_isomorphism_suite(std::span<const int> halfwidths, int trials,
                                             std::uint64_t seed, unsigned threads = 1);

enum class EntangledMatch { Exact, GlobalPhase, MinusZZ, None };
std::string to_string(EntangledMatch match);

struct EntangledClaimRow {
  double tau = 0.0;
  /// max |C - Ξ^τ| for C = su4_compose(1,1,1,1, τ, -1, -1).
  double exact_deviation = 0.0;
  /// max |C - e^{iχ} Ξ^τ| at χ = arg tr(Ξ^{-τ} C).
  double global_phase_deviation = 0.0;
  double global_phase = 0.0;
  /// max |C + (Z⊗Z) Ξ^τ|.
  double minus_zz_deviation = 0.0;
};

struct DecompositionReport {
  int separable_trials = 0;
  /// max |su4_compose(u1,u2,v1,v2,0,0,0) - (u1 v1)⊗(u2 v2)| over trials.
  double separable_max_deviation = 0.0;
  bool separable_confirmed = false;
  std::vector<EntangledClaimRow> entangled;
  /// Strongest relation holding at every τ, checked in declaration order.
  EntangledMatch entangled_match = EntangledMatch::None;
};

/// τ values probed for the entangled claim by default.
std::vector<double> default_tau_grid();

DecompositionReport check_decomposition_claims(std::uint64_t seed = kDefaultSeed,
                                               int separable_trials = 100,
                                               const std::vector<double>& taus = default_tau_grid());

}  // namespace qwalk
