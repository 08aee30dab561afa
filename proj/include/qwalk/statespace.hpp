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
 * Walker Hilbert-space bookkeeping.
 *
 * Basis ordering is fixed once for the whole library: position-major,
 * coin-minor, and row-major over positions (x before y). For a lattice of
 * halfwidth L with side n = 2L+1:
 *
 *   1D: index(x, c)       = (x + L) * 2 + c
 *   2D: index(x, y, c, d) = ((x + L) * n + (y + L)) * 4 + 2c + d
 *
 * Matrix builders, the stepping kernels and all file formats rely on it.
 */
#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

/// Tolerance on Σ|a|² for constructed and evolved states.
inline constexpr double kNormTolerance = 1e-12;

/// Lattice site; `y` is unused (zero) on 1D lattices.
struct Position {
  int x = 0;
  int y = 0;
  auto operator<=>(const Position&) const = default;
};

struct BasisLabel1D {
  int x = 0;
  int c = 0;
  bool operator==(const BasisLabel1D&) const = default;
};

struct BasisLabel2D {
  int x = 0;
  int y = 0;
  int c = 0;
  int d = 0;
  bool operator==(const BasisLabel2D&) const = default;
};

/// Square lattice [-L, L]^dim with dim in {1, 2}.
class Lattice {
 public:
  Lattice(int dimensionality, int halfwidth);

  int dimensionality() const { return dimensionality_; }
  int halfwidth() const { return halfwidth_; }
  int side() const { return 2 * halfwidth_ + 1; }
  std::size_t sites() const;
  std::size_t coin_dimension() const { return dimensionality_ == 1 ? 2 : 4; }
  std::size_t dimension() const { return sites() * coin_dimension(); }

  bool contains(Position p) const;
  /// Row-major site index; throws BoundsError outside the lattice.
  std::size_t site_index(Position p) const;
  Position site_at(std::size_t index) const;

  bool operator==(const Lattice&) const = default;

 private:
  int dimensionality_;
  int halfwidth_;
};

/// 2(2L+1) in 1D, [2(2L+1)]² in 2D.
std::size_t basis_dimension(int dimensionality, int halfwidth);

std::size_t pack_index(const BasisLabel1D& label, int halfwidth);
std::size_t pack_index(const BasisLabel2D& label, int halfwidth);
BasisLabel1D unpack_index_1d(std::size_t index, int halfwidth);
BasisLabel2D unpack_index_2d(std::size_t index, int halfwidth);

/// Unit vector in the 2- (1D) or 4-dimensional (2D) coin space.
class CoinState {
 public:
  /// Throws ValidationError unless size is 2 or 4 and the norm is 1.
  explicit CoinState(std::vector<Complex> components);

  /// (|0> + i|1>)/√2, the symmetric single-walker coin state.
  static CoinState symmetric();
  /// symmetric() ⊗ symmetric().
  static CoinState symmetric_pair();

  std::span<const Complex> components() const { return components_; }
  std::size_t size() const { return components_.size(); }

 private:
  std::vector<Complex> components_;
};

CoinState tensor(const CoinState& a, const CoinState& b);

/// Dense amplitude table over the basis of a Lattice.
class WalkerState {
 public:
  /// Zero state.
  explicit WalkerState(Lattice lattice);
  /// Throws ValidationError when the table size does not match the lattice.
  WalkerState(Lattice lattice, std::vector<Complex> amplitudes);

  const Lattice& lattice() const { return lattice_; }
  int dimensionality() const { return lattice_.dimensionality(); }
  int halfwidth() const { return lattice_.halfwidth(); }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }

  Complex amplitude(const BasisLabel1D& label) const;
  Complex amplitude(const BasisLabel2D& label) const;

  /// Coin components stored at one site (contiguous, 2 or 4 entries).
  std::span<const Complex> coin_at(Position p) const;
  std::span<Complex> coin_at(Position p);

 private:
  Lattice lattice_;
  std::vector<Complex> amplitudes_;
};

/// Walker wholly at `origin` with internal state `coin`.
WalkerState localized_state(const Lattice& lattice, Position origin,
                            const CoinState& coin);

double norm(const WalkerState& state);

/// Throws DegenerateStateError for the zero state.
WalkerState renormalize(WalkerState state);

}  // namespace qwalk
