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

#include "qwalk/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_halfwidth(int halfwidth) {
  if (halfwidth < 0) {
    throw ValidationError("halfwidth must be nonnegative, got " +
                          std::to_string(halfwidth));
  }
}

void check_coordinate(int v, int halfwidth, const char* what) {
  if (v < -halfwidth || v > halfwidth) {
    throw BoundsError(std::string(what) + "=" + std::to_string(v) +
                      " outside [-" + std::to_string(halfwidth) + ", " +
                      std::to_string(halfwidth) + "]");
  }
}

void check_bit(int b, const char* what) {
  if (b != 0 && b != 1) {
    throw BoundsError(std::string("coin bit ") + what + "=" +
                      std::to_string(b) + " not in {0,1}");
  }
}

double sum_squares(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& a : v) s += std::norm(a);
  return s;
}

}  // namespace

Lattice::Lattice(int dimensionality, int halfwidth)
    : dimensionality_(dimensionality), halfwidth_(halfwidth) {
  if (dimensionality != 1 && dimensionality != 2) {
    throw ValidationError("dimensionality must be 1 or 2, got " +
                          std::to_string(dimensionality));
  }
  check_halfwidth(halfwidth);
}

std::size_t Lattice::sites() const {
  const auto n = static_cast<std::size_t>(side());
  return dimensionality_ == 1 ? n : n * n;
}

bool Lattice::contains(Position p) const {
  if (p.x < -halfwidth_ || p.x > halfwidth_) return false;
  if (dimensionality_ == 1) return p.y == 0;
  return p.y >= -halfwidth_ && p.y <= halfwidth_;
}

std::size_t Lattice::site_index(Position p) const {
  check_coordinate(p.x, halfwidth_, "x");
  if (dimensionality_ == 1) {
    if (p.y != 0) throw BoundsError("y must be 0 on a 1D lattice");
    return static_cast<std::size_t>(p.x + halfwidth_);
  }
  check_coordinate(p.y, halfwidth_, "y");
  return static_cast<std::size_t>(p.x + halfwidth_) *
             static_cast<std::size_t>(side()) +
         static_cast<std::size_t>(p.y + halfwidth_);
}

Position Lattice::site_at(std::size_t index) const {
  if (index >= sites()) {
    throw BoundsError("site index " + std::to_string(index) +
                      " outside lattice of " + std::to_string(sites()) +
                      " sites");
  }
  if (dimensionality_ == 1) return {static_cast<int>(index) - halfwidth_, 0};
  const auto n = static_cast<std::size_t>(side());
  return {static_cast<int>(index / n) - halfwidth_,
          static_cast<int>(index % n) - halfwidth_};
}

std::size_t basis_dimension(int dimensionality, int halfwidth) {
  return Lattice(dimensionality, halfwidth).dimension();
}

std::size_t pack_index(const BasisLabel1D& label, int halfwidth) {
  check_halfwidth(halfwidth);
  check_coordinate(label.x, halfwidth, "x");
  check_bit(label.c, "c");
  return static_cast<std::size_t>(label.x + halfwidth) * 2 +
         static_cast<std::size_t>(label.c);
}

std::size_t pack_index(const BasisLabel2D& label, int halfwidth) {
  const Lattice lattice(2, halfwidth);
  check_bit(label.c, "c");
  check_bit(label.d, "d");
  return lattice.site_index({label.x, label.y}) * 4 +
         static_cast<std::size_t>(2 * label.c + label.d);
}

BasisLabel1D unpack_index_1d(std::size_t index, int halfwidth) {
  const Lattice lattice(1, halfwidth);
  if (index >= lattice.dimension()) {
    throw BoundsError("index " + std::to_string(index) + " outside 1D basis");
  }
  return {static_cast<int>(index / 2) - halfwidth, static_cast<int>(index % 2)};
}

BasisLabel2D unpack_index_2d(std::size_t index, int halfwidth) {
  const Lattice lattice(2, halfwidth);
  if (index >= lattice.dimension()) {
    throw BoundsError("index " + std::to_string(index) + " outside 2D basis");
  }
  const Position p = lattice.site_at(index / 4);
  const int coin = static_cast<int>(index % 4);
  return {p.x, p.y, coin / 2, coin % 2};
}

CoinState::CoinState(std::vector<Complex> components)
    : components_(std::move(components)) {
  if (components_.size() != 2 && components_.size() != 4) {
    throw ValidationError("coin state must have 2 or 4 components, got " +
                          std::to_string(components_.size()));
  }
  const double n = std::sqrt(sum_squares(components_));
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormTolerance) {
    throw ValidationError("coin state is not unit norm (norm " +
                          std::to_string(n) + ")");
  }
}

CoinState CoinState::symmetric() {
  const double s = 1.0 / std::sqrt(2.0);
  return CoinState({Complex(s, 0.0), Complex(0.0, s)});
}

CoinState CoinState::symmetric_pair() {
  return tensor(symmetric(), symmetric());
}

CoinState tensor(const CoinState& a, const CoinState& b) {
  if (a.size() != 2 || b.size() != 2) {
    throw ValidationError("tensor of coin states needs two qubit states");
  }
  std::vector<Complex> out;
  out.reserve(4);
  for (const Complex& u : a.components()) {
    for (const Complex& v : b.components()) out.push_back(u * v);
  }
  return CoinState(std::move(out));
}

WalkerState::WalkerState(Lattice lattice)
    : lattice_(lattice), amplitudes_(lattice.dimension(), Complex{}) {}

WalkerState::WalkerState(Lattice lattice, std::vector<Complex> amplitudes)
    : lattice_(lattice), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != lattice_.dimension()) {
    throw ValidationError("amplitude table has " +
                          std::to_string(amplitudes_.size()) +
                          " entries, lattice needs " +
                          std::to_string(lattice_.dimension()));
  }
}

Complex WalkerState::amplitude(const BasisLabel1D& label) const {
  if (dimensionality() != 1) throw ValidationError("state is not 1D");
  return amplitudes_[pack_index(label, halfwidth())];
}

Complex WalkerState::amplitude(const BasisLabel2D& label) const {
  if (dimensionality() != 2) throw ValidationError("state is not 2D");
  return amplitudes_[pack_index(label, halfwidth())];
}

std::span<const Complex> WalkerState::coin_at(Position p) const {
  const std::size_t k = lattice_.coin_dimension();
  return std::span<const Complex>(amplitudes_).subspan(
      lattice_.site_index(p) * k, k);
}

std::span<Complex> WalkerState::coin_at(Position p) {
  const std::size_t k = lattice_.coin_dimension();
  return std::span<Complex>(amplitudes_).subspan(lattice_.site_index(p) * k,
                                                 k);
}

WalkerState localized_state(const Lattice& lattice, Position origin,
                            const CoinState& coin) {
  if (lattice.halfwidth() < 1) {
    throw ValidationError("localized state needs halfwidth >= 1");
  }
  if (coin.size() != lattice.coin_dimension()) {
    throw ValidationError("coin state has " + std::to_string(coin.size()) +
                          " components, lattice coin space has " +
                          std::to_string(lattice.coin_dimension()));
  }
  WalkerState state(lattice);
  auto site = state.coin_at(origin);
  std::copy(coin.components().begin(), coin.components().end(), site.begin());
  return state;
}

double norm(const WalkerState& state) {
  return std::sqrt(sum_squares(state.amplitudes()));
}

WalkerState renormalize(WalkerState state) {
  const double n = norm(state);
  if (n == 0.0 || !std::isfinite(n)) {
    throw DegenerateStateError("cannot renormalize a state of norm " +
                               std::to_string(n));
  }
  for (Complex& a : state.amplitudes()) a /= n;
  return state;
}

}  // namespace qwalk
