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
 * Coin operators: validated 2x2 and 4x4 unitaries and their constructors.
 *
 * The two-coin basis is ordered |c,d> = 00, 01, 10, 11, so the Kronecker
 * product satisfies (a ⊗ b)[2i+j, 2k+l] = a[i,k] b[j,l].
 *
 * Coins are general unitaries rather than strictly special-unitary; the
 * Hadamard coin has determinant -1.
 */
#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "qwalk/statespace.hpp"

namespace qwalk {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Every coin constructor guarantees max |C C† - 1| below this.
inline constexpr double kUnitarityTolerance = 1e-12;

/// max_ij |(M M† - 1)_ij|. Throws ValidationError if M is not square.
double unitarity_check(const Eigen::MatrixXcd& m);

/// Max-abs elementwise difference between two equally sized matrices.
double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

class Coin2 {
 public:
  /// Throws ValidationError when `m` is not unitary within tolerance.
  static Coin2 from_matrix(const Matrix2& m);

  static Coin2 identity();
  static Coin2 pauli_x();
  static Coin2 pauli_z();

  const Matrix2& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  friend Coin2 operator*(const Coin2& a, const Coin2& b) {
    return Coin2(a.m_ * b.m_);
  }

 private:
  explicit Coin2(Matrix2 m) : m_(std::move(m)) {}
  Matrix2 m_;
};

class Coin4 {
 public:
  static Coin4 from_matrix(const Matrix4& m);

  static Coin4 identity();
  /// The swap Ξ: |c,d> -> |d,c>.
  static Coin4 swap();

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  friend Coin4 operator*(const Coin4& a, const Coin4& b) {
    return Coin4(a.m_ * b.m_);
  }

 private:
  explicit Coin4(Matrix4 m) : m_(std::move(m)) {}
  Matrix4 m_;
};

/**
 * SU(2) coin parameterized by three angles:
 *
 *   [[ e^{-iφ} cos θ,  e^{iψ} sin θ ],
 *    [-e^{-iψ} sin θ,  e^{iφ} cos θ ]]
 *
 * The lower-left entry carries a minus sign; without it the matrix has
 * determinant cos 2θ and is not unitary.
 */
Coin2 su2_from_angles(double theta, double psi, double phi);

/// (1/√2)[[1, 1], [1, -1]].
Coin2 hadamard();

/// Kronecker product a ⊗ b in the |c,d> ordering.
Coin4 tensor(const Coin2& a, const Coin2& b);

/**
 * Fractional swap Ξ^τ. The middle block is
 *
 *   (1/2) [[1 + e^{iπτ}, 1 - e^{iπτ}],
 *          [1 - e^{iπτ}, 1 + e^{iπτ}]]
 *
 * i.e. (-1)^τ is taken on the principal branch. τ=0 is the identity, τ=1
 * the swap, and Ξ^a Ξ^b = Ξ^{a+b} for all real a, b.
 */
Coin4 fractional_swap(double tau);

/**
 * (u1 ⊗ u2) [(Z⊗X) Ξ^γ (Z⊗1) Ξ^β (1⊗X) Ξ^α] (v1 ⊗ v2), multiplied out in
 * exactly this order with no simplification.
 */
Coin4 su4_compose(const Coin2& u1, const Coin2& u2, const Coin2& v1,
                  const Coin2& v2, double alpha, double beta, double gamma);

/// Position-dependent coin assignment: a background coin plus per-site
/// overrides. Implicitly constructible from a single (uniform) coin.
template <class Coin>
class CoinField {
 public:
  CoinField(Coin uniform) : background_(std::move(uniform)) {}  // NOLINT
  CoinField(Coin background, std::map<Position, Coin> overrides)
      : background_(std::move(background)), overrides_(std::move(overrides)) {}

  const Coin& at(Position p) const {
    if (overrides_.empty()) return background_;
    auto it = overrides_.find(p);
    return it == overrides_.end() ? background_ : it->second;
  }

  void set(Position p, Coin coin) { overrides_.insert_or_assign(p, std::move(coin)); }

  bool is_uniform() const { return overrides_.empty(); }
  const Coin& background() const { return background_; }
  const std::map<Position, Coin>& overrides() const { return overrides_; }

 private:
  Coin background_;
  std::map<Position, Coin> overrides_;
};

using CoinField1D = CoinField<Coin2>;
using CoinField2D = CoinField<Coin4>;

}  // namespace qwalk
