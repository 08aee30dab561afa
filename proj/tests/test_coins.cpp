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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "qwalk/coins.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/isomorphism.hpp"

using namespace qwalk;

namespace {

const Complex kI(0.0, 1.0);

double dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return max_abs_deviation(a, b); }

}  // namespace

TEST_CASE("su2_from_angles", "[coins]") {
  CHECK(dev(su2_from_angles(0, 0, 0).matrix(), Matrix2::Identity()) == 0.0);

  Matrix2 rot;
  rot << 0.0, 1.0, -1.0, 0.0;
  CHECK(dev(su2_from_angles(std::numbers::pi / 2, 0, 0).matrix(), rot) < 1e-15);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    const Coin2 c = su2_from_angles(angle(rng), angle(rng), angle(rng));
    REQUIRE(unitarity_check(c.matrix()) < 1e-12);
    REQUIRE(std::abs(c.matrix().determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("su2 sign: the unsigned lower-left form is not unitary", "[coins]") {
  // Documents why su2_from_angles carries a minus sign.
  const double theta = 0.4;
  Matrix2 printed;
  printed << std::cos(theta), std::sin(theta), std::sin(theta), std::cos(theta);
  CHECK(std::abs(printed.determinant() - std::cos(2 * theta)) < 1e-15);
  CHECK_THROWS_AS(Coin2::from_matrix(printed), ValidationError);
}

TEST_CASE("hadamard", "[coins]") {
  const Coin2 h = hadamard();
  CHECK(dev(h.matrix() * h.matrix(), Matrix2::Identity()) < 1e-15);
  const Eigen::Vector2cd out = h.matrix() * Eigen::Vector2cd(1.0, 0.0);
  CHECK(std::abs(out[0] - 1.0 / std::sqrt(2.0)) < 1e-16);
  CHECK(std::abs(out[1] - 1.0 / std::sqrt(2.0)) < 1e-16);
  CHECK(std::abs(h.matrix().determinant() + 1.0) < 1e-15);
  CHECK(unitarity_check(h.matrix()) < 1e-15);
}

TEST_CASE("tensor product", "[coins]") {
  CHECK(dev(tensor(Coin2::identity(), Coin2::identity()).matrix(), Matrix4::Identity()) == 0.0);

  const Matrix4 hh = tensor(hadamard(), hadamard()).matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) REQUIRE(std::abs(std::abs(hh(r, c)) - 0.5) < 1e-15);
  }
  CHECK(std::abs(hh(3, 3) - 0.5) < 1e-15);
  CHECK(std::abs(hh(1, 1) + 0.5) < 1e-15);

  // Brute-force index formula and Eigen's Kronecker product as oracles.
  const Coin2 x = Coin2::pauli_x();
  const Coin2 z = Coin2::pauli_z();
  const Matrix4 xz = tensor(x, z).matrix();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) REQUIRE(xz(2 * i + j, 2 * k + l) == x(i, k) * z(j, l));
  const Eigen::MatrixXcd kron = Eigen::kroneckerProduct(x.matrix(), z.matrix()).eval();
  CHECK(dev(xz, kron) == 0.0);
  Matrix4 expected;
  expected << 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0;
  CHECK(dev(xz, expected) == 0.0);
}

TEST_CASE("fractional swap", "[coins]") {
  CHECK(dev(fractional_swap(0.0).matrix(), Matrix4::Identity()) < 1e-15);

  Matrix4 swap = Matrix4::Zero();
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(dev(fractional_swap(1.0).matrix(), swap) < 1e-15);
  CHECK(dev(Coin4::swap().matrix(), swap) < 1e-15);

  const Matrix4 half = fractional_swap(0.5).matrix();
  CHECK(std::abs(half(1, 1) - (1.0 + kI) / 2.0) < 1e-15);
  CHECK(std::abs(half(1, 2) - (1.0 - kI) / 2.0) < 1e-15);
  CHECK(std::abs(half(2, 1) - (1.0 - kI) / 2.0) < 1e-15);
  CHECK(std::abs(half(2, 2) - (1.0 + kI) / 2.0) < 1e-15);
  CHECK(dev(half * half, swap) < 1e-15);
}

TEST_CASE("fractional swap is a one-parameter group", "[coins][property]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> tau(-3.0, 3.0);
  for (int t = 0; t < 200; ++t) {
    const double a = tau(rng);
    const double b = tau(rng);
    REQUIRE(dev(fractional_swap(a).matrix() * fractional_swap(b).matrix(),
                fractional_swap(a + b).matrix()) < 1e-12);
  }
}

TEST_CASE("fractional swap commutes with A⊗A", "[coins][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tau(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Coin2 a = random_unitary2(rng);
    const Matrix4 aa = tensor(a, a).matrix();
    const Matrix4 xi = fractional_swap(tau(rng)).matrix();
    REQUIRE(dev(xi * aa, aa * xi) < 1e-12);
  }
}

TEST_CASE("su4_compose", "[coins]") {
  const Coin2 one = Coin2::identity();
  const Coin2 h = hadamard();
  CHECK(dev(su4_compose(one, one, one, one, 0, 0, 0).matrix(), Matrix4::Identity()) < 1e-15);
  CHECK(dev(su4_compose(h, h, one, one, 0, 0, 0).matrix(), tensor(h, h).matrix()) < 1e-15);

  // Non-unitary factors never reach su4_compose.
  Matrix2 bad = Matrix2::Identity();
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(Coin2::from_matrix(bad), ValidationError);
}

TEST_CASE("su4_compose with zero exponents factorizes", "[coins][property]") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Coin2 u1 = random_unitary2(rng);
    const Coin2 u2 = random_unitary2(rng);
    const Coin2 v1 = random_unitary2(rng);
    const Coin2 v2 = random_unitary2(rng);
    REQUIRE(dev(su4_compose(u1, u2, v1, v2, 0, 0, 0).matrix(),
                tensor(u1 * v1, u2 * v2).matrix()) < 1e-12);
  }
}

TEST_CASE("su4_compose entangled parameter point differs from Ξ^τ by -(Z⊗Z)", "[coins]") {
  const Coin2 one = Coin2::identity();
  const Matrix4 zz = tensor(Coin2::pauli_z(), Coin2::pauli_z()).matrix();
  for (double tau : {0.0, 0.3, 1.0}) {
    const Matrix4 c = su4_compose(one, one, one, one, tau, -1, -1).matrix();
    const Matrix4 xi = fractional_swap(tau).matrix();
    CHECK(dev(c, -zz * xi) < 1e-12);
    CHECK(dev(c, xi) > 0.5);
  }
}

TEST_CASE("unitarity_check", "[coins]") {
  CHECK(unitarity_check(hadamard().matrix()) < 1e-15);
  CHECK(unitarity_check(fractional_swap(0.37).matrix()) < 1e-15);
  Matrix2 m = hadamard().matrix();
  m(0, 0) += 1e-3;
  CHECK(unitarity_check(m) >= 1e-3);
  CHECK_THROWS_AS(unitarity_check(Eigen::MatrixXcd::Zero(2, 3)), ValidationError);
}

TEST_CASE("coin fields", "[coins]") {
  CoinField1D uniform(hadamard());
  CHECK(uniform.is_uniform());
  CHECK(dev(uniform.at({5, 0}).matrix(), hadamard().matrix()) == 0.0);
  uniform.set({0, 0}, Coin2::pauli_x());
  CHECK_FALSE(uniform.is_uniform());
  CHECK(dev(uniform.at({0, 0}).matrix(), Coin2::pauli_x().matrix()) == 0.0);
  CHECK(dev(uniform.at({1, 0}).matrix(), hadamard().matrix()) == 0.0);
}
