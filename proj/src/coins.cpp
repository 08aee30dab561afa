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

#include "qwalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

const Complex kI(0.0, 1.0);

template <class M>
void require_unitary(const M& m, const char* what) {
  const double dev = unitarity_check(m);
  if (!(dev <= kUnitarityTolerance)) {
    throw ValidationError(std::string(what) +
                          " is not unitary (max |CC†-1| = " +
                          std::to_string(dev) + ")");
  }
}

}  // namespace

double unitarity_check(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("unitarity check needs a square matrix");
  }
  const Eigen::MatrixXcd residual =
      m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff();
}

double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("cannot compare matrices of different shape");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Coin2 Coin2::from_matrix(const Matrix2& m) {
  require_unitary(m, "2x2 coin");
  return Coin2(m);
}

Coin2 Coin2::identity() { return Coin2(Matrix2::Identity()); }

Coin2 Coin2::pauli_x() {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return Coin2(m);
}

Coin2 Coin2::pauli_z() {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return Coin2(m);
}

Coin4 Coin4::from_matrix(const Matrix4& m) {
  require_unitary(m, "4x4 coin");
  return Coin4(m);
}

Coin4 Coin4::identity() { return Coin4(Matrix4::Identity()); }

Coin4 Coin4::swap() { return fractional_swap(1.0); }

Coin2 su2_from_angles(double theta, double psi, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix2 m;
  m << std::exp(-kI * phi) * c, std::exp(kI * psi) * s,
      -std::exp(-kI * psi) * s, std::exp(kI * phi) * c;
  return Coin2::from_matrix(m);
}

Coin2 hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  Matrix2 m;
  m << s, s, s, -s;
  return Coin2::from_matrix(m);
}

Coin4 tensor(const Coin2& a, const Coin2& b) {
  Matrix4 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
      }
    }
  }
  return Coin4::from_matrix(m);
}

Coin4 fractional_swap(double tau) {
  const Complex sign = std::exp(kI * (std::numbers::pi * tau));
  const Complex plus = 0.5 * (1.0 + sign);
  const Complex minus = 0.5 * (1.0 - sign);
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = plus;
  m(1, 2) = minus;
  m(2, 1) = minus;
  m(2, 2) = plus;
  m(3, 3) = 1.0;
  return Coin4::from_matrix(m);
}

Coin4 su4_compose(const Coin2& u1, const Coin2& u2, const Coin2& v1,
                  const Coin2& v2, double alpha, double beta, double gamma) {
  const Coin2 one = Coin2::identity();
  const Coin2 x = Coin2::pauli_x();
  const Coin2 z = Coin2::pauli_z();
  const Matrix4 bracket = tensor(z, x).matrix() *
                          fractional_swap(gamma).matrix() *
                          tensor(z, one).matrix() *
                          fractional_swap(beta).matrix() *
                          tensor(one, x).matrix() *
                          fractional_swap(alpha).matrix();
  return Coin4::from_matrix(tensor(u1, u2).matrix() * bracket *
                            tensor(v1, v2).matrix());
}

}  // namespace qwalk
