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

#include "qwalk/errors.hpp"
#include "qwalk/statespace.hpp"

using namespace qwalk;
using Catch::Approx;

TEST_CASE("basis dimension matches 2(2L+1) and [2(2L+1)]^2", "[statespace]") {
  for (int L = 0; L <= 6; ++L) {
    const std::size_t d1 = 2 * (2 * L + 1);
    CHECK(basis_dimension(1, L) == d1);
    CHECK(basis_dimension(2, L) == d1 * d1);
  }
}

TEST_CASE("pack_index follows the declared ordering", "[statespace]") {
  CHECK(pack_index(BasisLabel1D{-1, 0}, 1) == 0);
  CHECK(pack_index(BasisLabel1D{1, 1}, 1) == 5);
  // 2D: x-major, then y, then coin pair (c, d).
  CHECK(pack_index(BasisLabel2D{-1, -1, 0, 0}, 1) == 0);
  CHECK(pack_index(BasisLabel2D{-1, -1, 0, 1}, 1) == 1);
  CHECK(pack_index(BasisLabel2D{-1, -1, 1, 0}, 1) == 2);
  CHECK(pack_index(BasisLabel2D{-1, 0, 0, 0}, 1) == 4);
  CHECK(pack_index(BasisLabel2D{0, -1, 0, 0}, 1) == 12);
  CHECK(pack_index(BasisLabel2D{1, 1, 1, 1}, 1) == 35);
}

TEST_CASE("pack and unpack are mutually inverse over the full range", "[statespace][property]") {
  for (int L = 1; L <= 5; ++L) {
    const std::size_t n1 = basis_dimension(1, L);
    for (std::size_t i = 0; i < n1; ++i) {
      REQUIRE(pack_index(unpack_index_1d(i, L), L) == i);
    }
    for (int x = -L; x <= L; ++x) {
      for (int c = 0; c < 2; ++c) {
        const BasisLabel1D l{x, c};
        REQUIRE(unpack_index_1d(pack_index(l, L), L) == l);
      }
    }
    const std::size_t n2 = basis_dimension(2, L);
    for (std::size_t i = 0; i < n2; ++i) {
      const BasisLabel2D l = unpack_index_2d(i, L);
      REQUIRE(pack_index(l, L) == i);
      REQUIRE(unpack_index_2d(pack_index(l, L), L) == l);
    }
  }
}

TEST_CASE("out-of-range labels and indices are bounds errors", "[statespace]") {
  CHECK_THROWS_AS(pack_index(BasisLabel1D{2, 0}, 1), BoundsError);
  CHECK_THROWS_AS(pack_index(BasisLabel1D{0, 2}, 1), BoundsError);
  CHECK_THROWS_AS(pack_index(BasisLabel2D{0, 3, 0, 0}, 2), BoundsError);
  CHECK_THROWS_AS(unpack_index_1d(6, 1), BoundsError);
  CHECK_THROWS_AS(unpack_index_2d(36, 1), BoundsError);
}

TEST_CASE("localized state in 1D", "[statespace]") {
  const WalkerState s = localized_state(Lattice(1, 10), {0, 0}, CoinState({1.0, 0.0}));
  CHECK(s.size() == 42);
  CHECK(s.amplitude(BasisLabel1D{0, 0}) == Complex(1.0, 0.0));
  CHECK(s.amplitude(BasisLabel1D{0, 1}) == Complex(0.0, 0.0));
  CHECK(norm(s) == 1.0);
}

TEST_CASE("symmetric 2D initial state", "[statespace]") {
  const CoinState coin = CoinState::symmetric_pair();
  const WalkerState s = localized_state(Lattice(2, 11), {0, 0}, coin);
  CHECK(s.size() == 4 * 23 * 23);
  CHECK(std::abs(norm(s) - 1.0) < 1e-12);
  // ((1,i)/√2)⊗((1,i)/√2) = (1, i, i, -1)/2
  CHECK(std::abs(s.amplitude(BasisLabel2D{0, 0, 0, 0}) - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(s.amplitude(BasisLabel2D{0, 0, 0, 1}) - Complex(0.0, 0.5)) < 1e-15);
  CHECK(std::abs(s.amplitude(BasisLabel2D{0, 0, 1, 0}) - Complex(0.0, 0.5)) < 1e-15);
  CHECK(std::abs(s.amplitude(BasisLabel2D{0, 0, 1, 1}) - Complex(-0.5, 0.0)) < 1e-15);
}

TEST_CASE("localized state validation", "[statespace]") {
  CHECK_THROWS_AS(localized_state(Lattice(1, 10), {11, 0}, CoinState({1.0, 0.0})), BoundsError);
  CHECK_THROWS_AS(CoinState({1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(CoinState({1.0, 0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(localized_state(Lattice(2, 3), {0, 0}, CoinState({1.0, 0.0})),
                  ValidationError);
  CHECK_THROWS_AS(localized_state(Lattice(1, 0), {0, 0}, CoinState({1.0, 0.0})),
                  ValidationError);
  CHECK_THROWS_AS(Lattice(3, 1), ValidationError);
}

TEST_CASE("norm and renormalize", "[statespace]") {
  WalkerState s = localized_state(Lattice(2, 2), {1, -1}, CoinState::symmetric_pair());
  CHECK(norm(s) == Approx(1.0).epsilon(1e-15));
  for (Complex& a : s.amplitudes()) a *= 2.0;
  CHECK(norm(s) == Approx(2.0).epsilon(1e-15));
  const WalkerState r = renormalize(s);
  CHECK(std::abs(norm(r) - 1.0) < 1e-15);
  CHECK_THROWS_AS(renormalize(WalkerState(Lattice(1, 3))), DegenerateStateError);
}
