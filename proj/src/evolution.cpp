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

#include "qwalk/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

// std::complex operator* guards against inf/nan (a libgcc call per product);
// amplitudes here are always finite.
inline Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline int wrap(int v, int halfwidth) {
  const int n = 2 * halfwidth + 1;
  int r = (v + halfwidth) % n;
  if (r < 0) r += n;
  return r - halfwidth;
}

struct Range {
  int lo;
  int hi;
};

Range clip(int center, int radius, int halfwidth) {
  return {std::max(center - radius, -halfwidth),
          std::min(center + radius, halfwidth)};
}

std::vector<Complex> phase_table(const Lattice& lattice, const DefectMap& defect) {
  if (defect.is_none()) return {};
  std::vector<Complex> table(lattice.sites());
  for (std::size_t s = 0; s < table.size(); ++s) {
    table[s] = defect.factor(lattice.site_at(s));
  }
  return table;
}

template <class Coin, int K>
std::vector<std::array<Complex, K * K>> coin_table(const Lattice& lattice,
                                                   const CoinField<Coin>& field) {
  std::vector<std::array<Complex, K * K>> table;
  if (field.is_uniform()) return table;
  table.resize(lattice.sites());
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto& m = field.at(lattice.site_at(s)).matrix();
    for (int r = 0; r < K; ++r) {
      for (int c = 0; c < K; ++c) table[s][r * K + c] = m(r, c);
    }
  }
  return table;
}

template <int K, class Coin>
std::array<Complex, K * K> flatten(const Coin& coin) {
  std::array<Complex, K * K> out;
  for (int r = 0; r < K; ++r) {
    for (int c = 0; c < K; ++c) out[r * K + c] = coin(r, c);
  }
  return out;
}

/// Coin and phase data resolved per site once, reused across steps.
template <class Coin, int K>
struct StepPlan {
  StepPlan(const Lattice& l, const CoinField<Coin>& field, const DefectMap& defect)
      : lattice(l),
        uniform(flatten<K>(field.background())),
        coins(coin_table<Coin, K>(l, field)),
        phases(phase_table(l, defect)) {}

  const Complex* coin_at(std::size_t site) const {
    return coins.empty() ? uniform.data() : coins[site].data();
  }

  Lattice lattice;
  std::array<Complex, K * K> uniform;
  std::vector<std::array<Complex, K * K>> coins;
  std::vector<Complex> phases;
};

using Plan1D = StepPlan<Coin2, 2>;
using Plan2D = StepPlan<Coin4, 4>;

[[noreturn]] void leak_error(int x, int y) {
  throw BoundsError("amplitude shifted past the lattice edge from site (" +
                    std::to_string(x) + ", " + std::to_string(y) +
                    ") under open boundary");
}

// Steps every source site with x in `xs`. Returns Σ|a|² of the output.
double step_1d(const Plan1D& plan, std::span<const Complex> in,
               std::span<Complex> out, Boundary boundary, Range xs) {
  const int L = plan.lattice.halfwidth();
  if (boundary == Boundary::Periodic) {
    std::fill(out.begin(), out.end(), Complex{});
  } else {
    const Range dst{std::max(xs.lo - 1, -L), std::min(xs.hi + 1, L)};
    std::fill(out.begin() + 2 * (dst.lo + L), out.begin() + 2 * (dst.hi + L + 1),
              Complex{});
  }
  double norm2 = 0.0;
  for (int x = xs.lo; x <= xs.hi; ++x) {
    const auto site = static_cast<std::size_t>(x + L);
    const Complex a0 = in[2 * site];
    const Complex a1 = in[2 * site + 1];
    if (a0 == Complex{} && a1 == Complex{}) continue;
    const Complex* c = plan.coin_at(site);
    Complex b[2] = {cmul(c[0], a0) + cmul(c[1], a1),
                    cmul(c[2], a0) + cmul(c[3], a1)};
    if (!plan.phases.empty()) {
      b[0] = cmul(b[0], plan.phases[site]);
      b[1] = cmul(b[1], plan.phases[site]);
    }
    for (int k = 0; k < 2; ++k) {
      int nx = x + shift_of(k);
      if (nx < -L || nx > L) {
        if (boundary == Boundary::Periodic) {
          nx = wrap(nx, L);
        } else if (b[k] != Complex{}) {
          leak_error(x, 0);
        } else {
          continue;
        }
      }
      out[2 * static_cast<std::size_t>(nx + L) + k] = b[k];
      norm2 += std::norm(b[k]);
    }
  }
  return norm2;
}

double step_2d(const Plan2D& plan, std::span<const Complex> in,
               std::span<Complex> out, Boundary boundary, Range xs, Range ys) {
  const int L = plan.lattice.halfwidth();
  const auto n = static_cast<std::size_t>(plan.lattice.side());
  auto index = [&](int x, int y) {
    return (static_cast<std::size_t>(x + L) * n + static_cast<std::size_t>(y + L)) * 4;
  };
  if (boundary == Boundary::Periodic) {
    std::fill(out.begin(), out.end(), Complex{});
  } else {
    const Range dx{std::max(xs.lo - 1, -L), std::min(xs.hi + 1, L)};
    const Range dy{std::max(ys.lo - 1, -L), std::min(ys.hi + 1, L)};
    for (int x = dx.lo; x <= dx.hi; ++x) {
      std::fill(out.begin() + index(x, dy.lo), out.begin() + index(x, dy.hi) + 4,
                Complex{});
    }
  }
  double norm2 = 0.0;
  for (int x = xs.lo; x <= xs.hi; ++x) {
    for (int y = ys.lo; y <= ys.hi; ++y) {
      const std::size_t src = index(x, y);
      const Complex a[4] = {in[src], in[src + 1], in[src + 2], in[src + 3]};
      if (a[0] == Complex{} && a[1] == Complex{} && a[2] == Complex{} &&
          a[3] == Complex{}) {
        continue;
      }
      const std::size_t site = src / 4;
      const Complex* c = plan.coin_at(site);
      Complex b[4];
      for (int r = 0; r < 4; ++r) {
        b[r] = cmul(c[4 * r], a[0]) + cmul(c[4 * r + 1], a[1]) +
               cmul(c[4 * r + 2], a[2]) + cmul(c[4 * r + 3], a[3]);
      }
      if (!plan.phases.empty()) {
        const Complex ph = plan.phases[site];
        for (Complex& v : b) v = cmul(v, ph);
      }
      for (int k = 0; k < 4; ++k) {
        int nx = x + shift_of(k >> 1);
        int ny = y + shift_of(k & 1);
        if (nx < -L || nx > L || ny < -L || ny > L) {
          if (boundary == Boundary::Periodic) {
            nx = wrap(nx, L);
            ny = wrap(ny, L);
          } else if (b[k] != Complex{}) {
            leak_error(x, y);
          } else {
            continue;
          }
        }
        out[index(nx, ny) + static_cast<std::size_t>(k)] = b[k];
        norm2 += std::norm(b[k]);
      }
    }
  }
  return norm2;
}

void require_dimensionality(const WalkerState& state, int dim) {
  if (state.dimensionality() != dim) {
    throw ValidationError("expected a " + std::to_string(dim) +
                          "D state, got " +
                          std::to_string(state.dimensionality()) + "D");
  }
}

int coin_dimensionality(const AnyCoinField& coin) {
  return std::holds_alternative<CoinField1D>(coin) ? 1 : 2;
}

}  // namespace

WalkerState apply_step_1d(const WalkerState& state, const CoinField1D& coin,
                          const DefectMap& defect, Boundary boundary) {
  require_dimensionality(state, 1);
  defect.check_dimensionality(1);
  const Plan1D plan(state.lattice(), coin, defect);
  WalkerState out(state.lattice());
  const int L = state.halfwidth();
  step_1d(plan, state.amplitudes(), out.amplitudes(), boundary, {-L, L});
  return out;
}

WalkerState apply_step_2d(const WalkerState& state, const CoinField2D& coin,
                          const DefectMap& defect, Boundary boundary) {
  require_dimensionality(state, 2);
  defect.check_dimensionality(2);
  const Plan2D plan(state.lattice(), coin, defect);
  WalkerState out(state.lattice());
  const int L = state.halfwidth();
  step_2d(plan, state.amplitudes(), out.amplitudes(), boundary, {-L, L}, {-L, L});
  return out;
}

int WalkSpec::resolved_halfwidth() const {
  return halfwidth.value_or(std::max(steps, 1));
}

void WalkSpec::validate() const {
  if (dimensionality != 1 && dimensionality != 2) {
    throw ValidationError("dimensionality must be 1 or 2");
  }
  if (steps < 0) {
    throw ValidationError("steps must be nonnegative, got " + std::to_string(steps));
  }
  const int L = resolved_halfwidth();
  if (L < 1) throw ValidationError("halfwidth must be >= 1");
  if (boundary == Boundary::Open && L < steps) {
    throw ValidationError("open boundary needs halfwidth (" + std::to_string(L) +
                          ") >= steps (" + std::to_string(steps) + ")");
  }
  if (coin_dimensionality(coin) != dimensionality) {
    throw ValidationError("coin field does not match walk dimensionality");
  }
  if (initial_coin.size() != Lattice(dimensionality, L).coin_dimension()) {
    throw ValidationError("initial coin state does not match walk dimensionality");
  }
  if (!Lattice(dimensionality, L).contains(origin)) {
    throw ValidationError("origin lies outside the lattice");
  }
  defect.check_dimensionality(dimensionality);
}

WalkerState WalkSpec::initial_state() const {
  validate();
  return localized_state(lattice(), origin, initial_coin);
}

WalkerState evolve(const WalkSpec& spec, const StepObserver& observer) {
  WalkerState state = spec.initial_state();
  WalkerState scratch(state.lattice());
  const Lattice& lattice = state.lattice();
  const int L = lattice.halfwidth();

  auto finish_step = [&](int step, double norm2) {
    std::swap(state, scratch);
    const double residual = std::abs(1.0 - norm2);
    if (!(residual < kStepNormResidualLimit)) {
      throw Error("norm drifted by " + std::to_string(residual) + " at step " +
                  std::to_string(step));
    }
    if (observer) observer(StepView{step, state, residual});
  };

  // Support after k steps from a localized start lies within distance k of
  // the origin on every axis; only that window is swept.
  const bool windowed = spec.boundary == Boundary::Open;
  if (spec.dimensionality == 1) {
    const Plan1D plan(lattice, std::get<CoinField1D>(spec.coin), spec.defect);
    for (int k = 0; k < spec.steps; ++k) {
      const Range xs = windowed ? clip(spec.origin.x, k, L) : Range{-L, L};
      finish_step(k + 1, step_1d(plan, state.amplitudes(), scratch.amplitudes(),
                                 spec.boundary, xs));
    }
  } else {
    const Plan2D plan(lattice, std::get<CoinField2D>(spec.coin), spec.defect);
    for (int k = 0; k < spec.steps; ++k) {
      const Range xs = windowed ? clip(spec.origin.x, k, L) : Range{-L, L};
      const Range ys = windowed ? clip(spec.origin.y, k, L) : Range{-L, L};
      finish_step(k + 1, step_2d(plan, state.amplitudes(), scratch.amplitudes(),
                                 spec.boundary, xs, ys));
    }
  }
  return state;
}

std::vector<StepReport> evolve(const WalkSpec& spec) {
  std::vector<StepReport> reports;
  reports.reserve(static_cast<std::size_t>(std::max(spec.steps, 0)));
  evolve(spec, [&](const StepView& v) {
    reports.push_back(StepReport{v.step, v.state, v.norm_residual});
  });
  return reports;
}

void check_dense_dimension(std::size_t dimension) {
  if (dimension > kMaxDenseDimension) {
    throw SizeError("dense matrix dimension " + std::to_string(dimension) +
                    " exceeds cap " + std::to_string(kMaxDenseDimension));
  }
}

Eigen::MatrixXcd build_step_matrix(const Lattice& lattice, const AnyCoinField& coin,
                                   const DefectMap& defect, Boundary boundary) {
  check_dense_dimension(lattice.dimension());
  if (coin_dimensionality(coin) != lattice.dimensionality()) {
    throw ValidationError("coin field does not match lattice dimensionality");
  }
  defect.check_dimensionality(lattice.dimensionality());
  const int L = lattice.halfwidth();
  const auto dim = static_cast<Eigen::Index>(lattice.dimension());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);

  // Returns false when the target leaves an open lattice.
  auto target = [&](int v, int bit, int& out) {
    out = v + shift_of(bit);
    if (out >= -L && out <= L) return true;
    if (boundary == Boundary::Open) return false;
    out = wrap(out, L);
    return true;
  };

  if (lattice.dimensionality() == 1) {
    const auto& field = std::get<CoinField1D>(coin);
    for (int x = -L; x <= L; ++x) {
      const Coin2& c = field.at({x, 0});
      const Complex phase = defect.factor({x, 0});
      for (int cin = 0; cin < 2; ++cin) {
        const auto col = static_cast<Eigen::Index>(pack_index(BasisLabel1D{x, cin}, L));
        for (int cout = 0; cout < 2; ++cout) {
          int nx = 0;
          if (!target(x, cout, nx)) continue;
          const auto row =
              static_cast<Eigen::Index>(pack_index(BasisLabel1D{nx, cout}, L));
          u(row, col) += phase * c(cout, cin);
        }
      }
    }
    return u;
  }

  const auto& field = std::get<CoinField2D>(coin);
  for (int x = -L; x <= L; ++x) {
    for (int y = -L; y <= L; ++y) {
      const Coin4& c = field.at({x, y});
      const Complex phase = defect.factor({x, y});
      for (int cin = 0; cin < 4; ++cin) {
        const auto col = static_cast<Eigen::Index>(
            pack_index(BasisLabel2D{x, y, cin / 2, cin % 2}, L));
        for (int cout = 0; cout < 4; ++cout) {
          int nx = 0;
          int ny = 0;
          if (!target(x, cout / 2, nx) || !target(y, cout % 2, ny)) continue;
          const auto row = static_cast<Eigen::Index>(
              pack_index(BasisLabel2D{nx, ny, cout / 2, cout % 2}, L));
          u(row, col) += phase * c(cout, cin);
        }
      }
    }
  }
  return u;
}

}  // namespace qwalk
