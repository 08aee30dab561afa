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

#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

int coordinate(Position p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

void check_axis(const Distribution& p, Axis axis) {
  if (p.dimensionality() == 1 && axis == Axis::Y) {
    throw ValidationError("axis y is undefined for a 1D distribution");
  }
}

}  // namespace

Distribution::Distribution(Lattice lattice, std::vector<double> probabilities)
    : lattice_(lattice), p_(std::move(probabilities)) {
  if (p_.size() != lattice_.sites()) {
    throw ValidationError("distribution has " + std::to_string(p_.size()) +
                          " entries, lattice has " +
                          std::to_string(lattice_.sites()) + " sites");
  }
  double sum = 0.0;
  for (double v : p_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("distribution entries must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kDistributionSumTolerance) {
    throw ValidationError("distribution sums to " + std::to_string(sum) +
                          ", not 1");
  }
}

double Distribution::at(Position p) const {
  if (!lattice_.contains(p)) return 0.0;
  return p_[lattice_.site_index(p)];
}

Distribution distribution(const WalkerState& state) {
  const Lattice& lattice = state.lattice();
  const std::size_t k = lattice.coin_dimension();
  const auto amps = state.amplitudes();
  std::vector<double> p(lattice.sites(), 0.0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    double sum = 0.0;
    for (std::size_t c = 0; c < k; ++c) sum += std::norm(amps[s * k + c]);
    p[s] = sum;
  }
  return Distribution(lattice, std::move(p));
}

double l1_distance(const Distribution& p, const Distribution& q) {
  if (p.dimensionality() != q.dimensionality()) {
    throw ValidationError("cannot compare distributions of different dimensionality");
  }
  const Lattice joint(p.dimensionality(), std::max(p.halfwidth(), q.halfwidth()));
  double sum = 0.0;
  for (std::size_t s = 0; s < joint.sites(); ++s) {
    const Position site = joint.site_at(s);
    sum += std::abs(p.at(site) - q.at(site));
  }
  return 0.5 * sum;
}

Distribution marginal(const Distribution& p, Axis axis) {
  if (p.dimensionality() != 2) {
    throw ValidationError("marginal needs a 2D distribution");
  }
  const int L = p.halfwidth();
  std::vector<double> out(static_cast<std::size_t>(2 * L + 1), 0.0);
  for (std::size_t s = 0; s < p.lattice().sites(); ++s) {
    const Position site = p.lattice().site_at(s);
    out[static_cast<std::size_t>(coordinate(site, axis) + L)] += p.probabilities()[s];
  }
  return Distribution(Lattice(1, L), std::move(out));
}

double mean(const Distribution& p, Axis axis) {
  check_axis(p, axis);
  double m = 0.0;
  for (std::size_t s = 0; s < p.lattice().sites(); ++s) {
    m += coordinate(p.lattice().site_at(s), axis) * p.probabilities()[s];
  }
  return m;
}

double variance(const Distribution& p, Axis axis) {
  const double m = mean(p, axis);
  double v = 0.0;
  for (std::size_t s = 0; s < p.lattice().sites(); ++s) {
    const double d = coordinate(p.lattice().site_at(s), axis) - m;
    v += d * d * p.probabilities()[s];
  }
  return v;
}

double recurrence_probability(const Distribution& p) { return p.at({0, 0}); }

double max_factorization_error(const Distribution& p) {
  const Distribution px = marginal(p, Axis::X);
  const Distribution py = marginal(p, Axis::Y);
  double worst = 0.0;
  for (std::size_t s = 0; s < p.lattice().sites(); ++s) {
    const Position site = p.lattice().site_at(s);
    const double expected = px.at({site.x, 0}) * py.at({site.y, 0});
    worst = std::max(worst, std::abs(p.probabilities()[s] - expected));
  }
  return worst;
}

Distribution classical_rw_distribution(int steps) {
  if (steps < 0) throw ValidationError("steps must be nonnegative");
  std::vector<double> p(static_cast<std::size_t>(2 * steps + 1), 0.0);
  const double log_norm = steps * std::numbers::ln2;
  for (int k = 0; k <= steps; ++k) {
    // k right-moves out of `steps` land at x = 2k - steps.
    const double log_binom = std::lgamma(steps + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(steps - k + 1.0);
    p[static_cast<std::size_t>(2 * k)] = std::exp(log_binom - log_norm);
  }
  return Distribution(Lattice(1, steps), std::move(p));
}

WalkSummary summarize(int step, const Distribution& p, const Distribution* reference) {
  WalkSummary s;
  s.step = step;
  s.recurrence = recurrence_probability(p);
  s.variance_x = variance(p, Axis::X);
  if (p.dimensionality() == 2) s.variance_y = variance(p, Axis::Y);
  if (reference != nullptr) s.l1_to_reference = l1_distance(p, *reference);
  return s;
}

}  // namespace qwalk
