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

#include "qwalk/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

// Axis move on the image grid selected by coin value 2c + d.
constexpr std::array<Position, 4> kAxisMove = {{{2, 0}, {0, 2}, {0, -2}, {-2, 0}}};

int wrap(int v, int halfwidth) {
  const int n = 2 * halfwidth + 1;
  int r = (v + halfwidth) % n;
  if (r < 0) r += n;
  return r - halfwidth;
}

bool in_square(Position p, int halfwidth) {
  return std::abs(p.x) <= halfwidth && std::abs(p.y) <= halfwidth;
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// Preimage of an image-grid site when it belongs to the mapped lattice.
std::optional<Position> lattice_preimage(const CoordinateMap& map, Position image,
                                         int halfwidth) {
  auto pre = map.inverse(image);
  if (pre && in_square(*pre, halfwidth)) return pre;
  return std::nullopt;
}

/// Image-grid target of an axis move from an image site, reduced modulo the
/// image of the periodic joint lattice.
Position wrapped_move(const CoordinateMap& map, Position image, int coin, int halfwidth) {
  const Position moved{image.x + kAxisMove[coin].x, image.y + kAxisMove[coin].y};
  const auto pre = map.inverse(moved);
  if (!pre) {
    throw Error("axis move left the image sublattice; map is incompatible with the walk");
  }
  return map.forward({wrap(pre->x, halfwidth), wrap(pre->y, halfwidth)});
}

void check_halfwidth(int halfwidth) {
  if (halfwidth < 1) throw ValidationError("isomorphism checks need halfwidth >= 1");
}

/// 2D basis dimension of the image grid, after the dense-size checks.
std::size_t checked_dimensions(int halfwidth, const CoordinateMap& map) {
  check_halfwidth(halfwidth);
  check_dense_dimension(basis_dimension(2, halfwidth));
  const std::size_t target = basis_dimension(2, map.image_halfwidth(halfwidth));
  check_dense_dimension(target);
  return target;
}

}  // namespace

std::optional<Position> CoordinateMap::inverse(Position image) const {
  const int det = determinant();
  if (det == 0) return std::nullopt;
  const int xn = d * image.x - b * image.y;
  const int yn = -c * image.x + a * image.y;
  if (xn % det != 0 || yn % det != 0) return std::nullopt;
  return Position{xn / det, yn / det};
}

int CoordinateMap::image_halfwidth(int halfwidth) const {
  return std::max(std::abs(a) + std::abs(b), std::abs(c) + std::abs(d)) * halfwidth;
}

BasisPermutation::BasisPermutation(int halfwidth, const CoordinateMap& map)
    : halfwidth_(halfwidth), image_halfwidth_(map.image_halfwidth(halfwidth)) {
  check_halfwidth(halfwidth);
  if (map.determinant() == 0) {
    throw ValidationError("coordinate map is singular");
  }
  source_dimension_ = basis_dimension(2, halfwidth_);
  const std::size_t dim = basis_dimension(2, image_halfwidth_);
  target_.reserve(dim);
  std::vector<bool> used(dim, false);
  for (std::size_t i = 0; i < source_dimension_; ++i) {
    const BasisLabel2D label = unpack_index_2d(i, halfwidth_);
    const Position image = map.forward({label.x, label.y});
    const std::size_t j =
        pack_index(BasisLabel2D{image.x, image.y, label.c, label.d}, image_halfwidth_);
    if (used[j]) throw ValidationError("coordinate map is not injective on the lattice");
    used[j] = true;
    target_.push_back(j);
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (!used[j]) target_.push_back(j);
  }
}

bool BasisPermutation::is_permutation() const {
  std::vector<int> hits(target_.size(), 0);
  for (std::size_t j : target_) {
    if (j >= hits.size() || hits[j]++ != 0) return false;
  }
  return true;
}

Eigen::MatrixXi BasisPermutation::matrix() const {
  const auto n = idx(target_.size());
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(n, n);
  for (std::size_t i = 0; i < target_.size(); ++i) p(idx(target_[i]), idx(i)) = 1;
  return p;
}

Eigen::MatrixXcd two_walker_translation(int halfwidth) {
  check_halfwidth(halfwidth);
  const std::size_t dim = basis_dimension(2, halfwidth);
  check_dense_dimension(dim);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const BasisLabel2D l = unpack_index_2d(col, halfwidth);
    const BasisLabel2D moved{wrap(l.x + shift_of(l.c), halfwidth),
                             wrap(l.y + shift_of(l.d), halfwidth), l.c, l.d};
    t(idx(pack_index(moved, halfwidth)), idx(col)) = 1.0;
  }
  return t;
}

Eigen::MatrixXcd build_two_walker_matrix(int halfwidth, const CoinField2D& coin,
                                         const DefectMap& defect) {
  const Eigen::MatrixXcd t = two_walker_translation(halfwidth);
  defect.check_dimensionality(2);
  const Lattice lattice(2, halfwidth);
  const auto dim = idx(lattice.dimension());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd phases(dim);
  for (std::size_t s = 0; s < lattice.sites(); ++s) {
    const Position p = lattice.site_at(s);
    const auto base = idx(4 * s);
    c.block<4, 4>(base, base) = coin.at(p).matrix();
    phases.segment<4>(base).setConstant(defect.factor(p));
  }
  return t * phases.asDiagonal() * c;
}

Eigen::MatrixXcd cardinal_translation(int halfwidth, const CoordinateMap& map) {
  const std::size_t dim = checked_dimensions(halfwidth, map);
  const int image_hw = map.image_halfwidth(halfwidth);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const BasisLabel2D l = unpack_index_2d(col, image_hw);
    const Position site{l.x, l.y};
    if (!lattice_preimage(map, site, halfwidth)) {
      t(idx(col), idx(col)) = 1.0;
      continue;
    }
    const Position target = wrapped_move(map, site, 2 * l.c + l.d, halfwidth);
    t(idx(pack_index(BasisLabel2D{target.x, target.y, l.c, l.d}, image_hw)), idx(col)) = 1.0;
  }
  return t;
}

CoinField2D transform_coin_field(const CoinField2D& coin, const CoordinateMap& map) {
  std::map<Position, Coin4> overrides;
  for (const auto& [p, c] : coin.overrides()) overrides.emplace(map.forward(p), c);
  return CoinField2D(coin.background(), std::move(overrides));
}

DefectMap transform_defect(const DefectMap& defect, int halfwidth, const CoordinateMap& map) {
  std::map<Position, double> table;
  for (int x = -halfwidth; x <= halfwidth; ++x) {
    for (int y = -halfwidth; y <= halfwidth; ++y) {
      const double phi = defect.phase({x, y});
      if (phi != 0.0) table.emplace(map.forward({x, y}), phi);
    }
  }
  return DefectMap::custom(std::move(table));
}

Eigen::MatrixXcd build_cardinal_walk_matrix(int halfwidth, const CoinField2D& coin,
                                            const DefectMap& defect, const CoordinateMap& map) {
  const std::size_t dim = checked_dimensions(halfwidth, map);
  defect.check_dimensionality(2);
  const int image_hw = map.image_halfwidth(halfwidth);
  const CoinField2D image_coin = transform_coin_field(coin, map);
  const DefectMap image_defect = transform_defect(defect, halfwidth, map);
  const Lattice grid(2, image_hw);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const Position site = grid.site_at(s);
    if (!lattice_preimage(map, site, halfwidth)) {
      u.block<4, 4>(idx(4 * s), idx(4 * s)).setIdentity();
      continue;
    }
    const Coin4& c = image_coin.at(site);
    const Complex phase = image_defect.factor(site);
    for (int kout = 0; kout < 4; ++kout) {
      const Position target = wrapped_move(map, site, kout, halfwidth);
      const auto row = idx(grid.site_index(target) * 4 + static_cast<std::size_t>(kout));
      for (int kin = 0; kin < 4; ++kin) {
        u(row, idx(4 * s + static_cast<std::size_t>(kin))) = phase * c(kout, kin);
      }
    }
  }
  return u;
}

double conjugated_deviation(const Eigen::MatrixXcd& two_walker,
                            const Eigen::MatrixXcd& cardinal,
                            const BasisPermutation& perm) {
  const std::size_t n1 = perm.source_dimension();
  const std::size_t n2 = perm.dimension();
  if (two_walker.rows() != idx(n1) || two_walker.cols() != idx(n1) ||
      cardinal.rows() != idx(n2) || cardinal.cols() != idx(n2)) {
    throw ValidationError("matrix sizes do not match the basis permutation");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < n2; ++j) {
    const auto col = idx(perm.target(j));
    for (std::size_t i = 0; i < n2; ++i) {
      const Complex conjugated = cardinal(idx(perm.target(i)), col);
      double dev = 0.0;
      if (i < n1 && j < n1) {
        dev = std::abs(two_walker(idx(i), idx(j)) - conjugated);
      } else if (i < n1 || j < n1) {
        dev = std::abs(conjugated);  // leakage between image and inert sectors
      }
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

double verify_isomorphism(int halfwidth, const CoinField2D& coin, const DefectMap& defect,
                          const CoordinateMap& map) {
  checked_dimensions(halfwidth, map);
  return conjugated_deviation(build_two_walker_matrix(halfwidth, coin, defect),
                              build_cardinal_walk_matrix(halfwidth, coin, defect, map),
                              BasisPermutation(halfwidth, map));
}

double check_translation_equivalence(int halfwidth, const CoordinateMap& map) {
  checked_dimensions(halfwidth, map);
  return conjugated_deviation(two_walker_translation(halfwidth),
                              cardinal_translation(halfwidth, map),
                              BasisPermutation(halfwidth, map));
}

WalkerState map_state(const WalkerState& two_walker, const CoordinateMap& map) {
  if (two_walker.dimensionality() != 2) throw ValidationError("map_state needs a 2D state");
  const BasisPermutation perm(two_walker.halfwidth(), map);
  WalkerState out(Lattice(2, perm.image_halfwidth()));
  const auto in = two_walker.amplitudes();
  auto dst = out.amplitudes();
  for (std::size_t i = 0; i < perm.source_dimension(); ++i) dst[perm.target(i)] = in[i];
  return out;
}

Distribution map_distribution(const Distribution& two_walker, const CoordinateMap& map) {
  if (two_walker.dimensionality() != 2) {
    throw ValidationError("map_distribution needs a 2D distribution");
  }
  const Lattice grid(2, map.image_halfwidth(two_walker.halfwidth()));
  std::vector<double> p(grid.sites(), 0.0);
  for (std::size_t s = 0; s < two_walker.lattice().sites(); ++s) {
    const Position image = map.forward(two_walker.lattice().site_at(s));
    p[grid.site_index(image)] += two_walker.probabilities()[s];
  }
  return Distribution(grid, std::move(p));
}

WalkerState apply_cardinal_step(const WalkerState& state, const CoinField2D& coin,
                                const DefectMap& defect) {
  if (state.dimensionality() != 2) {
    throw ValidationError("apply_cardinal_step needs a 2D state");
  }
  const Lattice& grid = state.lattice();
  WalkerState out(grid);
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const Position site = grid.site_at(s);
    const auto a = state.coin_at(site);
    if (std::all_of(a.begin(), a.end(), [](Complex v) { return v == Complex{}; })) continue;
    const Eigen::Vector4cd in(a[0], a[1], a[2], a[3]);
    const Eigen::Vector4cd b = defect.factor(site) * (coin.at(site).matrix() * in);
    for (int k = 0; k < 4; ++k) {
      const Position target{site.x + kAxisMove[k].x, site.y + kAxisMove[k].y};
      if (!grid.contains(target)) {
        if (b[k] != Complex{}) throw BoundsError("2D walker left the lattice");
        continue;
      }
      out.coin_at(target)[static_cast<std::size_t>(k)] = b[k];
    }
  }
  return out;
}

Coin2 random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix2 g;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  const Eigen::HouseholderQR<Matrix2> qr(g);
  Matrix2 q = qr.householderQ();
  const Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 2; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return Coin2::from_matrix(q);
}

std::string to_string(TrialKind kind) {
  switch (kind) {
    case TrialKind::Tensor:
      return "tensor";
    case TrialKind::FractionalSwap:
      return "fractional_swap";
    case TrialKind::Product:
      return "product";
    case TrialKind::SiteDependent:
      return "site_dependent";
  }
  return "unknown";
}

namespace {

Coin4 random_shared_coin(std::mt19937_64& rng, TrialKind kind) {
  std::uniform_real_distribution<double> tau(0.0, 1.0);
  switch (kind) {
    case TrialKind::Tensor:
      return tensor(random_unitary2(rng), random_unitary2(rng));
    case TrialKind::FractionalSwap:
      return fractional_swap(tau(rng));
    default: {
      const Coin4 left = tensor(random_unitary2(rng), random_unitary2(rng));
      const Coin4 middle = fractional_swap(tau(rng));
      return left * middle * tensor(random_unitary2(rng), random_unitary2(rng));
    }
  }
}

CoinField2D random_field(std::mt19937_64& rng, TrialKind kind, int halfwidth) {
  if (kind != TrialKind::SiteDependent) return CoinField2D(random_shared_coin(rng, kind));
  std::uniform_int_distribution<int> pick(0, 2);
  CoinField2D field(random_shared_coin(rng, TrialKind::Product));
  for (int x = -halfwidth; x <= halfwidth; ++x) {
    for (int y = -halfwidth; y <= halfwidth; ++y) {
      field.set({x, y}, random_shared_coin(rng, static_cast<TrialKind>(pick(rng))));
    }
  }
  return field;
}

}  // namespace

IsomorphismSuiteReport run_isomorphism_suite(std::span<const int> halfwidths, int trials,
                                             std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw ValidationError("isomorphism suite needs at least one trial");
  for (int L : halfwidths) checked_dimensions(L, CoordinateMap::standard());

  struct Job {
    int halfwidth;
    TrialKind kind;
    CoinField2D coin;
  };
  std::mt19937_64 rng(seed);
  std::vector<Job> jobs;
  for (int L : halfwidths) {
    for (int t = 0; t < trials; ++t) {
      const auto kind = static_cast<TrialKind>(t % 4);
      jobs.push_back(Job{L, kind, random_field(rng, kind, L)});
    }
  }

  IsomorphismSuiteReport report;
  report.trials.resize(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    report.trials[i] = {job.halfwidth, job.kind, verify_isomorphism(job.halfwidth, job.coin)};
  });
  report.translation.resize(halfwidths.size());
  parallel_for(halfwidths.size(), threads, [&](std::size_t i) {
    report.translation[i] = {halfwidths[i], check_translation_equivalence(halfwidths[i])};
  });

  bool ok = true;
  for (const auto& t : report.trials) {
    report.max_deviation = std::max(report.max_deviation, t.deviation);
    ok = ok && t.deviation < kIsomorphismTolerance;
  }
  for (const auto& [L, dev] : report.translation) ok = ok && dev == 0.0;
  report.passed = ok;
  return report;
}

std::string to_string(EntangledMatch match) {
  switch (match) {
    case EntangledMatch::Exact:
      return "exact";
    case EntangledMatch::GlobalPhase:
      return "global_phase";
    case EntangledMatch::MinusZZ:
      return "minus_zz";
    case EntangledMatch::None:
      return "none";
  }
  return "unknown";
}

std::vector<double> default_tau_grid() { return {0.0, 0.1, 0.25, 0.3, 0.5, 0.75, 0.9, 1.0}; }

DecompositionReport check_decomposition_claims(std::uint64_t seed, int separable_trials,
                                               const std::vector<double>& taus) {
  DecompositionReport report;
  std::mt19937_64 rng(seed);
  report.separable_trials = separable_trials;
  for (int t = 0; t < separable_trials; ++t) {
    const Coin2 u1 = random_unitary2(rng);
    const Coin2 u2 = random_unitary2(rng);
    const Coin2 v1 = random_unitary2(rng);
    const Coin2 v2 = random_unitary2(rng);
    const Coin4 composed = su4_compose(u1, u2, v1, v2, 0.0, 0.0, 0.0);
    const Coin4 expected = tensor(u1 * v1, u2 * v2);
    report.separable_max_deviation = std::max(
        report.separable_max_deviation, max_abs_deviation(composed.matrix(), expected.matrix()));
  }
  report.separable_confirmed = report.separable_max_deviation < kIsomorphismTolerance;

  const Coin2 one = Coin2::identity();
  const Matrix4 zz = tensor(Coin2::pauli_z(), Coin2::pauli_z()).matrix();
  bool exact = !taus.empty();
  bool phase = exact;
  bool minus_zz = exact;
  for (double tau : taus) {
    const Matrix4 c = su4_compose(one, one, one, one, tau, -1.0, -1.0).matrix();
    const Matrix4 xi = fractional_swap(tau).matrix();
    EntangledClaimRow row;
    row.tau = tau;
    row.exact_deviation = max_abs_deviation(c, xi);
    row.global_phase = std::arg((xi.adjoint() * c).trace());
    row.global_phase_deviation = max_abs_deviation(c, std::polar(1.0, row.global_phase) * xi);
    row.minus_zz_deviation = max_abs_deviation(c, -zz * xi);
    exact = exact && row.exact_deviation < kIsomorphismTolerance;
    phase = phase && row.global_phase_deviation < kIsomorphismTolerance;
    minus_zz = minus_zz && row.minus_zz_deviation < kIsomorphismTolerance;
    report.entangled.push_back(row);
  }
  report.entangled_match = exact      ? EntangledMatch::Exact
                           : phase    ? EntangledMatch::GlobalPhase
                           : minus_zz ? EntangledMatch::MinusZZ
                                      : EntangledMatch::None;
  return report;
}

}  // namespace qwalk
