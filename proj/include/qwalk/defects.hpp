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
 * Position-dependent phase defects.
 *
 * A DefectMap assigns each lattice site a phase angle; the walk multiplies
 * every amplitude leaving a site by e^{i·phase}. Supported layouts:
 *
 *   None          0 everywhere
 *   LineY(φ)      φ·δ_{y,0}
 *   CrossXY(φ)    φ·(δ_{x,0} + δ_{y,0}), so the origin receives 2φ
 *   Point(φ)      φ·δ_{x,0}δ_{y,0}
 *   Custom        explicit site -> angle table, 0 elsewhere
 *
 * LineY and CrossXY only make sense on 2D lattices.
 */
#pragma once

#include <map>
#include <string>
#include <variant>

#include "qwalk/statespace.hpp"

namespace qwalk {

struct NoDefect {};
struct LineYDefect {
  double phi = 0.0;
};
struct CrossXYDefect {
  double phi = 0.0;
};
struct PointDefect {
  double phi = 0.0;
};
struct CustomDefect {
  std::map<Position, double> phases;
};

class DefectMap {
 public:
  using Variant =
      std::variant<NoDefect, LineYDefect, CrossXYDefect, PointDefect, CustomDefect>;

  DefectMap() = default;
  /// Throws ValidationError on non-finite angles.
  explicit DefectMap(Variant v);

  static DefectMap none() { return DefectMap(); }
  static DefectMap line_y(double phi) { return DefectMap(LineYDefect{phi}); }
  static DefectMap cross_xy(double phi) { return DefectMap(CrossXYDefect{phi}); }
  static DefectMap point(double phi) { return DefectMap(PointDefect{phi}); }
  static DefectMap custom(std::map<Position, double> phases) {
    return DefectMap(CustomDefect{std::move(phases)});
  }

  const Variant& variant() const { return v_; }
  bool is_none() const { return std::holds_alternative<NoDefect>(v_); }

  /// Angle in radians at `p`.
  double phase(Position p) const;
  /// e^{i·phase(p)}; exactly 1 where the angle is 0.
  Complex factor(Position p) const;

  /// Throws ValidationError if this layout is undefined on the given
  /// dimensionality (line/cross defects on a 1D lattice).
  void check_dimensionality(int dimensionality) const;

  /// "none", "line_y", "cross_xy", "point" or "custom".
  std::string kind_name() const;

 private:
  Variant v_;
};

}  // namespace qwalk
