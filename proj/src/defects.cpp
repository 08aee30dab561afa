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

#include "qwalk/defects.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_finite(double phi) {
  if (!std::isfinite(phi)) throw ValidationError("defect phase must be finite");
}

}  // namespace

DefectMap::DefectMap(Variant v) : v_(std::move(v)) {
  std::visit(Overloaded{
                 [](const NoDefect&) {},
                 [](const CustomDefect& d) {
                   for (const auto& [p, phi] : d.phases) check_finite(phi);
                 },
                 [](const auto& d) { check_finite(d.phi); },
             },
             v_);
}

double DefectMap::phase(Position p) const {
  return std::visit(
      Overloaded{
          [](const NoDefect&) { return 0.0; },
          [&](const LineYDefect& d) { return p.y == 0 ? d.phi : 0.0; },
          [&](const CrossXYDefect& d) {
            return d.phi * static_cast<double>((p.x == 0 ? 1 : 0) +
                                               (p.y == 0 ? 1 : 0));
          },
          [&](const PointDefect& d) {
            return p.x == 0 && p.y == 0 ? d.phi : 0.0;
          },
          [&](const CustomDefect& d) {
            auto it = d.phases.find(p);
            return it == d.phases.end() ? 0.0 : it->second;
          },
      },
      v_);
}

Complex DefectMap::factor(Position p) const {
  const double phi = phase(p);
  if (phi == 0.0) return {1.0, 0.0};
  return std::polar(1.0, phi);
}

void DefectMap::check_dimensionality(int dimensionality) const {
  if (dimensionality == 1 && (std::holds_alternative<LineYDefect>(v_) ||
                              std::holds_alternative<CrossXYDefect>(v_))) {
    throw ValidationError(kind_name() + " defect needs a 2D lattice");
  }
}

std::string DefectMap::kind_name() const {
  return std::visit(Overloaded{
                        [](const NoDefect&) { return std::string("none"); },
                        [](const LineYDefect&) { return std::string("line_y"); },
                        [](const CrossXYDefect&) { return std::string("cross_xy"); },
                        [](const PointDefect&) { return std::string("point"); },
                        [](const CustomDefect&) { return std::string("custom"); },
                    },
                    v_);
}

}  // namespace qwalk
