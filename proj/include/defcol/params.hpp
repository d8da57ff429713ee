// Copyright 2026 The defcol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Density parameter r and defect bound s for excluding K_{t+1}.
//
// Every K_{t+1}-minor-free graph has at most C (t+1) sqrt(ln(t+1)) |V|
// edges for some absolute constant C that is known to exist but not
// pinned down; C is therefore configuration. A caller who knows a sharper
// bound d for a minor-closed class (every minor has at most d |V| edges)
// can pass it as a density override instead.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace defcol {

inline constexpr double kDefaultDensityConstant = 4.0;

struct Params {
  std::size_t t = 0;
  double C = kDefaultDensityConstant;
  std::optional<double> density_override;
  double r = 0.0;
  std::uint64_t s = 1;
  // Set when s came from the caller instead of compute_s; such an s carries
  // no guarantee that a reduction always exists.
  bool s_overridden = false;
};

// Base density C (t+1) sqrt(ln(t+1)), or the override when given.
inline double density_base(std::size_t t, double C, std::optional<double> density_override) {
  if (density_override) return *density_override;
  const double k = static_cast<double>(t) + 1.0;
  return C * k * std::sqrt(std::log(k));
}

// r = max(base, (t+1)/2), which gives r >= base and r > t/2 strictly.
inline double compute_r(std::size_t t, double C = kDefaultDensityConstant,
                        std::optional<double> density_override = std::nullopt) {
  if (!(C > 0.0) || !std::isfinite(C)) {
    throw std::invalid_argument("density constant C must be positive and finite");
  }
  if (density_override && (!(*density_override > 0.0) || !std::isfinite(*density_override))) {
    throw std::invalid_argument("density override must be positive and finite");
  }
  const double guard = (static_cast<double>(t) + 1.0) / 2.0;
  return std::max(density_base(t, C, density_override), guard);
}

// Least integer strictly greater than r (2r - t + 2). When the product lands
// within rounding distance below an integer, the larger candidate is taken.
inline std::uint64_t compute_s(double r, std::size_t t) {
  const double half_t = static_cast<double>(t) / 2.0;
  if (!(r > half_t) || !std::isfinite(r)) {
    throw std::invalid_argument("compute_s: r must exceed t/2 (r=" + std::to_string(r) +
                                ", t=" + std::to_string(t) + ")");
  }
  const double x = r * (2.0 * r - static_cast<double>(t) + 2.0);
  if (!(x < 0x1.0p62)) {
    throw std::overflow_error("compute_s: r(2r-t+2) too large for a 64-bit defect bound");
  }
  const double f = std::floor(x);
  std::uint64_t s = static_cast<std::uint64_t>(f) + 1;
  const double gap = (f + 1.0) - x;
  if (gap <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x)) {
    ++s;
  }
  return s;
}

inline Params make_params(std::size_t t, double C = kDefaultDensityConstant,
                          std::optional<double> density_override = std::nullopt,
                          std::optional<std::uint64_t> s_override = std::nullopt) {
  Params p;
  p.t = t;
  p.C = C;
  p.density_override = density_override;
  p.r = compute_r(t, C, density_override);
  if (s_override) {
    if (*s_override == 0) throw std::invalid_argument("s override must be positive");
    p.s = *s_override;
    p.s_overridden = true;
  } else {
    p.s = compute_s(p.r, t);
  }
  return p;
}

}  // namespace defcol
