// Copyright 2026 The qwalk Authors
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

// Stationary-phase closed forms for the large-t behaviour of the walk.
//
// Positions are scaled as alpha = n / t. Inside the ballistic region
// |alpha| < cos(theta/2) the amplitudes decay like t^{-1/2}; at the edges
// they form t^{-1/3} peaks, and outside they vanish faster than any power.
// Interior formulas are only evaluated for |alpha| <= edge - epsilon; the
// transition layer between that cutoff and the edge is not modeled.

#pragma once

#include "qwalk/walk.hpp"

#include <cstdint>
#include <functional>

namespace qwalk {

/// Which initial chirality the slowly varying envelope belongs to.
enum class Envelope {
  /// Hadamard walk started in |L>; carries the (1 - alpha) tilt.
  left_start,
  /// Start in an eigenvector of the symmetrizer; valid for the whole family.
  symmetric_start,
};

struct AsymptoticModel {
  /// HadamardLabel or ThetaLabel with theta in (0, pi).
  CoinLabel family = HadamardLabel{};
  /// Interior margin in alpha units.
  double epsilon = 0.02;

  double support_edge() const { return qwalk::support_edge(family); }
  bool in_interior(double alpha) const;
};

struct StationaryPointData {
  double alpha = 0.0;
  double k_alpha = 0.0;
  double phase = 0.0;
  /// |omega''| at k_alpha, from the closed form.
  double curvature = 0.0;
  /// Violation of the stationarity condition at k_alpha.
  double residual = 0.0;
};

/// Stationary point of the phase on the branch tied to the label.
///
/// Hadamard: k_alpha in [0, pi] with cos k_alpha = -alpha / sqrt(1 - alpha^2),
/// phase -(omega + alpha k), stationarity omega' + alpha = 0.
/// theta: k_alpha in [-pi/2, pi/2] with
/// sin k_alpha = alpha tan(theta/2) / sqrt(1 - alpha^2), phase omega - alpha k,
/// stationarity omega' - alpha = 0.
StationaryPointData stationary_point(double alpha, const CoinLabel& family);

/// Oscillating asymptotic probability at site n after t steps, Hadamard walk
/// from |L>. Zero at sites of the wrong parity.
double p_asymptotic(std::int64_t n, std::int64_t t, const AsymptoticModel& model = {});

/// Leading-order (psi_L, psi_R) at site n after t steps, Hadamard walk from
/// |L>. |psi_L|^2 + |psi_R|^2 reproduces p_asymptotic exactly.
ComplexPair asymptotic_wavefunction(std::int64_t n, std::int64_t t,
                                    const AsymptoticModel& model = {});

/// Limiting density p(alpha), normalized over the open support.
double density(double alpha, const CoinLabel& family, Envelope envelope);

/// Non-oscillating part of the per-site probability, density(alpha) / t.
/// Counts both parities, so compare against even-site masses times 1/2.
double p_slow(double alpha, std::int64_t t, const AsymptoticModel& model,
              Envelope envelope);

/// Integral of g(alpha) p(alpha) over [lo, hi] within the support.
///
/// Substitutes alpha = edge sin(u), which cancels the inverse square root
/// singularity of p at the edges, and applies composite Simpson on u.
double integrate_density(const std::function<double(double)>& g,
                         const CoinLabel& family, Envelope envelope, double lo,
                         double hi, int panels = 4096);

/// Same over the whole support.
double integrate_density(const std::function<double(double)>& g,
                         const CoinLabel& family, Envelope envelope,
                         int panels = 4096);

enum class FrontierSide { left, right };

/// Leading t^{-1/3} term of the generic wave integral at alpha = -1/sqrt(2)
/// (left, envelope g(0)) or alpha = +1/sqrt(2) (right, envelope g(pi)).
Complex<double> frontier_peak(std::int64_t t, FrontierSide side, Complex<double> g);

}  // namespace qwalk
