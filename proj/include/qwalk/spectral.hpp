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

// Exact solution of the walk in the wavenumber domain.
//
// Transform convention: f~(k) = sum_n f(n) e^{ikn}, so one step acts as
// f~(k, t+1) = M_k f~(k, t) with M_k = e^{ik} M_+ + e^{-ik} M_-.
//
// Two dispersion branches are used, each tied to a coin label:
//   Hadamard:  sin(omega_k) = sin(k)/sqrt(2), omega in [-pi/2, pi/2],
//              eigenvalues e^{-i omega}, e^{i(pi + omega)}.
//   theta:     cos(omega_k) = cos(theta/2) cos(k), omega in [0, pi],
//              eigenvalues e^{i omega}, e^{-i omega}.

#pragma once

#include "qwalk/walk.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace qwalk {

struct TransferMatrix {
  double k = 0.0;
  Matrix2c matrix;
};

TransferMatrix transfer_matrix(const CoinOperator& coin, double k);

/// omega_k on the branch belonging to the coin's label.
double dispersion(const CoinOperator& coin, double k);

/// d omega / dk on the coin's branch.
double group_velocity(const CoinOperator& coin, double k);

/// d^2 omega / dk^2 on the coin's branch.
double dispersion_curvature(const CoinOperator& coin, double k);

struct SpectralDecomposition {
  double k = 0.0;
  double omega = 0.0;
  /// Eigenvalue i is exp(i * phases[i]).
  std::array<double, 2> phases{};
  std::array<Complex<double>, 2> eigenvalues{};
  /// Orthonormal; eigenvectors[i] belongs to eigenvalues[i].
  std::array<ComplexPair, 2> eigenvectors{};
  /// Set when the eigenvalues collide and M_k is a multiple of the identity.
  bool degenerate = false;

  Matrix2c reconstruct() const;
  /// M_k^t applied to `v`, via scalar powers of the eigenvalues.
  ComplexPair power_apply(const ComplexPair& v, std::int64_t t) const;
};

SpectralDecomposition eigensystem(const TransferMatrix& tm, const CoinOperator& coin);

/// M_k^t init, computed from the eigendecomposition.
ComplexPair fourier_amplitudes(const CoinOperator& coin, const ComplexPair& init,
                               double k, std::int64_t t);

/// Samples of the transformed wavefunction on the grid k_j = -pi + 2 pi j / N.
struct FourierSamples {
  std::vector<double> k;
  std::vector<ComplexPair> values;
};

/// Transform of a line wavefunction sampled on an N-point grid.
FourierSamples forward_transform(const WaveFunction& psi, std::int64_t grid_size);

/// Inverse discrete transform onto sites [first_site, first_site + width).
/// Each site is an independent sum over j in increasing order, so the result
/// does not depend on how sites are distributed over threads.
AmplitudeArray<double> inverse_transform(const FourierSamples& samples,
                                         std::int64_t first_site, std::int64_t width,
                                         int threads = 0);

struct SpectralOptions {
  /// Number of wavenumber samples. Defaults to the smallest even N that
  /// exceeds the support width of the evolved state.
  std::optional<std::int64_t> grid_size;
  /// Worker threads; zero means hardware concurrency capped by QWALK_THREADS.
  int threads = 0;
};

/// Smallest admissible grid for a state of `width` sites evolved `t` steps.
std::int64_t default_grid_size(std::int64_t width, std::int64_t t);

/// Evolve a line wavefunction by `t` steps through the wavenumber domain.
/// Exact up to round-off whenever the grid covers the support of the result.
WaveFunction evolve_spectral(const WaveFunction& init, const CoinOperator& coin,
                             std::int64_t t, const SpectralOptions& options = {});

}  // namespace qwalk
