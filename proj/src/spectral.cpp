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

#include "qwalk/spectral.hpp"

#include "parallel.hpp"
#include "qwalk/evolve.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

using std::numbers::pi;
using C = Complex<double>;

// Below this norm both null-vector candidates vanish and M_k = lambda I.
constexpr double kDegenerateNorm = 1e-13;

// e^{i pi n} for integer n.
double parity_sign(std::int64_t n) { return (n & 1) ? -1.0 : 1.0; }

// Null vector of (M - lambda I), or a zero vector when M - lambda I ~ 0.
ComplexPair null_vector(const Matrix2c& m, C lambda) {
  ComplexPair a(m(0, 1), lambda - m(0, 0));
  ComplexPair b(lambda - m(1, 1), m(1, 0));
  ComplexPair v = a.norm() >= b.norm() ? a : b;
  const double norm = v.norm();
  if (norm < kDegenerateNorm) return ComplexPair::Zero();
  return v / norm;
}

// Twiddle table w[m] = e^{-2 pi i m / N}.
std::vector<C> twiddles(std::int64_t n) {
  std::vector<C> w(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    w[static_cast<std::size_t>(m)] =
        std::polar(1.0, -2.0 * pi * static_cast<double>(m) / static_cast<double>(n));
  }
  return w;
}

}  // namespace

TransferMatrix transfer_matrix(const CoinOperator& coin, double k) {
  const StepMatrices<double> s = step_matrices(coin);
  return {k, std::polar(1.0, k) * s.plus + std::polar(1.0, -k) * s.minus};
}

double dispersion(const CoinOperator& coin, double k) {
  if (is_hadamard(coin.label)) return std::asin(std::sin(k) / std::numbers::sqrt2);
  const double theta = std::get<ThetaLabel>(coin.label).theta;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  // sin(omega) = sqrt(1 - c^2 cos^2 k) written without cancellation.
  const double sk = std::sin(k);
  const double ck = std::cos(k);
  return std::atan2(std::sqrt(sk * sk + s * s * ck * ck), c * ck);
}

double group_velocity(const CoinOperator& coin, double k) {
  const double ck = std::cos(k);
  if (is_hadamard(coin.label)) return ck / std::sqrt(1.0 + ck * ck);
  const double c = std::cos(std::get<ThetaLabel>(coin.label).theta / 2);
  const double sin_omega = std::sin(dispersion(coin, k));
  if (sin_omega == 0.0) return 0.0;
  return c * std::sin(k) / sin_omega;
}

double dispersion_curvature(const CoinOperator& coin, double k) {
  if (is_hadamard(coin.label)) {
    const double ck = std::cos(k);
    return -std::sin(k) / std::pow(1.0 + ck * ck, 1.5);
  }
  const double omega = dispersion(coin, k);
  const double v = group_velocity(coin, k);
  const double sin_omega = std::sin(omega);
  if (sin_omega == 0.0) return 0.0;
  return std::cos(omega) / sin_omega * (1.0 - v * v);
}

Matrix2c SpectralDecomposition::reconstruct() const {
  Matrix2c m = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i) {
    m += eigenvalues[i] * eigenvectors[i] * eigenvectors[i].adjoint();
  }
  return m;
}

ComplexPair SpectralDecomposition::power_apply(const ComplexPair& v,
                                               std::int64_t t) const {
  ComplexPair out = ComplexPair::Zero();
  for (int i = 0; i < 2; ++i) {
    const C lambda_t = std::polar(1.0, phases[i] * static_cast<double>(t));
    out += lambda_t * eigenvectors[i].dot(v) * eigenvectors[i];
  }
  return out;
}

SpectralDecomposition eigensystem(const TransferMatrix& tm, const CoinOperator& coin) {
  SpectralDecomposition d;
  d.k = tm.k;
  d.omega = dispersion(coin, tm.k);
  if (is_hadamard(coin.label)) {
    d.phases = {-d.omega, pi + d.omega};
  } else {
    d.phases = {d.omega, -d.omega};
  }
  for (int i = 0; i < 2; ++i) d.eigenvalues[i] = std::polar(1.0, d.phases[i]);

  ComplexPair v = null_vector(tm.matrix, d.eigenvalues[0]);
  if (v.isZero(0.0)) {
    v = null_vector(tm.matrix, d.eigenvalues[1]);
    if (v.isZero(0.0)) {
      // M_k is a multiple of the identity: any orthonormal basis will do.
      d.degenerate = true;
      d.eigenvectors[0] = ComplexPair(1.0, 0.0);
      d.eigenvectors[1] = ComplexPair(0.0, 1.0);
      return d;
    }
    // v belongs to the second eigenvalue; its complement to the first.
    d.eigenvectors[1] = v;
    d.eigenvectors[0] = ComplexPair(-std::conj(v(1)), std::conj(v(0)));
    return d;
  }
  // Unitary matrices are normal, so the second eigenvector is the orthogonal
  // complement of the first.
  d.eigenvectors[0] = v;
  d.eigenvectors[1] = ComplexPair(-std::conj(v(1)), std::conj(v(0)));
  d.degenerate = std::abs(d.eigenvalues[0] - d.eigenvalues[1]) < kDegenerateNorm;
  return d;
}

ComplexPair fourier_amplitudes(const CoinOperator& coin, const ComplexPair& init,
                               double k, std::int64_t t) {
  if (t < 0) throw DomainError("time must be nonnegative");
  if (t == 0) return init;
  return eigensystem(transfer_matrix(coin, k), coin).power_apply(init, t);
}

FourierSamples forward_transform(const WaveFunction& psi, std::int64_t grid_size) {
  if (!is_line(psi.topology())) throw DomainError("transform expects a line wavefunction");
  if (grid_size < 1) throw DomainError("grid size must be positive");
  const std::vector<C> w = twiddles(grid_size);
  FourierSamples out;
  out.k.resize(static_cast<std::size_t>(grid_size));
  out.values.assign(static_cast<std::size_t>(grid_size), ComplexPair::Zero());
  for (std::int64_t j = 0; j < grid_size; ++j) {
    out.k[j] = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(grid_size);
    ComplexPair acc = ComplexPair::Zero();
    for (Eigen::Index i = 0; i < psi.rows(); ++i) {
      const std::int64_t n = psi.site(i);
      // e^{i k_j n} = (-1)^n e^{2 pi i j n / N}
      const C phase = parity_sign(n) * std::conj(w[wrap(j * n, grid_size)]);
      acc += phase * psi.amplitudes().row(i).transpose();
    }
    out.values[j] = acc;
  }
  return out;
}

AmplitudeArray<double> inverse_transform(const FourierSamples& samples,
                                         std::int64_t first_site, std::int64_t width,
                                         int threads) {
  const auto grid = static_cast<std::int64_t>(samples.values.size());
  if (grid < 1) throw DomainError("no samples to invert");
  const std::vector<C> w = twiddles(grid);
  AmplitudeArray<double> out = AmplitudeArray<double>::Zero(width, 2);
  const double scale = 1.0 / static_cast<double>(grid);
  detail::parallel_for(0, width, [&](std::int64_t row) {
    const std::int64_t n = first_site + row;
    const std::int64_t jn_step = wrap(n, grid);
    ComplexPair acc = ComplexPair::Zero();
    std::int64_t jn = 0;
    for (std::int64_t j = 0; j < grid; ++j) {
      // e^{-i k_j n} = (-1)^n e^{-2 pi i j n / N}
      acc += w[jn] * samples.values[j];
      jn += jn_step;
      if (jn >= grid) jn -= grid;
    }
    out.row(row) = (parity_sign(n) * scale * acc).transpose();
  }, threads);
  return out;
}

std::int64_t default_grid_size(std::int64_t width, std::int64_t t) {
  const std::int64_t needed = width + 2 * t;
  return needed % 2 == 0 ? needed : needed + 1;
}

WaveFunction evolve_spectral(const WaveFunction& init, const CoinOperator& coin,
                             std::int64_t t, const SpectralOptions& options) {
  if (!is_line(init.topology())) throw DomainError("spectral evolution expects a line wavefunction");
  if (t < 0 || t > kMaxSteps) throw DomainError("steps must lie in [0, 2^20]");
  const std::int64_t width = init.rows() + 2 * t;
  const std::int64_t grid = options.grid_size.value_or(default_grid_size(init.rows(), t));
  if (grid < width) {
    throw DomainError("grid of " + std::to_string(grid) + " samples cannot resolve " +
                      std::to_string(width) + " sites without aliasing");
  }
  FourierSamples samples = forward_transform(init, grid);
  detail::parallel_for(0, grid, [&](std::int64_t j) {
    const double k = samples.k[j];
    samples.values[j] = eigensystem(transfer_matrix(coin, k), coin)
                            .power_apply(samples.values[j], t);
  }, options.threads);
  const std::int64_t first = init.site(0) - t;
  return {Line{first}, inverse_transform(samples, first, width, options.threads), init.time() + t};
}

}  // namespace qwalk
