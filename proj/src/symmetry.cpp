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

#include "qwalk/symmetry.hpp"

#include "qwalk/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

using C = Complex<double>;

double residual(const Matrix2c& conjugated, const Matrix2c& mirrored, int sign) {
  return (conjugated - static_cast<double>(sign) * mirrored).cwiseAbs().maxCoeff();
}

}  // namespace

SymmetrizerReport verify_symmetrizer(const CoinOperator& coin, const Matrix2c& candidate,
                                     int k_samples) {
  if (unitarity_defect(candidate) >= 1e-13) throw DomainError("candidate is not unitary");
  if (k_samples < 16) throw DomainError("need at least 16 wavenumber samples");
  SymmetrizerReport r{candidate, +1, 0.0, false};
  const double pi = std::numbers::pi;
  for (int j = 0; j < k_samples; ++j) {
    const double k = -pi + 2.0 * pi * j / (k_samples - 1);
    const Matrix2c conjugated =
        candidate.adjoint() * transfer_matrix(coin, k).matrix * candidate;
    const Matrix2c mirrored = transfer_matrix(coin, -k).matrix;
    if (j == 0) {
      r.sign = residual(conjugated, mirrored, +1) <= residual(conjugated, mirrored, -1) ? +1 : -1;
    }
    r.max_residual = std::max(r.max_residual, residual(conjugated, mirrored, r.sign));
  }
  r.verdict = r.max_residual < kSymmetrizerTolerance;
  return r;
}

std::vector<NamedCandidate> pauli_candidates() {
  const C i(0.0, 1.0);
  Matrix2c x, y, z;
  x << 0.0, 1.0, 1.0, 0.0;
  y << 0.0, -i, i, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  return {{"sigma_x", x}, {"sigma_y", y}, {"sigma_z", z}};
}

std::optional<SymmetrizerReport> find_symmetrizer(const CoinOperator& coin, int k_samples) {
  for (const NamedCandidate& c : pauli_candidates()) {
    SymmetrizerReport r = verify_symmetrizer(coin, c.matrix, k_samples);
    if (r.verdict) return r;
  }
  return std::nullopt;
}

ComplexPair symmetric_initial(const CoinOperator& coin) {
  const std::optional<SymmetrizerReport> s = find_symmetrizer(coin);
  if (!s) throw DomainError("no symmetrizer verified for coin " + to_string(coin.label));
  Eigen::ComplexEigenSolver<Matrix2c> solver(s->candidate);
  const auto& values = solver.eigenvalues();
  Eigen::Index best = 0;
  if (values(1).real() > values(0).real() + 1e-12 ||
      (std::abs(values(1).real() - values(0).real()) <= 1e-12 &&
       values(1).imag() > values(0).imag())) {
    best = 1;
  }
  ComplexPair v = solver.eigenvectors().col(best);
  v.normalize();
  const Eigen::Index lead = std::abs(v(0)) > 1e-12 ? 0 : 1;
  v *= std::conj(v(lead)) / std::abs(v(lead));
  v(lead) = C(v(lead).real(), 0.0);
  return v;
}

}  // namespace qwalk
