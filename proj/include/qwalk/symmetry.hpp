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

// Unbiasedness checks. A walk is unbiased when some chirality unitary S
// satisfies S^dagger M_k S = +/- M_{-k} for every k, with one sign for all k.
// Starting in an eigenvector of S then gives P(n, t) = P(-n, t), and starting
// in S v mirrors the distribution obtained from v.

#pragma once

#include "qwalk/walk.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

struct SymmetrizerReport {
  Matrix2c candidate;
  int sign = +1;
  /// sup over sampled k of max |S^dagger M_k S - sign M_{-k}|.
  double max_residual = 0.0;
  bool verdict = false;
};

inline constexpr double kSymmetrizerTolerance = 1e-12;

SymmetrizerReport verify_symmetrizer(const CoinOperator& coin, const Matrix2c& candidate,
                                     int k_samples = 64);

struct NamedCandidate {
  std::string name;
  Matrix2c matrix;
};

/// sigma_x, sigma_y, sigma_z, tried in that order.
std::vector<NamedCandidate> pauli_candidates();

/// First default candidate that verifies, if any.
std::optional<SymmetrizerReport> find_symmetrizer(const CoinOperator& coin,
                                                  int k_samples = 64);

/// Unit eigenvector of the coin's symmetrizer (eigenvalue with the largest
/// real part, phase fixed so the first nonzero component is real positive).
/// For sigma_y this is (1, i)/sqrt(2).
ComplexPair symmetric_initial(const CoinOperator& coin);

/// Start whose distribution is the mirror image of the one from `init`.
inline ComplexPair mirrored_initial(const Matrix2c& symmetrizer, const ComplexPair& init) {
  return symmetrizer * init;
}

}  // namespace qwalk
