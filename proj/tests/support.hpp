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

// Shared helpers for the test suites: an independent site-by-site reference
// walk, seeded random states, and small comparison utilities.

#pragma once

#include "qwalk/evolve.hpp"
#include "qwalk/walk.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>

namespace qwalk::testing {

using C = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

/// Reference walk kept deliberately naive: a sparse map from site to
/// chirality pair, advanced with the two-term recurrence
/// psi(n, t+1) = m_plus psi(n-1, t) + m_minus psi(n+1, t).
class ReferenceWalk {
 public:
  ReferenceWalk(const CoinOperator& coin, const ComplexPair& init)
      : parts_(step_matrices(coin)) {
    state_[0] = init;
  }

  void advance() {
    std::map<std::int64_t, ComplexPair> next;
    for (const auto& [n, v] : state_) {
      // v at site n feeds n+1 through m_plus and n-1 through m_minus.
      add(next, n + 1, parts_.plus * v);
      add(next, n - 1, parts_.minus * v);
    }
    state_ = std::move(next);
  }

  ComplexPair at(std::int64_t n) const {
    const auto it = state_.find(n);
    return it == state_.end() ? ComplexPair::Zero() : it->second;
  }

 private:
  static void add(std::map<std::int64_t, ComplexPair>& m, std::int64_t n, const ComplexPair& v) {
    auto [it, inserted] = m.try_emplace(n, v);
    if (!inserted) it->second += v;
  }

  StepMatrices<double> parts_;
  std::map<std::int64_t, ComplexPair> state_;
};

inline ComplexPair random_pair(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexPair v(C(g(rng), g(rng)), C(g(rng), g(rng)));
  return v / v.norm();
}

/// Random unit-norm line wavefunction of the given width and offset.
inline WaveFunction random_line_state(std::mt19937_64& rng, Eigen::Index width,
                                      std::int64_t offset) {
  std::normal_distribution<double> g;
  AmplitudeArray<double> a(width, 2);
  for (Eigen::Index i = 0; i < width; ++i) {
    a(i, 0) = C(g(rng), g(rng));
    a(i, 1) = C(g(rng), g(rng));
  }
  a /= std::sqrt(a.cwiseAbs2().sum());
  return {Line{offset}, a, 0};
}

inline CoinOperator random_coin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, kPi);
  return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? hadamard_coin() : theta_coin(u(rng));
}

/// Max pointwise amplitude difference between two wavefunctions over the
/// union of their line supports.
inline double max_amplitude_diff(const WaveFunction& a, const WaveFunction& b) {
  const std::int64_t lo = std::min(a.site(0), b.site(0));
  const std::int64_t hi = std::max(a.site(a.rows() - 1), b.site(b.rows() - 1));
  double worst = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    worst = std::max(worst, (a.at(n) - b.at(n)).cwiseAbs().maxCoeff());
  }
  return worst;
}

inline double max_prob_diff(const ProbabilityDistribution& p, const ProbabilityDistribution& q,
                            std::int64_t lo, std::int64_t hi) {
  double worst = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) worst = std::max(worst, std::abs(p.at(n) - q.at(n)));
  return worst;
}

}  // namespace qwalk::testing
