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

#include "support.hpp"

#include "qwalk/spectral.hpp"
#include "qwalk/statistics.hpp"
#include "qwalk/symmetry.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qwalk {
namespace {

using testing::C;
using testing::kPi;

Matrix2c pauli(const std::string& name) {
  for (const NamedCandidate& c : pauli_candidates()) {
    if (c.name == name) return c.matrix;
  }
  throw std::logic_error("no candidate " + name);
}

double max_asymmetry(const ProbabilityDistribution& p, std::int64_t t) {
  double worst = 0.0;
  for (std::int64_t n = 0; n <= t; ++n) worst = std::max(worst, std::abs(p.at(n) - p.at(-n)));
  return worst;
}

TEST(VerifySymmetrizer, HadamardSigmaYHasMinusSign) {
  const SymmetrizerReport r = verify_symmetrizer(hadamard_coin(), pauli("sigma_y"));
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.sign, -1);
  EXPECT_LT(r.max_residual, 1e-12);
}

TEST(VerifySymmetrizer, ThetaFamilyAcceptsSigmaY) {
  for (double theta : {kPi / 3, kPi / 2, 2 * kPi / 3}) {
    const SymmetrizerReport r = verify_symmetrizer(theta_coin(theta), pauli("sigma_y"), 128);
    EXPECT_TRUE(r.verdict) << theta;
    EXPECT_EQ(r.sign, +1) << theta;
  }
}

TEST(VerifySymmetrizer, IdentityIsNotASymmetrizer) {
  const SymmetrizerReport r = verify_symmetrizer(hadamard_coin(), Matrix2c::Identity());
  EXPECT_FALSE(r.verdict);
  const Matrix2c mk = transfer_matrix(hadamard_coin(), kPi / 4).matrix;
  const Matrix2c mmk = transfer_matrix(hadamard_coin(), -kPi / 4).matrix;
  EXPECT_GT(std::min((mk - mmk).cwiseAbs().maxCoeff(), (mk + mmk).cwiseAbs().maxCoeff()), 0.1);
}

TEST(VerifySymmetrizer, Preconditions) {
  Matrix2c not_unitary = Matrix2c::Identity();
  not_unitary(0, 1) = 0.5;
  EXPECT_THROW(verify_symmetrizer(hadamard_coin(), not_unitary), DomainError);
  EXPECT_THROW(verify_symmetrizer(hadamard_coin(), pauli("sigma_y"), 15), DomainError);
}

// A sign that holds on part of the circle only must be reported as a failure.
TEST(VerifySymmetrizer, DemandsOneSignForAllK) {
  const CoinOperator identity = theta_coin(0.0);
  const SymmetrizerReport x = verify_symmetrizer(identity, pauli("sigma_x"));
  EXPECT_TRUE(x.verdict);
  EXPECT_EQ(x.sign, +1);
  const SymmetrizerReport z = verify_symmetrizer(hadamard_coin(), pauli("sigma_z"));
  EXPECT_FALSE(z.verdict);
}

TEST(FindSymmetrizer, DefaultOrder) {
  const auto h = find_symmetrizer(hadamard_coin());
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->candidate, pauli("sigma_y"));
  const auto flip = find_symmetrizer(theta_coin(kPi));
  ASSERT_TRUE(flip.has_value());
  EXPECT_EQ(flip->candidate, pauli("sigma_x"));
  EXPECT_EQ(flip->sign, -1);
}

TEST(SymmetricInitial, HadamardIsLeftPlusIRight) {
  const ComplexPair v = symmetric_initial(hadamard_coin());
  const double s = 1.0 / std::numbers::sqrt2;
  EXPECT_LT(std::abs(v(0) - C(s, 0.0)), 1e-15);
  EXPECT_LT(std::abs(v(1) - C(0.0, s)), 1e-15);
}

TEST(SymmetricInitial, YieldsSymmetricDistributions) {
  for (const CoinOperator& coin : {hadamard_coin(), theta_coin(2 * kPi / 3)}) {
    const ComplexPair v = symmetric_initial(coin);
    const ProbabilityDistribution p = distribution(evolve_line(initial_state(Chirality::custom(v)), coin, 100));
    EXPECT_LT(max_asymmetry(p, 100), 1e-12) << to_string(coin.label);
  }
}

TEST(Property, SymmetryHoldsAtEveryTime) {
  for (const CoinOperator& coin : {hadamard_coin(), theta_coin(kPi / 3), theta_coin(0.4), theta_coin(2.9)}) {
    WaveFunction psi = initial_state(Chirality::custom(symmetric_initial(coin)));
    for (std::int64_t t = 1; t <= 200; ++t) {
      psi = step(psi, coin);
      ASSERT_LT(max_asymmetry(distribution(psi), t), 1e-12) << to_string(coin.label) << " t=" << t;
    }
  }
}

TEST(Property, MirroredStartReversesBias) {
  std::mt19937_64 rng(8);
  const Matrix2c sy = pauli("sigma_y");
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_real_distribution<double> u(0.05, kPi - 0.05);
    const CoinOperator coin = trial == 0 ? hadamard_coin() : theta_coin(u(rng));
    const ComplexPair v = trial < 2 ? ComplexPair(1.0, 0.0) : testing::random_pair(rng);
    const std::int64_t t = 120;
    const ProbabilityDistribution a = distribution(evolve_line(initial_state(Chirality::custom(v)), coin, t));
    const ProbabilityDistribution b =
        distribution(evolve_line(initial_state(Chirality::custom(mirrored_initial(sy, v))), coin, t));
    for (std::int64_t n = -t; n <= t; ++n) ASSERT_NEAR(a.at(n), b.at(-n), 1e-12) << n;
    EXPECT_NEAR(moment(a, 1).value + moment(b, 1).value, 0.0, 1e-10);
  }
}

TEST(SymmetricInitial, FailsWithoutSymmetrizer) {
  // A coin whose transfer matrix obeys no Pauli conjugation symmetry.
  Matrix2c u;
  const C phase = std::polar(1.0, 0.7);
  u << 1.0 / std::numbers::sqrt2, phase / std::numbers::sqrt2, -std::conj(phase) / std::numbers::sqrt2,
      1.0 / std::numbers::sqrt2;
  const CoinOperator odd{u, ThetaLabel{kPi / 2}};
  EXPECT_FALSE(find_symmetrizer(odd).has_value());
  EXPECT_THROW(symmetric_initial(odd), DomainError);
}

}  // namespace
}  // namespace qwalk
