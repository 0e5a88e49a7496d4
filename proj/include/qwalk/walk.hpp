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

// State and operator types of the coined walk on the line and the circle.
//
// Chirality components are always ordered (L, R). A step applies the coin to
// the chirality and then moves the L component one site to the left and the
// R component one site to the right.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

namespace qwalk {

/// Raised when an operation's precondition does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <typename Scalar>
using Complex = std::complex<Scalar>;

/// Two-component chirality vector (psi_L, psi_R).
template <typename Scalar>
using Pair = Eigen::Matrix<Complex<Scalar>, 2, 1>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;

/// One row per site, columns (L, R).
template <typename Scalar>
using AmplitudeArray = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 2>;

using ComplexPair = Pair<double>;
using Matrix2c = Mat2<double>;

inline constexpr Eigen::Index kLeft = 0;
inline constexpr Eigen::Index kRight = 1;

/// Maximum number of steps a single evolution call accepts.
inline constexpr std::int64_t kMaxSteps = std::int64_t{1} << 20;

// ---------------------------------------------------------------------------
// Topology

/// Unbounded line; `offset` is the site index of the first stored row.
struct Line {
  std::int64_t offset = 0;
  friend bool operator==(const Line&, const Line&) = default;
};

/// Cycle of `size` sites, row i holds site i.
struct Circle {
  std::int64_t size = 0;
  friend bool operator==(const Circle&, const Circle&) = default;
};

using Topology = std::variant<Line, Circle>;

inline bool is_line(const Topology& t) { return std::holds_alternative<Line>(t); }
inline bool is_circle(const Topology& t) { return std::holds_alternative<Circle>(t); }

inline std::int64_t circle_size(const Topology& t) {
  if (const auto* c = std::get_if<Circle>(&t)) return c->size;
  throw DomainError("topology is not a circle");
}

/// Euclidean remainder, always in [0, m).
inline std::int64_t wrap(std::int64_t n, std::int64_t m) {
  const std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// Coins

struct HadamardLabel {
  friend bool operator==(const HadamardLabel&, const HadamardLabel&) = default;
};

/// Member of the one-parameter family exp(i (theta/2) sigma_y).
struct ThetaLabel {
  double theta = 0.0;
  friend bool operator==(const ThetaLabel&, const ThetaLabel&) = default;
};

using CoinLabel = std::variant<HadamardLabel, ThetaLabel>;

inline bool is_hadamard(const CoinLabel& l) {
  return std::holds_alternative<HadamardLabel>(l);
}

/// Velocity at the edge of the ballistic region, cos(theta/2). The Hadamard
/// coin belongs to the theta = pi/2 family.
inline double support_edge(const CoinLabel& l) {
  if (const auto* t = std::get_if<ThetaLabel>(&l)) return std::cos(t->theta / 2);
  return std::numbers::sqrt2 / 2;
}

/// Family parameter; pi/2 for the Hadamard coin.
inline double family_theta(const CoinLabel& l) {
  if (const auto* t = std::get_if<ThetaLabel>(&l)) return t->theta;
  return std::numbers::pi / 2;
}

std::string to_string(const CoinLabel& l);

template <typename Scalar>
struct BasicCoin {
  Mat2<Scalar> matrix;
  CoinLabel label;
};

using CoinOperator = BasicCoin<double>;

template <typename Scalar = double>
BasicCoin<Scalar> hadamard_coin() {
  const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
  Mat2<Scalar> m;
  m << h, h, h, -h;
  return {m, HadamardLabel{}};
}

/// Real rotation [[cos(theta/2), sin(theta/2)], [-sin(theta/2), cos(theta/2)]],
/// which equals exp(i (theta/2) sigma_y). At theta = pi the diagonal is set
/// to an exact zero so the flip walk never leaks rounding-level mass.
template <typename Scalar = double>
BasicCoin<Scalar> theta_coin(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  const Scalar c = theta == std::numbers::pi ? Scalar(0) : std::cos(Scalar(theta) / 2);
  const Scalar s = std::sin(Scalar(theta) / 2);
  Mat2<Scalar> m;
  m << c, s, -s, c;
  return {m, ThetaLabel{theta}};
}

/// Largest entry of |U^dagger U - I|.
template <typename Scalar>
Scalar unitarity_defect(const Mat2<Scalar>& u) {
  return (u.adjoint() * u - Mat2<Scalar>::Identity()).cwiseAbs().maxCoeff();
}

/// Row-split of a coin: Psi(n, t+1) = plus * Psi(n-1, t) + minus * Psi(n+1, t).
template <typename Scalar>
struct StepMatrices {
  Mat2<Scalar> plus;
  Mat2<Scalar> minus;
};

template <typename Scalar>
StepMatrices<Scalar> step_matrices(const BasicCoin<Scalar>& coin) {
  StepMatrices<Scalar> s{Mat2<Scalar>::Zero(), Mat2<Scalar>::Zero()};
  s.plus.row(kRight) = coin.matrix.row(kRight);
  s.minus.row(kLeft) = coin.matrix.row(kLeft);
  return s;
}

// ---------------------------------------------------------------------------
// Wavefunction

template <typename Scalar>
class BasicWaveFunction {
 public:
  BasicWaveFunction(Topology topology, AmplitudeArray<Scalar> amplitudes,
                    std::int64_t time)
      : topology_(topology), amplitudes_(std::move(amplitudes)), time_(time) {
    if (time_ < 0) throw DomainError("wavefunction time must be nonnegative");
    if (const auto* c = std::get_if<Circle>(&topology_)) {
      if (c->size < 1 || amplitudes_.rows() != c->size) {
        throw DomainError("circle wavefunction needs exactly one row per site");
      }
    }
    if (!amplitudes_.allFinite()) throw DomainError("amplitudes must be finite");
  }

  const Topology& topology() const { return topology_; }
  const AmplitudeArray<Scalar>& amplitudes() const { return amplitudes_; }
  std::int64_t time() const { return time_; }
  Eigen::Index rows() const { return amplitudes_.rows(); }

  /// Lattice site held by row `i`.
  std::int64_t site(Eigen::Index i) const {
    if (const auto* l = std::get_if<Line>(&topology_)) return l->offset + i;
    return i;
  }

  /// Amplitude pair at site n; zero off the stored support on the line, taken
  /// modulo the size on the circle.
  Pair<Scalar> at(std::int64_t n) const {
    if (const auto* c = std::get_if<Circle>(&topology_)) {
      return amplitudes_.row(wrap(n, c->size)).transpose();
    }
    const std::int64_t i = n - std::get<Line>(topology_).offset;
    if (i < 0 || i >= amplitudes_.rows()) return Pair<Scalar>::Zero();
    return amplitudes_.row(i).transpose();
  }

  Scalar norm_squared() const { return amplitudes_.cwiseAbs2().sum(); }

 private:
  Topology topology_;
  AmplitudeArray<Scalar> amplitudes_;
  std::int64_t time_;
};

using WaveFunction = BasicWaveFunction<double>;

// ---------------------------------------------------------------------------
// Initial states

enum class ChiralityKind { left, right, symmetric, custom };

struct Chirality {
  ChiralityKind kind = ChiralityKind::left;
  ComplexPair state = ComplexPair::Zero();  // used when kind == custom

  static Chirality left() { return {ChiralityKind::left, {}}; }
  static Chirality right() { return {ChiralityKind::right, {}}; }
  /// (|L> + i|R>)/sqrt(2)
  static Chirality symmetric() { return {ChiralityKind::symmetric, {}}; }
  static Chirality custom(const ComplexPair& p) { return {ChiralityKind::custom, p}; }
};

inline constexpr double kNormTolerance = 1e-12;

template <typename Scalar = double>
Pair<Scalar> chirality_vector(const Chirality& c) {
  using C = Complex<Scalar>;
  Pair<Scalar> v;
  switch (c.kind) {
    case ChiralityKind::left:
      v << C(1), C(0);
      break;
    case ChiralityKind::right:
      v << C(0), C(1);
      break;
    case ChiralityKind::symmetric: {
      const Scalar h = Scalar(1) / std::sqrt(Scalar(2));
      v << C(h), C(0, h);
      break;
    }
    case ChiralityKind::custom:
      if (!c.state.allFinite() ||
          std::abs(c.state.squaredNorm() - 1.0) > kNormTolerance) {
        throw DomainError("custom chirality must have unit norm");
      }
      v = c.state.template cast<C>();
      break;
  }
  return v;
}

/// Unit-norm state concentrated on site 0.
template <typename Scalar = double>
BasicWaveFunction<Scalar> initial_state(const Chirality& chirality,
                                        const Topology& topology = Line{}) {
  const Pair<Scalar> v = chirality_vector<Scalar>(chirality);
  if (const auto* c = std::get_if<Circle>(&topology)) {
    if (c->size < 3) throw DomainError("circle size must be at least 3");
    AmplitudeArray<Scalar> a = AmplitudeArray<Scalar>::Zero(c->size, 2);
    a.row(0) = v.transpose();
    return {*c, std::move(a), 0};
  }
  AmplitudeArray<Scalar> a(1, 2);
  a.row(0) = v.transpose();
  return {Line{0}, std::move(a), 0};
}

}  // namespace qwalk
