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

// Direct evolution by the position-space recurrence, and the probability
// distributions it induces.

#pragma once

#include "qwalk/walk.hpp"

#include <cstdint>
#include <utility>

namespace qwalk {

namespace detail {

inline void check_steps(std::int64_t steps) {
  if (steps < 0 || steps > kMaxSteps) {
    throw DomainError("steps must lie in [0, 2^20], got " + std::to_string(steps));
  }
}

// Forward step on the line. Support grows by one site on each side; rows that
// were exactly zero before the coin stay exactly zero.
template <typename Scalar>
BasicWaveFunction<Scalar> line_step(const BasicWaveFunction<Scalar>& psi,
                                    const Mat2<Scalar>& coin) {
  const Eigen::Index n = psi.rows();
  const AmplitudeArray<Scalar> c = psi.amplitudes() * coin.transpose();
  AmplitudeArray<Scalar> next = AmplitudeArray<Scalar>::Zero(n + 2, 2);
  next.col(kLeft).head(n) = c.col(kLeft);
  next.col(kRight).tail(n) = c.col(kRight);
  const std::int64_t offset = std::get<Line>(psi.topology()).offset;
  return {Line{offset - 1}, std::move(next), psi.time() + 1};
}

template <typename Scalar>
BasicWaveFunction<Scalar> line_step_adjoint(const BasicWaveFunction<Scalar>& psi,
                                            const Mat2<Scalar>& coin) {
  const Eigen::Index n = psi.rows();
  AmplitudeArray<Scalar> c = AmplitudeArray<Scalar>::Zero(n + 2, 2);
  c.col(kLeft).tail(n) = psi.amplitudes().col(kLeft);
  c.col(kRight).head(n) = psi.amplitudes().col(kRight);
  AmplitudeArray<Scalar> prev = c * coin.conjugate();
  const std::int64_t offset = std::get<Line>(psi.topology()).offset;
  return {Line{offset - 1}, std::move(prev), psi.time() > 0 ? psi.time() - 1 : 0};
}

template <typename Scalar>
BasicWaveFunction<Scalar> circle_step(const BasicWaveFunction<Scalar>& psi,
                                      const Mat2<Scalar>& coin) {
  const Eigen::Index n = psi.rows();
  const AmplitudeArray<Scalar> c = psi.amplitudes() * coin.transpose();
  AmplitudeArray<Scalar> next(n, 2);
  next.col(kLeft).head(n - 1) = c.col(kLeft).tail(n - 1);
  next(n - 1, kLeft) = c(0, kLeft);
  next.col(kRight).tail(n - 1) = c.col(kRight).head(n - 1);
  next(0, kRight) = c(n - 1, kRight);
  return {psi.topology(), std::move(next), psi.time() + 1};
}

template <typename Scalar>
BasicWaveFunction<Scalar> circle_step_adjoint(const BasicWaveFunction<Scalar>& psi,
                                              const Mat2<Scalar>& coin) {
  const Eigen::Index n = psi.rows();
  const AmplitudeArray<Scalar>& a = psi.amplitudes();
  AmplitudeArray<Scalar> c(n, 2);
  c.col(kLeft).tail(n - 1) = a.col(kLeft).head(n - 1);
  c(0, kLeft) = a(n - 1, kLeft);
  c.col(kRight).head(n - 1) = a.col(kRight).tail(n - 1);
  c(n - 1, kRight) = a(0, kRight);
  AmplitudeArray<Scalar> prev = c * coin.conjugate();
  return {psi.topology(), std::move(prev), psi.time() > 0 ? psi.time() - 1 : 0};
}

inline void check_circle(const Topology& t) {
  if (!is_circle(t)) throw DomainError("expected a circle wavefunction");
  if (std::get<Circle>(t).size < 3) throw DomainError("circle size must be at least 3");
}

}  // namespace detail

/// Single forward step on either topology.
template <typename Scalar>
BasicWaveFunction<Scalar> step(const BasicWaveFunction<Scalar>& psi,
                               const BasicCoin<Scalar>& coin) {
  if (is_line(psi.topology())) return detail::line_step(psi, coin.matrix);
  detail::check_circle(psi.topology());
  return detail::circle_step(psi, coin.matrix);
}

/// Inverse of `step`. On the line the stored support widens by one site per
/// side, since the adjoint of a general state is not confined to a shrinking
/// window.
template <typename Scalar>
BasicWaveFunction<Scalar> step_adjoint(const BasicWaveFunction<Scalar>& psi,
                                       const BasicCoin<Scalar>& coin) {
  if (is_line(psi.topology())) return detail::line_step_adjoint(psi, coin.matrix);
  detail::check_circle(psi.topology());
  return detail::circle_step_adjoint(psi, coin.matrix);
}

template <typename Scalar>
BasicWaveFunction<Scalar> evolve_line(BasicWaveFunction<Scalar> psi,
                                      const BasicCoin<Scalar>& coin,
                                      std::int64_t steps) {
  if (!is_line(psi.topology())) throw DomainError("evolve_line expects a line wavefunction");
  detail::check_steps(steps);
  for (std::int64_t s = 0; s < steps; ++s) psi = detail::line_step(psi, coin.matrix);
  return psi;
}

template <typename Scalar>
BasicWaveFunction<Scalar> evolve_circle(BasicWaveFunction<Scalar> psi,
                                        const BasicCoin<Scalar>& coin,
                                        std::int64_t steps) {
  detail::check_circle(psi.topology());
  detail::check_steps(steps);
  for (std::int64_t s = 0; s < steps; ++s) psi = detail::circle_step(psi, coin.matrix);
  return psi;
}

template <typename Scalar>
BasicWaveFunction<Scalar> evolve(BasicWaveFunction<Scalar> psi,
                                 const BasicCoin<Scalar>& coin, std::int64_t steps) {
  if (is_line(psi.topology())) return evolve_line(std::move(psi), coin, steps);
  return evolve_circle(std::move(psi), coin, steps);
}

/// Wraps a line wavefunction around a circle of `size` sites, summing the
/// amplitudes that land on the same site.
template <typename Scalar>
BasicWaveFunction<Scalar> fold_onto_circle(const BasicWaveFunction<Scalar>& psi,
                                           std::int64_t size) {
  if (!is_line(psi.topology())) throw DomainError("only line wavefunctions can be folded");
  if (size < 3) throw DomainError("circle size must be at least 3");
  AmplitudeArray<Scalar> a = AmplitudeArray<Scalar>::Zero(size, 2);
  for (Eigen::Index i = 0; i < psi.rows(); ++i) {
    a.row(wrap(psi.site(i), size)) += psi.amplitudes().row(i);
  }
  return {Circle{size}, std::move(a), psi.time()};
}

// ---------------------------------------------------------------------------
// Probability distributions

template <typename Scalar>
class BasicDistribution {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicDistribution(Topology topology, Vector masses, std::int64_t time)
      : topology_(topology), masses_(std::move(masses)), time_(time) {
    if ((masses_.array() < Scalar(0)).any() || !masses_.allFinite()) {
      throw DomainError("probability masses must be finite and nonnegative");
    }
    if (const auto* c = std::get_if<Circle>(&topology_)) {
      if (masses_.size() != c->size) throw DomainError("circle distribution size mismatch");
    }
  }

  const Topology& topology() const { return topology_; }
  const Vector& masses() const { return masses_; }
  std::int64_t time() const { return time_; }
  Eigen::Index size() const { return masses_.size(); }

  std::int64_t site(Eigen::Index i) const {
    if (const auto* l = std::get_if<Line>(&topology_)) return l->offset + i;
    return i;
  }

  Scalar at(std::int64_t n) const {
    if (const auto* c = std::get_if<Circle>(&topology_)) return masses_(wrap(n, c->size));
    const std::int64_t i = n - std::get<Line>(topology_).offset;
    if (i < 0 || i >= masses_.size()) return Scalar(0);
    return masses_(i);
  }

  Scalar total() const { return masses_.sum(); }

 private:
  Topology topology_;
  Vector masses_;
  std::int64_t time_;
};

using ProbabilityDistribution = BasicDistribution<double>;

/// P(n) = |psi_L(n)|^2 + |psi_R(n)|^2.
template <typename Scalar>
BasicDistribution<Scalar> distribution(const BasicWaveFunction<Scalar>& psi) {
  typename BasicDistribution<Scalar>::Vector m =
      psi.amplitudes().cwiseAbs2().rowwise().sum();
  return {psi.topology(), std::move(m), psi.time()};
}

}  // namespace qwalk
