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

#include "qwalk/statistics.hpp"

#include <cmath>
#include <random>

namespace qwalk {

namespace {

double power(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

void require_line_time(const ProbabilityDistribution& dist) {
  if (!is_line(dist.topology())) throw DomainError("expected a line distribution");
  if (dist.time() < 1) throw DomainError("scaled quantities need t >= 1");
}

using Vector = ProbabilityDistribution::Vector;

}  // namespace

MomentReport moment(const ProbabilityDistribution& dist, int order, bool absolute) {
  require_line_time(dist);
  if (order < 0) throw DomainError("moment order must be nonnegative");
  const double t = static_cast<double>(dist.time());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    const double alpha = static_cast<double>(dist.site(i)) / t;
    sum += power(absolute ? std::abs(alpha) : alpha, order) * dist.masses()(i);
  }
  return {order, absolute, sum, MomentSource::exact};
}

MomentReport slow_model_moment(std::int64_t t, int order, bool absolute,
                               const AsymptoticModel& model, Envelope envelope) {
  if (t < 1) throw DomainError("scaled quantities need t >= 1");
  const double limit = model.support_edge() - model.epsilon;
  const auto reach = static_cast<std::int64_t>(std::floor(limit * static_cast<double>(t)));
  double sum = 0.0;
  for (std::int64_t n = -reach; n <= reach; ++n) {
    const double alpha = static_cast<double>(n) / static_cast<double>(t);
    if (!(std::abs(alpha) < limit)) continue;
    sum += power(absolute ? std::abs(alpha) : alpha, order) *
           p_slow(alpha, t, model, envelope);
  }
  return {order, absolute, sum, MomentSource::slow_model};
}

MomentReport analytic_moment(const CoinLabel& family, MomentKind kind, Envelope envelope) {
  if (const auto* t = std::get_if<ThetaLabel>(&family)) {
    if (!(t->theta > 0.0 && t->theta < std::numbers::pi)) {
      throw DomainError("singular walks (theta = 0 or pi) have no limiting density");
    }
  }
  MomentReport r;
  r.source = MomentSource::density_quadrature;
  switch (kind) {
    case MomentKind::mean:
      r.order = 1;
      r.value = integrate_density([](double a) { return a; }, family, envelope);
      break;
    case MomentKind::abs_mean:
      r.order = 1;
      r.absolute = true;
      r.value = integrate_density([](double a) { return std::abs(a); }, family, envelope);
      break;
    case MomentKind::second:
      r.order = 2;
      r.value = integrate_density([](double a) { return a * a; }, family, envelope);
      break;
  }
  return r;
}

double interval_mass(const ProbabilityDistribution& dist, double eps, double edge) {
  require_line_time(dist);
  const double limit = edge - eps;
  const double t = static_cast<double>(dist.time());
  double mass = 0.0;
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    if (std::abs(static_cast<double>(dist.site(i)) / t) <= limit) mass += dist.masses()(i);
  }
  return mass;
}

double tv_distance(const ProbabilityDistribution& dist, Reference reference, double edge) {
  const std::int64_t t = dist.time();
  if (is_circle(dist.topology())) {
    const std::int64_t n = circle_size(dist.topology());
    const bool restrict = reference == Reference::uniform_parity && n % 2 == 0;
    const double u = 1.0 / static_cast<double>(restrict ? n / 2 : n);
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
      const bool in = !restrict || ((i + t) & 1) == 0;
      sum += std::abs(dist.masses()(i) - (in ? u : 0.0));
    }
    return 0.5 * sum;
  }
  const auto reach =
      static_cast<std::int64_t>(std::ceil(edge * static_cast<double>(t)));
  auto in_window = [&](std::int64_t n) {
    if (n < -reach || n > reach) return false;
    return reference == Reference::uniform_all || ((n + t) & 1) == 0;
  };
  std::int64_t count = 0;
  for (std::int64_t n = -reach; n <= reach; ++n) count += in_window(n) ? 1 : 0;
  const double u = 1.0 / static_cast<double>(count);
  double sum = 0.0;
  // Window sites, then stored mass outside the window.
  for (std::int64_t n = -reach; n <= reach; ++n) {
    if (in_window(n)) sum += std::abs(dist.at(n) - u);
  }
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    if (!in_window(dist.site(i))) sum += dist.masses()(i);
  }
  return 0.5 * sum;
}

double tv_distance(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  if (is_circle(p.topology()) != is_circle(q.topology())) {
    throw DomainError("distributions live on different topologies");
  }
  if (is_circle(p.topology())) {
    if (p.size() != q.size()) throw DomainError("circle sizes differ");
    return 0.5 * (p.masses() - q.masses()).cwiseAbs().sum();
  }
  const std::int64_t lo = std::min(p.site(0), q.site(0));
  const std::int64_t hi = std::max(p.site(p.size() - 1), q.site(q.size() - 1));
  double sum = 0.0;
  for (std::int64_t n = lo; n <= hi; ++n) sum += std::abs(p.at(n) - q.at(n));
  return 0.5 * sum;
}

Reference default_reference(std::int64_t circle_size) {
  return circle_size % 2 == 0 ? Reference::uniform_parity : Reference::uniform_all;
}

MixingReport mixing_time(const WalkSpec& spec, double delta, std::int64_t t_cap,
                         std::optional<Reference> reference) {
  const std::int64_t n = circle_size(spec.topology);
  if (t_cap < 1 || t_cap > kMaxSteps) throw DomainError("t_cap must lie in [1, 2^20]");
  const Reference ref = reference.value_or(default_reference(n));
  MixingReport report{n, delta, std::nullopt, {}};
  report.tv_trace.reserve(static_cast<std::size_t>(t_cap));
  WaveFunction psi = initial_state(spec.init, spec.topology);
  for (std::int64_t t = 1; t <= t_cap; ++t) {
    psi = step(psi, spec.coin);
    const double tv = tv_distance(distribution(psi), ref);
    report.tv_trace.emplace_back(t, tv);
    if (!report.time && tv <= delta) report.time = t;
  }
  return report;
}

MixingReport classical_mixing_time(std::int64_t circle_size, double delta,
                                   std::int64_t t_cap, std::optional<Reference> reference) {
  if (circle_size < 3) throw DomainError("circle size must be at least 3");
  if (t_cap < 1) throw DomainError("t_cap must be positive");
  const Reference ref = reference.value_or(default_reference(circle_size));
  MixingReport report{circle_size, delta, std::nullopt, {}};
  report.tv_trace.reserve(static_cast<std::size_t>(t_cap));
  Vector d = Vector::Zero(circle_size);
  d(0) = 1.0;
  Vector next(circle_size);
  const Eigen::Index m = circle_size;
  for (std::int64_t t = 1; t <= t_cap; ++t) {
    for (Eigen::Index i = 0; i < m; ++i) {
      next(i) = 0.5 * (d((i + m - 1) % m) + d((i + 1) % m));
    }
    d.swap(next);
    const double tv = tv_distance(ProbabilityDistribution(Circle{circle_size}, d, t), ref);
    report.tv_trace.emplace_back(t, tv);
    if (!report.time && tv <= delta) report.time = t;
  }
  return report;
}

ProbabilityDistribution cesaro_average(const WalkSpec& spec, std::int64_t horizon) {
  const std::int64_t n = circle_size(spec.topology);
  if (horizon < 1 || horizon > kMaxSteps) throw DomainError("horizon must lie in [1, 2^20]");
  WaveFunction psi = initial_state(spec.init, spec.topology);
  Vector acc = Vector::Zero(n);
  for (std::int64_t t = 1; t <= horizon; ++t) {
    psi = step(psi, spec.coin);
    acc += distribution(psi).masses();
  }
  return {spec.topology, acc / static_cast<double>(horizon), horizon};
}

ProbabilityDistribution classical_walk(const Topology& topology, std::int64_t t) {
  if (t < 0 || t > kMaxSteps) throw DomainError("steps must lie in [0, 2^20]");
  if (is_circle(topology)) {
    const std::int64_t n = circle_size(topology);
    if (n < 3) throw DomainError("circle size must be at least 3");
    Vector d = Vector::Zero(n);
    d(0) = 1.0;
    Vector next(n);
    for (std::int64_t s = 0; s < t; ++s) {
      for (std::int64_t i = 0; i < n; ++i) {
        next(i) = 0.5 * (d(wrap(i - 1, n)) + d(wrap(i + 1, n)));
      }
      d.swap(next);
    }
    return {topology, d, t};
  }
  // Line: rows cover [-t, t].
  Vector d = Vector::Zero(2 * t + 1);
  d(t) = 1.0;
  for (std::int64_t s = 0; s < t; ++s) {
    Vector next = Vector::Zero(2 * t + 1);
    next.head(2 * t) += 0.5 * d.tail(2 * t);
    next.tail(2 * t) += 0.5 * d.head(2 * t);
    d.swap(next);
  }
  return {Line{-t}, d, t};
}

ProbabilityDistribution sample_classical_walk(const Topology& topology, std::int64_t t,
                                              std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("need at least one sample");
  if (t < 0 || t > kMaxSteps) throw DomainError("steps must lie in [0, 2^20]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const bool circle = is_circle(topology);
  const std::int64_t n = circle ? circle_size(topology) : 2 * t + 1;
  Vector counts = Vector::Zero(n);
  for (std::int64_t s = 0; s < samples; ++s) {
    std::int64_t pos = 0;
    for (std::int64_t k = 0; k < t; ++k) pos += coin(rng) ? 1 : -1;
    counts(circle ? wrap(pos, n) : pos + t) += 1.0;
  }
  counts /= static_cast<double>(samples);
  if (circle) return {topology, counts, t};
  return {Line{-t}, counts, t};
}

double calibrated_delta() {
  WalkSpec spec{Circle{63}, hadamard_coin(), Chirality::symmetric(), 126};
  const WaveFunction psi = evolve_circle(initial_state(spec.init, spec.topology), spec.coin, 126);
  return tv_distance(distribution(psi), Reference::uniform_all) + 0.05;
}

}  // namespace qwalk
