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

// Moments, interval masses, total variation distances and mixing times for
// quantum and classical walks.

#pragma once

#include "qwalk/asymptotics.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/walk.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qwalk {

/// Full description of one walk.
struct WalkSpec {
  Topology topology = Line{};
  CoinOperator coin = hadamard_coin();
  Chirality init = Chirality::left();
  std::int64_t steps = 0;
};

enum class MomentSource { exact, slow_model, density_quadrature };

struct MomentReport {
  int order = 0;
  /// Moment of |alpha| rather than alpha.
  bool absolute = false;
  double value = 0.0;
  MomentSource source = MomentSource::exact;
};

/// sum_n (n/t)^m P(n), or sum_n |n/t|^m P(n) when `absolute`.
MomentReport moment(const ProbabilityDistribution& dist, int order, bool absolute = false);

/// Same sum with P replaced by the slow envelope, over the interior sites of
/// the model (every site, both parities).
MomentReport slow_model_moment(std::int64_t t, int order, bool absolute,
                               const AsymptoticModel& model, Envelope envelope);

enum class MomentKind { mean, abs_mean, second };

/// Moment of the limiting density by quadrature.
MomentReport analytic_moment(const CoinLabel& family, MomentKind kind, Envelope envelope);

/// Mass of a line distribution on |n/t| <= edge - eps.
double interval_mass(const ProbabilityDistribution& dist, double eps,
                     double edge = std::numbers::sqrt2 / 2);

enum class Reference {
  /// Every site of the window.
  uniform_all,
  /// Only sites whose parity the walk can occupy at this time.
  uniform_parity,
};

/// Total variation distance to a uniform reference. On the line the window is
/// the integer points of [-ceil(edge t), ceil(edge t)]; mass outside it counts
/// in full. On the circle the window is every site.
double tv_distance(const ProbabilityDistribution& dist, Reference reference,
                   double edge = std::numbers::sqrt2 / 2);

/// Total variation distance between two distributions of the same topology.
double tv_distance(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

struct MixingReport {
  std::int64_t topology_size = 0;
  double delta = 0.0;
  /// First t with TV <= delta, if reached by the cap.
  std::optional<std::int64_t> time;
  std::vector<std::pair<std::int64_t, double>> tv_trace;
};

/// Default reference for a circle: uniform over all sites when the size is
/// odd, over the occupied parity class when it is even.
Reference default_reference(std::int64_t circle_size);

/// Scans t = 1..t_cap on a circle and reports the first crossing of delta.
MixingReport mixing_time(const WalkSpec& spec, double delta, std::int64_t t_cap,
                         std::optional<Reference> reference = std::nullopt);

/// Same scan for the classical simple random walk started at site 0.
MixingReport classical_mixing_time(std::int64_t circle_size, double delta,
                                   std::int64_t t_cap,
                                   std::optional<Reference> reference = std::nullopt);

/// Time average (1/T) sum_{t=1}^{T} P(., t) on a circle.
ProbabilityDistribution cesaro_average(const WalkSpec& spec, std::int64_t horizon);

/// Exact distribution of the simple random walk after t steps from site 0.
ProbabilityDistribution classical_walk(const Topology& topology, std::int64_t t);

/// Empirical distribution of `samples` independent simple random walks.
ProbabilityDistribution sample_classical_walk(const Topology& topology, std::int64_t t,
                                              std::int64_t samples, std::uint64_t seed);

/// Reference mixing threshold: TV of the Hadamard walk on the 63-site circle
/// at t = 126 from the symmetric start, plus 0.05.
double calibrated_delta();

}  // namespace qwalk
