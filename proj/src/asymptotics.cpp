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

#include "qwalk/asymptotics.hpp"

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qwalk {

namespace {

using std::numbers::pi;

void require_regular(const CoinLabel& family) {
  if (const auto* t = std::get_if<ThetaLabel>(&family)) {
    if (!(t->theta > 0.0 && t->theta < pi)) {
      throw DomainError("asymptotic forms need theta strictly inside (0, pi)");
    }
  }
}

// The left-start envelope and the oscillating forms are specific to the
// Hadamard walk (equivalently theta = pi/2).
void require_hadamard_family(const CoinLabel& family) {
  if (std::abs(family_theta(family) - pi / 2) > 1e-15) {
    throw DomainError("left-start asymptotics exist only for the Hadamard walk");
  }
}

CoinOperator coin_for(const CoinLabel& family) {
  if (is_hadamard(family)) return hadamard_coin();
  return theta_coin(std::get<ThetaLabel>(family).theta);
}

std::string describe_alpha(double alpha, double limit) {
  std::ostringstream os;
  os << "alpha = " << alpha << " lies outside the modeled interval |alpha| <= " << limit;
  return os.str();
}

struct InteriorPoint {
  double alpha;
  StationaryPointData sp;
  bool allowed;  // n + t even
};

InteriorPoint interior_point(std::int64_t n, std::int64_t t, const AsymptoticModel& model) {
  if (t < 1) throw DomainError("asymptotic forms need t >= 1");
  require_hadamard_family(model.family);
  const double alpha = static_cast<double>(n) / static_cast<double>(t);
  if (!model.in_interior(alpha)) {
    throw DomainError(describe_alpha(alpha, model.support_edge() - model.epsilon));
  }
  return {alpha, stationary_point(alpha, HadamardLabel{}), ((n + t) & 1) == 0};
}

}  // namespace

bool AsymptoticModel::in_interior(double alpha) const {
  return std::abs(alpha) <= support_edge() - epsilon;
}

StationaryPointData stationary_point(double alpha, const CoinLabel& family) {
  require_regular(family);
  const double edge = support_edge(family);
  if (!(std::abs(alpha) < edge)) {
    throw DomainError(describe_alpha(alpha, edge) + " (open support)");
  }
  const CoinOperator coin = coin_for(family);
  const double a2 = alpha * alpha;
  StationaryPointData d;
  d.alpha = alpha;
  if (is_hadamard(family)) {
    d.k_alpha = std::acos(-alpha / std::sqrt(1.0 - a2));
    d.phase = -(dispersion(coin, d.k_alpha) + alpha * d.k_alpha);
    d.curvature = (1.0 - a2) * std::sqrt(1.0 - 2.0 * a2);
    d.residual = std::abs(group_velocity(coin, d.k_alpha) + alpha);
  } else {
    const double half = std::get<ThetaLabel>(family).theta / 2;
    d.k_alpha = std::asin(alpha * std::tan(half) / std::sqrt(1.0 - a2));
    d.phase = dispersion(coin, d.k_alpha) - alpha * d.k_alpha;
    d.curvature = (1.0 - a2) * std::sqrt(edge * edge - a2) / std::sin(half);
    d.residual = std::abs(group_velocity(coin, d.k_alpha) - alpha);
  }
  return d;
}

double p_asymptotic(std::int64_t n, std::int64_t t, const AsymptoticModel& model) {
  const InteriorPoint p = interior_point(n, t, model);
  if (!p.allowed) return 0.0;
  const double a = p.alpha;
  const double x = p.sp.phase * static_cast<double>(t) + pi / 4;
  const double c1 = std::cos(x);
  const double c2 = std::cos(x + p.sp.k_alpha);
  return 2.0 / (pi * static_cast<double>(t) * p.sp.curvature) *
         ((1.0 - a) * (1.0 - a) * c1 * c1 + (1.0 - a * a) * c2 * c2);
}

ComplexPair asymptotic_wavefunction(std::int64_t n, std::int64_t t,
                                    const AsymptoticModel& model) {
  const InteriorPoint p = interior_point(n, t, model);
  if (!p.allowed) return ComplexPair::Zero();
  const double a = p.alpha;
  const double x = p.sp.phase * static_cast<double>(t) + pi / 4;
  const double pref = 2.0 / std::sqrt(2.0 * pi * static_cast<double>(t) * p.sp.curvature);
  // -a cos x - sqrt(1 - 2a^2) sin x = sqrt(1 - a^2) cos(x + k_alpha), the
  // form consistent with the oscillating probability and with simulation.
  const double left = (1.0 - a) * std::cos(x);
  const double right = -a * std::cos(x) - std::sqrt(1.0 - 2.0 * a * a) * std::sin(x);
  return {pref * left, pref * right};
}

double density(double alpha, const CoinLabel& family, Envelope envelope) {
  const StationaryPointData sp = stationary_point(alpha, family);
  if (envelope == Envelope::left_start) {
    require_hadamard_family(family);
    return (1.0 - alpha) / (pi * sp.curvature);
  }
  return 1.0 / (pi * sp.curvature);
}

double p_slow(double alpha, std::int64_t t, const AsymptoticModel& model,
              Envelope envelope) {
  if (t < 1) throw DomainError("p_slow needs t >= 1");
  const double limit = model.support_edge() - model.epsilon;
  if (!(std::abs(alpha) < limit)) throw DomainError(describe_alpha(alpha, limit));
  return density(alpha, model.family, envelope) / static_cast<double>(t);
}

double integrate_density(const std::function<double(double)>& g,
                         const CoinLabel& family, Envelope envelope, double lo,
                         double hi, int panels) {
  require_regular(family);
  if (envelope == Envelope::left_start) require_hadamard_family(family);
  const double edge = support_edge(family);
  if (!(lo >= -edge && hi <= edge && lo <= hi)) {
    throw DomainError("integration bounds must lie inside the support");
  }
  if (panels < 2) throw DomainError("need at least two panels");
  if (panels % 2 != 0) ++panels;

  const double sin_half = std::sin(family_theta(family) / 2);
  // p(alpha) d alpha / du with alpha = edge sin u. The edge square root
  // cancels against the Jacobian edge cos u.
  auto measure = [&](double u) {
    const double alpha = edge * std::sin(u);
    if (envelope == Envelope::left_start) return edge / (pi * (1.0 + alpha));
    return sin_half / (pi * (1.0 - alpha * alpha));
  };

  const double u0 = std::asin(std::clamp(lo / edge, -1.0, 1.0));
  const double u1 = std::asin(std::clamp(hi / edge, -1.0, 1.0));
  const double h = (u1 - u0) / panels;
  auto f = [&](int i) {
    const double u = u0 + h * i;
    return g(edge * std::sin(u)) * measure(u);
  };
  double sum = f(0) + f(panels);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i);
  return sum * h / 3.0;
}

double integrate_density(const std::function<double(double)>& g,
                         const CoinLabel& family, Envelope envelope, int panels) {
  const double edge = support_edge(family);
  return integrate_density(g, family, envelope, -edge, edge, panels);
}

Complex<double> frontier_peak(std::int64_t t, FrontierSide side, Complex<double> g) {
  if (t < 1) throw DomainError("frontier peak needs t >= 1");
  const double td = static_cast<double>(t);
  const double scale = std::tgamma(1.0 / 3.0) * std::cbrt(6.0 / td);
  if (side == FrontierSide::left) {
    return g / (6.0 * pi) * std::sqrt(1.5) * scale;
  }
  return g / (3.0 * pi) * std::numbers::sqrt2 * scale *
         std::cos(pi * td / std::numbers::sqrt2 + pi / 6.0);
}

}  // namespace qwalk
