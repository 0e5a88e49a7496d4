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

// Acceptance driver. With no arguments it checks every criterion; with
// criterion numbers it checks only those. One line per criterion:
//   criterion <n> PASS|FAIL <measured values>
// Exit status is zero only when every requested criterion passes.

#include "qwalk/asymptotics.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/statistics.hpp"
#include "qwalk/symmetry.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qwalk;
using std::numbers::pi;

struct Verdict {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

ProbabilityDistribution exact(const CoinOperator& coin, const Chirality& start, std::int64_t t) {
  return distribution(evolve_line(initial_state(start), coin, t));
}

double max_amplitude_diff(const WaveFunction& a, const WaveFunction& b, std::int64_t t) {
  double worst = 0.0;
  for (std::int64_t n = -t; n <= t; ++n) worst = std::max(worst, (a.at(n) - b.at(n)).cwiseAbs().maxCoeff());
  return worst;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Verdict oracle_equivalence() {
  const Stopwatch clock;
  std::vector<std::int64_t> ladder = {1, 2};
  while (ladder.back() < 512) ladder.push_back(std::min<std::int64_t>(512, ladder.end()[-1] + ladder.end()[-2]));
  double worst = 0.0;
  for (const CoinOperator& coin : {hadamard_coin(), theta_coin(pi / 3), theta_coin(2 * pi / 3)}) {
    const WaveFunction init = initial_state(Chirality::left());
    for (std::int64_t t : ladder) {
      worst = std::max(worst, max_amplitude_diff(evolve_spectral(init, coin, t), evolve_line(init, coin, t), t));
    }
  }
  const double elapsed = clock.seconds();
  return {worst < 1e-10 && elapsed < 30.0,
          "max |spectral - exact| = " + fmt(worst) + " over " + std::to_string(ladder.size()) +
              " times x 3 coins, " + fmt(elapsed) + " s"};
}

Verdict moment_table() {
  const ProbabilityDistribution p = exact(hadamard_coin(), Chirality::left(), 80);
  const double sim[3] = {moment(p, 1).value, moment(p, 1, true).value, moment(p, 2).value};
  const double table[3] = {-0.293, 0.500, 0.293};
  const CoinLabel h = HadamardLabel{};
  const double quad[3] = {analytic_moment(h, MomentKind::mean, Envelope::left_start).value,
                          analytic_moment(h, MomentKind::abs_mean, Envelope::left_start).value,
                          analytic_moment(h, MomentKind::second, Envelope::left_start).value};
  const double closed[3] = {-1 + 1 / std::numbers::sqrt2, 0.5, 1 - 1 / std::numbers::sqrt2};
  bool ok = true;
  for (int i = 0; i < 3; ++i) {
    ok = ok && std::abs(sim[i] - table[i]) <= 0.005 && std::abs(quad[i] - closed[i]) <= 1e-6;
  }
  return {ok, "simulation (" + fmt(sim[0]) + ", " + fmt(sim[1]) + ", " + fmt(sim[2]) + "), quadrature (" +
                  fmt(quad[0]) + ", " + fmt(quad[1]) + ", " + fmt(quad[2]) + ")"};
}

Verdict interval_mass_law() {
  const std::int64_t t = 400;
  const double eps = 0.05;
  const double measured = interval_mass(exact(hadamard_coin(), Chirality::left(), t), eps);
  const double predicted = 1 - 2 * eps / pi;
  const double gap = std::abs(measured - predicted);
  return {gap <= 5.0 / t, "mass " + fmt(measured) + " vs " + fmt(predicted) + ", gap " + fmt(gap) +
                              " (bound " + fmt(5.0 / t) + ")"};
}

Verdict asymptotic_fidelity() {
  const std::int64_t t = 200;
  const double limit = std::numbers::sqrt2 / 2 - 0.1;
  const ProbabilityDistribution p = exact(hadamard_coin(), Chirality::left(), t);
  double l1 = 0.0;
  for (std::int64_t n = -t; n <= t; n += 2) {
    if (std::abs(static_cast<double>(n) / t) > limit) continue;
    l1 += std::abs(p.at(n) - p_asymptotic(n, t));
  }
  return {l1 <= 0.05, "L1 = " + fmt(l1) + " (bound 0.05)"};
}

Verdict frontier_scaling() {
  const std::vector<std::int64_t> times = {200, 400, 800, 1600};
  std::vector<double> logt, left, right;
  for (std::int64_t t : times) {
    const ProbabilityDistribution p = exact(hadamard_coin(), Chirality::left(), t);
    const double front = t / std::numbers::sqrt2;
    const double half = 2 * std::cbrt(static_cast<double>(t));
    double lmax = 0.0, rmax = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      const auto n = static_cast<double>(p.site(i));
      if (std::abs(n + front) <= half) lmax = std::max(lmax, p.masses()(i));
      if (std::abs(n - front) <= half) rmax = std::max(rmax, p.masses()(i));
    }
    logt.push_back(std::log(static_cast<double>(t)));
    left.push_back(std::log(lmax));
    right.push_back(std::log(rmax));
  }
  const double sl = least_squares_slope(logt, left);
  const double sr = least_squares_slope(logt, right);
  const bool ok = std::abs(sl + 2.0 / 3) <= 0.15 && std::abs(sr + 2.0 / 3) <= 0.15;
  return {ok, "exponents left " + fmt(sl) + ", right " + fmt(sr) + " (target -0.6667 +/- 0.15)"};
}

Verdict exterior_decay() {
  const std::int64_t t = 200;
  const ProbabilityDistribution p = exact(hadamard_coin(), Chirality::left(), t);
  double outside = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (std::abs(static_cast<double>(p.site(i))) >= 0.78 * t) outside += p.masses()(i);
  }
  return {outside < 1e-8, "mass at |n| >= " + fmt(0.78 * t) + " is " + fmt(outside) + " (bound 1e-8)"};
}

Verdict mixing_scaling() {
  const Stopwatch clock;
  const double delta = calibrated_delta();
  std::map<std::int64_t, std::int64_t> quantum, classical;
  bool reached = true;
  for (std::int64_t n : {31, 127}) {
    const MixingReport q = mixing_time(WalkSpec{Circle{n}, hadamard_coin(), Chirality::symmetric(), 0}, delta, 20 * n);
    const MixingReport c = classical_mixing_time(n, delta, 4 * n * n);
    reached = reached && q.time && c.time;
    quantum[n] = q.time.value_or(-1);
    classical[n] = c.time.value_or(-1);
  }
  const double qr = static_cast<double>(quantum[127]) / static_cast<double>(quantum[31]);
  const double cr = static_cast<double>(classical[127]) / static_cast<double>(classical[31]);
  const double elapsed = clock.seconds();
  const bool ok = reached && qr < 8.0 && cr >= 8.0 && elapsed < 60.0;
  return {ok, "delta0 " + fmt(delta) + "; quantum " + std::to_string(quantum[31]) + " -> " +
                  std::to_string(quantum[127]) + " (ratio " + fmt(qr) + "); classical " +
                  std::to_string(classical[31]) + " -> " + std::to_string(classical[127]) + " (ratio " +
                  fmt(cr) + "); " + fmt(elapsed) + " s"};
}

Verdict theta_family() {
  const std::int64_t t = 200;
  bool ok = true;
  std::ostringstream detail;
  for (double theta : {pi / 3, pi / 2, 2 * pi / 3}) {
    const CoinOperator coin = theta_coin(theta);
    const ProbabilityDistribution p =
        distribution(evolve_line(initial_state(Chirality::custom(symmetric_initial(coin))), coin, t));
    const double cut = 1.05 * std::cos(theta / 2) * t;
    double tail = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      if (std::abs(static_cast<double>(p.site(i))) > cut) tail += p.masses()(i);
    }
    const double mean_abs = moment(p, 1, true).value;
    ok = ok && tail < 1e-6 && std::abs(mean_abs - (1 - theta / pi)) <= 0.01;
    detail << "theta/pi=" << fmt(theta / pi) << ": tail " << fmt(tail) << ", <|a|> " << fmt(mean_abs) << " vs "
           << fmt(1 - theta / pi) << "; ";
  }
  return {ok, detail.str()};
}

Verdict symmetry_exactness() {
  double worst = 0.0;
  for (const CoinOperator& coin : {hadamard_coin(), theta_coin(pi / 3), theta_coin(pi / 2), theta_coin(2 * pi / 3)}) {
    WaveFunction psi = initial_state(Chirality::symmetric());
    for (std::int64_t t = 1; t <= 200; ++t) {
      psi = step(psi, coin);
      const ProbabilityDistribution p = distribution(psi);
      for (std::int64_t n = 1; n <= t; ++n) worst = std::max(worst, std::abs(p.at(n) - p.at(-n)));
    }
  }
  Matrix2c sigma_y;
  sigma_y << 0.0, Complex<double>(0, -1), Complex<double>(0, 1), 0.0;
  const SymmetrizerReport h = verify_symmetrizer(hadamard_coin(), sigma_y);
  bool family = true;
  for (double theta : {pi / 6, pi / 3, pi / 2, 2 * pi / 3, 5 * pi / 6}) {
    family = family && verify_symmetrizer(theta_coin(theta), sigma_y).verdict;
  }
  const bool ok = worst < 1e-12 && h.verdict && h.sign == -1 && family;
  return {ok, "max |P(n)-P(-n)| = " + fmt(worst) + "; hadamard sigma_y sign " + std::to_string(h.sign) +
                  (h.verdict ? " verified" : " rejected") + "; theta family " +
                  (family ? "consistent" : "inconsistent")};
}

Verdict conservation_parity() {
  double worst_norm = 0.0;
  bool parity = true;
  for (const CoinOperator& coin : {hadamard_coin(), theta_coin(pi / 3)}) {
    for (const Chirality& start : {Chirality::left(), Chirality::symmetric()}) {
      WaveFunction psi = initial_state(start);
      for (std::int64_t t = 1; t <= 1000; ++t) {
        psi = step(psi, coin);
        worst_norm = std::max(worst_norm, std::abs(psi.norm_squared() - 1.0));
        if (t % 97 == 0 || t == 1000) {
          const ProbabilityDistribution p = distribution(psi);
          for (std::int64_t n = -t + 1; n <= t; n += 2) parity = parity && p.at(n) == 0.0;
        }
      }
    }
  }
  return {worst_norm < 1e-12 && parity,
          "max |norm - 1| = " + fmt(worst_norm) + "; parity sites " + (parity ? "exactly zero" : "nonzero")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Verdict()>> criteria = {
      {1, oracle_equivalence}, {2, moment_table},      {3, interval_mass_law},  {4, asymptotic_fidelity},
      {5, frontier_scaling},   {6, exterior_decay},    {7, mixing_scaling},     {8, theta_family},
      {9, symmetry_exactness}, {10, conservation_parity}};
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::stoi(argv[i]));
  if (wanted.empty()) {
    for (const auto& [id, fn] : criteria) wanted.push_back(id);
  }
  bool all = true;
  for (int id : wanted) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << id << '\n';
      return 2;
    }
    Verdict v;
    try {
      v = it->second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << "criterion " << id << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << v.detail << '\n';
  }
  return all ? 0 : 1;
}
