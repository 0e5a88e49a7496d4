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

#include "cli.hpp"

#include "qwalk/asymptotics.hpp"
#include "qwalk/evolve.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/statistics.hpp"
#include "qwalk/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace qwalk::cli {

namespace {

using nlohmann::json;
using std::numbers::pi;

const std::map<std::string, Command> kCommands = {
    {"simulate", Command::simulate}, {"spectral", Command::spectral},
    {"asymptotic", Command::asymptotic}, {"moments", Command::moments},
    {"mix", Command::mix}, {"symmetry", Command::symmetry},
    {"compare", Command::compare}};

// Shortest text that is still 17 significant digits, so doubles round-trip.
std::string num(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

json num_or_null(std::optional<double> x) {
  if (!x || std::isnan(*x)) return nullptr;
  return *x;
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (r.ec != std::errc() || r.ptr != end) throw UsageError("cannot parse " + what + ": '" + s + "'");
  return v;
}

Topology parse_topology(const std::string& text) {
  if (text == "line") return Line{};
  const std::string prefix = "circle:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string size = text.substr(prefix.size());
    std::int64_t n = 0;
    const auto r = std::from_chars(size.data(), size.data() + size.size(), n);
    if (r.ec != std::errc() || r.ptr != size.data() + size.size()) {
      throw UsageError("cannot parse circle size in '" + text + "'");
    }
    if (n < 3) throw DomainError("circle size must be at least 3");
    return Circle{n};
  }
  throw UsageError("topology must be 'line' or 'circle:N', got '" + text + "'");
}

Chirality parse_init(const std::string& text) {
  if (text == "left") return Chirality::left();
  if (text == "right") return Chirality::right();
  if (text == "symmetric") return Chirality::symmetric();
  throw UsageError("init must be left, right or symmetric, got '" + text + "'");
}

json topology_json(const Topology& t) {
  if (is_line(t)) return "line";
  return "circle:" + std::to_string(circle_size(t));
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["coin"] = c.coin_text;
  j["steps"] = c.steps;
  j["topology"] = topology_json(c.topology);
  j["init"] = c.init_text;
  j["epsilon"] = c.epsilon;
  j["delta"] = num_or_null(c.delta);
  j["t_cap"] = c.t_cap ? json(*c.t_cap) : json(nullptr);
  j["grid"] = c.grid ? json(*c.grid) : json(nullptr);
  j["classical"] = c.classical;
  return j;
}

json document(const RunConfig& c, json data) {
  json doc;
  doc["schema_version"] = "1";
  doc["config"] = config_json(c);
  doc["data"] = std::move(data);
  return doc;
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void require_line(const RunConfig& c) {
  if (!is_line(c.topology)) throw DomainError(to_string(c.command) + " requires the line topology");
}

// ---------------------------------------------------------------------------
// Wavefunction tables

void emit_wavefunction(const RunConfig& c, const WaveFunction& psi, std::ostream& out) {
  const ProbabilityDistribution p = distribution(psi);
  if (c.format == Format::csv) {
    out << "n,psi_L_re,psi_L_im,psi_R_re,psi_R_im,prob\n";
    for (Eigen::Index i = 0; i < psi.rows(); ++i) {
      const auto& a = psi.amplitudes();
      out << psi.site(i) << ',' << num(a(i, kLeft).real()) << ',' << num(a(i, kLeft).imag())
          << ',' << num(a(i, kRight).real()) << ',' << num(a(i, kRight).imag()) << ','
          << num(p.masses()(i)) << '\n';
    }
    return;
  }
  json data = json::array();
  for (Eigen::Index i = 0; i < psi.rows(); ++i) {
    const auto& a = psi.amplitudes();
    data.push_back({{"n", psi.site(i)},
                    {"psi_L", {a(i, kLeft).real(), a(i, kLeft).imag()}},
                    {"psi_R", {a(i, kRight).real(), a(i, kRight).imag()}},
                    {"prob", p.masses()(i)}});
  }
  write_json(out, document(c, std::move(data)));
}

WaveFunction exact_run(const RunConfig& c) {
  return evolve(initial_state(c.init, c.topology), c.coin, c.steps);
}

WaveFunction spectral_run(const RunConfig& c) {
  require_line(c);
  SpectralOptions opts;
  opts.grid_size = c.grid;
  return evolve_spectral(initial_state(c.init, c.topology), c.coin, c.steps, opts);
}

// ---------------------------------------------------------------------------
// Asymptotic tables

// Which closed forms apply to this coin and start.
struct AsymptoticRoute {
  bool oscillating = false;  // Hadamard family from |L>
  std::optional<Envelope> envelope;
  bool mirrored = false;  // Hadamard from |R>: left-start forms at -alpha
};

bool hadamard_family(const CoinOperator& coin) {
  return std::abs(family_theta(coin.label) - pi / 2) <= 1e-15;
}

AsymptoticRoute asymptotic_route(const RunConfig& c) {
  AsymptoticRoute r;
  if (c.init.kind == ChiralityKind::symmetric) {
    r.envelope = Envelope::symmetric_start;
  } else if (hadamard_family(c.coin) && c.init.kind == ChiralityKind::left) {
    r.oscillating = true;
    r.envelope = Envelope::left_start;
  } else if (hadamard_family(c.coin) && c.init.kind == ChiralityKind::right) {
    r.envelope = Envelope::left_start;
    r.mirrored = true;
  }
  return r;
}

AsymptoticModel model_for(const RunConfig& c) {
  AsymptoticModel m;
  m.family = c.coin.label;
  m.epsilon = c.epsilon;
  return m;
}

void require_regular_coin(const RunConfig& c) {
  const double theta = family_theta(c.coin.label);
  if (!(theta > 0.0 && theta < pi)) {
    throw DomainError("asymptotic analysis needs theta strictly inside (0, pi)");
  }
}

void run_asymptotic(const RunConfig& c, std::ostream& out) {
  require_line(c);
  require_regular_coin(c);
  if (c.steps < 1) throw DomainError("asymptotic analysis needs steps >= 1");
  const AsymptoticRoute route = asymptotic_route(c);
  if (!route.envelope) {
    throw DomainError("no asymptotic model for coin " + c.coin_text + " from init " + c.init_text);
  }
  const AsymptoticModel model = model_for(c);
  struct Row {
    std::int64_t n;
    double alpha;
    bool interior;
    double p_asym;
    double p_slow;
  };
  std::vector<Row> rows;
  for (std::int64_t n = -c.steps; n <= c.steps; ++n) {
    const double alpha = static_cast<double>(n) / static_cast<double>(c.steps);
    Row r{n, alpha, false, std::nan(""), std::nan("")};
    if (model.in_interior(alpha) && std::abs(alpha) < model.support_edge() - model.epsilon) {
      r.interior = true;
      const double a = route.mirrored ? -alpha : alpha;
      if (route.oscillating) r.p_asym = p_asymptotic(n, c.steps, model);
      r.p_slow = p_slow(a, c.steps, model, *route.envelope);
    }
    rows.push_back(r);
  }
  if (c.format == Format::csv) {
    out << "n,alpha,region,p_asymptotic,p_slow\n";
    for (const Row& r : rows) {
      out << r.n << ',' << num(r.alpha) << ',' << (r.interior ? "interior" : "unmodeled") << ','
          << num(r.p_asym) << ',' << num(r.p_slow) << '\n';
    }
    return;
  }
  json data = json::array();
  for (const Row& r : rows) {
    data.push_back({{"n", r.n},
                    {"alpha", r.alpha},
                    {"region", r.interior ? "interior" : "unmodeled"},
                    {"p_asymptotic", num_or_null(r.p_asym)},
                    {"p_slow", num_or_null(r.p_slow)}});
  }
  write_json(out, document(c, std::move(data)));
}

// ---------------------------------------------------------------------------
// Moments

void run_moments(const RunConfig& c, std::ostream& out) {
  require_line(c);
  if (c.steps < 1) throw DomainError("moments need steps >= 1");
  const ProbabilityDistribution p = distribution(exact_run(c));
  const AsymptoticRoute route = asymptotic_route(c);
  const bool regular = family_theta(c.coin.label) > 0.0 && family_theta(c.coin.label) < pi;

  struct Row {
    std::string name;
    double simulation;
    double density;
  };
  auto analytic = [&](std::function<double(double)> g) {
    if (!regular || !route.envelope) return std::nan("");
    if (route.mirrored) {
      return integrate_density([&](double a) { return g(-a); }, c.coin.label, *route.envelope);
    }
    return integrate_density(g, c.coin.label, *route.envelope);
  };
  const std::vector<Row> rows = {
      {"mean", moment(p, 1).value, analytic([](double a) { return a; })},
      {"abs_mean", moment(p, 1, true).value, analytic([](double a) { return std::abs(a); })},
      {"second", moment(p, 2).value, analytic([](double a) { return a * a; })},
  };
  if (c.format == Format::csv) {
    out << "quantity,simulation,density\n";
    for (const Row& r : rows) out << r.name << ',' << num(r.simulation) << ',' << num(r.density) << '\n';
    return;
  }
  json data = json::array();
  for (const Row& r : rows) {
    data.push_back({{"quantity", r.name},
                    {"simulation", r.simulation},
                    {"density", num_or_null(r.density)}});
  }
  write_json(out, document(c, std::move(data)));
}

// ---------------------------------------------------------------------------
// Mixing

void run_mix(const RunConfig& c, std::ostream& out) {
  if (!is_circle(c.topology)) throw DomainError("mix requires a circle topology");
  const std::int64_t n = circle_size(c.topology);
  const double delta = c.delta.value_or(calibrated_delta());
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  MixingReport report;
  if (c.classical) {
    report = classical_mixing_time(n, delta, c.t_cap.value_or(4 * n * n));
  } else {
    report = mixing_time(WalkSpec{c.topology, c.coin, c.init, c.steps}, delta,
                         c.t_cap.value_or(20 * n));
  }
  if (c.format == Format::csv) {
    out << "t,tv\n";
    for (const auto& [t, tv] : report.tv_trace) out << t << ',' << num(tv) << '\n';
    return;
  }
  json data = json::array();
  for (const auto& [t, tv] : report.tv_trace) data.push_back({{"t", t}, {"tv", tv}});
  json doc = document(c, std::move(data));
  doc["summary"] = {{"delta", delta},
                    {"circle_size", n},
                    {"mixing_time", report.time ? json(*report.time) : json(nullptr)}};
  write_json(out, doc);
}

// ---------------------------------------------------------------------------
// Symmetry

void run_symmetry(const RunConfig& c, std::ostream& out) {
  struct Row {
    std::string name;
    SymmetrizerReport report;
  };
  std::vector<Row> rows;
  for (const NamedCandidate& cand : pauli_candidates()) {
    rows.push_back({cand.name, verify_symmetrizer(c.coin, cand.matrix)});
  }
  if (c.format == Format::csv) {
    out << "candidate,sign,max_residual,verdict\n";
    for (const Row& r : rows) {
      out << r.name << ',' << r.report.sign << ',' << num(r.report.max_residual) << ','
          << (r.report.verdict ? "true" : "false") << '\n';
    }
    return;
  }
  json data = json::array();
  for (const Row& r : rows) {
    data.push_back({{"candidate", r.name},
                    {"sign", r.report.sign},
                    {"max_residual", r.report.max_residual},
                    {"verdict", r.report.verdict}});
  }
  json doc = document(c, std::move(data));
  json summary;
  if (find_symmetrizer(c.coin)) {
    const ComplexPair v = symmetric_initial(c.coin);
    const WaveFunction psi = evolve(initial_state(Chirality::custom(v), c.topology), c.coin, c.steps);
    const ProbabilityDistribution p = distribution(psi);
    double asym = 0.0;
    if (is_line(c.topology)) {
      for (std::int64_t n = 0; n <= c.steps; ++n) asym = std::max(asym, std::abs(p.at(n) - p.at(-n)));
    } else {
      const std::int64_t m = circle_size(c.topology);
      for (std::int64_t n = 0; n < m; ++n) asym = std::max(asym, std::abs(p.at(n) - p.at(-n)));
    }
    summary["symmetric_initial"] = {{"psi_L", {v(0).real(), v(0).imag()}},
                                    {"psi_R", {v(1).real(), v(1).imag()}}};
    summary["max_asymmetry"] = asym;
  } else {
    summary["symmetric_initial"] = nullptr;
    summary["max_asymmetry"] = nullptr;
  }
  doc["summary"] = summary;
  write_json(out, doc);
}

// ---------------------------------------------------------------------------
// Comparison of the three routes

void run_compare(const RunConfig& c, std::ostream& out, std::ostream& log) {
  require_line(c);
  const WaveFunction exact = exact_run(c);
  const WaveFunction spectral = spectral_run(c);
  const AsymptoticRoute route = asymptotic_route(c);
  const bool regular = family_theta(c.coin.label) > 0.0 && family_theta(c.coin.label) < pi;
  const AsymptoticModel model = model_for(c);
  const ProbabilityDistribution pe = distribution(exact);
  const ProbabilityDistribution ps = distribution(spectral);

  struct Row {
    std::int64_t n;
    double p_exact, p_spectral, p_asym, d_spectral, d_asym;
  };
  std::vector<Row> rows;
  double max_amp = 0.0;
  double l1 = 0.0;
  bool any_asym = false;
  for (std::int64_t n = -c.steps; n <= c.steps; ++n) {
    Row r{n, pe.at(n), ps.at(n), std::nan(""), 0.0, std::nan("")};
    r.d_spectral = (exact.at(n) - spectral.at(n)).cwiseAbs().maxCoeff();
    max_amp = std::max(max_amp, r.d_spectral);
    const double alpha = c.steps > 0 ? static_cast<double>(n) / static_cast<double>(c.steps) : 0.0;
    if (regular && route.oscillating && c.steps > 0 && model.in_interior(alpha)) {
      r.p_asym = p_asymptotic(n, c.steps, model);
      r.d_asym = std::abs(r.p_exact - r.p_asym);
      l1 += r.d_asym;
      any_asym = true;
    }
    rows.push_back(r);
  }
  if (c.format == Format::csv) {
    out << "n,p_exact,p_spectral,p_asymptotic,d_exact_spectral,d_exact_asymptotic\n";
    for (const Row& r : rows) {
      out << r.n << ',' << num(r.p_exact) << ',' << num(r.p_spectral) << ',' << num(r.p_asym)
          << ',' << num(r.d_spectral) << ',' << num(r.d_asym) << '\n';
    }
    log << "max |exact - spectral| amplitude difference: " << num(max_amp) << '\n';
    if (any_asym) log << "L1 exact vs asymptotic on interior sites: " << num(l1) << '\n';
    return;
  }
  json data = json::array();
  for (const Row& r : rows) {
    data.push_back({{"n", r.n},
                    {"p_exact", r.p_exact},
                    {"p_spectral", r.p_spectral},
                    {"p_asymptotic", num_or_null(r.p_asym)},
                    {"d_exact_spectral", r.d_spectral},
                    {"d_exact_asymptotic", num_or_null(r.d_asym)}});
  }
  json doc = document(c, std::move(data));
  doc["summary"] = {{"max_amplitude_diff_exact_spectral", max_amp},
                    {"l1_exact_asymptotic_interior", any_asym ? json(l1) : json(nullptr)}};
  write_json(out, doc);
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<double> parse_theta(const std::string& text) {
  if (text == "hadamard") return std::nullopt;
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return parse_double(text, "theta");
  const std::string coeff = text.substr(0, pos);
  std::string rest = text.substr(pos + 2);
  double value = coeff.empty() ? 1.0 : parse_double(coeff, "theta coefficient");
  if (!rest.empty()) {
    if (rest[0] != '/') throw UsageError("cannot parse theta: '" + text + "'");
    const double denom = parse_double(rest.substr(1), "theta denominator");
    if (denom == 0.0) throw UsageError("theta denominator is zero");
    value /= denom;
  }
  return value * pi;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Discrete-time coined quantum walks on the line and the circle", "qwalk"};
  std::string command, coin = "hadamard", topology = "line", format = "csv";
  std::optional<std::string> init;
  std::optional<std::string> theta;
  RunConfig config;
  app.add_option("command", command, "simulate | spectral | asymptotic | moments | mix | symmetry | compare")
      ->required();
  app.add_option("--coin", coin, "'hadamard' or 'theta' (with --theta)");
  app.add_option("--theta", theta, "coin angle in radians or as a multiple of pi, e.g. 0.5pi");
  app.add_option("--steps", config.steps, "number of steps");
  app.add_option("--topology", topology, "'line' or 'circle:N'");
  app.add_option("--init", init, "left | right | symmetric");
  app.add_option("--format", format, "csv | json");
  app.add_option("--output", config.output_path, "output file (default: standard output)");
  app.add_option("--epsilon", config.epsilon, "interior margin for asymptotic forms");
  app.add_option("--delta", config.delta, "mixing threshold (default: calibrated)");
  app.add_option("--t-cap", config.t_cap, "last time scanned by mix");
  app.add_option("--grid", config.grid, "wavenumber samples for the spectral route");
  app.add_flag("--classical", config.classical, "mix: classical simple random walk");

  std::vector<const char*> argv;
  argv.push_back("qwalk");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto it = kCommands.find(command);
  if (it == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  config.command = it->second;

  if (coin != "hadamard" && coin != "theta") throw UsageError("unknown coin '" + coin + "'");
  if (coin == "theta" && !theta) throw UsageError("--coin theta needs --theta");
  config.coin_text = theta ? *theta : "hadamard";
  const std::optional<double> value = parse_theta(config.coin_text);
  config.coin = value ? theta_coin(*value) : hadamard_coin();

  if (config.steps < 0 || config.steps > kMaxSteps) throw DomainError("steps must lie in [0, 2^20]");
  config.topology = parse_topology(topology);
  // Mixing is judged from the symmetric start unless told otherwise.
  config.init_text = init.value_or(config.command == Command::mix ? "symmetric" : "left");
  config.init = parse_init(config.init_text);
  if (format == "csv") {
    config.format = Format::csv;
  } else if (format == "json") {
    config.format = Format::json;
  } else {
    throw UsageError("format must be csv or json, got '" + format + "'");
  }
  if (!(config.epsilon > 0.0)) throw DomainError("epsilon must be positive");
  return config;
}

void run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  switch (config.command) {
    case Command::simulate:
      emit_wavefunction(config, exact_run(config), out);
      break;
    case Command::spectral:
      emit_wavefunction(config, spectral_run(config), out);
      break;
    case Command::asymptotic:
      run_asymptotic(config, out);
      break;
    case Command::moments:
      run_moments(config, out);
      break;
    case Command::mix:
      run_mix(config, out);
      break;
    case Command::symmetry:
      run_symmetry(config, out);
      break;
    case Command::compare:
      run_compare(config, out, log);
      break;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig config = parse_args(args);
    if (config.output_path.empty()) {
      run(config, out, err);
    } else {
      // Render fully before touching the file so failures leave no partial output.
      std::ostringstream buffer;
      run(config, buffer, err);
      std::ofstream file(config.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + config.output_path + "'");
      file << buffer.str();
    }
    return kExitOk;
  } catch (const HelpRequested& e) {
    out << e.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace qwalk::cli
