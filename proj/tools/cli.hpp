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

// Command-line front end. Every command writes one CSV table or one JSON
// document; identical configurations produce byte-identical output.

#pragma once

#include "qwalk/walk.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Malformed or inconsistent command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; what() carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { simulate, spectral, asymptotic, moments, mix, symmetry, compare };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::simulate;
  /// "hadamard" or the theta value as given on the command line.
  std::string coin_text = "hadamard";
  CoinOperator coin = hadamard_coin();
  std::int64_t steps = 100;
  Topology topology = Line{};
  std::string init_text = "left";
  Chirality init = Chirality::left();
  Format format = Format::csv;
  /// Empty means standard output.
  std::string output_path;
  double epsilon = 0.02;
  std::optional<double> delta;
  std::optional<std::int64_t> t_cap;
  std::optional<std::int64_t> grid;
  bool classical = false;
};

std::string to_string(Command c);

/// Parses "hadamard", a plain radian value, or a multiple of pi such as
/// "0.5pi", "pi", "pi/3" or "2pi/3". Returns nullopt for "hadamard".
std::optional<double> parse_theta(const std::string& text);

/// Parses argv into a config. Throws UsageError on malformed input and
/// DomainError when a value violates an operation's precondition.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs one command, writing the artifact to `out`. Throws DomainError on
/// precondition violations.
void run(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Full entry point: parse, run, map failures to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
