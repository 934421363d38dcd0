// Copyright 2026 The abslocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command implementations behind the `abslocal` binary. Each run_* function
// writes its report to `out`, diagnostics to `err`, and returns the process
// exit code.

#include "abslocal/criteria.hpp"
#include "abslocal/purity.hpp"
#include "abslocal/zoo.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace abslocal::cli {

enum class Command { Analyze, Sweep, Oracle, Ensemble };
enum class OutputFormat { Json, Csv, Table };

std::optional<OutputFormat> parse_format(std::string_view name);

namespace exit_code {
inline constexpr int kAbsolutelyLocal = 0;
inline constexpr int kNotAbsolutelyLocal = 1;
inline constexpr int kBoundary = 2;
inline constexpr int kUsage = 3;
inline constexpr int kOracleViolation = 4;
inline constexpr int kSandwichViolation = 5;
inline constexpr int kDomain = 6;
inline constexpr int kParse = 64;
inline constexpr int kInvalidState = 65;
inline constexpr int kIo = 66;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::Analyze;
  std::string input;
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = 0;
  std::size_t grid = 24;
  OutputFormat format = OutputFormat::Table;

  // sweep
  std::string family;
  std::size_t steps = 101;
  double theta = 0.7853981633974483;

  // oracle
  std::size_t states = 50;
  std::size_t unitaries = 2000;
  bool bell_diagonal = false;

  // ensemble
  std::size_t samples = 100000;

  /// Throws std::invalid_argument on samples/states/unitaries < 1 or
  /// epsilon outside (0, 1e-2].
  void validate() const;
};

struct AnalyzeReport {
  LocalityReport locality;
  double purity = 0.0;
  BallClassification ball{};
  std::optional<Verdict> bell_diagonal;
  std::optional<CompDiagResult> comp_diagonal;
  TraceSufficientResult trace{};
};

AnalyzeReport analyze_state(const DensityMatrix& sigma, const RunConfig& config);
/// 0 absolutely local, 1 not, 2 boundary.
int exit_code_for(const AnalyzeReport& report);
std::string render(const AnalyzeReport& report, OutputFormat format);

struct OracleSummary {
  std::size_t states = 0;
  std::size_t unitaries = 0;
  std::uint64_t seed = 0;
  bool bell_diagonal = false;
  /// Observations of M(U sigma U^dagger) > F + 1e-9.
  std::size_t violations = 0;
  /// max over states of (observed max M) - F.
  double max_excess = 0.0;
  /// max over states of F - (refined max M).
  double max_gap = 0.0;
  /// max over states of |observed max M - M(sigma)|; Bell-diagonal runs only.
  double max_invariance_error = 0.0;
};

OracleSummary run_oracle_check(std::size_t states, std::size_t unitaries,
                               std::uint64_t seed, bool bell_diagonal);
std::string render(const OracleSummary& s, OutputFormat format);

struct EnsembleSummary {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t absolutely_local = 0;
  std::size_t bell_local = 0;
  std::size_t purity_at_most_half = 0;
  std::size_t purity_above_five_eighths = 0;
  /// purity <= 1/2 but F > 1.
  std::size_t low_purity_not_al = 0;
  /// purity > 5/8 but F <= 1.
  std::size_t high_purity_al = 0;
  /// F <= 1 but M > 1.
  std::size_t al_not_bell_local = 0;

  bool sandwich_holds() const {
    return low_purity_not_al == 0 && high_purity_al == 0 &&
           al_not_bell_local == 0;
  }
};

EnsembleSummary run_ensemble_check(std::size_t samples, std::uint64_t seed);
std::string render(const EnsembleSummary& s, OutputFormat format);

std::string render(const SweepResult& s);

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_ensemble(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace abslocal::cli
