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

// abslocal: command-line front end.
//
//   abslocal analyze <file> [--epsilon E] [--format json|csv|table] [--grid G]
//   abslocal sweep <family> [--steps N] [--theta T]
//   abslocal oracle [--states N] [--unitaries M] [--seed S] [--bell-diagonal]
//   abslocal ensemble [--samples N] [--seed S]

#include "abslocal/cli_app.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace cli = abslocal::cli;

int main(int argc, char** argv) {
  CLI::App app{"Absolute locality of two-qubit states"};
  app.require_subcommand(1);

  cli::RunConfig config;
  std::string format = "table";
  const std::map<std::string, cli::OutputFormat> formats{
      {"json", cli::OutputFormat::Json},
      {"csv", cli::OutputFormat::Csv},
      {"table", cli::OutputFormat::Table}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Classify one state file");
  analyze->add_option("file", config.input, "State JSON file")->required();
  analyze->add_option("--epsilon", config.epsilon, "Boundary tolerance");
  analyze->add_option("--grid", config.grid, "Angle grid points per axis");
  add_format(analyze);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep a one-parameter family (CSV)");
  sweep->add_option("family", config.family,
                    "werner | gisin | rho_f | rho_g")
      ->required();
  sweep->add_option("--steps", config.steps, "Grid points in [0, 1]");
  sweep->add_option("--theta", config.theta, "Family angle (gisin, rho_g)");
  sweep->add_option("--epsilon", config.epsilon, "Boundary tolerance");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Check max over unitaries of M against F");
  oracle->add_option("--states", config.states, "Random input states");
  oracle->add_option("--unitaries", config.unitaries, "Haar samples per state");
  oracle->add_option("--seed", config.seed, "Base seed");
  oracle->add_flag("--bell-diagonal", config.bell_diagonal,
                   "Draw Bell-diagonal inputs instead of Hilbert-Schmidt");
  add_format(oracle);

  CLI::App* ensemble =
      app.add_subcommand("ensemble", "Monte Carlo purity sandwich check");
  ensemble->add_option("--samples", config.samples, "Hilbert-Schmidt samples");
  ensemble->add_option("--seed", config.seed, "Base seed");
  add_format(ensemble);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::exit_code::kUsage;
  }

  config.format = formats.at(format);
  if (analyze->parsed()) config.command = cli::Command::Analyze;
  else if (sweep->parsed()) config.command = cli::Command::Sweep;
  else if (oracle->parsed()) config.command = cli::Command::Oracle;
  else config.command = cli::Command::Ensemble;

  return cli::run(config, std::cout, std::cerr);
}
