// Copyright 2026 The qroute Authors
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

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  using namespace qroute::cli;

  CLI::App app{"qroute: entanglement routing simulator for quantum repeater networks"};
  app.require_subcommand(1);

  RunOptions       run;
  TopologyOptions  topology;
  ReportOptions    report;
  std::uint64_t    run_seed = 0;
  std::uint64_t    topo_seed = 0;
  std::string      policy_filter;
  std::size_t      n_sd = 0;

  auto* run_cmd = app.add_subcommand("run", "Run a Monte Carlo experiment and write CSVs");
  run_cmd->add_option("--config", run.config, "Experiment config (JSON)")->required();
  auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Master seed override");
  run_cmd->add_option("--out-dir", run.out_dir, "Output directory (overrides config)");
  run_cmd->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_option("--policy", policy_filter,
                      "Comma-separated subset of configured policies");

  auto* topo_cmd = app.add_subcommand("topology", "Emit a generated topology as JSON");
  topo_cmd->add_option("--config", topology.config, "Experiment config (JSON)")->required();
  auto* topo_seed_opt = topo_cmd->add_option("--seed", topo_seed, "Master seed override");
  topo_cmd->add_option("--out", topology.out, "Output file (default stdout)");
  auto* n_sd_opt = topo_cmd->add_option("--n-sd", n_sd, "Attach this many SD pairs");

  auto* report_cmd =
      app.add_subcommand("report", "Recompute aggregated CSVs from a raw results table");
  report_cmd->add_option("raw", report.raw, "Raw results CSV")->required();
  report_cmd->add_option("--edges", report.edges, "Edge-count CSV (default: next to raw)");
  report_cmd->add_option("--out-dir", report.out_dir, "Output directory (default: raw's)");
  report_cmd->add_option("--threshold", report.f_threshold,
                         "Fidelity threshold for the violation rate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      if (*run_seed_opt) {
        run.seed = run_seed;
      }
      std::stringstream names(policy_filter);
      for (std::string name; std::getline(names, name, ',');) {
        if (not name.empty()) {
          run.policies.push_back(name);
        }
      }
      return cmd_run(run, std::cout);
    }
    if (topo_cmd->parsed()) {
      if (*topo_seed_opt) {
        topology.seed = topo_seed;
      }
      if (*n_sd_opt) {
        topology.n_sd = n_sd;
      }
      return cmd_topology(topology, std::cout);
    }
    return cmd_report(report, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "qroute: " << e.what() << '\n';
    return 1;
  }
}
