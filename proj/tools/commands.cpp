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

#include "qroute/engine.hpp"
#include "qroute/metrics.hpp"
#include "qroute/results_io.hpp"
#include "qroute/topology.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qroute::cli {

namespace fs = std::filesystem;

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag,
                           const ExperimentConfig&      config) {
  if (flag) {
    return *flag;
  }
  if (config.master_seed) {
    return *config.master_seed;
  }
  if (const char* env = std::getenv(kSeedEnvVar); env != nullptr and *env != '\0') {
    std::uint64_t   seed = 0;
    std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} or ptr != text.data() + text.size()) {
      throw std::invalid_argument(std::string(kSeedEnvVar) +
                                  " must be a non-negative integer, got '" + env + "'");
    }
    return seed;
  }
  return 1;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (not out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

void write_report(const ExperimentReport& report, const fs::path& dir) {
  auto aggregated = open_output(dir / kAggregatedFile);
  write_aggregated_csv(aggregated, report.metrics);
  auto pmf = open_output(dir / kPmfFile);
  write_pmf_csv(pmf, report.pmf);
  auto orders = open_output(dir / kOrderFile);
  write_order_csv(orders, report.orders);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec or not fs::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory " + dir.string());
  }
}

} // namespace

int cmd_run(const RunOptions& options, std::ostream& log) {
  auto config = load_config(options.config);
  if (not options.policies.empty()) {
    std::vector<PolicySpec> kept;
    for (const auto& name : options.policies) {
      const auto it = std::find_if(config.policies.begin(), config.policies.end(),
                                   [&](const PolicySpec& p) { return p.name() == name; });
      if (it == config.policies.end()) {
        throw ConfigError("--policy: " + name + " is not configured");
      }
      kept.push_back(*it);
    }
    config.policies = std::move(kept);
  }
  const auto     seed = resolve_seed(options.seed, config);
  const fs::path dir  = options.out_dir.value_or(config.output.dir);
  ensure_dir(dir);

  const auto start   = std::chrono::steady_clock::now();
  const auto results = run_experiment(config, seed, options.jobs);

  // aggregate what a later `report` would read back, so both agree exactly
  std::stringstream raw_text;
  write_raw_csv(raw_text, results.rows);
  {
    auto raw = open_output(dir / kRawFile);
    raw << raw_text.str();
    auto edges = open_output(dir / kEdgesFile);
    write_edges_csv(edges, results.edges);
  }
  const auto rows   = read_raw_csv(raw_text);
  const auto report = aggregate(rows, results.edges, {config.fidelity.f_threshold});
  write_report(report, dir);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const auto betas = config.beta_points().size();
  log << "grid points: " << config.n_sd.size() * betas * config.quality.values.size() *
                                config.lambda.size()
      << " x " << config.policies.size() << " policies\n"
      << "replicas:    " << config.replicas.n_topo << " topology x "
      << config.replicas.n_quality << " quality\n"
      << "master seed: " << seed << '\n'
      << "raw rows:    " << results.rows.size() << '\n'
      << "wall time:   " << std::fixed << std::setprecision(2) << elapsed.count()
      << " s\n"
      << "output:      " << dir.string() << '\n';
  return 0;
}

int cmd_topology(const TopologyOptions& options, std::ostream& out) {
  const auto  config = load_config(options.config);
  const auto  seed   = resolve_seed(options.seed, config);
  const auto& topo   = config.topology;

  std::optional<NetworkGraph> graph;
  if (topo.kind == TopologyKind::random) {
    WaxmanParams params;
    params.alpha             = topo.alpha;
    params.beta              = topo.beta.front();
    params.n_repeaters       = topo.n_repeaters;
    params.max_attempts      = topo.max_attempts;
    params.edge_count_target = topo.edge_count_target;
    RandomStream rng(derive_seed(seed, StreamPurpose::topology, {0, 0}));
    graph.emplace(generate_waxman(params, rng));
  } else {
    graph.emplace(generate_regular_grid(topo.n_side));
  }
  if (options.n_sd) {
    RandomStream rng(derive_seed(seed, StreamPurpose::endpoints, {0, 0, *options.n_sd}));
    graph.emplace(attach_endpoints(*graph, *options.n_sd, rng));
  }

  const auto text = graph_to_json(*graph);
  if (options.out) {
    auto file = open_output(*options.out);
    file << text;
  } else {
    out << text;
  }
  return 0;
}

int cmd_report(const ReportOptions& options, std::ostream& log) {
  std::ifstream raw_in(options.raw, std::ios::binary);
  if (not raw_in) {
    throw std::runtime_error("cannot read " + options.raw.string());
  }
  const auto rows = read_raw_csv(raw_in);
  if (rows.empty()) {
    throw std::runtime_error(options.raw.string() + " has no result rows");
  }

  std::vector<EdgeRecord> edges;
  const auto edges_path = options.edges.value_or(options.raw.parent_path() / kEdgesFile);
  if (fs::exists(edges_path)) {
    std::ifstream edges_in(edges_path, std::ios::binary);
    edges = read_edges_csv(edges_in);
  } else if (options.edges) {
    throw std::runtime_error("cannot read " + edges_path.string());
  } else {
    log << "note: no " << kEdgesFile << " next to the raw table; bpe omitted\n";
  }

  const fs::path dir = options.out_dir ? fs::path(*options.out_dir)
                                       : options.raw.parent_path();
  if (not dir.empty()) {
    ensure_dir(dir);
  }
  const auto report = aggregate(rows, edges, {options.f_threshold});
  write_report(report, dir);
  log << "aggregated " << rows.size() << " rows into " << report.metrics.size()
      << " metric rows\n";
  return 0;
}

} // namespace qroute::cli
