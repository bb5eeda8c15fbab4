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

#ifndef QROUTE_TOOLS_COMMANDS_HPP
#define QROUTE_TOOLS_COMMANDS_HPP

#include "qroute/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qroute::cli {

inline constexpr const char* kSeedEnvVar = "QROUTE_SEED";

// File names written by `run` and `report` inside the output directory.
inline constexpr const char* kRawFile        = "raw.csv";
inline constexpr const char* kEdgesFile      = "edges.csv";
inline constexpr const char* kAggregatedFile = "aggregated.csv";
inline constexpr const char* kPmfFile        = "pmf.csv";
inline constexpr const char* kOrderFile      = "order_fidelity.csv";

// --seed, then the config's master_seed, then $QROUTE_SEED, then 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag,
                           const ExperimentConfig&      config);

struct RunOptions {
  std::filesystem::path        config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string>   out_dir;
  unsigned                     jobs = 1;
  // Keep only these policies (by name) when non-empty.
  std::vector<std::string>     policies;
};

struct TopologyOptions {
  std::filesystem::path        config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string>   out;
  std::optional<std::size_t>   n_sd;
};

struct ReportOptions {
  std::filesystem::path                raw;
  std::optional<std::filesystem::path> edges;
  std::optional<std::string>           out_dir;
  double                               f_threshold = 0.53;
};

// Each returns the process exit code and reports progress on `log`.
int cmd_run(const RunOptions& options, std::ostream& log);
int cmd_topology(const TopologyOptions& options, std::ostream& out);
int cmd_report(const ReportOptions& options, std::ostream& log);

} // namespace qroute::cli

#endif // QROUTE_TOOLS_COMMANDS_HPP
