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

#ifndef QROUTE_CONFIG_HPP
#define QROUTE_CONFIG_HPP

#include "qroute/fidelity.hpp"
#include "qroute/policy.hpp"
#include "qroute/quality.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

// Invalid configuration; the message starts with the offending field path,
// e.g. "quality.xi[2]: must be in [0, 1], got 1.5".
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TopologyConfig {
  TopologyKind               kind = TopologyKind::random;
  std::size_t                n_repeaters = 25;
  std::size_t                n_side = 5;
  double                     alpha = 0.85;
  std::vector<double>        beta{0.275};
  std::optional<std::size_t> edge_count_target;
  std::size_t                max_attempts = 1000;
};

struct QualityConfig {
  QualityScheme       scheme = QualityScheme::two_class;
  // xi values for two_class, a values for continuous.
  std::vector<double> values{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  EfficiencyLevels    levels;
};

struct ReplicaCounts {
  std::size_t n_topo = 100;
  std::size_t n_quality = 100;
};

struct OutputConfig {
  std::string dir = "out";
};

/// Full description of a simulation campaign. Defaults reproduce the
/// baseline study: random 25-repeater Waxman networks, five pairs, xi from
/// 0.5 to 1, all five policies, 100 x 100 replicas.
struct ExperimentConfig {
  TopologyConfig                     topology;
  std::vector<std::size_t>           n_sd{5};
  QualityConfig                      quality;
  FidelityParams                     fidelity;
  std::vector<PolicySpec>            policies;
  // nullopt entries run without estimation noise.
  std::vector<std::optional<double>> lambda{std::nullopt};
  ReplicaCounts                      replicas;
  std::optional<std::uint64_t>       master_seed;
  OutputConfig                       output;

  ExperimentConfig();

  // Throws ConfigError on the first violated constraint.
  void validate() const;

  // Grid values of the Waxman beta column; a single unset entry for regular
  // grids.
  std::vector<std::optional<double>> beta_points() const;
};

ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

} // namespace qroute

#endif // QROUTE_CONFIG_HPP
