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

#ifndef QROUTE_RESULTS_HPP
#define QROUTE_RESULTS_HPP

#include "qroute/topology.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

namespace qroute {

enum class PairStatus { served, blocked };

/// One routing decision of one pair in one replica: a row of the raw
/// results table.
struct ResultRow {
  std::string           policy;
  TopologyKind          topology = TopologyKind::random;
  std::optional<double> xi;
  std::optional<double> a;
  std::optional<double> beta;
  std::optional<double> lambda;
  std::size_t           n_sd = 0;
  std::size_t           replica_topo = 0;
  std::size_t           replica_quality = 0;
  // Serving position theta, 1-based.
  std::size_t           order_index = 0;
  std::size_t           pair_id = 0;
  PairStatus            status = PairStatus::blocked;
  std::optional<std::size_t> path_len;
  std::optional<double> fidelity_true;
  std::optional<double> fidelity_est;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Repeater-to-repeater link count of one topology replica.
struct EdgeRecord {
  TopologyKind          topology = TopologyKind::random;
  std::optional<double> beta;
  std::size_t           n_sd = 0;
  std::size_t           replica_topo = 0;
  std::size_t           edge_count = 0;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Identifies a grid point of an experiment (one aggregated series entry).
struct GridKey {
  std::string           policy;
  TopologyKind          topology = TopologyKind::random;
  std::optional<double> xi;
  std::optional<double> a;
  std::optional<double> beta;
  std::optional<double> lambda;
  std::size_t           n_sd = 0;

  friend bool operator==(const GridKey&, const GridKey&) = default;
};

inline GridKey grid_key(const ResultRow& row) {
  return {row.policy, row.topology, row.xi, row.a, row.beta, row.lambda,
          row.n_sd};
}

} // namespace qroute

#endif // QROUTE_RESULTS_HPP
