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

#ifndef QROUTE_ENGINE_HPP
#define QROUTE_ENGINE_HPP

#include "qroute/availability.hpp"
#include "qroute/config.hpp"
#include "qroute/fidelity.hpp"
#include "qroute/path.hpp"
#include "qroute/policy.hpp"
#include "qroute/random.hpp"
#include "qroute/results.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qroute {

struct PairRecord {
  std::size_t                  pair_id = 0;
  // Serving position theta, 1-based.
  std::size_t                  order = 0;
  PairStatus                   status = PairStatus::blocked;
  std::optional<CandidatePath> path;
  std::optional<double>        fidelity_true;
  std::optional<double>        fidelity_est;
};

// Result of serving every pair once, in serving order.
struct PeriodOutcome {
  std::vector<PairRecord> records;
  std::vector<EdgeId>     consumed;

  std::size_t served_count() const;
  std::size_t blocked_count() const;
};

/// Serves the pairs of the graph one at a time in the given order (indices
/// into graph.pairs()). Each pair is routed by the policy on the links left
/// over by the pairs served before it; an accepted route consumes all its
/// links for the rest of the period. A pair with no feasible route is
/// blocked.
PeriodOutcome run_period(const NetworkGraph&          graph,
                         const FidelityOracle&        oracle,
                         const PolicySpec&            spec,
                         std::span<const std::size_t> order,
                         RandomStream&                rng);

struct ExperimentResults {
  std::vector<ResultRow>  rows;
  std::vector<EdgeRecord> edges;
};

/// Monte Carlo campaign over every grid point of the configuration.
///
/// For each topology replica (network plus endpoint attachment) and each
/// quality replica, one serving order is drawn and every policy and noise
/// level is run on identical inputs. All randomness descends from
/// master_seed through derive_seed, keyed by replica indices, so results do
/// not depend on `jobs` and topology, quality, order and noise draws are
/// shared across the swept xi/a, lambda and policy values.
ExperimentResults run_experiment(const ExperimentConfig& config,
                                 std::uint64_t           master_seed,
                                 unsigned                jobs = 1);

} // namespace qroute

#endif // QROUTE_ENGINE_HPP
