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

#ifndef QROUTE_POLICY_HPP
#define QROUTE_POLICY_HPP

#include "qroute/availability.hpp"
#include "qroute/fidelity.hpp"
#include "qroute/path.hpp"
#include "qroute/quality.hpp"
#include "qroute/random.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qroute {

enum class PolicyKind {
  shortest_path,   // SP
  knowledge_aware, // KA, white box
  k_shortest,      // KSP, grey box
  kx,              // kx-path selection, grey box
};

// Per-repeater costs of the knowledge-aware policy.
struct KnowledgeCosts {
  double high_quality = 100;
  double low_quality  = 1;
};

struct PolicySpec {
  PolicyKind     kind = PolicyKind::shortest_path;
  // Candidate list size of KSP and kx.
  std::size_t    k = 10;
  // Length allowance of kx.
  std::size_t    x = 0;
  // Candidate budget of SP and KA.
  std::size_t    k_enum = 100;
  KnowledgeCosts ka_costs;

  void validate() const;

  // sp | ka | ksp | kx0 | kx1 | kx<N>
  std::string name() const;
};

PolicySpec parse_policy(std::string_view name);

// Fidelities closer than this are treated as ties.
inline constexpr double kFidelityTieTolerance = 1e-12;

/// Picks a route for one source/destination pair on the residual network.
///
/// Every fidelity comparison goes through `estimates`; a route is feasible
/// when its estimate reaches estimates.threshold(). Candidate sets:
///
///   SP   shortest feasible routes among the first k_enum by length; one is
///        drawn uniformly.
///   KA   routes in increasing vertex-cost order (HQ repeaters cost
///        ka_costs.high_quality, LQ ones ka_costs.low_quality) up to
///        k_enum; uniform among the feasible ones of least cost.
///   KSP  the first k routes by length; the feasible one of minimum
///        estimated fidelity, ties uniform.
///   kx   the first k routes by length; with L_b the least feasible length,
///        the feasible route of length <= L_b + x with minimum estimated
///        fidelity, ties uniform.
///
/// `quality` is read by KA only and may be null for the other policies.
/// Returns nullopt when no candidate is feasible (the pair is blocked).
/// Throws UnsupportedError for KA without a two-class assignment.
std::optional<CandidatePath> select_path(const PolicySpec&         spec,
                                         const NetworkGraph&       graph,
                                         const EdgeAvailability&   available,
                                         const FidelityEstimator&  estimates,
                                         const QualityAssignment*  quality,
                                         NodeId                    source,
                                         NodeId                    destination,
                                         RandomStream&             rng);

} // namespace qroute

#endif // QROUTE_POLICY_HPP
