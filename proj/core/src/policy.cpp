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

#include "qroute/policy.hpp"

#include "qroute/pathfind.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qroute {

void PolicySpec::validate() const {
  if (k == 0) {
    throw std::invalid_argument("policy k must be at least 1");
  }
  if (k_enum == 0) {
    throw std::invalid_argument("policy k_enum must be at least 1");
  }
  if (not(ka_costs.high_quality > 0 and ka_costs.low_quality > 0)) {
    throw std::invalid_argument("knowledge-aware costs must be positive");
  }
}

std::string PolicySpec::name() const {
  switch (kind) {
    case PolicyKind::shortest_path:
      return "sp";
    case PolicyKind::knowledge_aware:
      return "ka";
    case PolicyKind::k_shortest:
      return "ksp";
    case PolicyKind::kx:
      return "kx" + std::to_string(x);
  }
  return "unknown";
}

PolicySpec parse_policy(std::string_view name) {
  PolicySpec spec;
  if (name == "sp") {
    spec.kind = PolicyKind::shortest_path;
  } else if (name == "ka") {
    spec.kind = PolicyKind::knowledge_aware;
  } else if (name == "ksp") {
    spec.kind = PolicyKind::k_shortest;
  } else if (name.starts_with("kx") and name.size() > 2) {
    spec.kind          = PolicyKind::kx;
    const auto digits  = name.substr(2);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), spec.x);
    if (ec != std::errc{} or ptr != digits.data() + digits.size()) {
      throw std::invalid_argument("bad kx allowance in policy: " +
                                  std::string(name));
    }
  } else {
    throw std::invalid_argument("unknown policy: " + std::string(name) +
                                " (expected sp, ka, ksp or kx<N>)");
  }
  return spec;
}

namespace {

struct Scored {
  CandidatePath path;
  double        estimate;
};

CandidatePath pick_uniform(std::vector<CandidatePath>& pool, RandomStream& rng) {
  return std::move(pool[rng.index(pool.size())]);
}

// Uniform draw among the scored routes of minimum estimate.
CandidatePath pick_min_fidelity(std::vector<Scored>& pool, RandomStream& rng) {
  double lowest = pool.front().estimate;
  for (const auto& s : pool) {
    lowest = std::min(lowest, s.estimate);
  }
  std::vector<CandidatePath> ties;
  for (auto& s : pool) {
    if (s.estimate - lowest <= kFidelityTieTolerance) {
      ties.push_back(std::move(s.path));
    }
  }
  return pick_uniform(ties, rng);
}

std::optional<CandidatePath> select_shortest(const PolicySpec&        spec,
                                             PathEnumerator&          paths,
                                             const FidelityEstimator& estimates,
                                             RandomStream&            rng) {
  std::vector<CandidatePath> best;
  for (std::size_t n = 0; n < spec.k_enum; ++n) {
    auto path = paths.next();
    if (not path or (not best.empty() and path->length() > best.front().length())) {
      break;
    }
    if (estimates.feasible(*path)) {
      best.push_back(std::move(*path));
    }
  }
  if (best.empty()) {
    return std::nullopt;
  }
  return pick_uniform(best, rng);
}

std::optional<CandidatePath> select_knowledge_aware(
    const PolicySpec&        spec,
    const NetworkGraph&      graph,
    const EdgeAvailability&  available,
    const FidelityEstimator& estimates,
    const QualityAssignment* quality,
    NodeId                   source,
    NodeId                   destination,
    RandomStream&            rng) {
  if (quality == nullptr or quality->scheme() != QualityScheme::two_class) {
    throw UnsupportedError(
        "knowledge-aware routing needs a two-class quality assignment");
  }
  std::vector<double> costs(graph.repeater_count());
  for (NodeId id = 0; id < costs.size(); ++id) {
    costs[id] = quality->is_high_quality(id) ? spec.ka_costs.high_quality
                                             : spec.ka_costs.low_quality;
  }

  PathEnumerator             paths(graph, available, source, destination, costs);
  std::vector<CandidatePath> best;
  for (std::size_t n = 0; n < spec.k_enum; ++n) {
    auto path = paths.next();
    if (not path) {
      break;
    }
    if (not best.empty()) {
      const double c = *best.front().cost;
      if (std::abs(*path->cost - c) > 1e-9 * std::max(1.0, c)) {
        break;
      }
    }
    if (estimates.feasible(*path)) {
      best.push_back(std::move(*path));
    }
  }
  if (best.empty()) {
    return std::nullopt;
  }
  return pick_uniform(best, rng);
}

std::optional<CandidatePath> select_min_fidelity(const PolicySpec&        spec,
                                                 PathEnumerator&          paths,
                                                 const FidelityEstimator& estimates,
                                                 RandomStream&            rng) {
  std::vector<Scored> feasible;
  for (std::size_t n = 0; n < spec.k; ++n) {
    auto path = paths.next();
    if (not path) {
      break;
    }
    const double value = estimates.estimate(*path);
    if (value >= estimates.threshold()) {
      feasible.push_back({std::move(*path), value});
    }
  }
  if (feasible.empty()) {
    return std::nullopt;
  }

  if (spec.kind == PolicyKind::kx) {
    // candidates arrive by nondecreasing length
    const auto limit = feasible.front().path.length() + spec.x;
    std::erase_if(feasible,
                  [limit](const Scored& s) { return s.path.length() > limit; });
  }
  return pick_min_fidelity(feasible, rng);
}

} // namespace

std::optional<CandidatePath> select_path(const PolicySpec&         spec,
                                         const NetworkGraph&       graph,
                                         const EdgeAvailability&   available,
                                         const FidelityEstimator&  estimates,
                                         const QualityAssignment*  quality,
                                         NodeId                    source,
                                         NodeId                    destination,
                                         RandomStream&             rng) {
  spec.validate();
  if (spec.kind == PolicyKind::knowledge_aware) {
    return select_knowledge_aware(spec, graph, available, estimates, quality,
                                  source, destination, rng);
  }
  PathEnumerator paths(graph, available, source, destination);
  if (spec.kind == PolicyKind::shortest_path) {
    return select_shortest(spec, paths, estimates, rng);
  }
  return select_min_fidelity(spec, paths, estimates, rng);
}

} // namespace qroute
