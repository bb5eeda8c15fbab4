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

#include "qroute/quality.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qroute {

QualityAssignment::QualityAssignment(QualityScheme       scheme,
                                     double              parameter,
                                     EfficiencyLevels    levels,
                                     std::vector<double> repeater_eta)
    : scheme_(scheme)
    , parameter_(parameter)
    , levels_(levels)
    , eta_(std::move(repeater_eta)) {
  for (const auto eta : eta_) {
    if (not(eta > 0 and eta <= 1)) {
      throw std::invalid_argument("efficiency figures must lie in (0,1]");
    }
  }
}

double QualityAssignment::eta(NodeId id) const {
  if (id >= eta_.size()) {
    throw std::out_of_range("node " + std::to_string(id) +
                            " is not a repeater");
  }
  return eta_[id];
}

std::size_t QualityAssignment::high_quality_count() const {
  return static_cast<std::size_t>(
      std::count(eta_.begin(), eta_.end(), levels_.high));
}

std::size_t high_quality_count(double xi, std::size_t n_repeaters) {
  if (not(xi >= 0 and xi <= 1)) {
    throw std::invalid_argument("xi must be in [0,1]");
  }
  return static_cast<std::size_t>(
      std::floor(xi * static_cast<double>(n_repeaters) + 0.5));
}

QualityAssignment assign_two_class(const NetworkGraph& graph,
                                   double              xi,
                                   RandomStream&       rng,
                                   EfficiencyLevels    levels) {
  const auto n     = graph.repeater_count();
  const auto n_hq  = high_quality_count(xi, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);

  std::vector<double> eta(n, levels.low);
  for (std::size_t i = 0; i < n_hq; ++i) {
    eta[order[i]] = levels.high;
  }
  return QualityAssignment(QualityScheme::two_class, xi, levels, std::move(eta));
}

double efficiency_from_draw(double x, double a) { return std::log(x) / a; }

QualityAssignment assign_continuous(const NetworkGraph& graph,
                                    double              a,
                                    RandomStream&       rng,
                                    EfficiencyLevels    levels) {
  if (not(a > 0)) {
    throw std::invalid_argument("continuous bias parameter a must be positive");
  }
  const double lo = std::exp(a * levels.low);
  const double hi = std::exp(a * levels.high);
  std::vector<double> eta(graph.repeater_count());
  for (auto& value : eta) {
    value = std::clamp(efficiency_from_draw(rng.uniform(lo, hi), a), levels.low,
                       levels.high);
  }
  return QualityAssignment(QualityScheme::continuous, a, levels, std::move(eta));
}

std::string quality_to_json(const QualityAssignment& quality) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (NodeId id = 0; id < quality.repeater_count(); ++id) {
    doc[std::to_string(id)] = quality.eta(id);
  }
  return doc.dump(2) + "\n";
}

} // namespace qroute
