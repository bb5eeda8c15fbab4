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

#ifndef QROUTE_QUALITY_HPP
#define QROUTE_QUALITY_HPP

#include "qroute/random.hpp"
#include "qroute/topology.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qroute {

// Measurement efficiency of high- and low-quality repeaters.
struct EfficiencyLevels {
  double high = 0.999;
  double low  = 0.8;
};

enum class QualityScheme { two_class, continuous };

/// Efficiency figure of every repeater in a graph. Devices carry none.
class QualityAssignment {
 public:
  QualityAssignment(QualityScheme       scheme,
                    double              parameter,
                    EfficiencyLevels    levels,
                    std::vector<double> repeater_eta);

  QualityScheme scheme() const noexcept { return scheme_; }
  // xi for the two-class scheme, a for the continuous one.
  double                  parameter() const noexcept { return parameter_; }
  const EfficiencyLevels& levels() const noexcept { return levels_; }

  std::size_t repeater_count() const noexcept { return eta_.size(); }
  bool        covers(NodeId id) const noexcept { return id < eta_.size(); }

  // Throws std::out_of_range for nodes that are not repeaters.
  double eta(NodeId id) const;
  // Only meaningful under the two-class scheme.
  bool        is_high_quality(NodeId id) const { return eta(id) == levels_.high; }
  std::size_t high_quality_count() const;

 private:
  QualityScheme       scheme_;
  double              parameter_;
  EfficiencyLevels    levels_;
  std::vector<double> eta_;
};

// round(xi * n_repeaters), halves rounded up.
std::size_t high_quality_count(double xi, std::size_t n_repeaters);

/// Marks round(xi * n) repeaters, chosen uniformly, as high quality.
///
/// A full random permutation of the repeaters is drawn whatever xi is, and
/// the first round(xi * n) entries become HQ. Assignments drawn from equal
/// seeds are therefore nested across xi values.
QualityAssignment assign_two_class(const NetworkGraph& graph,
                                   double              xi,
                                   RandomStream&       rng,
                                   EfficiencyLevels    levels = {});

// Inverse of the exponential draw: ln(x) / a.
double efficiency_from_draw(double x, double a);

/// eta_i = ln(x_i) / a with x_i ~ U(e^{a eta_l}, e^{a eta_h}); larger a
/// pushes mass toward eta_h.
QualityAssignment assign_continuous(const NetworkGraph& graph,
                                    double              a,
                                    RandomStream&       rng,
                                    EfficiencyLevels    levels = {});

// {"node_id": eta, ...} in node order.
std::string quality_to_json(const QualityAssignment& quality);

} // namespace qroute

#endif // QROUTE_QUALITY_HPP
