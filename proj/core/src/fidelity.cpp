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

#include "qroute/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qroute {

void FidelityParams::validate() const {
  if (not(f_init > 0.25 and f_init <= 1)) {
    throw std::invalid_argument("initial link fidelity must be in (1/4, 1]");
  }
  if (not(f_threshold >= 0 and f_threshold <= 1)) {
    throw std::invalid_argument("fidelity threshold must be in [0, 1]");
  }
}

double chain_fidelity(std::span<const double> repeater_eta, double f_init) {
  const double link = link_factor(f_init);
  double       werner = link;
  for (const auto eta : repeater_eta) {
    werner *= swap_factor(eta) * link;
  }
  return 0.25 * (1.0 + 3.0 * werner);
}

namespace {

std::vector<double> interior_eta(const CandidatePath&     path,
                                 const QualityAssignment& quality) {
  if (path.nodes.size() < 2) {
    throw std::invalid_argument("path needs at least one link");
  }
  std::vector<double> eta;
  eta.reserve(path.repeater_count());
  for (const auto id : path.interior()) {
    if (not quality.covers(id)) {
      throw std::invalid_argument("interior node " + std::to_string(id) +
                                  " of " + to_string(path) +
                                  " is not a repeater");
    }
    eta.push_back(quality.eta(id));
  }
  return eta;
}

} // namespace

double path_fidelity(const CandidatePath&     path,
                     const QualityAssignment& quality,
                     const FidelityParams&    params) {
  return chain_fidelity(interior_eta(path, quality), params.f_init);
}

double noise_sigma(const CandidatePath&     path,
                   const QualityAssignment& quality,
                   const FidelityParams&    params,
                   double                   lambda) {
  if (quality.scheme() != QualityScheme::two_class) {
    throw UnsupportedError(
        "fidelity estimation noise is only defined for two-class quality");
  }
  if (not(lambda > 0)) {
    throw std::invalid_argument("noise lambda must be positive");
  }
  auto eta = interior_eta(path, quality);
  if (eta.empty()) {
    return 0;
  }
  const double exact = chain_fidelity(eta, params.f_init);
  const auto&  levels = quality.levels();
  const auto   hq     = std::find(eta.begin(), eta.end(), levels.high);
  if (hq != eta.end()) {
    *hq = levels.low;
  } else {
    eta.front() = levels.high;
  }
  return std::abs(exact - chain_fidelity(eta, params.f_init)) / lambda;
}

FidelityOracle::FidelityOracle(const QualityAssignment& quality,
                               FidelityParams           params,
                               NoiseModel               noise,
                               std::uint64_t            period)
    : quality_(quality)
    , params_(params)
    , noise_(noise)
    , period_(period) {
  params_.validate();
  if (noise_.lambda) {
    if (quality_.scheme() != QualityScheme::two_class) {
      throw UnsupportedError(
          "fidelity estimation noise is only defined for two-class quality");
    }
    if (not(*noise_.lambda > 0)) {
      throw std::invalid_argument("noise lambda must be positive");
    }
  }
}

double FidelityOracle::exact(const CandidatePath& path) const {
  return path_fidelity(path, quality_, params_);
}

double FidelityOracle::estimate(const CandidatePath& path) const {
  const double value = exact(path);
  if (not noise_.lambda) {
    return value;
  }
  const double sigma = noise_sigma(path, quality_, params_, *noise_.lambda);
  if (sigma == 0) {
    return value;
  }
  RandomStream draw(derive_seed(noise_.seed, StreamPurpose::noise,
                                {period_, path_hash(path.nodes)}));
  return std::clamp(value + sigma * draw.normal(), 0.0, 1.0);
}

} // namespace qroute
