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

#ifndef QROUTE_FIDELITY_HPP
#define QROUTE_FIDELITY_HPP

#include "qroute/path.hpp"
#include "qroute/quality.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace qroute {

struct FidelityParams {
  // Werner fidelity of every link-level EPR pair.
  double f_init      = 0.975;
  double f_threshold = 0.53;

  void validate() const;
};

// Raised for combinations the model does not define (e.g. noisy estimates
// under the continuous quality scheme).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// (4F - 1) / 3: Werner parameter of a link.
constexpr double link_factor(double f_init) noexcept {
  return (4.0 * f_init - 1.0) / 3.0;
}

// (4 eta^2 - 1) / 3: depolarising factor of one swap at a repeater.
constexpr double swap_factor(double eta) noexcept {
  return (4.0 * eta * eta - 1.0) / 3.0;
}

/// End-to-end Werner fidelity of a chain of links joined by entanglement
/// swaps at repeaters with the given efficiencies:
///
///   F_p = 1/4 * (1 + 3 * prod_i[swap(eta_i) * link(F)] * link(F))
///
/// One link factor per link (repeaters + 1) and one swap factor per
/// repeater. With no repeaters the result is f_init itself.
double chain_fidelity(std::span<const double> repeater_eta, double f_init);

// Fidelity of a route; interior nodes must be repeaters covered by quality.
double path_fidelity(const CandidatePath&     path,
                     const QualityAssignment& quality,
                     const FidelityParams&    params);

struct NoiseModel {
  // Noise is off when unset; the estimate then equals the exact fidelity.
  std::optional<double> lambda;
  std::uint64_t         seed = 0;
};

/// Standard deviation |F_1 - F_2| / lambda of the estimation noise, where
/// F_1 is the exact fidelity and F_2 the fidelity after demoting one HQ
/// repeater of the path to LQ. Paths without HQ repeaters promote one LQ
/// repeater instead; paths without repeaters get zero.
double noise_sigma(const CandidatePath&     path,
                   const QualityAssignment& quality,
                   const FidelityParams&    params,
                   double                   lambda);

/// What a routing policy is allowed to see: end-to-end fidelity estimates
/// and the threshold they are compared with. Grey-box policies are written
/// against this interface only.
class FidelityEstimator {
 public:
  virtual ~FidelityEstimator() = default;

  virtual double estimate(const CandidatePath& path) const = 0;
  virtual double threshold() const = 0;

  bool feasible(const CandidatePath& path) const {
    return estimate(path) >= threshold();
  }
};

/// Exact fidelities plus optional Gaussian estimation noise.
///
/// The noisy estimate of a path is a pure function of (noise seed, period,
/// path), so repeated queries within a period return the same value no
/// matter in which order candidates are scored. Estimates are clamped to
/// [0, 1].
class FidelityOracle final : public FidelityEstimator {
 public:
  FidelityOracle(const QualityAssignment& quality,
                 FidelityParams           params,
                 NoiseModel               noise  = {},
                 std::uint64_t            period = 0);

  double exact(const CandidatePath& path) const;
  double estimate(const CandidatePath& path) const override;
  double threshold() const override { return params_.f_threshold; }

  const FidelityParams&    params() const noexcept { return params_; }
  const QualityAssignment& quality() const noexcept { return quality_; }
  bool noisy() const noexcept { return noise_.lambda.has_value(); }

 private:
  const QualityAssignment& quality_;
  FidelityParams           params_;
  NoiseModel               noise_;
  std::uint64_t            period_;
};

} // namespace qroute

#endif // QROUTE_FIDELITY_HPP
