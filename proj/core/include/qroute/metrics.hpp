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

#ifndef QROUTE_METRICS_HPP
#define QROUTE_METRICS_HPP

#include "qroute/results.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qroute {

struct MeanCi {
  double                mean = 0;
  // Half-width of the two-sided Student-t interval; unset below 2 samples.
  std::optional<double> ci_half;
  std::size_t           samples = 0;
};

// Quantile of Student's t distribution.
double student_t_quantile(double probability, double degrees_of_freedom);

MeanCi mean_with_ci(std::span<const double> samples, double confidence = 0.95);

/// Blocked fraction per replica (rows sharing replica_topo and
/// replica_quality), averaged over replicas, with the 95% t interval of the
/// replica means. Rows must belong to one grid point.
MeanCi blocking_probability(std::span<const ResultRow> rows);

// Blocking probability normalised by the repeater link count.
double bp_per_edge(double bp, double edge_count);

// Empirical distribution of path_len over served rows; empty without any.
std::map<std::size_t, double> path_length_pmf(std::span<const ResultRow> rows);

// (sum x)^2 / (n sum x^2); unset when every count is zero or none is given.
std::optional<double> jain_index(std::span<const double> counts);

// Served-route count of every pair_id over all rows given.
std::vector<double> served_counts(std::span<const ResultRow> rows);

struct DistributionSummary {
  std::size_t count = 0;
  double      mean = 0;
  double      min = 0;
  double      q05 = 0;
  double      q25 = 0;
  double      median = 0;
  double      q75 = 0;
  double      q95 = 0;
  double      max = 0;
};

// Linear-interpolation quantile (type 7) of sorted data.
double quantile_sorted(std::span<const double> sorted, double p);

// True fidelities of served rows grouped by serving position theta.
std::map<std::size_t, DistributionSummary> fidelity_by_order(
    std::span<const ResultRow> rows);

struct BpePoint {
  double edge_count = 0;
  double bpe = 0;
};

struct GammaFit {
  double      gamma = 0;
  double      r_squared = 0;
  std::size_t points = 0;
};

/// Least-squares fit of log(bpe / bpe_0) = gamma * log(n_0 / n) through the
/// origin, (n_0, bpe_0) being points[baseline]. Points with non-positive
/// bpe or edge count are dropped. Throws std::invalid_argument when the
/// baseline is unusable, fewer than two points remain, or every point has
/// the baseline's edge count.
GammaFit fit_gamma(std::span<const BpePoint> points, std::size_t baseline);

struct MetricRow {
  GridKey               key;
  std::string           metric;
  double                value = 0;
  std::optional<double> ci_half;
};

struct PmfRow {
  GridKey     key;
  std::size_t path_len = 0;
  double      probability = 0;
};

struct OrderRow {
  GridKey             key;
  std::size_t         theta = 0;
  DistributionSummary summary;
};

struct ExperimentReport {
  std::vector<MetricRow> metrics;
  std::vector<PmfRow>    pmf;
  std::vector<OrderRow>  orders;

  // First metric row with this key and name, if any.
  const MetricRow* find(const GridKey& key, const std::string& metric) const;
};

struct ReportOptions {
  // Threshold used for the violation rate of noisy runs.
  double f_threshold = 0.53;
};

/// Aggregates raw rows into per-grid-point metrics, in order of first
/// appearance of each grid point:
///
///   bp             blocking probability, t interval over replicas
///   bpe, edges     bp per repeater link and the mean link count (needs
///                  edge records)
///   jain           Jain index of per-pair served counts pooled over all
///                  replicas; interval over per-topology-replica indices
///   mean_path_len  mean length of served routes
///   mean_fidelity  mean true fidelity of served routes
///   violation_rate served routes whose true fidelity is below threshold
///                  (noisy grid points only)
///   gamma, gamma_r2  link-count scaling exponent across beta values, with
///                  the first beta as baseline (when two or more fit)
ExperimentReport aggregate(std::span<const ResultRow>  rows,
                           std::span<const EdgeRecord> edges,
                           ReportOptions               options = {});

} // namespace qroute

#endif // QROUTE_METRICS_HPP
