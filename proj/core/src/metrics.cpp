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

#include "qroute/metrics.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace qroute {

double student_t_quantile(double probability, double degrees_of_freedom) {
  if (not(degrees_of_freedom > 0) or not(probability > 0 and probability < 1)) {
    throw std::invalid_argument("student_t_quantile: bad arguments");
  }
  const boost::math::students_t dist(degrees_of_freedom);
  return boost::math::quantile(dist, probability);
}

MeanCi mean_with_ci(std::span<const double> samples, double confidence) {
  MeanCi out;
  out.samples = samples.size();
  if (samples.empty()) {
    return out;
  }
  const double n = static_cast<double>(samples.size());
  out.mean       = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  if (samples.size() < 2) {
    return out;
  }
  double ss = 0;
  for (const auto x : samples) {
    ss += (x - out.mean) * (x - out.mean);
  }
  const double stddev = std::sqrt(ss / (n - 1));
  out.ci_half =
      student_t_quantile(0.5 + confidence / 2, n - 1) * stddev / std::sqrt(n);
  return out;
}

namespace {

using ReplicaId = std::pair<std::size_t, std::size_t>;

// Rows grouped by (replica_topo, replica_quality) in first-appearance order.
std::vector<std::vector<const ResultRow*>> by_replica(
    std::span<const ResultRow> rows) {
  std::vector<ReplicaId>                     ids;
  std::vector<std::vector<const ResultRow*>> groups;
  std::map<ReplicaId, std::size_t>           index;
  for (const auto& row : rows) {
    const ReplicaId id{row.replica_topo, row.replica_quality};
    auto [it, inserted] = index.try_emplace(id, groups.size());
    if (inserted) {
      groups.emplace_back();
    }
    groups[it->second].push_back(&row);
  }
  return groups;
}

} // namespace

MeanCi blocking_probability(std::span<const ResultRow> rows) {
  if (rows.empty()) {
    throw std::invalid_argument("blocking_probability: no rows");
  }
  std::vector<double> per_replica;
  for (const auto& group : by_replica(rows)) {
    const auto blocked = std::count_if(group.begin(), group.end(), [](const auto* r) {
      return r->status == PairStatus::blocked;
    });
    per_replica.push_back(static_cast<double>(blocked) /
                          static_cast<double>(group.size()));
  }
  return mean_with_ci(per_replica);
}

double bp_per_edge(double bp, double edge_count) {
  if (not(edge_count > 0)) {
    throw std::invalid_argument("bp_per_edge: edge count must be positive");
  }
  return bp / edge_count;
}

std::map<std::size_t, double> path_length_pmf(std::span<const ResultRow> rows) {
  std::map<std::size_t, double> pmf;
  std::size_t                   served = 0;
  for (const auto& row : rows) {
    if (row.status == PairStatus::served and row.path_len) {
      pmf[*row.path_len] += 1;
      ++served;
    }
  }
  for (auto& [len, p] : pmf) {
    p /= static_cast<double>(served);
  }
  return pmf;
}

std::optional<double> jain_index(std::span<const double> counts) {
  double sum = 0;
  double sum_sq = 0;
  for (const auto x : counts) {
    sum += x;
    sum_sq += x * x;
  }
  if (counts.empty() or sum_sq == 0) {
    return std::nullopt;
  }
  return sum * sum / (static_cast<double>(counts.size()) * sum_sq);
}

std::vector<double> served_counts(std::span<const ResultRow> rows) {
  std::map<std::size_t, double> counts;
  for (const auto& row : rows) {
    counts[row.pair_id] += row.status == PairStatus::served ? 1.0 : 0.0;
  }
  std::vector<double> out;
  for (const auto& [pair, count] : counts) {
    out.push_back(count);
  }
  return out;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw std::invalid_argument("quantile of an empty sample");
  }
  const double h  = p * static_cast<double>(sorted.size() - 1);
  const auto   lo = static_cast<std::size_t>(std::floor(h));
  const auto   hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::map<std::size_t, DistributionSummary> fidelity_by_order(
    std::span<const ResultRow> rows) {
  std::map<std::size_t, std::vector<double>> samples;
  for (const auto& row : rows) {
    if (row.status == PairStatus::served and row.fidelity_true) {
      samples[row.order_index].push_back(*row.fidelity_true);
    }
  }
  std::map<std::size_t, DistributionSummary> out;
  for (auto& [theta, values] : samples) {
    std::sort(values.begin(), values.end());
    DistributionSummary s;
    s.count  = values.size();
    s.mean   = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    s.min    = values.front();
    s.q05    = quantile_sorted(values, 0.05);
    s.q25    = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q75    = quantile_sorted(values, 0.75);
    s.q95    = quantile_sorted(values, 0.95);
    s.max    = values.back();
    out[theta] = s;
  }
  return out;
}

GammaFit fit_gamma(std::span<const BpePoint> points, std::size_t baseline) {
  if (baseline >= points.size()) {
    throw std::invalid_argument("fit_gamma: baseline index out of range");
  }
  const auto& base = points[baseline];
  if (not(base.bpe > 0 and base.edge_count > 0)) {
    throw std::invalid_argument("fit_gamma: baseline bpe must be positive");
  }

  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) {
    if (p.bpe > 0 and p.edge_count > 0) {
      xy.emplace_back(std::log(base.edge_count / p.edge_count),
                      std::log(p.bpe / base.bpe));
    }
  }
  if (xy.size() < 2) {
    throw std::invalid_argument("fit_gamma: fewer than two usable points");
  }

  double sxx = 0;
  double sxy = 0;
  double mean_y = 0;
  for (const auto& [x, y] : xy) {
    sxx += x * x;
    sxy += x * y;
    mean_y += y;
  }
  if (sxx == 0) {
    throw std::invalid_argument("fit_gamma: no spread in link counts");
  }
  mean_y /= static_cast<double>(xy.size());

  GammaFit fit;
  fit.gamma  = sxy / sxx;
  fit.points = xy.size();
  double ss_res = 0;
  double ss_tot = 0;
  for (const auto& [x, y] : xy) {
    ss_res += (y - fit.gamma * x) * (y - fit.gamma * x);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);
  return fit;
}

const MetricRow* ExperimentReport::find(const GridKey& key,
                                        const std::string& metric) const {
  for (const auto& row : metrics) {
    if (row.metric == metric and row.key == key) {
      return &row;
    }
  }
  return nullptr;
}

namespace {

struct GridGroup {
  GridKey                key;
  std::vector<ResultRow> rows;
};

std::vector<GridGroup> by_grid(std::span<const ResultRow> rows) {
  std::vector<GridGroup> groups;
  for (const auto& row : rows) {
    const auto key = grid_key(row);
    // grid points arrive contiguously from the engine; scan back to be safe
    auto it = std::find_if(groups.rbegin(), groups.rend(),
                           [&](const GridGroup& g) { return g.key == key; });
    if (it == groups.rend()) {
      groups.push_back({key, {}});
      groups.back().rows.push_back(row);
    } else {
      it->rows.push_back(row);
    }
  }
  return groups;
}

std::optional<double> mean_edges(std::span<const EdgeRecord> edges,
                                 const GridKey&              key) {
  double      sum = 0;
  std::size_t n   = 0;
  for (const auto& e : edges) {
    if (e.topology == key.topology and e.beta == key.beta and e.n_sd == key.n_sd) {
      sum += static_cast<double>(e.edge_count);
      ++n;
    }
  }
  if (n == 0) {
    return std::nullopt;
  }
  return sum / static_cast<double>(n);
}

std::optional<MeanCi> jain_with_ci(std::span<const ResultRow> rows) {
  const auto pooled = jain_index(served_counts(rows));
  if (not pooled) {
    return std::nullopt;
  }
  std::map<std::size_t, std::vector<ResultRow>> per_topo;
  for (const auto& row : rows) {
    per_topo[row.replica_topo].push_back(row);
  }
  std::vector<double> values;
  for (const auto& [t, subset] : per_topo) {
    if (const auto j = jain_index(served_counts(subset))) {
      values.push_back(*j);
    }
  }
  MeanCi out   = mean_with_ci(values);
  out.mean     = *pooled;
  return out;
}

void add_gamma_rows(std::vector<MetricRow>& metrics) {
  // series = grid key without beta
  std::vector<std::pair<GridKey, std::vector<const MetricRow*>>> series;
  for (const auto& row : metrics) {
    if (row.metric != "bpe" or not row.key.beta) {
      continue;
    }
    auto key = row.key;
    key.beta.reset();
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const auto& s) { return s.first == key; });
    if (it == series.end()) {
      series.push_back({key, {&row}});
    } else {
      it->second.push_back(&row);
    }
  }

  std::vector<MetricRow> extra;
  for (const auto& [key, rows] : series) {
    if (rows.size() < 2) {
      continue;
    }
    std::vector<BpePoint> points;
    for (const auto* bpe_row : rows) {
      const auto* edges_row = static_cast<const MetricRow*>(nullptr);
      for (const auto& m : metrics) {
        if (m.metric == "edges" and m.key == bpe_row->key) {
          edges_row = &m;
          break;
        }
      }
      if (edges_row == nullptr) {
        return;
      }
      points.push_back({edges_row->value, bpe_row->value});
    }
    try {
      const auto fit      = fit_gamma(points, 0);
      auto       row_key  = key;
      row_key.beta        = rows.front()->key.beta;
      extra.push_back({row_key, "gamma", fit.gamma, std::nullopt});
      extra.push_back({row_key, "gamma_r2", fit.r_squared, std::nullopt});
    } catch (const std::invalid_argument&) {
      // not enough positive points for this series
    }
  }
  metrics.insert(metrics.end(), extra.begin(), extra.end());
}

} // namespace

ExperimentReport aggregate(std::span<const ResultRow>  rows,
                           std::span<const EdgeRecord> edges,
                           ReportOptions               options) {
  ExperimentReport report;
  for (const auto& group : by_grid(rows)) {
    const auto& key = group.key;
    const auto  bp  = blocking_probability(group.rows);
    report.metrics.push_back({key, "bp", bp.mean, bp.ci_half});

    if (const auto n_e = mean_edges(edges, key); n_e and *n_e > 0) {
      report.metrics.push_back({key, "bpe", bp_per_edge(bp.mean, *n_e), std::nullopt});
      report.metrics.push_back({key, "edges", *n_e, std::nullopt});
    }

    if (const auto jain = jain_with_ci(group.rows)) {
      report.metrics.push_back({key, "jain", jain->mean, jain->ci_half});
    }

    std::vector<double> lengths;
    std::vector<double> fidelities;
    std::size_t         violations = 0;
    for (const auto& row : group.rows) {
      if (row.status != PairStatus::served) {
        continue;
      }
      if (row.path_len) {
        lengths.push_back(static_cast<double>(*row.path_len));
      }
      if (row.fidelity_true) {
        fidelities.push_back(*row.fidelity_true);
        if (*row.fidelity_true < options.f_threshold) {
          ++violations;
        }
      }
    }
    if (not lengths.empty()) {
      report.metrics.push_back(
          {key, "mean_path_len", mean_with_ci(lengths).mean, std::nullopt});
    }
    if (not fidelities.empty()) {
      report.metrics.push_back(
          {key, "mean_fidelity", mean_with_ci(fidelities).mean, std::nullopt});
      if (key.lambda) {
        report.metrics.push_back({key, "violation_rate",
                                  static_cast<double>(violations) /
                                      static_cast<double>(fidelities.size()),
                                  std::nullopt});
      }
    }

    for (const auto& [len, p] : path_length_pmf(group.rows)) {
      report.pmf.push_back({key, len, p});
    }
    for (const auto& [theta, summary] : fidelity_by_order(group.rows)) {
      report.orders.push_back({key, theta, summary});
    }
  }
  add_gamma_rows(report.metrics);
  return report;
}

} // namespace qroute
