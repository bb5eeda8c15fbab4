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

#include "qroute/engine.hpp"

#include "qroute/quality.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace qroute {

std::size_t PeriodOutcome::served_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const PairRecord& r) {
        return r.status == PairStatus::served;
      }));
}

std::size_t PeriodOutcome::blocked_count() const {
  return records.size() - served_count();
}

PeriodOutcome run_period(const NetworkGraph&          graph,
                         const FidelityOracle&        oracle,
                         const PolicySpec&            spec,
                         std::span<const std::size_t> order,
                         RandomStream&                rng) {
  EdgeAvailability available(graph);
  PeriodOutcome    outcome;
  outcome.records.reserve(order.size());

  for (std::size_t position = 0; position < order.size(); ++position) {
    const auto& pair = graph.pairs()[order[position]];
    PairRecord  record;
    record.pair_id = order[position];
    record.order   = position + 1;

    auto path = select_path(spec, graph, available, oracle, &oracle.quality(),
                            pair.source, pair.destination, rng);
    if (path) {
      available.consume_path(graph, *path);
      record.status        = PairStatus::served;
      record.fidelity_true = oracle.exact(*path);
      record.fidelity_est  = oracle.estimate(*path);
      record.path          = std::move(path);
    }
    outcome.records.push_back(std::move(record));
  }
  outcome.consumed = available.consumed();
  return outcome;
}

namespace {

// One topology replica: (n_sd, beta, topology sample).
struct Unit {
  std::size_t           n_sd_index;
  std::size_t           beta_index;
  std::optional<double> beta;
  std::size_t           replica_topo;
};

using SortKey = std::array<std::size_t, 8>;

struct KeyedRow {
  SortKey   key;
  ResultRow row;
};

struct UnitOutput {
  std::vector<KeyedRow> rows;
  EdgeRecord            edges;
};

UnitOutput run_unit(const ExperimentConfig& config,
                    std::uint64_t           master_seed,
                    const Unit&             unit) {
  const auto n_sd = config.n_sd[unit.n_sd_index];
  const auto t    = unit.replica_topo;
  const auto& topo = config.topology;

  std::optional<NetworkGraph> repeaters;
  if (topo.kind == TopologyKind::random) {
    WaxmanParams params;
    params.alpha             = topo.alpha;
    params.beta              = *unit.beta;
    params.n_repeaters       = topo.n_repeaters;
    params.max_attempts      = topo.max_attempts;
    params.edge_count_target = topo.edge_count_target;
    RandomStream rng(derive_seed(master_seed, StreamPurpose::topology,
                                 {unit.beta_index, t}));
    repeaters.emplace(generate_waxman(params, rng));
  } else {
    repeaters.emplace(generate_regular_grid(topo.n_side));
  }
  RandomStream endpoint_rng(derive_seed(master_seed, StreamPurpose::endpoints,
                                        {unit.beta_index, t, n_sd}));
  const auto graph = attach_endpoints(*repeaters, n_sd, endpoint_rng);

  UnitOutput out;
  out.edges = {topo.kind, unit.beta, n_sd, t, graph.repeater_edge_count()};

  const bool two_class = config.quality.scheme == QualityScheme::two_class;
  for (std::size_t qv = 0; qv < config.quality.values.size(); ++qv) {
    const double value = config.quality.values[qv];
    for (std::size_t q = 0; q < config.replicas.n_quality; ++q) {
      RandomStream quality_rng(derive_seed(master_seed, StreamPurpose::quality,
                                           {unit.beta_index, t, q}));
      const auto quality =
          two_class ? assign_two_class(graph, value, quality_rng,
                                       config.quality.levels)
                    : assign_continuous(graph, value, quality_rng,
                                        config.quality.levels);

      std::vector<std::size_t> order(n_sd);
      std::iota(order.begin(), order.end(), std::size_t{0});
      RandomStream order_rng(derive_seed(master_seed, StreamPurpose::order,
                                         {unit.beta_index, t, q, n_sd}));
      order_rng.shuffle(order);

      const auto noise_seed = derive_seed(master_seed, StreamPurpose::noise,
                                          {unit.beta_index, t, q});
      const auto tie_seed   = derive_seed(master_seed, StreamPurpose::tie_break,
                                          {unit.beta_index, t, q, n_sd});

      for (std::size_t li = 0; li < config.lambda.size(); ++li) {
        const FidelityOracle oracle(quality, config.fidelity,
                                    NoiseModel{config.lambda[li], noise_seed});
        for (std::size_t pi = 0; pi < config.policies.size(); ++pi) {
          const auto& spec = config.policies[pi];
          RandomStream tie_rng(tie_seed);
          const auto   outcome = run_period(graph, oracle, spec, order, tie_rng);

          for (const auto& record : outcome.records) {
            ResultRow row;
            row.policy   = spec.name();
            row.topology = topo.kind;
            if (two_class) {
              row.xi = value;
            } else {
              row.a = value;
            }
            row.beta            = unit.beta;
            row.lambda          = config.lambda[li];
            row.n_sd            = n_sd;
            row.replica_topo    = t;
            row.replica_quality = q;
            row.order_index     = record.order;
            row.pair_id         = record.pair_id;
            row.status          = record.status;
            if (record.path) {
              row.path_len = record.path->length();
            }
            row.fidelity_true = record.fidelity_true;
            row.fidelity_est  = record.fidelity_est;
            out.rows.push_back({{unit.n_sd_index, unit.beta_index, qv, li, pi, t,
                                 q, record.order},
                                std::move(row)});
          }
        }
      }
    }
  }
  return out;
}

} // namespace

ExperimentResults run_experiment(const ExperimentConfig& config,
                                 std::uint64_t           master_seed,
                                 unsigned                jobs) {
  config.validate();

  std::vector<Unit> units;
  const auto        betas = config.beta_points();
  for (std::size_t ni = 0; ni < config.n_sd.size(); ++ni) {
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
      for (std::size_t t = 0; t < config.replicas.n_topo; ++t) {
        units.push_back({ni, bi, betas[bi], t});
      }
    }
  }

  std::vector<UnitOutput> outputs(units.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr       failure;
  std::mutex               failure_mutex;
  const auto worker = [&] {
    for (auto i = next++; i < units.size(); i = next++) {
      try {
        outputs[i] = run_unit(config, master_seed, units[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (not failure) {
          failure = std::current_exception();
        }
        next = units.size();
      }
    }
  };

  const auto thread_count =
      std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(units.size())));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned i = 0; i < thread_count; ++i) {
      threads.emplace_back(worker);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  std::vector<KeyedRow> keyed;
  ExperimentResults     results;
  for (auto& out : outputs) {
    std::move(out.rows.begin(), out.rows.end(), std::back_inserter(keyed));
    results.edges.push_back(out.edges);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const KeyedRow& a, const KeyedRow& b) { return a.key < b.key; });
  results.rows.reserve(keyed.size());
  for (auto& k : keyed) {
    results.rows.push_back(std::move(k.row));
  }
  return results;
}

} // namespace qroute
