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

#ifndef QROUTE_RESULTS_IO_HPP
#define QROUTE_RESULTS_IO_HPP

#include "qroute/metrics.hpp"
#include "qroute/results.hpp"

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qroute {

inline constexpr std::string_view kRawHeader =
    "policy,topology,xi,a,beta,lambda,n_sd,replica_topo,replica_quality,"
    "order_index,pair_id,status,path_len,fidelity_true,fidelity_est";
inline constexpr std::string_view kEdgesHeader =
    "topology,beta,n_sd,replica_topo,edge_count";
inline constexpr std::string_view kAggregatedHeader =
    "policy,topology,xi,a,beta,lambda,n_sd,metric,value,ci_half";
inline constexpr std::string_view kPmfHeader =
    "policy,topology,xi,a,beta,lambda,n_sd,path_len,probability";
inline constexpr std::string_view kOrderHeader =
    "policy,topology,xi,a,beta,lambda,n_sd,theta,count,mean,min,q05,q25,"
    "median,q75,q95,max";

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nine significant digits ("%.9g").
std::string format_real(double value);

void write_raw_csv(std::ostream& out, std::span<const ResultRow> rows);
// Throws CsvError naming the line on a bad header or row.
std::vector<ResultRow> read_raw_csv(std::istream& in);

void write_edges_csv(std::ostream& out, std::span<const EdgeRecord> edges);
std::vector<EdgeRecord> read_edges_csv(std::istream& in);

void write_aggregated_csv(std::ostream& out, std::span<const MetricRow> rows);
void write_pmf_csv(std::ostream& out, std::span<const PmfRow> rows);
void write_order_csv(std::ostream& out, std::span<const OrderRow> rows);

} // namespace qroute

#endif // QROUTE_RESULTS_IO_HPP
