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

#include "qroute/results_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace qroute {
namespace {

std::vector<ResultRow> sample_rows() {
  ResultRow served;
  served.policy          = "kx1";
  served.xi              = 0.8;
  served.beta            = 0.275;
  served.n_sd            = 5;
  served.replica_topo    = 3;
  served.replica_quality = 14;
  served.order_index     = 2;
  served.pair_id         = 4;
  served.status          = PairStatus::served;
  served.path_len        = 7;
  served.fidelity_true   = 0.875;
  served.fidelity_est    = 0.5;

  ResultRow blocked = served;
  blocked.policy        = "ka";
  blocked.topology      = TopologyKind::regular;
  blocked.beta          = std::nullopt;
  blocked.lambda        = 8.0;
  blocked.status        = PairStatus::blocked;
  blocked.path_len      = std::nullopt;
  blocked.fidelity_true = std::nullopt;
  blocked.fidelity_est  = std::nullopt;
  return {served, blocked};
}

TEST(ResultsIoTest, RawLayout) {
  std::ostringstream out;
  write_raw_csv(out, sample_rows());
  EXPECT_EQ(out.str(),
            "policy,topology,xi,a,beta,lambda,n_sd,replica_topo,replica_quality,"
            "order_index,pair_id,status,path_len,fidelity_true,fidelity_est\n"
            "kx1,random,0.8,,0.275,,5,3,14,2,4,served,7,0.875,0.5\n"
            "ka,regular,0.8,,,8,5,3,14,2,4,blocked,,,\n");
}

TEST(ResultsIoTest, RawRoundTrip) {
  std::stringstream text;
  write_raw_csv(text, sample_rows());
  EXPECT_EQ(read_raw_csv(text), sample_rows());
}

TEST(ResultsIoTest, NineSignificantDigitsAreStable) {
  EXPECT_EQ(format_real(0.94896537888888889), "0.948965379");
  EXPECT_EQ(format_real(1.0), "1");
  EXPECT_EQ(format_real(0.004), "0.004");

  auto rows = sample_rows();
  rows[0].fidelity_true = 0.94896537888888889;
  std::stringstream first;
  write_raw_csv(first, rows);
  const auto        text = first.str();
  std::stringstream second;
  write_raw_csv(second, read_raw_csv(first));
  EXPECT_EQ(second.str(), text);
}

TEST(ResultsIoTest, EdgesRoundTrip) {
  const std::vector<EdgeRecord> edges{{TopologyKind::random, 0.275, 5, 0, 41},
                                      {TopologyKind::regular, std::nullopt, 5, 1, 45}};
  std::stringstream text;
  write_edges_csv(text, edges);
  EXPECT_EQ(text.str(),
            "topology,beta,n_sd,replica_topo,edge_count\n"
            "random,0.275,5,0,41\n"
            "regular,,5,1,45\n");
  EXPECT_EQ(read_edges_csv(text), edges);
}

TEST(ResultsIoTest, AggregatedLayout) {
  GridKey key{"sp", TopologyKind::random, 0.5, std::nullopt, 0.275, std::nullopt, 5};
  const std::vector<MetricRow> metrics{{key, "bp", 0.125, 0.01}, {key, "jain", 0.9, {}}};
  std::ostringstream           out;
  write_aggregated_csv(out, metrics);
  EXPECT_EQ(out.str(),
            "policy,topology,xi,a,beta,lambda,n_sd,metric,value,ci_half\n"
            "sp,random,0.5,,0.275,,5,bp,0.125,0.01\n"
            "sp,random,0.5,,0.275,,5,jain,0.9,\n");
}

TEST(ResultsIoTest, PmfAndOrderLayouts) {
  GridKey key{"ksp", TopologyKind::regular, 0.9, std::nullopt, std::nullopt, std::nullopt, 5};
  std::ostringstream pmf;
  write_pmf_csv(pmf, std::vector<PmfRow>{{key, 9, 0.25}});
  EXPECT_EQ(pmf.str(),
            "policy,topology,xi,a,beta,lambda,n_sd,path_len,probability\n"
            "ksp,regular,0.9,,,,5,9,0.25\n");

  std::ostringstream  orders;
  DistributionSummary s{2, 0.75, 0.5, 0.525, 0.625, 0.75, 0.875, 0.975, 1.0};
  write_order_csv(orders, std::vector<OrderRow>{{key, 1, s}});
  EXPECT_EQ(orders.str(),
            "policy,topology,xi,a,beta,lambda,n_sd,theta,count,mean,min,q05,q25,median,"
            "q75,q95,max\n"
            "ksp,regular,0.9,,,,5,1,2,0.75,0.5,0.525,0.625,0.75,0.875,0.975,1\n");
}

TEST(ResultsIoTest, ErrorsNameTheLine) {
  std::stringstream bad_header("policy,topology\n");
  EXPECT_THROW(read_raw_csv(bad_header), CsvError);

  std::stringstream empty;
  EXPECT_THROW(read_raw_csv(empty), CsvError);

  std::stringstream text;
  write_raw_csv(text, sample_rows());
  auto body = text.str();
  body.replace(body.find("served"), 6, "maybe");
  std::stringstream broken(body);
  try {
    read_raw_csv(broken);
    FAIL() << "accepted a bad status";
  } catch (const CsvError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }

  std::stringstream short_row(std::string(kRawHeader) + "\nsp,random,0.5\n");
  EXPECT_THROW(read_raw_csv(short_row), CsvError);
}

TEST(ResultsIoTest, HeaderOnlyIsEmpty) {
  std::stringstream text(std::string(kRawHeader) + "\r\n");
  EXPECT_TRUE(read_raw_csv(text).empty());
}

} // namespace
} // namespace qroute
