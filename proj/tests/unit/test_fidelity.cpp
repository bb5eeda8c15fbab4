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

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace qroute {
namespace {

// Reference values evaluated independently at 40 significant digits.
constexpr double kOneHq      = 0.94896537888888889;
constexpr double kOneLq      = 0.61443333333333333;
constexpr double kTwoLq      = 0.43318848888888889;
constexpr double kHqThenLq   = 0.60134659712148148;
constexpr double kThreeHq    = 0.89966726047074900;
constexpr double kSigmaLam8  = 0.0418165056944444;
constexpr double kTolerance  = 1e-6;

// S, repeaters 0..n-1 in order, D.
CandidatePath chain(std::size_t n) {
  CandidatePath path;
  path.nodes.push_back(static_cast<NodeId>(n));
  for (NodeId i = 0; i < n; ++i) {
    path.nodes.push_back(i);
  }
  path.nodes.push_back(static_cast<NodeId>(n + 1));
  return path;
}

QualityAssignment uniform(std::size_t n, double eta) {
  return QualityAssignment(QualityScheme::two_class, 0, {}, std::vector<double>(n, eta));
}

class PathFidelityTest : public ::testing::Test {
 protected:
  FidelityParams params_;
};

TEST_F(PathFidelityTest, DirectLinkKeepsInitialFidelity) {
  const auto q = uniform(0, 0.999);
  EXPECT_DOUBLE_EQ(path_fidelity(chain(0), q, params_), 0.975);
}

TEST_F(PathFidelityTest, SingleRepeater) {
  EXPECT_NEAR(path_fidelity(chain(1), uniform(1, 0.999), params_), kOneHq, kTolerance);
  EXPECT_NEAR(path_fidelity(chain(1), uniform(1, 0.8), params_), kOneLq, kTolerance);
  // tighter than the acceptance tolerance: double arithmetic is far better
  EXPECT_NEAR(path_fidelity(chain(1), uniform(1, 0.999), params_), kOneHq, 1e-14);
}

TEST_F(PathFidelityTest, MultiRepeater) {
  EXPECT_NEAR(path_fidelity(chain(2), uniform(2, 0.8), params_), kTwoLq, kTolerance);
  EXPECT_NEAR(path_fidelity(chain(3), uniform(3, 0.999), params_), kThreeHq, kTolerance);
  const auto mixed = test::two_class(2, {0});
  EXPECT_NEAR(path_fidelity(chain(2), mixed, params_), kHqThenLq, kTolerance);
}

TEST_F(PathFidelityTest, FeasibilityHorizon) {
  EXPECT_GE(path_fidelity(chain(26), uniform(26, 0.999), params_), params_.f_threshold);
  EXPECT_LT(path_fidelity(chain(27), uniform(27, 0.999), params_), params_.f_threshold);
  EXPECT_GE(path_fidelity(chain(1), uniform(1, 0.8), params_), params_.f_threshold);
  EXPECT_LT(path_fidelity(chain(2), uniform(2, 0.8), params_), params_.f_threshold);

  EXPECT_NEAR(path_fidelity(chain(25), uniform(25, 0.999), params_), 0.5405892, 1e-7);
  EXPECT_NEAR(path_fidelity(chain(26), uniform(26, 0.999), params_), 0.53015419, 1e-8);
  EXPECT_NEAR(path_fidelity(chain(27), uniform(27, 0.999), params_), 0.52009390, 1e-8);
  EXPECT_NEAR(path_fidelity(chain(28), uniform(28, 0.999), params_), 0.5103949, 1e-7);
}

TEST_F(PathFidelityTest, GroupedPowersMatchProduct) {
  RandomStream rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n    = 1 + rng.index(20);
    const auto        n_hq = rng.index(n + 1);
    std::vector<NodeId> hq(n_hq);
    std::iota(hq.begin(), hq.end(), NodeId{0});
    rng.shuffle(hq);
    const auto q = test::two_class(n, hq);

    const double link    = link_factor(params_.f_init);
    const double grouped = 0.25 * (1 + 3 * link *
                                       std::pow(swap_factor(0.999) * link, double(n_hq)) *
                                       std::pow(swap_factor(0.8) * link, double(n - n_hq)));
    const double direct  = path_fidelity(chain(n), q, params_);
    ASSERT_NEAR(direct, grouped, 1e-12 * grouped);
  }
}

TEST_F(PathFidelityTest, StrictlyMonotone) {
  std::vector<double> eta{0.95, 0.9, 0.85};
  const double        base = chain_fidelity(eta, params_.f_init);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    auto lower = eta;
    lower[i] -= 0.01;
    EXPECT_LT(chain_fidelity(lower, params_.f_init), base);
  }
  auto longer = eta;
  longer.push_back(0.999);
  EXPECT_LT(chain_fidelity(longer, params_.f_init), base);
  EXPECT_LT(chain_fidelity(eta, 0.97), base);
}

TEST_F(PathFidelityTest, PerfectElementsArePerfect) {
  const std::vector<double> eta(12, 1.0);
  EXPECT_EQ(chain_fidelity(eta, 1.0), 1.0);
}

TEST_F(PathFidelityTest, RejectsDegenerateAndNonRepeaterPaths) {
  const auto q = uniform(2, 0.9);
  EXPECT_THROW(path_fidelity(CandidatePath{{0}, {}}, q, params_), std::invalid_argument);
  // node 5 is not a repeater of a two-repeater assignment
  EXPECT_THROW(path_fidelity(CandidatePath{{2, 5, 3}, {}}, q, params_),
               std::invalid_argument);
}

TEST_F(PathFidelityTest, ZeroThresholdAcceptsEverything) {
  const auto     q = uniform(30, 0.8);
  FidelityParams loose{0.975, 0.0};
  FidelityOracle oracle(q, loose);
  EXPECT_TRUE(oracle.feasible(chain(30)));
}

TEST_F(PathFidelityTest, FeasibilityOfFixtures) {
  const auto     lq = uniform(2, 0.8);
  FidelityOracle oracle(lq, params_);
  EXPECT_TRUE(oracle.feasible(CandidatePath{{2, 0, 3}, {}}));
  EXPECT_FALSE(oracle.feasible(chain(2)));
}

class NoiseTest : public ::testing::Test {
 protected:
  FidelityParams params_;
};

TEST_F(NoiseTest, SigmaFromOneSubstitution) {
  const auto hq = test::two_class(1, {0});
  const auto lq = test::two_class(1, {});
  EXPECT_NEAR(noise_sigma(chain(1), hq, params_, 8), kSigmaLam8, 1e-12);
  // no HQ repeater: the substitution goes the other way, same magnitude
  EXPECT_NEAR(noise_sigma(chain(1), lq, params_, 8), kSigmaLam8, 1e-12);
  EXPECT_EQ(noise_sigma(chain(0), test::two_class(0, {}), params_, 8), 0.0);
}

TEST_F(NoiseTest, NoNoiseMeansExact) {
  const auto     q = test::two_class(3, {1});
  FidelityOracle oracle(q, params_);
  EXPECT_FALSE(oracle.noisy());
  EXPECT_EQ(oracle.estimate(chain(3)), oracle.exact(chain(3)));
}

TEST_F(NoiseTest, DrawIsFrozenWithinPeriod) {
  const auto     q = test::two_class(3, {0, 2});
  FidelityOracle oracle(q, params_, {8.0, 1234}, 7);
  const double   first = oracle.estimate(chain(3));
  EXPECT_NE(first, oracle.exact(chain(3)));
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(oracle.estimate(chain(3)), first);
  }
  FidelityOracle same(q, params_, {8.0, 1234}, 7);
  EXPECT_EQ(same.estimate(chain(3)), first);
  FidelityOracle next_period(q, params_, {8.0, 1234}, 8);
  EXPECT_NE(next_period.estimate(chain(3)), first);
}

TEST_F(NoiseTest, EstimateErrorScalesWithSigma) {
  const auto   q     = test::two_class(1, {0});
  const double exact = path_fidelity(chain(1), q, params_);
  double       sq    = 0;
  const int    n     = 20000;
  for (int period = 0; period < n; ++period) {
    FidelityOracle oracle(q, params_, {8.0, 99}, static_cast<std::uint64_t>(period));
    const double   err = oracle.estimate(chain(1)) - exact;
    sq += err * err;
  }
  // the clamp at 1 is about 1.2 sigma away, so the spread shrinks a little
  const double rms = std::sqrt(sq / n);
  EXPECT_GT(rms, 0.8 * kSigmaLam8);
  EXPECT_LT(rms, 1.02 * kSigmaLam8);
}

TEST_F(NoiseTest, EstimatesStayInUnitInterval) {
  const auto q = test::two_class(1, {0});
  for (int period = 0; period < 2000; ++period) {
    FidelityOracle oracle(q, params_, {0.05, 5}, static_cast<std::uint64_t>(period));
    const double   est = oracle.estimate(chain(1));
    ASSERT_GE(est, 0.0);
    ASSERT_LE(est, 1.0);
  }
}

TEST_F(NoiseTest, ContinuousSchemeUnsupported) {
  const QualityAssignment q(QualityScheme::continuous, 10, {}, {0.9, 0.95});
  EXPECT_THROW(FidelityOracle(q, params_, {8.0, 1}), UnsupportedError);
  EXPECT_THROW(noise_sigma(chain(2), q, params_, 8), UnsupportedError);
  EXPECT_NO_THROW(FidelityOracle(q, params_));
}

} // namespace
} // namespace qroute
