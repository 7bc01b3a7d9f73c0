// Copyright 2026 The DCAE Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcae/experiment.hpp"

#include <cmath>

#include "catch2/catch_amalgamated.hpp"
#include "test_util.hpp"

using dcae::CopiesSpec;
using dcae::MechanismConfig;
using dcae::Money;
using dcae::PricingStrategy;
using dcae::ScenarioParams;
using dcae::SweepAxis;
using dcae::SweepOptions;
using dcae::TrialResult;

namespace {

ScenarioParams toy_params(std::uint64_t seed = 99) {
  ScenarioParams params;
  params.m = 2;
  params.n = 3;
  params.k_lo = 0;
  params.k_hi = 4;
  params.b_lo = 1;
  params.b_hi = 9;
  params.p_lo = 1;
  params.p_hi = 12;
  params.copies = CopiesSpec::uniform(0, 6);
  params.q_max = 4;
  params.pi_size = 4;
  params.seed = seed;
  return params;
}

MechanismConfig toy_mechanism(const ScenarioParams& params, double epsilon = 0.5,
                              std::uint64_t seed = 7) {
  return MechanismConfig{
      epsilon,
      static_cast<double>(dcae::sensitivity_bound(params.m, params.q_max, params.p_hi)),
      seed};
}

}  // namespace

TEST_CASE("a singleton candidate set collapses every selector") {
  ScenarioParams params = toy_params();
  params.pi_size = 1;
  const TrialResult result = dcae::run_trial(params, toy_mechanism(params), 0);
  CHECK(result.dcae_revenue == result.random_revenue);
  CHECK(result.dcae_revenue == result.best_revenue);
  CHECK(result.dcae_revenue == result.min_revenue);
  CHECK(result.chosen_price_index == 0);
}

TEST_CASE("an overwhelming privacy budget reproduces the Best selector") {
  int unique_max_trials = 0;
  for (std::int64_t trial = 0; unique_max_trials < 40; ++trial) {
    REQUIRE(trial < 4000);
    ScenarioParams params = toy_params(1234);
    params.pi_size = 6;
    MechanismConfig cfg = toy_mechanism(params, 1e9, 5);

    const auto inst = dcae::gen_instance(params, trial);
    const auto pi = dcae::gen_price_candidates(params, trial);
    dcae::PriceCandidateSet set;
    set.candidates = pi;
    for (const auto& p : pi) {
      set.scores.push_back(
          dcae::run_round(inst.bids, inst.catalog, inst.order, p,
                          PricingStrategy::two_tier())
              .revenue);
    }
    const std::size_t best = dcae::select_best(set);
    const bool unique =
        std::count(set.scores.begin(), set.scores.end(), set.scores[best]) == 1;
    if (!unique) continue;
    ++unique_max_trials;

    const TrialResult result = dcae::run_trial(params, cfg, trial);
    REQUIRE(result.chosen_price_index == best);
    REQUIRE(result.dcae_revenue == result.best_revenue);
  }
}

TEST_CASE("trial results sandwich between the extremes of the candidate set") {
  const ScenarioParams params = toy_params(555);
  const MechanismConfig cfg = toy_mechanism(params);
  for (std::int64_t trial = 0; trial < 200; ++trial) {
    const TrialResult r = dcae::run_trial(params, cfg, trial);
    REQUIRE(r.min_revenue <= r.dcae_revenue);
    REQUIRE(r.dcae_revenue <= r.best_revenue);
    REQUIRE(r.min_revenue <= r.random_revenue);
    REQUIRE(r.random_revenue <= r.best_revenue);
    REQUIRE(r.dcae_satisfaction >= 0.0);
    REQUIRE(r.dcae_satisfaction <= 1.0);
  }
}

TEST_CASE("trials match the brute-force oracle exactly") {
  dcae::RandomStream stream(808);
  int checked = 0;
  for (std::int64_t trial = 0; trial < 250; ++trial) {
    ScenarioParams params = toy_params(777 + static_cast<std::uint64_t>(trial));
    params.m = static_cast<int>(stream.uniform_int(1, 3));
    params.n = static_cast<int>(stream.uniform_int(1, 6));
    params.pi_size = static_cast<int>(stream.uniform_int(1, 20));

    const auto inst = dcae::gen_instance(params, trial);
    const auto pi = dcae::gen_price_candidates(params, trial);

    std::vector<Money> scores;
    for (const auto& p : pi) {
      scores.push_back(dcae::run_round(inst.bids, inst.catalog, inst.order, p,
                                       PricingStrategy::two_tier())
                           .revenue);
    }

    const auto oracle = dcae::brute_force_oracle(inst.catalog, inst.bids, inst.order, pi,
                                                 PricingStrategy::two_tier());
    REQUIRE(oracle.scores == scores);

    dcae::PriceCandidateSet set;
    set.candidates = pi;
    set.scores = scores;
    REQUIRE(oracle.best_index == dcae::select_best(set));
    REQUIRE(oracle.min_index == dcae::select_worst(set));
    ++checked;
  }
  CHECK(checked == 250);
}

TEST_CASE("the oracle refuses non-toy instances") {
  ScenarioParams params = toy_params();
  params.n = 9;
  const auto inst = dcae::gen_instance(params, 0);
  const auto pi = dcae::gen_price_candidates(params, 0);
  CHECK_THROWS_AS(dcae::brute_force_oracle(inst.catalog, inst.bids, inst.order, pi,
                                           PricingStrategy::two_tier()),
                  dcae::ConfigError);
}

TEST_CASE("oracle handles constant and empty-winner score tables") {
  dcae::DatasetCatalog catalog{{0, 0}};
  dcae::BidSet bids;
  bids.bids.push_back(dcae_test::make_bid({1, 1}, {5, 5}));
  dcae::AllocationOrder order{{0}};
  const std::vector<dcae::PriceVector> pi{{{1, 1}}, {{1, 1}}, {{1, 1}}};

  const auto oracle =
      dcae::brute_force_oracle(catalog, bids, order, pi, PricingStrategy::two_tier());
  CHECK(oracle.scores == std::vector<Money>{0, 0, 0});
  CHECK(oracle.best_index == 0);
  CHECK(oracle.min_index == 0);
}

TEST_CASE("parallel trial execution reproduces the serial results") {
  const ScenarioParams params = toy_params(31);
  const MechanismConfig cfg = toy_mechanism(params);
  const auto serial = dcae::run_trials(params, cfg, 64, 1);
  const auto parallel = dcae::run_trials(params, cfg, 64, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].dcae_revenue == parallel[i].dcae_revenue);
    REQUIRE(serial[i].random_revenue == parallel[i].random_revenue);
    REQUIRE(serial[i].best_revenue == parallel[i].best_revenue);
    REQUIRE(serial[i].min_revenue == parallel[i].min_revenue);
    REQUIRE(serial[i].chosen_price_index == parallel[i].chosen_price_index);
    REQUIRE(serial[i].dcae_satisfaction == parallel[i].dcae_satisfaction);
  }
}

TEST_CASE("a one-value one-trial sweep equals that single trial") {
  const ScenarioParams params = toy_params(64);
  MechanismConfig cfg = toy_mechanism(params, 0.8);

  SweepOptions options;
  options.trials_per_value = 1;
  const auto sweep =
      dcae::run_sweep(params, cfg, SweepAxis::Epsilon, {0.8}, options);

  cfg.epsilon = 0.8;
  const TrialResult single = dcae::run_trial(params, cfg, 0);
  REQUIRE(sweep.axis_values.size() == 1);
  CHECK(sweep.dcae_revenue_mean[0] == static_cast<double>(single.dcae_revenue));
  CHECK(sweep.random_revenue_mean[0] == static_cast<double>(single.random_revenue));
  CHECK(sweep.best_revenue_mean[0] == static_cast<double>(single.best_revenue));
  CHECK(sweep.min_revenue_mean[0] == static_cast<double>(single.min_revenue));
  CHECK(sweep.dcae_satisfaction_mean[0] == single.dcae_satisfaction);
}

TEST_CASE("sweep axes override the right parameter") {
  const ScenarioParams params = toy_params(12);
  const MechanismConfig cfg = toy_mechanism(params);
  SweepOptions options;
  options.trials_per_value = 3;

  const auto by_m = dcae::run_sweep(params, cfg, SweepAxis::TypeCount, {1, 2, 3}, options);
  CHECK(by_m.axis == "m");
  CHECK(by_m.dcae_revenue_mean.size() == 3);

  const auto by_k = dcae::run_sweep(params, cfg, SweepAxis::Copies, {2, 5}, options);
  CHECK(by_k.axis == "copies");
  CHECK(by_k.axis_values == std::vector<double>{2, 5});

  CHECK_THROWS_AS(
      dcae::run_sweep(params, cfg, SweepAxis::TypeCount, {2.5}, options),
      dcae::ConfigError);
  CHECK_THROWS_AS(
      dcae::run_sweep(params, cfg, SweepAxis::Epsilon, {-0.1}, options),
      dcae::ConfigError);
  CHECK_THROWS_AS(dcae::run_sweep(params, cfg, SweepAxis::Epsilon, {}, options),
                  dcae::ConfigError);
}

TEST_CASE("sweep reproducibility") {
  const ScenarioParams params = toy_params(2020);
  const MechanismConfig cfg = toy_mechanism(params);
  SweepOptions options;
  options.trials_per_value = 8;
  const auto a = dcae::run_sweep(params, cfg, SweepAxis::Epsilon, {0.2, 0.6, 1.0}, options);
  options.threads = 3;
  const auto b = dcae::run_sweep(params, cfg, SweepAxis::Epsilon, {0.2, 0.6, 1.0}, options);
  CHECK(a.dcae_revenue_mean == b.dcae_revenue_mean);
  CHECK(a.random_revenue_mean == b.random_revenue_mean);
  CHECK(a.best_revenue_mean == b.best_revenue_mean);
  CHECK(a.dcae_satisfaction_mean == b.dcae_satisfaction_mean);
}

TEST_CASE("identical bid sets give a probability ratio of exactly one") {
  // Neighbor pairs where the replacement equals the original are legal, so
  // force them by pinning the request range to a single value: quantities
  // are then always k_hi with prices in a single-point b range.
  ScenarioParams params = toy_params(5);
  params.k_lo = params.k_hi = 2;
  params.b_lo = params.b_hi = 4;
  const MechanismConfig cfg = toy_mechanism(params, 0.4, 11);
  const double ratio = dcae::dp_ratio_check(params, cfg, 20);
  CHECK_THAT(ratio, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("the privacy ratio respects exp(epsilon) on random neighbors") {
  for (double epsilon : {0.2, 1.0}) {
    ScenarioParams params = toy_params(17);
    params.n = 6;
    params.pi_size = 16;
    params.copies = CopiesSpec::constant(3);  // stock below q_max keeps the bound tight
    const MechanismConfig cfg = toy_mechanism(params, epsilon, 23);
    const double ratio = dcae::dp_ratio_check(params, cfg, 100);
    CHECK(ratio <= std::exp(epsilon) * (1.0 + 1e-9));
    CHECK(ratio >= 1.0);
  }
}

TEST_CASE("a single buyer flipping between zero and max stays within the bound") {
  ScenarioParams params = toy_params(29);
  params.n = 1;
  params.pi_size = 12;
  const MechanismConfig cfg = toy_mechanism(params, 0.7, 3);
  const double ratio = dcae::dp_ratio_check(params, cfg, 60);
  CHECK(ratio <= std::exp(0.7) * (1.0 + 1e-9));
}

TEST_CASE("revenue grows with the number of dataset types at desk scale") {
  ScenarioParams params;
  params.m = 2;
  params.n = 50;
  params.k_lo = 0;
  params.k_hi = 10;
  params.b_lo = 1;
  params.b_hi = 10;
  params.p_lo = 1;
  params.p_hi = 10;
  params.copies = CopiesSpec::constant(300);
  params.q_max = 10;
  params.pi_size = 40;
  params.seed = 11;
  const MechanismConfig cfg = toy_mechanism(params, 1.0, 11);

  SweepOptions options;
  options.trials_per_value = 40;
  const std::vector<double> type_counts{2, 4, 6};
  const auto sweep = dcae::run_sweep(params, cfg, SweepAxis::TypeCount, type_counts, options);
  CHECK(dcae_test::spearman_rho(type_counts, sweep.dcae_revenue_mean) > 0.0);
  // more types also mean more stock overall, so the growth is substantial
  CHECK(sweep.dcae_revenue_mean.back() > 2.0 * sweep.dcae_revenue_mean.front());
}

TEST_CASE("dp_ratio_check enforces its instance-size precondition") {
  ScenarioParams params = toy_params();
  params.n = 11;
  CHECK_THROWS_AS(dcae::dp_ratio_check(params, toy_mechanism(params), 5),
                  dcae::ConfigError);
  CHECK_THROWS_AS(dcae::dp_ratio_check(toy_params(), toy_mechanism(toy_params()), 0),
                  dcae::ConfigError);
}
