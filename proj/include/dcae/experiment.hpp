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
//
// Full DCAE trials and parameter sweeps, plus two verification paths that
// deliberately avoid the production code: a naive re-implementation of the
// round arithmetic and an exact probability-ratio check of the privacy
// guarantee.

#ifndef DCAE_EXPERIMENT_HPP
#define DCAE_EXPERIMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "dcae/auction.hpp"
#include "dcae/errors.hpp"
#include "dcae/mechanism.hpp"
#include "dcae/rng.hpp"
#include "dcae/scenario.hpp"
#include "dcae/types.hpp"

namespace dcae {

// Revenues and satisfactions of the three selectors on one trial's candidate
// set, plus the extremes of that set.
struct TrialResult {
  Money dcae_revenue = 0;
  Money random_revenue = 0;
  Money best_revenue = 0;
  Money min_revenue = 0;
  double dcae_satisfaction = 0.0;
  double random_satisfaction = 0.0;
  double best_satisfaction = 0.0;
  std::size_t chosen_price_index = 0;
};

enum class SweepAxis { TypeCount, Copies, Epsilon };

inline const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::TypeCount: return "m";
    case SweepAxis::Copies: return "copies";
    case SweepAxis::Epsilon: return "epsilon";
  }
  return "?";
}

// Per-axis-value means over trials, one entry per axis value.
struct SweepResult {
  std::string axis;
  std::vector<double> axis_values;
  std::vector<double> dcae_revenue_mean;
  std::vector<double> random_revenue_mean;
  std::vector<double> best_revenue_mean;
  std::vector<double> min_revenue_mean;
  std::vector<double> dcae_satisfaction_mean;
  std::vector<double> random_satisfaction_mean;
  std::vector<double> best_satisfaction_mean;
};

struct SweepOptions {
  int trials_per_value = 100;
  int threads = 1;
  // Recompute the sensitivity bound from the effective parameters at each
  // axis value. Off when the caller pinned an explicit sensitivity.
  bool delta_tracks_axis = true;
};

// One experiment: generate the instance and the candidate price vectors,
// score every vector with a full round, then let the exponential mechanism,
// the uniform baseline and the argmax each pick an index.
inline TrialResult run_trial(const ScenarioParams& params, const MechanismConfig& cfg,
                             std::int64_t trial_index) {
  validate(cfg);
  const Instance inst = gen_instance(params, trial_index);
  const PricingStrategy strategy = PricingStrategy::two_tier();

  PriceCandidateSet set;
  set.candidates = gen_price_candidates(params, trial_index);
  set.scores.reserve(set.candidates.size());
  std::vector<double> satisfactions;
  satisfactions.reserve(set.candidates.size());
  for (const PriceVector& p : set.candidates) {
    const RoundOutcome outcome = run_round(inst.bids, inst.catalog, inst.order, p, strategy);
    set.scores.push_back(outcome.revenue);
    satisfactions.push_back(outcome.satisfaction);
  }

  const auto trial = static_cast<std::uint64_t>(trial_index);
  RandomStream em_stream(derive_seed(cfg.seed, trial, "em"));
  RandomStream random_stream(derive_seed(cfg.seed, trial, "random"));

  const SelectionDistribution dist = exp_mechanism_distribution(set, cfg);
  const std::size_t dcae_index = sample_index(dist, em_stream);
  const std::size_t random_index = select_random(set, random_stream);
  const std::size_t best_index = select_best(set);
  const std::size_t min_index = select_worst(set);

  TrialResult result;
  result.dcae_revenue = set.scores[dcae_index];
  result.random_revenue = set.scores[random_index];
  result.best_revenue = set.scores[best_index];
  result.min_revenue = set.scores[min_index];
  result.dcae_satisfaction = satisfactions[dcae_index];
  result.random_satisfaction = satisfactions[random_index];
  result.best_satisfaction = satisfactions[best_index];
  result.chosen_price_index = dcae_index;
  return result;
}

// trial_count independent trials with indices [first_index, first_index +
// trial_count). Trials are pure functions of (params.seed, trial_index,
// cfg.seed), so the parallel schedule cannot change the results.
inline std::vector<TrialResult> run_trials(const ScenarioParams& params,
                                           const MechanismConfig& cfg, int trial_count,
                                           int threads = 1,
                                           std::int64_t first_index = 0) {
  if (trial_count < 0) throw ConfigError("run_trials: negative trial count");
  std::vector<TrialResult> results(static_cast<std::size_t>(trial_count));
  if (trial_count == 0) return results;

  threads = std::clamp(threads, 1, 256);
  if (threads == 1) {
    for (int t = 0; t < trial_count; ++t) {
      results[static_cast<std::size_t>(t)] = run_trial(params, cfg, first_index + t);
    }
    return results;
  }

  std::vector<std::future<void>> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w]() {
      for (int t = w; t < trial_count; t += threads) {
        results[static_cast<std::size_t>(t)] = run_trial(params, cfg, first_index + t);
      }
    }));
  }
  for (auto& worker : workers) worker.get();
  return results;
}

namespace detail {

// Plain IEEE double accumulation keeps the emitted means bit-identical
// across platforms; revenue sums stay far below 2^53, so they are exact.
inline double mean_of(const std::vector<TrialResult>& trials,
                      Money TrialResult::*field) {
  double sum = 0.0;
  for (const TrialResult& t : trials) sum += static_cast<double>(t.*field);
  return sum / static_cast<double>(trials.size());
}

inline double mean_of(const std::vector<TrialResult>& trials,
                      double TrialResult::*field) {
  double sum = 0.0;
  for (const TrialResult& t : trials) sum += t.*field;
  return sum / static_cast<double>(trials.size());
}

}  // namespace detail

// Sweep one parameter and aggregate per-value means. Values on the m and
// copies axes must be positive integers. Each value gets its own disjoint
// block of trial indices so no two points share random streams.
inline SweepResult run_sweep(const ScenarioParams& base, const MechanismConfig& cfg,
                             SweepAxis axis, const std::vector<double>& values,
                             const SweepOptions& options = {}) {
  if (values.empty()) throw ConfigError("run_sweep: no axis values");
  if (options.trials_per_value <= 0) {
    throw ConfigError("run_sweep: trials_per_value must be positive");
  }
  validate(base);
  validate(cfg);

  SweepResult result;
  result.axis = axis_name(axis);
  result.axis_values = values;

  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    const double value = values[vi];
    ScenarioParams params = base;
    MechanismConfig mech = cfg;
    switch (axis) {
      case SweepAxis::TypeCount: {
        if (value < 1 || value != std::floor(value)) {
          throw ConfigError("run_sweep: m values must be positive integers");
        }
        params.m = static_cast<int>(value);
        break;
      }
      case SweepAxis::Copies: {
        if (value < 0 || value != std::floor(value)) {
          throw ConfigError("run_sweep: copies values must be non-negative integers");
        }
        params.copies = CopiesSpec::constant(static_cast<std::int64_t>(value));
        break;
      }
      case SweepAxis::Epsilon: {
        if (!(value > 0.0)) throw ConfigError("run_sweep: epsilon values must be positive");
        mech.epsilon = value;
        break;
      }
    }
    if (options.delta_tracks_axis) {
      mech.delta_sensitivity =
          static_cast<double>(sensitivity_bound(params.m, params.q_max, params.p_hi));
    }

    const std::int64_t first_index =
        static_cast<std::int64_t>(vi) * options.trials_per_value;
    const std::vector<TrialResult> trials =
        run_trials(params, mech, options.trials_per_value, options.threads, first_index);

    result.dcae_revenue_mean.push_back(detail::mean_of(trials, &TrialResult::dcae_revenue));
    result.random_revenue_mean.push_back(detail::mean_of(trials, &TrialResult::random_revenue));
    result.best_revenue_mean.push_back(detail::mean_of(trials, &TrialResult::best_revenue));
    result.min_revenue_mean.push_back(detail::mean_of(trials, &TrialResult::min_revenue));
    result.dcae_satisfaction_mean.push_back(
        detail::mean_of(trials, &TrialResult::dcae_satisfaction));
    result.random_satisfaction_mean.push_back(
        detail::mean_of(trials, &TrialResult::random_satisfaction));
    result.best_satisfaction_mean.push_back(
        detail::mean_of(trials, &TrialResult::best_satisfaction));
  }
  return result;
}

struct OracleResult {
  std::vector<Money> scores;
  std::size_t best_index = 0;
  std::size_t min_index = 0;
};

// Naive re-computation of the whole score table by literal transcription of
// the payment, candidacy, allocation and revenue definitions. Shares no code
// with run_round beyond integer arithmetic, and refuses anything but toy
// sizes so it stays obviously correct.
inline OracleResult brute_force_oracle(const DatasetCatalog& catalog, const BidSet& bids,
                                       const AllocationOrder& order,
                                       const std::vector<PriceVector>& price_vectors,
                                       const PricingStrategy& strategy) {
  const std::size_t n = bids.bids.size();
  const std::size_t m = catalog.copies.size();
  if (n > 8 || m > 4 || price_vectors.size() > 64 || price_vectors.empty()) {
    throw ConfigError("oracle: instance exceeds toy-size limits (n<=8, m<=4, |Pi|<=64)");
  }

  OracleResult result;
  result.scores.reserve(price_vectors.size());

  for (const PriceVector& p : price_vectors) {
    // Candidates: total bid covers the rule's floor; disinterested buyers
    // never participate.
    std::vector<bool> candidate(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t total_bid_j = 0;
      std::int64_t payment_j = 0;
      std::int64_t units_j = 0;
      for (std::size_t i = 0; i < m; ++i) {
        total_bid_j += bids.bids[j].quantities[i] * bids.bids[j].unit_prices[i];
        payment_j += bids.bids[j].quantities[i] * p.prices[i];
        units_j += bids.bids[j].quantities[i];
      }
      if (units_j == 0) continue;
      switch (strategy.rule) {
        case PricingRule::TwoTier:
          candidate[j] = total_bid_j >= payment_j;
          break;
        case PricingRule::TotalPrice:
          candidate[j] = total_bid_j >= strategy.threshold;
          break;
        case PricingRule::AverageUnitPrice:
          candidate[j] = total_bid_j >= strategy.threshold * units_j;
          break;
      }
    }

    // Greedy allocation in the pre-drawn order.
    std::vector<std::int64_t> remaining = catalog.copies;
    std::vector<bool> winner(n, false);
    for (BuyerId id : order.order) {
      const auto j = static_cast<std::size_t>(id);
      if (!candidate[j]) continue;
      bool fits = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (bids.bids[j].quantities[i] > remaining[i]) fits = false;
      }
      if (!fits) continue;
      for (std::size_t i = 0; i < m; ++i) remaining[i] -= bids.bids[j].quantities[i];
      winner[j] = true;
    }

    std::int64_t rev = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!winner[j]) continue;
      for (std::size_t i = 0; i < m; ++i) {
        rev += p.prices[i] * bids.bids[j].quantities[i];
      }
    }
    result.scores.push_back(rev);
  }

  for (std::size_t i = 1; i < result.scores.size(); ++i) {
    if (result.scores[i] > result.scores[result.best_index]) result.best_index = i;
    if (result.scores[i] < result.scores[result.min_index]) result.min_index = i;
  }
  return result;
}

namespace detail {

// log(sum(exp(coeff * s_i))) in extended precision.
inline long double log_sum_exp(const std::vector<Money>& scores, long double coeff) {
  Money max_score = scores.front();
  for (Money s : scores) max_score = std::max(max_score, s);
  long double sum = 0.0L;
  for (Money s : scores) {
    sum += std::exp(coeff * static_cast<long double>(s - max_score));
  }
  return coeff * static_cast<long double>(max_score) + std::log(sum);
}

}  // namespace detail

// Exact privacy check: build neighboring bid sets (one buyer's whole bid
// replaced by a fresh legal bid), evaluate both selection distributions
// analytically under identical candidates and order, and return the largest
// probability ratio seen across outcomes, pairs and both directions. The
// guarantee puts this at exp(epsilon) or below.
inline double dp_ratio_check(const ScenarioParams& params, const MechanismConfig& cfg,
                             int pairs) {
  validate(params);
  validate(cfg);
  if (pairs <= 0) throw ConfigError("dp_ratio_check: pairs must be positive");
  if (params.n > 10) {
    throw ConfigError("dp_ratio_check: exact distributions need a small instance (n <= 10)");
  }

  const PricingStrategy strategy = PricingStrategy::two_tier();
  const long double coeff =
      static_cast<long double>(cfg.epsilon) / (2.0L * static_cast<long double>(cfg.delta_sensitivity));

  long double max_abs_log_ratio = 0.0L;
  for (int pair = 0; pair < pairs; ++pair) {
    const Instance inst = gen_instance(params, pair);
    const std::vector<PriceVector> price_vectors = gen_price_candidates(params, pair);

    RandomStream neighbor_stream(
        derive_seed(cfg.seed, static_cast<std::uint64_t>(pair), "neighbor"));
    BidSet neighbor_bids = inst.bids;
    const auto victim = static_cast<std::size_t>(
        neighbor_stream.uniform_int(0, params.n - 1));
    for (int i = 0; i < params.m; ++i) {
      const std::int64_t k = neighbor_stream.uniform_int(params.k_lo, params.k_hi);
      neighbor_bids.bids[victim].quantities[static_cast<std::size_t>(i)] = k;
      neighbor_bids.bids[victim].unit_prices[static_cast<std::size_t>(i)] =
          k > 0 ? neighbor_stream.uniform_int(params.b_lo, params.b_hi) : 0;
    }

    std::vector<Money> scores_a, scores_b;
    scores_a.reserve(price_vectors.size());
    scores_b.reserve(price_vectors.size());
    for (const PriceVector& p : price_vectors) {
      scores_a.push_back(run_round(inst.bids, inst.catalog, inst.order, p, strategy).revenue);
      scores_b.push_back(
          run_round(neighbor_bids, inst.catalog, inst.order, p, strategy).revenue);
    }

    const long double lse_a = detail::log_sum_exp(scores_a, coeff);
    const long double lse_b = detail::log_sum_exp(scores_b, coeff);
    for (std::size_t i = 0; i < scores_a.size(); ++i) {
      const long double log_ratio =
          coeff * static_cast<long double>(scores_a[i] - scores_b[i]) + lse_b - lse_a;
      max_abs_log_ratio = std::max(max_abs_log_ratio, std::abs(log_ratio));
    }
  }
  return static_cast<double>(std::exp(max_abs_log_ratio));
}

}  // namespace dcae

#endif  // DCAE_EXPERIMENT_HPP
