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
// Seeded generation of auction instances and candidate price-vector sets.
// Every draw comes from a stream derived from (seed, trial_index, label), so
// trials are independent, reproducible, and safe to generate in parallel.

#ifndef DCAE_SCENARIO_HPP
#define DCAE_SCENARIO_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "dcae/errors.hpp"
#include "dcae/rng.hpp"
#include "dcae/types.hpp"

namespace dcae {

enum class CopiesMode { Uniform, Constant, CompetitiveOne };

// How the per-type stock is drawn: uniform in [lo, hi], a constant, or the
// competitive market's single copy of every type.
struct CopiesSpec {
  CopiesMode mode = CopiesMode::Uniform;
  std::int64_t lo = 200;
  std::int64_t hi = 800;

  static CopiesSpec uniform(std::int64_t lo, std::int64_t hi) {
    return {CopiesMode::Uniform, lo, hi};
  }
  static CopiesSpec constant(std::int64_t k) { return {CopiesMode::Constant, k, k}; }
  static CopiesSpec competitive_one() { return {CopiesMode::CompetitiveOne, 1, 1}; }
};

// Defaults are the non-competitive base setup: m=6, n=100, requests in
// [0,100], unit bids in [1,20], settlement prices in [1,100], 1000 candidate
// price vectors per trial.
struct ScenarioParams {
  int m = 6;
  int n = 100;
  std::int64_t k_lo = 0, k_hi = 100;
  Money b_lo = 1, b_hi = 20;
  Money p_lo = 1, p_hi = 100;
  CopiesSpec copies;
  std::int64_t q_max = 100;
  int pi_size = 1000;
  std::uint64_t seed = 0;
};

struct Instance {
  DatasetCatalog catalog;
  BidSet bids;
  AllocationOrder order;
};

inline void validate(const ScenarioParams& params) {
  if (params.m <= 0) throw ConfigError("scenario: m must be positive");
  if (params.n <= 0) throw ConfigError("scenario: n must be positive");
  if (params.k_lo < 0 || params.k_lo > params.k_hi) {
    throw ConfigError("scenario: k range is empty or negative");
  }
  if (params.b_lo < 1 || params.b_lo > params.b_hi) {
    throw ConfigError("scenario: b range must be non-empty with b_lo >= 1");
  }
  if (params.p_lo < 1 || params.p_lo > params.p_hi) {
    throw ConfigError("scenario: p range must be non-empty with p_lo >= 1");
  }
  if (params.q_max <= 0) throw ConfigError("scenario: q_max must be positive");
  if (params.k_hi > params.q_max) {
    throw ConfigError("scenario: k_hi must not exceed q_max");
  }
  if (params.pi_size <= 0) throw ConfigError("scenario: pi_size must be positive");
  // Total revenue is bounded by n * m * q_max * max(p, b); it must stay
  // inside exact 64-bit money arithmetic.
  std::int64_t acc = std::max(params.p_hi, params.b_hi);
  for (const std::int64_t factor : {params.q_max, static_cast<std::int64_t>(params.m),
                                    static_cast<std::int64_t>(params.n)}) {
    if (acc > std::numeric_limits<std::int64_t>::max() / factor) {
      throw ConfigError("scenario: parameter ranges overflow 64-bit money arithmetic");
    }
    acc *= factor;
  }
  switch (params.copies.mode) {
    case CopiesMode::Uniform:
      if (params.copies.lo < 0 || params.copies.lo > params.copies.hi) {
        throw ConfigError("scenario: copies range is empty or negative");
      }
      break;
    case CopiesMode::Constant:
      if (params.copies.lo < 0) throw ConfigError("scenario: negative copy count");
      break;
    case CopiesMode::CompetitiveOne:
      break;
  }
}

// Catalog, bids and allocation order for one trial. Per buyer and type, a
// request is drawn first and, only when it is positive, a unit price; a zero
// request forces a zero price, which is the rational-buyer coupling.
inline Instance gen_instance(const ScenarioParams& params, std::int64_t trial_index) {
  validate(params);
  const auto trial = static_cast<std::uint64_t>(trial_index);
  Instance inst;

  RandomStream catalog_stream(derive_seed(params.seed, trial, "catalog"));
  inst.catalog.copies.resize(static_cast<std::size_t>(params.m));
  for (auto& copies : inst.catalog.copies) {
    switch (params.copies.mode) {
      case CopiesMode::Uniform:
        copies = catalog_stream.uniform_int(params.copies.lo, params.copies.hi);
        break;
      case CopiesMode::Constant:
        copies = params.copies.lo;
        break;
      case CopiesMode::CompetitiveOne:
        copies = 1;
        break;
    }
  }

  RandomStream bid_stream(derive_seed(params.seed, trial, "bids"));
  inst.bids.bids.resize(static_cast<std::size_t>(params.n));
  for (Bid& bid : inst.bids.bids) {
    bid.quantities.resize(static_cast<std::size_t>(params.m));
    bid.unit_prices.resize(static_cast<std::size_t>(params.m));
    for (int i = 0; i < params.m; ++i) {
      const std::int64_t k = bid_stream.uniform_int(params.k_lo, params.k_hi);
      bid.quantities[static_cast<std::size_t>(i)] = k;
      bid.unit_prices[static_cast<std::size_t>(i)] =
          k > 0 ? bid_stream.uniform_int(params.b_lo, params.b_hi) : 0;
    }
  }

  RandomStream order_stream(derive_seed(params.seed, trial, "order"));
  inst.order.order.resize(static_cast<std::size_t>(params.n));
  std::iota(inst.order.order.begin(), inst.order.order.end(), 0);
  order_stream.shuffle(inst.order.order);

  return inst;
}

// The trial's candidate price vectors, coordinate-uniform in [p_lo, p_hi].
// Drawn from a stream independent of the instance stream, so changing
// pi_size never perturbs the generated bids. Duplicates are legitimate
// outcomes with equal scores.
inline std::vector<PriceVector> gen_price_candidates(const ScenarioParams& params,
                                                     std::int64_t trial_index) {
  validate(params);
  RandomStream stream(
      derive_seed(params.seed, static_cast<std::uint64_t>(trial_index), "prices"));
  std::vector<PriceVector> result(static_cast<std::size_t>(params.pi_size));
  for (PriceVector& p : result) {
    p.prices.resize(static_cast<std::size_t>(params.m));
    for (Money& v : p.prices) v = stream.uniform_int(params.p_lo, params.p_hi);
  }
  return result;
}

}  // namespace dcae

#endif  // DCAE_SCENARIO_HPP
