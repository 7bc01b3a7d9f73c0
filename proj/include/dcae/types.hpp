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

#ifndef DCAE_TYPES_HPP
#define DCAE_TYPES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dcae/errors.hpp"

namespace dcae {

// All money amounts are exact 64-bit integers. Experiment parameters are
// integer-valued throughout, and integer arithmetic keeps revenue
// comparisons and oracle equality free of rounding questions.
using Money = std::int64_t;

using BuyerId = std::int32_t;

// Supply side: copies[i] is the stock of dataset type i.
struct DatasetCatalog {
  std::vector<std::int64_t> copies;

  int type_count() const { return static_cast<int>(copies.size()); }
};

// One buyer's combined bid: requested copies and unit prices per type.
// Rationality couples the two lists: a type is either requested at a
// positive unit price or not requested at all.
struct Bid {
  std::vector<std::int64_t> quantities;
  std::vector<Money> unit_prices;

  int type_count() const { return static_cast<int>(quantities.size()); }

  bool is_zero() const {
    return std::all_of(quantities.begin(), quantities.end(),
                       [](std::int64_t k) { return k == 0; });
  }
};

struct BidSet {
  std::vector<Bid> bids;

  int buyer_count() const { return static_cast<int>(bids.size()); }
};

// Candidate settlement unit prices, one per dataset type. Strictly positive.
struct PriceVector {
  std::vector<Money> prices;

  int type_count() const { return static_cast<int>(prices.size()); }
};

// Permutation of all buyer ids, drawn before the auction. Allocation walks
// it and skips non-candidates.
struct AllocationOrder {
  std::vector<BuyerId> order;
};

// Everything one (instance, order, price vector) evaluation produces.
// candidates and winners are sorted ascending; payments[j] is 0 unless j won.
struct RoundOutcome {
  std::vector<BuyerId> candidates;
  std::vector<BuyerId> winners;
  std::vector<Money> payments;
  Money revenue = 0;
  double satisfaction = 0.0;
};

enum class PricingRule { TwoTier, TotalPrice, AverageUnitPrice };

// TwoTier is the mechanism's own rule; the threshold rules exist only for
// side-by-side comparison of pricing strategies.
struct PricingStrategy {
  PricingRule rule = PricingRule::TwoTier;
  Money threshold = 0;  // total-bid floor (TotalPrice) or per-copy floor (AverageUnitPrice)

  static PricingStrategy two_tier() { return {PricingRule::TwoTier, 0}; }
  static PricingStrategy total_price(Money threshold) {
    return {PricingRule::TotalPrice, threshold};
  }
  static PricingStrategy average_unit_price(Money threshold) {
    return {PricingRule::AverageUnitPrice, threshold};
  }
};

inline void validate(const DatasetCatalog& catalog) {
  if (catalog.copies.empty()) throw ModelError("catalog: no dataset types");
  for (std::int64_t k : catalog.copies) {
    if (k < 0) throw ModelError("catalog: negative copy count");
  }
}

inline void validate(const Bid& bid, int type_count) {
  if (bid.type_count() != type_count ||
      static_cast<int>(bid.unit_prices.size()) != type_count) {
    throw ModelError("bid: length mismatch with catalog (m=" +
                     std::to_string(type_count) + ")");
  }
  for (int i = 0; i < type_count; ++i) {
    if (bid.quantities[i] < 0) throw ModelError("bid: negative quantity");
    if (bid.unit_prices[i] < 0) throw ModelError("bid: negative unit price");
    if ((bid.quantities[i] == 0) != (bid.unit_prices[i] == 0)) {
      throw ModelError("bid: zero quantity and zero price must coincide");
    }
  }
}

inline void validate(const BidSet& bids, int type_count) {
  for (const Bid& bid : bids.bids) validate(bid, type_count);
}

inline void validate(const PriceVector& p) {
  if (p.prices.empty()) throw ModelError("price vector: empty");
  for (Money v : p.prices) {
    if (v <= 0) throw ModelError("price vector: prices must be positive");
  }
}

inline void validate(const AllocationOrder& order, int buyer_count) {
  if (static_cast<int>(order.order.size()) != buyer_count) {
    throw ModelError("allocation order: wrong length");
  }
  std::vector<char> seen(static_cast<std::size_t>(buyer_count), 0);
  for (BuyerId id : order.order) {
    if (id < 0 || id >= buyer_count || seen[static_cast<std::size_t>(id)]) {
      throw ModelError("allocation order: not a permutation of buyer ids");
    }
    seen[static_cast<std::size_t>(id)] = 1;
  }
}

inline void validate(const PricingStrategy& strategy) {
  if (strategy.rule != PricingRule::TwoTier && strategy.threshold <= 0) {
    throw ModelError("pricing strategy: threshold must be positive");
  }
}

}  // namespace dcae

#endif  // DCAE_TYPES_HPP
