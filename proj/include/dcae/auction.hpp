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
// Deterministic per-round auction primitives. All randomness (the allocation
// order and the settlement price vector) is supplied by the caller, so every
// function here is a pure function of its arguments.

#ifndef DCAE_AUCTION_HPP
#define DCAE_AUCTION_HPP

#include <cstdint>
#include <vector>

#include "dcae/errors.hpp"
#include "dcae/types.hpp"

namespace dcae {

// Total bidding price of one buyer: sum over types of quantity * unit bid.
inline Money total_bid(const Bid& bid) {
  if (bid.quantities.size() != bid.unit_prices.size()) {
    throw ModelError("total_bid: quantity/price length mismatch");
  }
  Money total = 0;
  for (std::size_t i = 0; i < bid.quantities.size(); ++i) {
    total += bid.quantities[i] * bid.unit_prices[i];
  }
  return total;
}

// What the buyer would pay under settlement prices p: sum of quantity * p_i.
// Independent of the buyer's own unit prices.
inline Money payment(const Bid& bid, const PriceVector& p) {
  if (bid.type_count() != p.type_count()) {
    throw ModelError("payment: bid and price vector disagree on type count");
  }
  Money total = 0;
  for (std::size_t i = 0; i < bid.quantities.size(); ++i) {
    total += bid.quantities[i] * p.prices[i];
  }
  return total;
}

// Candidate filter. TwoTier admits a buyer whose total bid covers the
// settlement payment; the threshold rules compare the total bid or the
// average unit bid against a fixed floor. All-zero bids are never
// candidates under any rule. Returns ids sorted ascending.
inline std::vector<BuyerId> select_candidates(const BidSet& bids,
                                              const PriceVector& p,
                                              const PricingStrategy& strategy) {
  validate(strategy);
  std::vector<BuyerId> result;
  for (BuyerId j = 0; j < bids.buyer_count(); ++j) {
    const Bid& bid = bids.bids[static_cast<std::size_t>(j)];
    if (bid.is_zero()) continue;
    bool admitted = false;
    switch (strategy.rule) {
      case PricingRule::TwoTier:
        admitted = total_bid(bid) >= payment(bid, p);
        break;
      case PricingRule::TotalPrice:
        admitted = total_bid(bid) >= strategy.threshold;
        break;
      case PricingRule::AverageUnitPrice: {
        // total / units >= threshold, kept in integers as total >= threshold * units
        Money units = 0;
        for (std::int64_t k : bid.quantities) units += k;
        admitted = total_bid(bid) >= strategy.threshold * units;
        break;
      }
    }
    if (admitted) result.push_back(j);
  }
  return result;
}

// Greedy allocation: walk the pre-drawn order, skip non-candidates, admit a
// buyer iff the full requested bundle still fits in the remaining stock,
// and stop once the stock is exhausted. A blocked candidate is skipped, not
// fatal. Returns winner ids sorted ascending.
inline std::vector<BuyerId> allocate(const std::vector<BuyerId>& candidates,
                                     const BidSet& bids,
                                     const DatasetCatalog& catalog,
                                     const AllocationOrder& order) {
  const int n = bids.buyer_count();
  validate(order, n);

  std::vector<char> is_candidate(static_cast<std::size_t>(n), 0);
  for (BuyerId j : candidates) {
    if (j < 0 || j >= n) throw ModelError("allocate: candidate id out of range");
    is_candidate[static_cast<std::size_t>(j)] = 1;
  }

  std::vector<std::int64_t> remaining = catalog.copies;
  std::vector<BuyerId> winners;
  for (BuyerId j : order.order) {
    bool sold_out = true;
    for (std::int64_t r : remaining) {
      if (r > 0) {
        sold_out = false;
        break;
      }
    }
    if (sold_out) break;

    if (!is_candidate[static_cast<std::size_t>(j)]) continue;
    const Bid& bid = bids.bids[static_cast<std::size_t>(j)];
    if (bid.type_count() != catalog.type_count()) {
      throw ModelError("allocate: bid and catalog disagree on type count");
    }

    bool fits = true;
    for (int i = 0; i < catalog.type_count(); ++i) {
      if (bid.quantities[static_cast<std::size_t>(i)] > remaining[static_cast<std::size_t>(i)]) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;

    for (int i = 0; i < catalog.type_count(); ++i) {
      remaining[static_cast<std::size_t>(i)] -= bid.quantities[static_cast<std::size_t>(i)];
    }
    winners.push_back(j);
  }
  std::sort(winners.begin(), winners.end());
  return winners;
}

// Total revenue: the sum of winner payments under p.
inline Money revenue(const std::vector<BuyerId>& winners, const BidSet& bids,
                     const PriceVector& p) {
  Money total = 0;
  for (BuyerId j : winners) {
    if (j < 0 || j >= bids.buyer_count()) {
      throw ModelError("revenue: winner id out of range");
    }
    total += payment(bids.bids[static_cast<std::size_t>(j)], p);
  }
  return total;
}

// One full deterministic round: candidates, winners, payments, revenue and
// satisfaction for a given instance, order and settlement price vector.
inline RoundOutcome run_round(const BidSet& bids, const DatasetCatalog& catalog,
                              const AllocationOrder& order, const PriceVector& p,
                              const PricingStrategy& strategy) {
  const int n = bids.buyer_count();
  const int m = catalog.type_count();
  if (p.type_count() != m) {
    throw ModelError("run_round: price vector and catalog disagree on type count");
  }
  validate(bids, m);
  validate(order, n);

  RoundOutcome outcome;
  outcome.candidates = select_candidates(bids, p, strategy);
  outcome.winners = allocate(outcome.candidates, bids, catalog, order);
  outcome.payments.assign(static_cast<std::size_t>(n), 0);
  for (BuyerId j : outcome.winners) {
    outcome.payments[static_cast<std::size_t>(j)] =
        payment(bids.bids[static_cast<std::size_t>(j)], p);
    outcome.revenue += outcome.payments[static_cast<std::size_t>(j)];
  }
  outcome.satisfaction =
      n == 0 ? 0.0
             : static_cast<double>(outcome.winners.size()) / static_cast<double>(n);
  return outcome;
}

}  // namespace dcae

#endif  // DCAE_AUCTION_HPP
