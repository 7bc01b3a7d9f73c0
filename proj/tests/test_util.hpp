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
// Shared helpers for the test suites: toy-instance generators kept separate
// from the scenario module, and small statistics (Spearman rank correlation,
// chi-square tail probability) for trend and goodness-of-fit assertions.

#ifndef DCAE_TESTS_TEST_UTIL_HPP
#define DCAE_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dcae/rng.hpp"
#include "dcae/types.hpp"

namespace dcae_test {

inline dcae::Bid make_bid(std::vector<std::int64_t> quantities,
                          std::vector<dcae::Money> unit_prices) {
  dcae::Bid bid;
  bid.quantities = std::move(quantities);
  bid.unit_prices = std::move(unit_prices);
  return bid;
}

struct ToyInstance {
  dcae::DatasetCatalog catalog;
  dcae::BidSet bids;
  dcae::AllocationOrder order;
};

// Small random instance with an independent generator so tests do not lean
// on the scenario module they are meant to cross-check.
inline ToyInstance random_toy(dcae::RandomStream& stream, int n_max, int m_max,
                              std::int64_t copies_max = 6, std::int64_t k_max = 4,
                              dcae::Money b_max = 9) {
  ToyInstance toy;
  const int n = static_cast<int>(stream.uniform_int(1, n_max));
  const int m = static_cast<int>(stream.uniform_int(1, m_max));
  toy.catalog.copies.resize(static_cast<std::size_t>(m));
  for (auto& copies : toy.catalog.copies) copies = stream.uniform_int(0, copies_max);
  toy.bids.bids.resize(static_cast<std::size_t>(n));
  for (dcae::Bid& bid : toy.bids.bids) {
    bid.quantities.resize(static_cast<std::size_t>(m));
    bid.unit_prices.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const std::int64_t k = stream.uniform_int(0, k_max);
      bid.quantities[static_cast<std::size_t>(i)] = k;
      bid.unit_prices[static_cast<std::size_t>(i)] =
          k > 0 ? stream.uniform_int(1, b_max) : 0;
    }
  }
  toy.order.order.resize(static_cast<std::size_t>(n));
  std::iota(toy.order.order.begin(), toy.order.order.end(), 0);
  stream.shuffle(toy.order.order);
  return toy;
}

inline std::vector<dcae::PriceVector> random_prices(dcae::RandomStream& stream,
                                                    std::size_t count, int m,
                                                    dcae::Money p_max = 12) {
  std::vector<dcae::PriceVector> result(count);
  for (auto& p : result) {
    p.prices.resize(static_cast<std::size_t>(m));
    for (auto& v : p.prices) v = stream.uniform_int(1, p_max);
  }
  return result;
}

// Ranks with ties resolved to the average rank.
inline std::vector<double> ranks_of(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = avg;
    i = j + 1;
  }
  return ranks;
}

inline double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  const std::vector<double> rx = ranks_of(x);
  const std::vector<double> ry = ranks_of(y);
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += rx[i];
    mean_y += ry[i];
  }
  mean_x /= n;
  mean_y /= n;
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (rx[i] - mean_x) * (ry[i] - mean_y);
    var_x += (rx[i] - mean_x) * (rx[i] - mean_x);
    var_y += (ry[i] - mean_y) * (ry[i] - mean_y);
  }
  if (var_x == 0.0 || var_y == 0.0) return 0.0;
  return cov / std::sqrt(var_x * var_y);
}

// Regularized upper incomplete gamma Q(a, x), series + Lentz continued
// fraction. Good to ~1e-12, far tighter than the p-value thresholds used.
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) return 1.0;
  if (x == 0.0) return 1.0;
  const double log_gamma_a = std::lgamma(a);
  if (x < a + 1.0) {
    // P(a,x) by series, Q = 1 - P
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    const double p = sum * std::exp(-x + a * std::log(x) - log_gamma_a);
    return 1.0 - p;
  }
  // Q(a,x) by continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - log_gamma_a) * h;
}

// Upper-tail p-value of a chi-square statistic.
inline double chi_square_pvalue(double statistic, int dof) {
  return gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

// Chi-square goodness-of-fit p-value of observed counts against expected
// probabilities.
inline double chi_square_gof_pvalue(const std::vector<std::int64_t>& counts,
                                    const std::vector<double>& probabilities) {
  std::int64_t total = 0;
  for (std::int64_t c : counts) total += c;
  double statistic = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = probabilities[i] * static_cast<double>(total);
    const double diff = static_cast<double>(counts[i]) - expected;
    statistic += diff * diff / expected;
  }
  return chi_square_pvalue(statistic, static_cast<int>(counts.size()) - 1);
}

}  // namespace dcae_test

#endif  // DCAE_TESTS_TEST_UTIL_HPP
