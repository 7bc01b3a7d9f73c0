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
// Exponential-mechanism selection over candidate settlement price vectors,
// plus the Random and Best baseline selectors and the sensitivity bound.

#ifndef DCAE_MECHANISM_HPP
#define DCAE_MECHANISM_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dcae/errors.hpp"
#include "dcae/rng.hpp"
#include "dcae/types.hpp"

namespace dcae {

// The mechanism's outcome space: candidate price vectors and their revenue
// scores, all evaluated under one fixed instance and allocation order.
struct PriceCandidateSet {
  std::vector<PriceVector> candidates;
  std::vector<Money> scores;

  std::size_t size() const { return candidates.size(); }
};

struct MechanismConfig {
  double epsilon = 1.0;            // privacy budget
  double delta_sensitivity = 1.0;  // global sensitivity of the revenue score
  std::uint64_t seed = 0;
};

struct SelectionDistribution {
  std::vector<double> probabilities;
};

inline void validate(const MechanismConfig& cfg) {
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
    throw ConfigError("mechanism: epsilon must be positive and finite");
  }
  if (!(cfg.delta_sensitivity > 0.0) || !std::isfinite(cfg.delta_sensitivity)) {
    throw ConfigError("mechanism: sensitivity must be positive and finite");
  }
}

inline void validate(const PriceCandidateSet& set) {
  if (set.candidates.empty()) throw ModelError("candidate set: empty");
  if (set.candidates.size() != set.scores.size()) {
    throw ModelError("candidate set: scores and candidates differ in length");
  }
  for (Money s : set.scores) {
    if (s < 0) throw ModelError("candidate set: negative score");
  }
}

// Upper bound on how far one buyer's bid change can move the revenue score:
// a change can add or remove winners whose combined consumption shifts by at
// most q_max copies per type, each worth at most p_max.
inline Money sensitivity_bound(int m, std::int64_t q_max, Money p_max) {
  if (m <= 0 || q_max <= 0 || p_max <= 0) {
    throw ConfigError("sensitivity_bound: arguments must be positive");
  }
  Money result = 0;
  if (__builtin_mul_overflow(static_cast<Money>(m), q_max, &result) ||
      __builtin_mul_overflow(result, p_max, &result)) {
    throw ArithmeticError("sensitivity_bound: product overflows 64-bit money");
  }
  return result;
}

// Softmax of epsilon * score / (2 * delta), computed with the max score
// subtracted first. Exponents epsilon*REV/(2*delta) can exceed 700 in
// competitive sweeps, which would overflow a raw exp(); the shifted form
// keeps every exponent <= 0 and leaves the distribution unchanged.
inline SelectionDistribution exp_mechanism_distribution(
    const PriceCandidateSet& set, const MechanismConfig& cfg) {
  validate(set);
  validate(cfg);
  const double coeff = cfg.epsilon / (2.0 * cfg.delta_sensitivity);
  if (!std::isfinite(coeff)) {
    throw ConfigError("mechanism: epsilon/(2*delta) is not finite");
  }

  Money max_score = set.scores.front();
  for (Money s : set.scores) max_score = std::max(max_score, s);

  SelectionDistribution dist;
  dist.probabilities.resize(set.scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < set.scores.size(); ++i) {
    const double w = std::exp(coeff * static_cast<double>(set.scores[i] - max_score));
    dist.probabilities[i] = w;
    total += w;
  }
  for (double& p : dist.probabilities) p /= total;
  return dist;
}

// Inverse-CDF draw from a stored distribution.
inline std::size_t sample_index(const SelectionDistribution& dist,
                                RandomStream& stream) {
  if (dist.probabilities.empty()) throw ModelError("sample_index: empty distribution");
  const double u = stream.uniform01();
  double cumulative = 0.0;
  for (std::size_t i = 0; i + 1 < dist.probabilities.size(); ++i) {
    cumulative += dist.probabilities[i];
    if (u < cumulative) return i;
  }
  return dist.probabilities.size() - 1;
}

// Argmax score, lowest index on ties.
inline std::size_t select_best(const PriceCandidateSet& set) {
  validate(set);
  std::size_t best = 0;
  for (std::size_t i = 1; i < set.scores.size(); ++i) {
    if (set.scores[i] > set.scores[best]) best = i;
  }
  return best;
}

// Argmin score, lowest index on ties.
inline std::size_t select_worst(const PriceCandidateSet& set) {
  validate(set);
  std::size_t worst = 0;
  for (std::size_t i = 1; i < set.scores.size(); ++i) {
    if (set.scores[i] < set.scores[worst]) worst = i;
  }
  return worst;
}

// Uniform baseline over the same candidate set the mechanism sees.
inline std::size_t select_random(const PriceCandidateSet& set,
                                 RandomStream& stream) {
  validate(set);
  return static_cast<std::size_t>(
      stream.uniform_int(0, static_cast<std::int64_t>(set.size()) - 1));
}

}  // namespace dcae

#endif  // DCAE_MECHANISM_HPP
