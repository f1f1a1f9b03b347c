/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SUCCESSION_LAB_HPP_
#define SUCCESSION_LAB_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "succession/binary.hpp"
#include "succession/rational.hpp"
#include "succession/simplex.hpp"

// Brute-force laboratory for exchangeability: every law here is an explicit
// table over all t^length sequences, so the checks are exact and exhaustive
// but only practical at desk scale.
namespace succession::lab {

// Largest dense table the lab will build (t = 2 up to length 20, t = 3 up to
// length 12).
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 20;

// Number of sequences of the given length over t types. Throws
// ResourceLimitExceeded above kMaxTableSize.
std::size_t table_size(std::size_t types, std::size_t length);

// Exact probabilities for every length-n sequence over t symbols. Sequence
// (e_1, ..., e_n) is stored at index sum_i e_i t^(n-i), i.e. the first symbol
// is the most significant digit.
class SequenceLaw {
 public:
  // Throws std::invalid_argument unless the table has t^length nonnegative
  // entries summing to exactly one.
  SequenceLaw(std::size_t types, std::size_t length, std::vector<Rational> probabilities);

  std::size_t types() const { return types_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return probabilities_.size(); }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  const Rational& operator[](std::size_t index) const { return probabilities_[index]; }

  std::size_t index_of(std::span<const std::size_t> sequence) const;
  std::vector<std::size_t> sequence_at(std::size_t index) const;
  const Rational& probability(std::span<const std::size_t> sequence) const {
    return probabilities_[index_of(sequence)];
  }

 private:
  std::size_t types_;
  std::size_t length_;
  std::vector<Rational> probabilities_;
};

// Maps a count vector to the predictive distribution of the next symbol.
using PredictiveRule = std::function<std::vector<Rational>(const MultinomialCounts&)>;

namespace rules {

PredictiveRule dirichlet(std::vector<Rational> params);
PredictiveRule carnap(std::size_t types, Rational lambda);
PredictiveRule mixture(SimplexMixturePrior prior);
// Independent draws from a fixed distribution.
PredictiveRule iid(std::vector<Rational> probabilities);
// Two-type rule from a binary prior: type 1 is a confirming instance and
// type 0 an exception.
PredictiveRule binary(BinaryPrior prior);

}  // namespace rules

// Joint law built by the chain rule from successive predictive probabilities.
// Throws InvalidRule if the rule ever returns something that is not a
// probability vector over t types.
SequenceLaw law_from_predictive(const PredictiveRule& rule, std::size_t types, std::size_t length);

// First symbol uniform; each later symbol repeats the previous one with
// probability `stay`, otherwise moves to one of the other types uniformly.
SequenceLaw markov_law(std::size_t types, std::size_t length, const Rational& stay);

// Law of the first `length` coordinates.
SequenceLaw restrict_to_prefix(const SequenceLaw& law, std::size_t length);

bool is_exchangeable(const SequenceLaw& law);
bool has_positive_cylinders(const SequenceLaw& law);

// Two count vectors with the same (n_j, n) whose predictions for type j differ.
struct SufficientnessWitness {
  std::size_t type;
  MultinomialCounts first;
  MultinomialCounts second;
  Rational first_prediction;
  Rational second_prediction;
};

// Exhaustive search over all count vectors with n <= max_n; nullopt when the
// prediction for every type depends only on (n_j, n).
std::optional<SufficientnessWitness> find_sufficientness_violation(const PredictiveRule& rule,
                                                                   std::size_t types,
                                                                   std::size_t max_n);

bool satisfies_sufficientness(const PredictiveRule& rule, std::size_t types, std::size_t max_n);

// Balls per colour in an urn sampled without replacement.
class UrnComposition {
 public:
  explicit UrnComposition(std::vector<unsigned long> colors);

  std::size_t types() const { return colors_.size(); }
  const std::vector<unsigned long>& colors() const { return colors_; }
  unsigned long total() const { return total_; }

 private:
  std::vector<unsigned long> colors_;
  unsigned long total_ = 0;
};

// Ordered draws of `draws` balls without replacement. Throws SampleTooLarge
// if draws exceeds the number of balls.
SequenceLaw urn_law(const UrnComposition& urn, std::size_t draws);

// Distribution of the count vector of a law: counts -> probability.
using FrequencyDistribution = std::map<std::vector<std::size_t>, Rational>;

FrequencyDistribution frequency_distribution(const SequenceLaw& law);

// Length-k mixture of iid multinomial draws whose parameter is the empirical
// frequency vector of the length-n law, weighted by its distribution.
SequenceLaw canonical_mixture(const SequenceLaw& law, std::size_t length);
SequenceLaw canonical_mixture(const FrequencyDistribution& frequencies, std::size_t types,
                              std::size_t sample_size, std::size_t length);

// Sum over sequences of |a(s) - b(s)|. Throws DimensionMismatch unless both
// laws share t and length.
Rational variation_distance(const SequenceLaw& a, const SequenceLaw& b);

// Finite de Finetti bound 2tk/n (4k/n for two types).
Rational df_bound(std::size_t types, std::size_t k, std::size_t n);

// Range [lo, hi] of P(0 0 ... 0) over all exchangeable two-type laws of length
// n + 1 whose first n coordinates follow `law`; nullopt if none exists. Such
// extensions have exactly one free parameter, so the search is exhaustive.
std::optional<std::pair<Rational, Rational>> binary_exchangeable_extension(const SequenceLaw& law);

// Beta function at positive integers, (a-1)!(b-1)!/(a+b-1)!, from factorials.
Rational beta_integral_oracle(unsigned long a, unsigned long b);

}  // namespace succession::lab

#endif  // SUCCESSION_LAB_HPP_
