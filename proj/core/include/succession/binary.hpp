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

#ifndef SUCCESSION_BINARY_HPP_
#define SUCCESSION_BINARY_HPP_

#include <utility>

#include "succession/rational.hpp"

namespace succession {

// Observed instances: `confirm` lie in the universal generalization (UG),
// `disconfirm` are exceptions to it.
class Evidence {
 public:
  Evidence() = default;
  Evidence(BigInt confirm, BigInt disconfirm = 0);

  const BigInt& confirm() const { return confirm_; }
  const BigInt& disconfirm() const { return disconfirm_; }
  BigInt total() const { return confirm_ + disconfirm_; }

  Evidence with_more_confirmations(const BigInt& extra) const {
    return Evidence(confirm_ + extra, disconfirm_);
  }

  friend bool operator==(const Evidence&, const Evidence&) = default;

 private:
  BigInt confirm_ = 0;
  BigInt disconfirm_ = 0;
};

// Mixture prior on the proportion theta of confirmatory instances: point
// masses at theta = 1 (the UG) and theta = 0, plus theta ~ beta(alpha, beta)
// with the remaining mass.
class BinaryPrior {
 public:
  // Throws std::invalid_argument unless the masses are nonnegative and sum to
  // one and both shape parameters are positive.
  BinaryPrior(Rational mass_theta1, Rational mass_theta0, Rational mass_continuous,
              Rational alpha = 1, Rational beta = 1);

  // beta(alpha, beta) alone.
  static BinaryPrior laplace(const Rational& alpha = 1, const Rational& beta = 1);
  // P(UG) = 1/2 against theta ~ beta(alpha, 1).
  static BinaryPrior haldane(const Rational& alpha = 1);
  // UG mass d/(1+d) for prior odds d, continuous mass 1/(1+d).
  static BinaryPrior with_prior_odds(const Rational& odds, const Rational& alpha = 1);
  // 1/4 on theta = 1, 1/4 on theta = 0, 1/2 on beta(alpha, 1).
  static BinaryPrior jeffreys_split(const Rational& alpha = 1);

  const Rational& mass_theta1() const { return mass_theta1_; }
  const Rational& mass_theta0() const { return mass_theta0_; }
  const Rational& mass_continuous() const { return mass_continuous_; }
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  friend bool operator==(const BinaryPrior&, const BinaryPrior&) = default;

 private:
  Rational mass_theta1_;
  Rational mass_theta0_;
  Rational mass_continuous_;
  Rational alpha_;
  Rational beta_;
};

// Number of future instances whose joint confirmation is queried.
class PredictionQuery {
 public:
  explicit PredictionQuery(BigInt horizon);
  const BigInt& horizon() const { return horizon_; }

 private:
  BigInt horizon_;
};

// Posterior weights of the three prior components after seeing `ev`.
struct BinaryPosterior {
  Rational theta1;
  Rational theta0;
  Rational continuous;
};

// Probability of the particular ordered sequence summarized by `ev`,
// averaged over the prior's components.
Rational marginal_likelihood(const BinaryPrior& prior, const Evidence& ev);

// Throws ZeroEvidenceProbability when the evidence has prior probability zero.
BinaryPosterior posterior_weights(const BinaryPrior& prior, const Evidence& ev);

// P(theta = 1 | ev).
Rational posterior_ug(const BinaryPrior& prior, const Evidence& ev);

// Bayes factor of theta = 1 against theta ~ beta(alpha, beta); (n + alpha)/alpha
// when beta = 1. Throws UGFalsified if any exception has been observed.
Rational bayes_factor_ug(const Evidence& ev, const Rational& alpha, const Rational& beta = 1);

// Model-averaged probability that the next instance is confirmatory.
Rational predict_next(const BinaryPrior& prior, const Evidence& ev);

// Probability that all of the next `query.horizon()` instances are confirmatory.
Rational predict_block(const BinaryPrior& prior, const Evidence& ev, const PredictionQuery& query);

// Probability that the next instance is an exception, for prior mass p_ug on
// the UG against a uniform alternative:
//   (1 - p_ug) / ((n + 2)(n p_ug + 1)).
// Requires no exceptions so far.
Rational exception_probability(const Rational& p_ug, const Evidence& ev);

// Factor by which prior odds d on the UG multiply Laplace's (n+1)/(n+2):
//   (d(n + 2) + 1) / (d(n + 1) + 1).
Rational prior_odds_adjustment(const Rational& odds, const BigInt& n);

// Parameters of the continuous component's posterior, (alpha + confirm, beta + disconfirm).
// Throws NoContinuousComponent if the prior has no continuous mass.
std::pair<Rational, Rational> posterior_theta_params(const BinaryPrior& prior, const Evidence& ev);

}  // namespace succession

#endif  // SUCCESSION_BINARY_HPP_
