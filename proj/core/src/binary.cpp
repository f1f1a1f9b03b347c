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

#include "succession/binary.hpp"

#include <stdexcept>

#include "succession/errors.hpp"
#include "succession/rising.hpp"

namespace succession {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

struct ComponentLikelihoods {
  Rational theta1;
  Rational theta0;
  Rational continuous;
};

ComponentLikelihoods likelihoods(const BinaryPrior& prior, const Evidence& ev) {
  ComponentLikelihoods out;
  out.theta1 = ev.disconfirm() == 0 ? 1 : 0;
  out.theta0 = ev.confirm() == 0 ? 1 : 0;
  if (!prior.mass_continuous().is_zero()) {
    out.continuous =
        beta_sequence_marginal(prior.alpha(), prior.beta(), ev.confirm(), ev.disconfirm());
  }
  return out;
}

}  // namespace

Evidence::Evidence(BigInt confirm, BigInt disconfirm)
    : confirm_(std::move(confirm)), disconfirm_(std::move(disconfirm)) {
  require(confirm_ >= 0 && disconfirm_ >= 0, "evidence counts must be nonnegative");
}

BinaryPrior::BinaryPrior(Rational mass_theta1, Rational mass_theta0, Rational mass_continuous,
                         Rational alpha, Rational beta)
    : mass_theta1_(std::move(mass_theta1)),
      mass_theta0_(std::move(mass_theta0)),
      mass_continuous_(std::move(mass_continuous)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
  require(mass_theta1_.sign() >= 0 && mass_theta0_.sign() >= 0 && mass_continuous_.sign() >= 0,
          "prior masses must be nonnegative");
  require(mass_theta1_ + mass_theta0_ + mass_continuous_ == 1, "prior masses must sum to 1");
  require(alpha_.sign() > 0 && beta_.sign() > 0, "beta shape parameters must be positive");
}

BinaryPrior BinaryPrior::laplace(const Rational& alpha, const Rational& beta) {
  return BinaryPrior(0, 0, 1, alpha, beta);
}

BinaryPrior BinaryPrior::haldane(const Rational& alpha) {
  return BinaryPrior(Rational(1, 2), 0, Rational(1, 2), alpha, 1);
}

BinaryPrior BinaryPrior::with_prior_odds(const Rational& odds, const Rational& alpha) {
  require(odds.sign() > 0, "prior odds must be positive");
  const Rational one_plus = odds + 1;
  return BinaryPrior(odds / one_plus, 0, 1 / one_plus, alpha, 1);
}

BinaryPrior BinaryPrior::jeffreys_split(const Rational& alpha) {
  return BinaryPrior(Rational(1, 4), Rational(1, 4), Rational(1, 2), alpha, 1);
}

PredictionQuery::PredictionQuery(BigInt horizon) : horizon_(std::move(horizon)) {
  require(horizon_ >= 1, "prediction horizon must be at least 1");
}

Rational marginal_likelihood(const BinaryPrior& prior, const Evidence& ev) {
  const ComponentLikelihoods l = likelihoods(prior, ev);
  return prior.mass_theta1() * l.theta1 + prior.mass_theta0() * l.theta0 +
         prior.mass_continuous() * l.continuous;
}

BinaryPosterior posterior_weights(const BinaryPrior& prior, const Evidence& ev) {
  const ComponentLikelihoods l = likelihoods(prior, ev);
  BinaryPosterior post{prior.mass_theta1() * l.theta1, prior.mass_theta0() * l.theta0,
                       prior.mass_continuous() * l.continuous};
  const Rational total = post.theta1 + post.theta0 + post.continuous;
  if (total.is_zero()) {
    throw ZeroEvidenceProbability("prior assigns probability zero to " + ev.confirm().get_str() +
                                  " confirmations and " + ev.disconfirm().get_str() +
                                  " exceptions");
  }
  post.theta1 /= total;
  post.theta0 /= total;
  post.continuous /= total;
  return post;
}

Rational posterior_ug(const BinaryPrior& prior, const Evidence& ev) {
  return posterior_weights(prior, ev).theta1;
}

Rational bayes_factor_ug(const Evidence& ev, const Rational& alpha, const Rational& beta) {
  require(alpha.sign() > 0 && beta.sign() > 0, "beta shape parameters must be positive");
  if (ev.disconfirm() != 0) {
    throw UGFalsified(ev.disconfirm().get_str() + " exception(s) observed; Bayes factor is 0");
  }
  return 1 / beta_sequence_marginal(alpha, beta, ev.confirm(), 0);
}

Rational predict_next(const BinaryPrior& prior, const Evidence& ev) {
  const BinaryPosterior post = posterior_weights(prior, ev);
  Rational p = post.theta1;
  if (!post.continuous.is_zero()) {
    p += post.continuous * (Rational(ev.confirm()) + prior.alpha()) /
         (Rational(ev.total()) + prior.alpha() + prior.beta());
  }
  return p;
}

Rational predict_block(const BinaryPrior& prior, const Evidence& ev, const PredictionQuery& query) {
  const BinaryPosterior post = posterior_weights(prior, ev);
  Rational p = post.theta1;
  if (!post.continuous.is_zero()) {
    // Under beta(a, b) the next z instances all confirm with probability
    // rising(a, z) / rising(a + b, z).
    const Rational a = prior.alpha() + ev.confirm();
    const Rational b = prior.beta() + ev.disconfirm();
    p += post.continuous * rising_ratio(a, a + b, query.horizon());
  }
  return p;
}

Rational exception_probability(const Rational& p_ug, const Evidence& ev) {
  require(p_ug.sign() >= 0 && p_ug <= 1, "P(UG) must lie in [0, 1]");
  require(ev.disconfirm() == 0, "exception probability is defined for unfalsified evidence");
  const Rational n = ev.confirm();
  return (1 - p_ug) / ((n + 2) * (n * p_ug + 1));
}

Rational prior_odds_adjustment(const Rational& odds, const BigInt& n) {
  require(odds.sign() > 0, "prior odds must be positive");
  require(n >= 0, "instance count must be nonnegative");
  const Rational count = n;
  return (odds * (count + 2) + 1) / (odds * (count + 1) + 1);
}

std::pair<Rational, Rational> posterior_theta_params(const BinaryPrior& prior, const Evidence& ev) {
  if (prior.mass_continuous().is_zero()) {
    throw NoContinuousComponent("prior has no beta component to update");
  }
  return {prior.alpha() + ev.confirm(), prior.beta() + ev.disconfirm()};
}

}  // namespace succession
