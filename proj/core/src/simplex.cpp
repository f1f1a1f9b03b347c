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

#include "succession/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "succession/errors.hpp"
#include "succession/rising.hpp"

namespace succession {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

void check_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(expected) +
                            ", got " + std::to_string(actual));
  }
}

}  // namespace

MultinomialCounts::MultinomialCounts(std::vector<BigInt> counts) : counts_(std::move(counts)) {
  require(counts_.size() >= 2, "need at least two outcome types");
  total_ = 0;
  for (const BigInt& c : counts_) {
    require(c >= 0, "counts must be nonnegative");
    total_ += c;
  }
}

MultinomialCounts MultinomialCounts::zeros(std::size_t types) {
  return MultinomialCounts(std::vector<BigInt>(types, BigInt(0)));
}

MultinomialCounts MultinomialCounts::incremented(std::size_t type) const {
  std::vector<BigInt> next = counts_;
  next.at(type) += 1;
  return MultinomialCounts(std::move(next));
}

DirichletComponent::DirichletComponent(std::vector<std::size_t> support,
                                       std::vector<Rational> params, Rational weight)
    : support_(std::move(support)), params_(std::move(params)), weight_(std::move(weight)) {
  require(!support_.empty(), "component support must be nonempty");
  require(weight_.sign() >= 0, "component weight must be nonnegative");
  // Keep support sorted with params riding along.
  std::vector<std::size_t> order(support_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return support_[a] < support_[b]; });
  std::vector<std::size_t> sorted_support;
  for (std::size_t i : order) sorted_support.push_back(support_[i]);
  require(std::adjacent_find(sorted_support.begin(), sorted_support.end()) == sorted_support.end(),
          "component support has a repeated type");
  if (support_.size() == 1) {
    require(params_.empty(), "a vertex component takes no Dirichlet parameters");
  } else {
    check_dimension(support_.size(), params_.size(), "Dirichlet parameters for support");
    std::vector<Rational> sorted_params;
    for (std::size_t i : order) {
      require(params_[i].sign() > 0, "Dirichlet parameters must be positive");
      sorted_params.push_back(params_[i]);
    }
    params_ = std::move(sorted_params);
  }
  support_ = std::move(sorted_support);
}

DirichletComponent DirichletComponent::vertex(std::size_t type, Rational weight) {
  return DirichletComponent({type}, {}, std::move(weight));
}

DirichletComponent DirichletComponent::full(std::vector<Rational> params, Rational weight) {
  std::vector<std::size_t> support(params.size());
  std::iota(support.begin(), support.end(), std::size_t{0});
  return DirichletComponent(std::move(support), std::move(params), std::move(weight));
}

bool DirichletComponent::supports(std::size_t type) const {
  return std::binary_search(support_.begin(), support_.end(), type);
}

SimplexMixturePrior::SimplexMixturePrior(std::size_t types,
                                         std::vector<DirichletComponent> components)
    : types_(types), components_(std::move(components)) {
  require(types_ >= 2, "need at least two outcome types");
  require(!components_.empty(), "mixture needs at least one component");
  Rational total = 0;
  for (const DirichletComponent& c : components_) {
    require(c.support().back() < types_, "component support outside the simplex");
    total += c.weight();
  }
  require(total == 1, "mixture weights must sum to 1");
}

SimplexMixturePrior SimplexMixturePrior::hintikka_default(std::size_t types) {
  require(types >= 2, "need at least two outcome types");
  std::vector<DirichletComponent> components;
  const Rational vertex_weight = Rational(1, 2) / Rational(static_cast<long>(types));
  for (std::size_t i = 0; i < types; ++i) {
    components.push_back(DirichletComponent::vertex(i, vertex_weight));
  }
  components.push_back(
      DirichletComponent::full(std::vector<Rational>(types, Rational(1)), Rational(1, 2)));
  return SimplexMixturePrior(types, std::move(components));
}

std::vector<Rational> dirichlet_predictive(const MultinomialCounts& counts,
                                           const std::vector<Rational>& params) {
  check_dimension(counts.types(), params.size(), "Dirichlet parameters for counts");
  Rational k = 0;
  for (const Rational& p : params) {
    require(p.sign() > 0, "Dirichlet parameters must be positive");
    k += p;
  }
  const Rational denom = Rational(counts.total()) + k;
  std::vector<Rational> out;
  out.reserve(params.size());
  for (std::size_t j = 0; j < params.size(); ++j) {
    out.push_back((Rational(counts[j]) + params[j]) / denom);
  }
  return out;
}

std::vector<Rational> carnap_predictive(const MultinomialCounts& counts, const Rational& lambda) {
  require(lambda.sign() > 0, "lambda must be positive");
  const Rational each = lambda / Rational(static_cast<long>(counts.types()));
  return dirichlet_predictive(counts, std::vector<Rational>(counts.types(), each));
}

Rational sequence_marginal(const MultinomialCounts& counts, const DirichletComponent& component) {
  for (std::size_t j = 0; j < counts.types(); ++j) {
    if (counts[j] > 0 && !component.supports(j)) return 0;
  }
  if (component.support().back() >= counts.types()) {
    throw DimensionMismatch("component support outside the count vector");
  }
  if (component.is_vertex()) return 1;

  // prod_j rising(k_j, n_j) / rising(k, n), with rising(k, n) split type by
  // type in decreasing count order so the largest factor telescopes.
  const auto& support = component.support();
  const auto& params = component.params();
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return counts[support[a]] > counts[support[b]];
  });

  Rational shifted = std::accumulate(params.begin(), params.end(), Rational(0));
  Rational marginal = 1;
  for (std::size_t i : order) {
    const BigInt& n_j = counts[support[i]];
    marginal *= rising_ratio(params[i], shifted, n_j);
    shifted += n_j;
  }
  return marginal;
}

std::vector<Rational> mixture_posterior(const SimplexMixturePrior& prior,
                                        const MultinomialCounts& counts) {
  check_dimension(prior.types(), counts.types(), "count vector for mixture");
  std::vector<Rational> weights;
  weights.reserve(prior.components().size());
  Rational total = 0;
  for (const DirichletComponent& c : prior.components()) {
    weights.push_back(c.weight().is_zero() ? Rational(0) : c.weight() * sequence_marginal(counts, c));
    total += weights.back();
  }
  if (total.is_zero()) {
    throw ZeroEvidenceProbability("no mixture component is consistent with the observed counts");
  }
  for (Rational& w : weights) w /= total;
  return weights;
}

std::vector<Rational> mixture_predictive(const SimplexMixturePrior& prior,
                                         const MultinomialCounts& counts) {
  const std::vector<Rational> weights = mixture_posterior(prior, counts);
  std::vector<Rational> out(prior.types(), Rational(0));
  for (std::size_t c = 0; c < weights.size(); ++c) {
    if (weights[c].is_zero()) continue;
    const DirichletComponent& comp = prior.components()[c];
    const auto& support = comp.support();
    if (comp.is_vertex()) {
      out[support.front()] += weights[c];
      continue;
    }
    Rational denom = 0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      denom += Rational(counts[support[i]]) + comp.params()[i];
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
      out[support[i]] += weights[c] * (Rational(counts[support[i]]) + comp.params()[i]) / denom;
    }
  }
  return out;
}

std::size_t observed_type_count(const MultinomialCounts& counts) {
  return static_cast<std::size_t>(std::count_if(counts.counts().begin(), counts.counts().end(),
                                                [](const BigInt& c) { return c > 0; }));
}

}  // namespace succession
