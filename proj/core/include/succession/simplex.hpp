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

#ifndef SUCCESSION_SIMPLEX_HPP_
#define SUCCESSION_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "succession/rational.hpp"

namespace succession {

// Frequencies n_1..n_t of t >= 2 outcome types. Types are indexed from 0.
class MultinomialCounts {
 public:
  explicit MultinomialCounts(std::vector<BigInt> counts);
  // All-zero counts over t types.
  static MultinomialCounts zeros(std::size_t types);

  std::size_t types() const { return counts_.size(); }
  const std::vector<BigInt>& counts() const { return counts_; }
  const BigInt& operator[](std::size_t type) const { return counts_[type]; }
  const BigInt& total() const { return total_; }

  MultinomialCounts incremented(std::size_t type) const;

  friend bool operator==(const MultinomialCounts&, const MultinomialCounts&) = default;

 private:
  std::vector<BigInt> counts_;
  BigInt total_;
};

// One mixture component: a Dirichlet distribution on the face of the simplex
// spanned by `support`. A single-type support is a point mass on that vertex
// and carries no parameters.
class DirichletComponent {
 public:
  DirichletComponent(std::vector<std::size_t> support, std::vector<Rational> params,
                     Rational weight);

  static DirichletComponent vertex(std::size_t type, Rational weight);
  // Dirichlet over all `params.size()` types.
  static DirichletComponent full(std::vector<Rational> params, Rational weight);

  const std::vector<std::size_t>& support() const { return support_; }
  // Aligned with support(); empty for a vertex.
  const std::vector<Rational>& params() const { return params_; }
  const Rational& weight() const { return weight_; }
  bool is_vertex() const { return support_.size() == 1; }
  bool supports(std::size_t type) const;

 private:
  std::vector<std::size_t> support_;
  std::vector<Rational> params_;
  Rational weight_;
};

// Mixing measure over sub-simplices: weights sum to one and every support lies
// inside {0, ..., t-1}.
class SimplexMixturePrior {
 public:
  SimplexMixturePrior(std::size_t types, std::vector<DirichletComponent> components);

  // Half the mass on the uniform Dirichlet(1, ..., 1), the other half split
  // equally over the t vertices.
  static SimplexMixturePrior hintikka_default(std::size_t types);

  std::size_t types() const { return types_; }
  const std::vector<DirichletComponent>& components() const { return components_; }

 private:
  std::size_t types_;
  std::vector<DirichletComponent> components_;
};

// (n_j + k_j) / (n + k) for each type j. Throws DimensionMismatch if the
// parameter count differs from the number of types.
std::vector<Rational> dirichlet_predictive(const MultinomialCounts& counts,
                                           const std::vector<Rational>& params);

// Carnap's lambda-continuum: the Dirichlet rule with k_j = lambda / t.
std::vector<Rational> carnap_predictive(const MultinomialCounts& counts, const Rational& lambda);

// Probability of one particular ordered sequence with these counts under a
// single component.
Rational sequence_marginal(const MultinomialCounts& counts, const DirichletComponent& component);

// Posterior component weights, in the prior's component order. Throws
// ZeroEvidenceProbability if every component rules out the counts.
std::vector<Rational> mixture_posterior(const SimplexMixturePrior& prior,
                                        const MultinomialCounts& counts);

// Posterior-averaged predictive probabilities for the next observation.
std::vector<Rational> mixture_predictive(const SimplexMixturePrior& prior,
                                         const MultinomialCounts& counts);

// Number of types seen at least once.
std::size_t observed_type_count(const MultinomialCounts& counts);

}  // namespace succession

#endif  // SUCCESSION_SIMPLEX_HPP_
