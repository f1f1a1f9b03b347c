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

#include "succession/lab.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "succession/errors.hpp"

namespace succession::lab {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

Rational from_size(std::size_t value) { return Rational(BigInt(static_cast<unsigned long>(value))); }

// Exact sum of many fractions that share few denominators. Numerators are
// accumulated per denominator and reduced once at the end.
class GroupedSum {
 public:
  void add(const mpz_class& num, const mpz_class& den) {
    if (num == 0) return;
    if (!last_ || last_->first != den) last_ = &*terms_.try_emplace(den).first;
    last_->second += num;
  }

  Rational total() const {
    mpq_class out = 0;
    for (const auto& [den, num] : terms_) out += mpq_class(num, den);
    return Rational(BigInt(out.get_num()), BigInt(out.get_den()));
  }

 private:
  std::map<mpz_class, mpz_class> terms_;
  std::pair<const mpz_class, mpz_class>* last_ = nullptr;
};

// Type-count classes of all length-L sequences, with the class of every
// sequence index. Built level by level so each index costs O(1).
struct CountClasses {
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::uint32_t> class_of;
};

CountClasses count_classes(std::size_t types, std::size_t length) {
  CountClasses out;
  out.counts = {std::vector<std::size_t>(types, 0)};
  out.class_of = {0};
  for (std::size_t level = 0; level < length; ++level) {
    std::map<std::vector<std::size_t>, std::uint32_t> ids;
    std::vector<std::vector<std::size_t>> next_counts;
    std::vector<std::uint32_t> transition(out.counts.size() * types);
    for (std::size_t c = 0; c < out.counts.size(); ++c) {
      for (std::size_t j = 0; j < types; ++j) {
        std::vector<std::size_t> key = out.counts[c];
        ++key[j];
        auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(next_counts.size()));
        if (inserted) next_counts.push_back(std::move(key));
        transition[c * types + j] = it->second;
      }
    }
    std::vector<std::uint32_t> next_class(out.class_of.size() * types);
    for (std::size_t p = 0; p < out.class_of.size(); ++p) {
      for (std::size_t j = 0; j < types; ++j) {
        next_class[p * types + j] = transition[out.class_of[p] * types + j];
      }
    }
    out.counts = std::move(next_counts);
    out.class_of = std::move(next_class);
  }
  return out;
}

// Every count vector over `types` types with total exactly n.
void compositions(std::size_t types, std::size_t n, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() + 1 == types) {
    current.push_back(n);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t first = 0; first <= n; ++first) {
    current.push_back(first);
    compositions(types, n - first, current, out);
    current.pop_back();
  }
}

MultinomialCounts to_counts(const std::vector<std::size_t>& counts) {
  std::vector<BigInt> big;
  big.reserve(counts.size());
  for (std::size_t c : counts) big.emplace_back(static_cast<unsigned long>(c));
  return MultinomialCounts(std::move(big));
}

std::vector<Rational> checked_prediction(const PredictiveRule& rule, const MultinomialCounts& counts) {
  std::vector<Rational> p = rule(counts);
  if (p.size() != counts.types()) {
    throw InvalidRule("rule returned " + std::to_string(p.size()) + " probabilities for " +
                      std::to_string(counts.types()) + " types");
  }
  Rational total = 0;
  for (const Rational& x : p) {
    if (x.sign() < 0) throw InvalidRule("rule returned a negative probability " + x.to_string());
    total += x;
  }
  if (total != 1) throw InvalidRule("rule probabilities sum to " + total.to_string() + ", not 1");
  return p;
}

}  // namespace

std::size_t table_size(std::size_t types, std::size_t length) {
  require(types >= 2, "need at least two outcome types");
  std::size_t size = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (size > kMaxTableSize / types) {
      throw ResourceLimitExceeded("sequence table " + std::to_string(types) + "^" +
                                  std::to_string(length) + " exceeds " +
                                  std::to_string(kMaxTableSize) + " entries");
    }
    size *= types;
  }
  return size;
}

SequenceLaw::SequenceLaw(std::size_t types, std::size_t length, std::vector<Rational> probabilities)
    : types_(types), length_(length), probabilities_(std::move(probabilities)) {
  require(length_ >= 1, "sequence length must be at least 1");
  require(probabilities_.size() == table_size(types_, length_),
          "probability table size must be t^length");
  GroupedSum total;
  for (const Rational& p : probabilities_) {
    require(p.sign() >= 0, "sequence probabilities must be nonnegative");
    total.add(p.raw().get_num(), p.raw().get_den());
  }
  require(total.total() == 1, "sequence probabilities must sum to 1");
}

std::size_t SequenceLaw::index_of(std::span<const std::size_t> sequence) const {
  require(sequence.size() == length_, "sequence length does not match the law");
  std::size_t index = 0;
  for (std::size_t symbol : sequence) {
    require(symbol < types_, "symbol outside the type range");
    index = index * types_ + symbol;
  }
  return index;
}

std::vector<std::size_t> SequenceLaw::sequence_at(std::size_t index) const {
  std::vector<std::size_t> seq(length_);
  for (std::size_t i = length_; i-- > 0;) {
    seq[i] = index % types_;
    index /= types_;
  }
  return seq;
}

namespace rules {

PredictiveRule dirichlet(std::vector<Rational> params) {
  return [params = std::move(params)](const MultinomialCounts& counts) {
    return dirichlet_predictive(counts, params);
  };
}

PredictiveRule carnap(std::size_t types, Rational lambda) {
  return [types, lambda = std::move(lambda)](const MultinomialCounts& counts) {
    if (counts.types() != types) throw DimensionMismatch("Carnap rule built for another t");
    return carnap_predictive(counts, lambda);
  };
}

PredictiveRule mixture(SimplexMixturePrior prior) {
  return [prior = std::move(prior)](const MultinomialCounts& counts) {
    return mixture_predictive(prior, counts);
  };
}

PredictiveRule iid(std::vector<Rational> probabilities) {
  return [probabilities = std::move(probabilities)](const MultinomialCounts&) {
    return probabilities;
  };
}

PredictiveRule binary(BinaryPrior prior) {
  return [prior = std::move(prior)](const MultinomialCounts& counts) {
    if (counts.types() != 2) throw DimensionMismatch("binary rule needs exactly two types");
    const Rational p = predict_next(prior, Evidence(counts[1], counts[0]));
    return std::vector<Rational>{1 - p, p};
  };
}

}  // namespace rules

SequenceLaw law_from_predictive(const PredictiveRule& rule, std::size_t types, std::size_t length) {
  table_size(types, length);
  // Walk the sequence tree one level at a time; sequences sharing a count
  // vector share one call to the rule.
  std::vector<Rational> probs{Rational(1)};
  std::vector<std::vector<std::size_t>> class_counts{std::vector<std::size_t>(types, 0)};
  std::vector<std::uint32_t> class_of{0};
  for (std::size_t level = 0; level < length; ++level) {
    std::vector<std::vector<Rational>> predictions;
    predictions.reserve(class_counts.size());
    for (const auto& c : class_counts) predictions.push_back(checked_prediction(rule, to_counts(c)));

    std::map<std::vector<std::size_t>, std::uint32_t> ids;
    std::vector<std::vector<std::size_t>> next_counts;
    std::vector<std::uint32_t> transition(class_counts.size() * types);
    for (std::size_t c = 0; c < class_counts.size(); ++c) {
      for (std::size_t j = 0; j < types; ++j) {
        std::vector<std::size_t> key = class_counts[c];
        ++key[j];
        auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(next_counts.size()));
        if (inserted) next_counts.push_back(std::move(key));
        transition[c * types + j] = it->second;
      }
    }

    std::vector<Rational> next_probs(probs.size() * types);
    std::vector<std::uint32_t> next_class(probs.size() * types);
    for (std::size_t p = 0; p < probs.size(); ++p) {
      const auto& pred = predictions[class_of[p]];
      for (std::size_t j = 0; j < types; ++j) {
        next_probs[p * types + j] = probs[p] * pred[j];
        next_class[p * types + j] = transition[class_of[p] * types + j];
      }
    }
    probs = std::move(next_probs);
    class_counts = std::move(next_counts);
    class_of = std::move(next_class);
  }
  return SequenceLaw(types, length, std::move(probs));
}

SequenceLaw markov_law(std::size_t types, std::size_t length, const Rational& stay) {
  require(stay.sign() >= 0 && stay <= 1, "stay probability must lie in [0, 1]");
  table_size(types, length);
  const Rational move = (1 - stay) / from_size(types - 1);
  std::vector<Rational> probs(types, Rational(1) / from_size(types));
  for (std::size_t level = 1; level < length; ++level) {
    std::vector<Rational> next(probs.size() * types);
    for (std::size_t p = 0; p < probs.size(); ++p) {
      const std::size_t last = p % types;
      for (std::size_t j = 0; j < types; ++j) {
        next[p * types + j] = probs[p] * (j == last ? stay : move);
      }
    }
    probs = std::move(next);
  }
  return SequenceLaw(types, length, std::move(probs));
}

SequenceLaw restrict_to_prefix(const SequenceLaw& law, std::size_t length) {
  require(length >= 1 && length <= law.length(), "prefix length must lie in [1, law length]");
  const std::size_t block = law.size() / table_size(law.types(), length);
  std::vector<Rational> probs(law.size() / block);
  for (std::size_t i = 0; i < law.size(); ++i) probs[i / block] += law[i];
  return SequenceLaw(law.types(), length, std::move(probs));
}

bool is_exchangeable(const SequenceLaw& law) {
  const CountClasses classes = count_classes(law.types(), law.length());
  std::vector<const Rational*> representative(classes.counts.size(), nullptr);
  for (std::size_t i = 0; i < law.size(); ++i) {
    const Rational*& rep = representative[classes.class_of[i]];
    if (rep == nullptr) {
      rep = &law[i];
    } else if (*rep != law[i]) {
      return false;
    }
  }
  return true;
}

bool has_positive_cylinders(const SequenceLaw& law) {
  return std::all_of(law.probabilities().begin(), law.probabilities().end(),
                     [](const Rational& p) { return p.sign() > 0; });
}

std::optional<SufficientnessWitness> find_sufficientness_violation(const PredictiveRule& rule,
                                                                   std::size_t types,
                                                                   std::size_t max_n) {
  require(types >= 2, "need at least two outcome types");
  // (type, n_j, n) -> first count vector seen and its prediction for the type.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<MultinomialCounts, Rational>>
      seen;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> scratch;
    compositions(types, n, scratch, all);
    for (const auto& c : all) {
      const MultinomialCounts counts = to_counts(c);
      const std::vector<Rational> pred = checked_prediction(rule, counts);
      for (std::size_t j = 0; j < types; ++j) {
        auto [it, inserted] = seen.try_emplace({j, c[j], n}, counts, pred[j]);
        if (!inserted && it->second.second != pred[j]) {
          return SufficientnessWitness{j, it->second.first, counts, it->second.second, pred[j]};
        }
      }
    }
  }
  return std::nullopt;
}

bool satisfies_sufficientness(const PredictiveRule& rule, std::size_t types, std::size_t max_n) {
  return !find_sufficientness_violation(rule, types, max_n).has_value();
}

UrnComposition::UrnComposition(std::vector<unsigned long> colors) : colors_(std::move(colors)) {
  require(colors_.size() >= 2, "an urn needs at least two colours");
  for (unsigned long c : colors_) {
    require(total_ <= std::numeric_limits<unsigned long>::max() - c, "urn too large");
    total_ += c;
  }
  require(total_ >= 1, "an urn needs at least one ball");
}

SequenceLaw urn_law(const UrnComposition& urn, std::size_t draws) {
  require(draws >= 1, "need at least one draw");
  if (draws > urn.total()) {
    throw SampleTooLarge("cannot draw " + std::to_string(draws) + " balls from an urn of " +
                         std::to_string(urn.total()));
  }
  const CountClasses classes = count_classes(urn.types(), draws);
  BigInt denominator = 1;
  for (std::size_t i = 0; i < draws; ++i) denominator *= urn.total() - i;

  // An ordered draw with counts m has probability prod_j falling(c_j, m_j) / falling(N, k).
  std::vector<Rational> class_value;
  class_value.reserve(classes.counts.size());
  for (const auto& m : classes.counts) {
    BigInt numerator = 1;
    for (std::size_t j = 0; j < m.size() && numerator != 0; ++j) {
      for (std::size_t i = 0; i < m[j]; ++i) {
        if (urn.colors()[j] <= i) {
          numerator = 0;
          break;
        }
        numerator *= urn.colors()[j] - i;
      }
    }
    class_value.emplace_back(numerator, denominator);
  }
  std::vector<Rational> probs(classes.class_of.size());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = class_value[classes.class_of[i]];
  return SequenceLaw(urn.types(), draws, std::move(probs));
}

FrequencyDistribution frequency_distribution(const SequenceLaw& law) {
  const CountClasses classes = count_classes(law.types(), law.length());
  std::vector<mpq_class> mass(classes.counts.size());
  for (std::size_t i = 0; i < law.size(); ++i) mass[classes.class_of[i]] += law[i].raw();
  FrequencyDistribution out;
  for (std::size_t c = 0; c < mass.size(); ++c) {
    if (mass[c] != 0) out.emplace(classes.counts[c], Rational(BigInt(mass[c].get_num()), BigInt(mass[c].get_den())));
  }
  return out;
}

SequenceLaw canonical_mixture(const SequenceLaw& law, std::size_t length) {
  require(length >= 1 && length <= law.length(), "mixture length must lie in [1, law length]");
  return canonical_mixture(frequency_distribution(law), law.types(), law.length(), length);
}

SequenceLaw canonical_mixture(const FrequencyDistribution& frequencies, std::size_t types,
                              std::size_t sample_size, std::size_t length) {
  require(sample_size >= 1, "sample size must be at least 1");
  const CountClasses classes = count_classes(types, length);
  const Rational n = from_size(sample_size);

  // prod_j (f_j / n)^(m_j), summed against the frequency distribution.
  std::vector<Rational> class_value;
  class_value.reserve(classes.counts.size());
  for (const auto& m : classes.counts) {
    Rational value = 0;
    for (const auto& [f, weight] : frequencies) {
      if (f.size() != types) throw DimensionMismatch("frequency vector has the wrong number of types");
      Rational term = weight;
      for (std::size_t j = 0; j < types && !term.is_zero(); ++j) {
        if (m[j] > 0) term *= pow(from_size(f[j]) / n, m[j]);
      }
      value += term;
    }
    class_value.push_back(std::move(value));
  }
  std::vector<Rational> probs(classes.class_of.size());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = class_value[classes.class_of[i]];
  return SequenceLaw(types, length, std::move(probs));
}

Rational variation_distance(const SequenceLaw& a, const SequenceLaw& b) {
  if (a.types() != b.types() || a.length() != b.length()) {
    throw DimensionMismatch("variation distance between laws on different sequence spaces");
  }
  // |a - b| = |a_num b_den - b_num a_den| / (a_den b_den). Numerators are summed
  // per denominator.
  GroupedSum total;
  mpz_class num;
  mpz_class den;
  mpz_class cross;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpq_class& x = a[i].raw();
    const mpq_class& y = b[i].raw();
    mpz_mul(num.get_mpz_t(), x.get_num_mpz_t(), y.get_den_mpz_t());
    mpz_mul(cross.get_mpz_t(), y.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_sub(num.get_mpz_t(), num.get_mpz_t(), cross.get_mpz_t());
    mpz_abs(num.get_mpz_t(), num.get_mpz_t());
    mpz_mul(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
    total.add(num, den);
  }
  return total.total();
}

Rational df_bound(std::size_t types, std::size_t k, std::size_t n) {
  require(types >= 2, "need at least two outcome types");
  require(k >= 1 && k <= n, "need 1 <= k <= n");
  return Rational(2) * from_size(types) * from_size(k) / from_size(n);
}

std::optional<std::pair<Rational, Rational>> binary_exchangeable_extension(const SequenceLaw& law) {
  require(law.types() == 2, "extension search is for two-type laws");
  if (!is_exchangeable(law)) return std::nullopt;

  // q_j: probability of each length-(n+1) sequence with j ones. Marginalizing
  // the last coordinate gives p_j = q_j + q_{j+1}, so with q_0 = s every q_j
  // is c_j + (-1)^j s and nonnegativity pins s to an interval.
  const std::size_t n = law.length();
  std::optional<Rational> upper;
  Rational lower = 0;
  Rational offset = 0;  // c_j
  for (std::size_t j = 0; j <= n + 1; ++j) {
    if (j % 2 == 0) {
      lower = std::max(lower, -offset);
    } else {
      upper = upper ? std::min(*upper, offset) : offset;
    }
    if (j <= n) {
      // Sequence 0...01...1 with j ones sits at index 2^j - 1.
      const Rational& p_j = law[(std::size_t{1} << j) - 1];
      offset = p_j - offset;
    }
  }
  if (upper && *upper < lower) return std::nullopt;
  return std::make_pair(lower, upper.value_or(lower));
}

Rational beta_integral_oracle(unsigned long a, unsigned long b) {
  require(a >= 1 && b >= 1, "beta integral oracle needs positive integer arguments");
  BigInt fa;
  BigInt fb;
  BigInt fab;
  mpz_fac_ui(fa.get_mpz_t(), a - 1);
  mpz_fac_ui(fb.get_mpz_t(), b - 1);
  mpz_fac_ui(fab.get_mpz_t(), a + b - 1);
  return Rational(BigInt(fa * fb), fab);
}

}  // namespace succession::lab
