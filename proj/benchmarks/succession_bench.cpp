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

#include <benchmark/benchmark.h>

#include "succession/binary.hpp"
#include "succession/lab.hpp"
#include "succession/simplex.hpp"

namespace {

using succession::BigInt;
using succession::BinaryPrior;
using succession::Evidence;
using succession::Rational;

void BM_PredictNextGoldbach(benchmark::State& state) {
  const Evidence ev(succession::parse_bigint("1999999999999999999"));
  const BinaryPrior prior = BinaryPrior::haldane();
  for (auto _ : state) benchmark::DoNotOptimize(succession::predict_next(prior, ev));
}
BENCHMARK(BM_PredictNextGoldbach);

void BM_PredictBlock(benchmark::State& state) {
  const Evidence ev(BigInt(100));
  const succession::PredictionQuery query(BigInt(static_cast<long>(state.range(0))));
  const BinaryPrior prior = BinaryPrior::haldane();
  for (auto _ : state) benchmark::DoNotOptimize(succession::predict_block(prior, ev, query));
}
BENCHMARK(BM_PredictBlock)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_HalfMassSweep(benchmark::State& state) {
  const BinaryPrior prior = BinaryPrior::haldane();
  const long limit = state.range(0);
  for (auto _ : state) {
    for (long n = 0; n <= limit; ++n) benchmark::DoNotOptimize(succession::predict_next(prior, Evidence(n)));
  }
  state.SetItemsProcessed(state.iterations() * (limit + 1));
}
BENCHMARK(BM_HalfMassSweep)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MixturePredictive(benchmark::State& state) {
  const auto types = static_cast<std::size_t>(state.range(0));
  const auto prior = succession::SimplexMixturePrior::hintikka_default(types);
  std::vector<BigInt> counts(types, BigInt(0));
  counts[0] = 1000;
  const succession::MultinomialCounts observed(counts);
  for (auto _ : state) benchmark::DoNotOptimize(succession::mixture_predictive(prior, observed));
}
BENCHMARK(BM_MixturePredictive)->Arg(2)->Arg(5)->Arg(10);

void BM_LawFromPredictive(benchmark::State& state) {
  namespace lab = succession::lab;
  const auto length = static_cast<std::size_t>(state.range(0));
  const auto rule = lab::rules::dirichlet({1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lab::law_from_predictive(rule, 3, length));
}
BENCHMARK(BM_LawFromPredictive)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DeFinettiCheck(benchmark::State& state) {
  namespace lab = succession::lab;
  const auto k = static_cast<std::size_t>(state.range(0));
  const lab::UrnComposition urn({4, 4, 4});
  const lab::FrequencyDistribution freqs{{{4, 4, 4}, Rational(1)}};
  for (auto _ : state) {
    const lab::SequenceLaw law = lab::urn_law(urn, k);
    const lab::SequenceLaw mix = lab::canonical_mixture(freqs, 3, 12, k);
    benchmark::DoNotOptimize(lab::variation_distance(law, mix));
  }
}
BENCHMARK(BM_DeFinettiCheck)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
