// Copyright 2026 The lsfactors Authors
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

#include <benchmark/benchmark.h>

#include "lsf/lsf.hpp"

namespace {

using namespace lsf;

// Unitary-tuple L-factors at every level of the largest Levis in a family.
void BM_GaloisL(benchmark::State& state) {
  auto levi = build_levi(Family::C, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  Sampler rng(1);
  SatakeParameter pi{levi.ambient, rng.unitary_tuple(levi.ambient.rank)};
  for (auto _ : state)
    for (int lvl = 1; lvl <= levi.levels; ++lvl) benchmark::DoNotOptimize(galois_L({levi, pi, lvl}));
}
BENCHMARK(BM_GaloisL)->Arg(1)->Arg(2)->Arg(3);

void BM_FunctionalEquation(benchmark::State& state) {
  auto levi = build_levi(Family::B, 2, 2);
  Sampler rng(2);
  SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
  auto dual = contragredient(pi);
  AdditiveCharacterData psi{1};
  for (auto _ : state) {
    auto g = gamma_unramified({levi, pi, 1, psi});
    auto gd = gamma_unramified({levi, dual, 1, psi});
    benchmark::DoNotOptimize(normalize(multiply(g, reflect(gd))));
  }
}
BENCHMARK(BM_FunctionalEquation);

void BM_LGeneral(benchmark::State& state) {
  auto levi = build_levi(Family::D, 2, 3);
  Sampler rng(3);
  SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
  for (auto _ : state) benchmark::DoNotOptimize(L_general({levi, pi, 1}));
}
BENCHMARK(BM_LGeneral);

void BM_CFunctionLongestElement(benchmark::State& state) {
  ClassicalGroupTag g{Family::C, static_cast<int>(state.range(0))};
  auto table = structure_table(CGroup::split(g));
  auto group = weyl_group(g);
  SignedPermutation w0 = group.front();
  for (const auto& w : group)
    if (weyl_length(g, w) > weyl_length(g, w0)) w0 = w;
  Sampler rng(4);
  SatakeParameter chi{g, rng.exact_tuple(g.rank, 12, 2, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(c_function(chi, w0, table));
}
BENCHMARK(BM_CFunctionLongestElement)->Arg(2)->Arg(3)->Arg(4);

void BM_HeckeAtlas(benchmark::State& state) {
  const auto a = parse_coefficient("-q^3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(reducibility(RankOneGroup{RankOneKind::SU21}, a));
    benchmark::DoNotOptimize(eigen(matrices(RankOneGroup{RankOneKind::SL2})));
  }
}
BENCHMARK(BM_HeckeAtlas);

void BM_TemperedCheck(benchmark::State& state) {
  auto levis = levis_up_to(Family::B, 6);
  Sampler rng(5);
  for (auto _ : state)
    for (const auto& levi : levis)
      benchmark::DoNotOptimize(tempered_L_check(levi, {levi.ambient, rng.unitary_tuple(levi.ambient.rank)}));
}
BENCHMARK(BM_TemperedCheck);

}  // namespace

BENCHMARK_MAIN();
