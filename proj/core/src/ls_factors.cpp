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

#include "lsf/ls_factors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsf {

void FactorRequest::validate() const {
  satake.validate();
  if (!(satake.group == levi.ambient))
    throw BadInput("factor request: Satake group " + to_string(satake.group.family) +
                   std::to_string(satake.group.rank) + " does not match the Levi's ambient group");
  if (level < 1 || level > levi.levels)
    throw BadInput("factor request: level " + std::to_string(level) + " not in 1.." +
                   std::to_string(levi.levels));
}

UnitCoefficient evaluate_weight(const Weight& beta, const std::vector<UnitCoefficient>& z,
                                const QSymbol& q) {
  if (beta.size() != z.size()) throw BadInput("weight and Satake tuple differ in length");
  auto v = UnitCoefficient::one();
  for (std::size_t j = 0; j < z.size(); ++j)
    if (beta[j] != 0) v = mul(v, pow(z[j], beta[j]), q);
  return v;
}

FactoredRationalFunction weight_L(const std::vector<Weight>& weights,
                                  const std::vector<UnitCoefficient>& z, const QSymbol& q) {
  std::vector<UnitCoefficient> poles;
  poles.reserve(weights.size());
  for (const auto& b : weights) poles.push_back(evaluate_weight(b, z, q));
  return FactoredRationalFunction::L_factor(std::move(poles));
}

FactoredRationalFunction weight_epsilon(const std::vector<Weight>& weights,
                                        const std::vector<UnitCoefficient>& z,
                                        const AdditiveCharacterData& psi, const QSymbol& q) {
  const int k = psi.conductor_exponent;
  if (k == 0) return FactoredRationalFunction::one();
  const auto n = static_cast<std::int64_t>(weights.size());
  auto unit = UnitCoefficient::q_power(Rational(-k * n, 2));
  for (const auto& b : weights) unit = mul(unit, pow(evaluate_weight(b, z, q), -k), q);
  return FactoredRationalFunction::monomial(unit, static_cast<int>(-k * n));
}

FactoredRationalFunction weight_gamma(const std::vector<Weight>& weights,
                                      const std::vector<UnitCoefficient>& z,
                                      const AdditiveCharacterData& psi, const QSymbol& q) {
  std::vector<UnitCoefficient> zi;
  zi.reserve(z.size());
  for (const auto& c : z) zi.push_back(inv(c));
  auto g = multiply(weight_epsilon(weights, z, psi, q), reflect(weight_L(weights, zi, q), q), q);
  return normalize(multiply(g, invert(weight_L(weights, z, q)), q), q);
}

FactoredRationalFunction galois_L(const FactorRequest& req, const QSymbol& q) {
  req.validate();
  return weight_L(ls_weights(req.levi).level(req.level), req.satake.z, q);
}

FactoredRationalFunction epsilon(const FactorRequest& req, const QSymbol& q) {
  req.validate();
  return weight_epsilon(ls_weights(req.levi).level(req.level), req.satake.z, req.psi, q);
}

FactoredRationalFunction gamma_unramified(const FactorRequest& req, const QSymbol& q) {
  req.validate();
  return weight_gamma(ls_weights(req.levi).level(req.level), req.satake.z, req.psi, q);
}

LocalFactorTriple local_factors(const FactorRequest& req, const QSymbol& q) {
  req.validate();
  const auto w = ls_weights(req.levi).level(req.level);
  LocalFactorTriple out;
  out.L = weight_L(w, req.satake.z, q);
  out.L_dual = weight_L(w, contragredient(req.satake).z, q);
  out.epsilon = weight_epsilon(w, req.satake.z, req.psi, q);
  return out;
}

FactoredRationalFunction local_coefficient(const LeviDatum& levi, const SatakeParameter& satake,
                                           const AdditiveCharacterData& psi, const QSymbol& q) {
  auto out = FactoredRationalFunction::one();
  for (int i = 1; i <= levi.levels; ++i) {
    FactorRequest req{levi, satake, i, psi};
    out = multiply(out, substitute_power(gamma_unramified(req, q), i, q), q);
  }
  return normalize(out, q);
}

FactoredRationalFunction twist_shift(const FactoredRationalFunction& f, const RationalVector& nu,
                                     const LeviDatum& levi, int level, const QSymbol& q) {
  if (static_cast<int>(nu.size()) != levi.ambient.rank)
    throw BadInput("twist_shift: exponent vector has the wrong length");
  return shift(f, cocharacter_data(levi).pairing(nu, level), q);
}

LGeneralResult L_general_detailed(const FactorRequest& req) {
  req.validate();
  LGeneralResult out;
  out.standard_module = langlands_data(req.levi, req.satake);
  const auto& nu = out.standard_module.eta_exponents;
  const auto weights = ls_weights(req.levi).level(req.level);

  std::set<Weight> flat_roots;
  for (const auto& g : dual_levi_roots(req.levi))
    if (dot(nu, g) == 0) flat_roots.insert(g);

  // weights joined by a root of the standard-module Levi span one block
  const int n = static_cast<int>(weights.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Weight d(weights[a].size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = weights[a][j] - weights[b][j];
      if (flat_roots.count(d)) parent[find(a)] = find(b);
    }

  out.L = FactoredRationalFunction::one();
  for (int root = 0; root < n; ++root) {
    if (find(root) != root) continue;
    LBlock block;
    for (int a = 0; a < n; ++a)
      if (find(a) == root) block.weights.push_back(weights[a]);
    block.shift = dot(nu, block.weights.front());
    for (const auto& b : block.weights)
      if (dot(nu, b) != block.shift) throw DomainError("L_general: exponent not constant on a block");
    block.unitary_L = weight_L(block.weights, out.standard_module.tempered_part.z);
    block.L = shift(block.unitary_L, block.shift);
    out.L = multiply(out.L, block.L);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

FactoredRationalFunction L_general(const FactorRequest& req) { return L_general_detailed(req).L; }

GammaMultiplicativity L_via_gamma_multiplicativity(const std::vector<std::vector<Weight>>& components,
                                                   const std::vector<UnitCoefficient>& z,
                                                   const AdditiveCharacterData& psi,
                                                   const QSymbol& q) {
  GammaMultiplicativity out;
  out.gamma = FactoredRationalFunction::one();
  for (const auto& c : components) {
    out.component_gammas.push_back(weight_gamma(c, z, psi, q));
    out.gamma = multiply(out.gamma, out.component_gammas.back(), q);
  }
  out.gamma = normalize(out.gamma, q);
  out.factors = extract_L_eps(out.gamma, q);
  return out;
}

GammaMultiplicativity L_via_gamma_multiplicativity(const FactorRequest& req, const QSymbol& q) {
  req.validate();
  std::vector<std::vector<Weight>> comps;
  const auto weights = ls_weights(req.levi).level(req.level);
  for (const auto& b : weights) comps.push_back({b});
  return L_via_gamma_multiplicativity(comps, req.satake.z, req.psi, q);
}

TemperedReport tempered_L_check(const LeviDatum& levi, const SatakeParameter& satake,
                                const QSymbol& q) {
  TemperedReport out;
  out.unitary_input = is_unitary(satake, q);
  for (int i = 1; i <= levi.levels; ++i) {
    TemperedLevelReport lr;
    lr.level = i;
    lr.L = galois_L(FactorRequest{levi, satake, i, {}}, q);
    lr.poles = pole_abscissas(lr.L, q);
    lr.holomorphic = holomorphic_on_right_half_plane(lr.L, q);
    out.pass = out.pass && lr.holomorphic;
    out.levels.push_back(std::move(lr));
  }
  return out;
}

}  // namespace lsf
