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

#ifndef LSF_LS_FACTORS_HPP
#define LSF_LS_FACTORS_HPP

#include <vector>

#include "lsf/rational_forms.hpp"
#include "lsf/root_data.hpp"
#include "lsf/unramified_reps.hpp"

namespace lsf {

/// psi is trivial on p^k and nontrivial on p^{k-1}.
struct AdditiveCharacterData {
  int conductor_exponent = 0;
};

/// Satake data of the Levi GL_m x G_n, given as one tuple of length m + n
/// whose group is the ambient tag.
struct FactorRequest {
  LeviDatum levi;
  SatakeParameter satake;
  int level = 1;
  AdditiveCharacterData psi;

  /// Throws BadInput on shape errors.
  void validate() const;
};

/// beta(z) = prod z_j^{beta_j}.
UnitCoefficient evaluate_weight(const Weight& beta, const std::vector<UnitCoefficient>& z,
                                const QSymbol& q = QSymbol::formal());

/// 1 / prod_{beta in weights} (1 - beta(z) t).
FactoredRationalFunction weight_L(const std::vector<Weight>& weights,
                                  const std::vector<UnitCoefficient>& z,
                                  const QSymbol& q = QSymbol::formal());

/// epsilon monomial for the given weights; identically 1 when k = 0.
///   eps = prod beta(z)^{-k} * q^{-kN/2} * t^{-kN},  N = #weights.
FactoredRationalFunction weight_epsilon(const std::vector<Weight>& weights,
                                        const std::vector<UnitCoefficient>& z,
                                        const AdditiveCharacterData& psi,
                                        const QSymbol& q = QSymbol::formal());

/// eps * reflect(L(s, contragredient)) / L(s), normalized.
FactoredRationalFunction weight_gamma(const std::vector<Weight>& weights,
                                      const std::vector<UnitCoefficient>& z,
                                      const AdditiveCharacterData& psi,
                                      const QSymbol& q = QSymbol::formal());

FactoredRationalFunction galois_L(const FactorRequest& req, const QSymbol& q = QSymbol::formal());
FactoredRationalFunction epsilon(const FactorRequest& req, const QSymbol& q = QSymbol::formal());
FactoredRationalFunction gamma_unramified(const FactorRequest& req,
                                          const QSymbol& q = QSymbol::formal());
/// L, L of the contragredient and epsilon, straight from the weights.
LocalFactorTriple local_factors(const FactorRequest& req, const QSymbol& q = QSymbol::formal());

/// prod_i gamma(i s, pi, r_i, psi); each level is put in the variable t^i
/// and split into linear factors.
FactoredRationalFunction local_coefficient(const LeviDatum& levi, const SatakeParameter& satake,
                                           const AdditiveCharacterData& psi,
                                           const QSymbol& q = QSymbol::formal());

/// shift by <nu, delta_{r_level}>.
FactoredRationalFunction twist_shift(const FactoredRationalFunction& f, const RationalVector& nu,
                                     const LeviDatum& levi, int level,
                                     const QSymbol& q = QSymbol::formal());

/// One block of the restriction of r_level to the standard-module Levi.
struct LBlock {
  std::vector<Weight> weights;
  Rational shift;                    // <nu, beta> on the block
  FactoredRationalFunction unitary_L;
  FactoredRationalFunction L;        // shift(unitary_L, shift)
};

struct LGeneralResult {
  LeviStandardModule standard_module;
  std::vector<LBlock> blocks;
  FactoredRationalFunction L;
};

/// Langlands-data route: tempered L-factors of the blocks, shifted by the
/// dominant exponent and multiplied.  Exact mode only.
LGeneralResult L_general_detailed(const FactorRequest& req);
FactoredRationalFunction L_general(const FactorRequest& req);

/// Multiplies the single-weight gamma factors, cancels, and re-extracts
/// (L, L_dual, eps).  Cancellation can remove poles of galois_L.
struct GammaMultiplicativity {
  std::vector<FactoredRationalFunction> component_gammas;
  FactoredRationalFunction gamma;
  LocalFactorTriple factors;
};

GammaMultiplicativity L_via_gamma_multiplicativity(const std::vector<std::vector<Weight>>& components,
                                                   const std::vector<UnitCoefficient>& z,
                                                   const AdditiveCharacterData& psi,
                                                   const QSymbol& q = QSymbol::formal());
/// Torus components: one component per weight of the requested level.
GammaMultiplicativity L_via_gamma_multiplicativity(const FactorRequest& req,
                                                   const QSymbol& q = QSymbol::formal());

struct TemperedLevelReport {
  int level = 0;
  FactoredRationalFunction L;
  std::vector<Abscissa> poles;
  bool holomorphic = true;
};

struct TemperedReport {
  bool unitary_input = true;
  std::vector<TemperedLevelReport> levels;
  bool pass = true;
};

/// Computes every level's L-factor and checks right-half-plane holomorphy.
TemperedReport tempered_L_check(const LeviDatum& levi, const SatakeParameter& satake,
                                const QSymbol& q = QSymbol::formal());

}  // namespace lsf

#endif  // LSF_LS_FACTORS_HPP
