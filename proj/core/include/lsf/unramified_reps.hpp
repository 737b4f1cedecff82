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

#ifndef LSF_UNRAMIFIED_REPS_HPP
#define LSF_UNRAMIFIED_REPS_HPP

#include <vector>

#include "lsf/coeff.hpp"
#include "lsf/root_data.hpp"

namespace lsf {

/// An unramified character of the maximal torus, x_i -> z_i^{ord x_i}.
struct SatakeParameter {
  ClassicalGroupTag group;
  std::vector<UnitCoefficient> z;

  /// Throws BadInput unless z.size() == group.rank.
  void validate() const;
  bool is_exact() const;
};

bool equal(const SatakeParameter& a, const SatakeParameter& b,
           const QSymbol& q = QSymbol::formal());

/// Orbit representative: every coordinate is replaced by the larger of
/// z, z^{-1} (when the family allows it) and the tuple is sorted in
/// decreasing compare() order.  Family D keeps an even number of
/// inversions, flipping the last entry back when needed.
SatakeParameter weyl_canonical(const SatakeParameter& pi);

/// Entrywise z_i -> z_i^{-1}.
SatakeParameter contragredient(const SatakeParameter& pi);

/// z_i = q^{-nu_i} u_i with |u_i| = 1, so tempered <=> nu = 0.
struct PolarDecomposition {
  RationalVector nu;
  SatakeParameter unitary;
};
struct ApproxPolarDecomposition {
  std::vector<double> nu;
  SatakeParameter unitary;
};

/// Exact mode only (ModeMismatch otherwise).
PolarDecomposition polar_decompose(const SatakeParameter& pi);
/// Any mode; q must be concrete when some entry is Approx.
ApproxPolarDecomposition polar_decompose_approx(const SatakeParameter& pi, const QSymbol& q);
SatakeParameter recompose_polar(const RationalVector& nu, const SatakeParameter& unitary);

bool is_unitary(const SatakeParameter& pi, const QSymbol& q = QSymbol::formal());

/// Moves nu into the closed positive chamber of the family.  Returns the
/// Weyl element w with apply(w, nu) dominant.
SignedPermutation dominant_element(const ClassicalGroupTag& g, const RationalVector& nu);

struct StandardModuleDatum {
  ClassicalGroupTag group;
  std::vector<int> theta;        // 1-based simple roots with <nu, alpha^vee> = 0
  std::vector<int> gl_blocks;    // sizes of the GL factors of the Levi, in order
  int classical_rank = 0;        // rank of the residual classical factor
  RationalVector eta_exponents;  // dominant nu
  SatakeParameter tempered_part; // unitary part, permuted along with nu
  SignedPermutation weyl;        // element moving the input to the dominant chamber
};

/// Exact mode only.
StandardModuleDatum langlands_data(const SatakeParameter& pi);

/// Blockwise version on a Levi GL_m x G_n: nu is made dominant for the
/// Levi's own Weyl group.  The returned tuple has length m + n.
struct LeviStandardModule {
  LeviDatum levi;
  std::vector<int> theta;        // 1-based simple roots of the ambient, inside the Levi
  RationalVector eta_exponents;
  SatakeParameter moved;         // full tuple after the Levi Weyl element
  SatakeParameter tempered_part;
  SignedPermutation weyl;
};

LeviStandardModule langlands_data(const LeviDatum& levi, const SatakeParameter& pi);

}  // namespace lsf

#endif  // LSF_UNRAMIFIED_REPS_HPP
