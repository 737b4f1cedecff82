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

#ifndef LSF_UNITARY_DUAL_HPP
#define LSF_UNITARY_DUAL_HPP

#include <string>
#include <vector>

#include "lsf/coeff.hpp"
#include "lsf/root_data.hpp"
#include "lsf/unramified_reps.hpp"

namespace lsf {

/// (r, xi, alpha): GL_r block, unitary unramified xi, exponent alpha > 0.
struct UnitarityTriple {
  int r = 1;
  UnitCoefficient xi;
  Rational alpha = 1;
};

/// pi(E, rho) with rho an opaque negative representation of rank l.
struct UnramifiedClassification {
  std::vector<UnitarityTriple> E;
  std::string negative_label = "rho";
  int l = 0;
  ClassicalGroupTag group{Family::C, 1};

  /// Throws BadInput on r < 1, alpha <= 0, |xi| != 1 or sum r + l != rank.
  void validate(const QSymbol& q = QSymbol::formal()) const;
};

/// Every triple has alpha < 1 (strict).
bool unitarity_necessary(const UnramifiedClassification& cls);

/// Adds the triples (1, eta_i, t); the group rank grows by etas.size().
UnramifiedClassification induce_gl_twist(const UnramifiedClassification& cls,
                                         const std::vector<UnitCoefficient>& etas,
                                         const Rational& t,
                                         const QSymbol& q = QSymbol::formal());

enum class Verdict { NotUnitary, NecessaryConditionHolds };
std::string to_string(Verdict v);

struct TwistVerdict {
  Verdict verdict = Verdict::NecessaryConditionHolds;
  bool boundary = false;  // s == 1
  UnramifiedClassification induced;
};

/// Needs unitarity_necessary(cls), at least one eta and s > 0.
/// NotUnitary iff s > 1.
TwistVerdict theorem3_verdict(const UnramifiedClassification& cls,
                              const std::vector<UnitCoefficient>& etas, const Rational& s,
                              const QSymbol& q = QSymbol::formal());
/// binary64 path; s == 1 within the coefficient tolerance counts as the boundary.
TwistVerdict theorem3_verdict_approx(const UnramifiedClassification& cls,
                                     const std::vector<UnitCoefficient>& etas, double s,
                                     const QSymbol& q = QSymbol::formal());

enum class OrbitMode { SO, O };

/// Family D tuples only.  O canonicalizes under all sign changes, SO
/// under even sign changes.
SatakeParameter so_even_orbit(const SatakeParameter& xi, OrbitMode mode);
/// z_n -> z_n^{-1}.
SatakeParameter sigma_twist(const SatakeParameter& xi);
/// Same O-orbit.
bool pi_plus_equal(const SatakeParameter& xi, const SatakeParameter& eta);

}  // namespace lsf

#endif  // LSF_UNITARY_DUAL_HPP
