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

#ifndef LSF_CASSELMAN_HPP
#define LSF_CASSELMAN_HPP

#include <complex>
#include <string>
#include <vector>

#include "lsf/coeff.hpp"
#include "lsf/root_data.hpp"
#include "lsf/unramified_reps.hpp"

namespace lsf {

/// Split classical groups use their own tag; SL2 and unramified SU(2,1)
/// are rank-one groups with a single torus coordinate.
enum class CGroupKind { Split, SL2, SU21 };

struct CGroup {
  CGroupKind kind = CGroupKind::Split;
  ClassicalGroupTag tag{Family::A, 2};

  static CGroup split(ClassicalGroupTag tag) { return {CGroupKind::Split, tag}; }
  static CGroup sl2() { return {CGroupKind::SL2, {Family::C, 1}}; }
  static CGroup su21() { return {CGroupKind::SU21, {Family::C, 1}}; }
  /// "SL2", "SU21", or a family letter followed by the rank ("C2").
  static CGroup parse(std::string_view text);
  std::string name() const;
  /// Weyl action on Satake tuples; rank-one groups invert the coordinate.
  ClassicalGroupTag weyl_tag() const { return tag; }
};

/// q_alpha = q^{q_alpha_exp}, q_{alpha/2} = q^{q_alpha_half_exp};
/// chi(a_alpha) = prod z_i^{pairing_i}.
struct RankOneStructure {
  Weight root;
  Rational q_alpha_exp = 1;
  Rational q_alpha_half_exp = 0;
  Weight pairing;
};

/// One entry per positive non-divisible root.
std::vector<RankOneStructure> structure_table(const CGroup& g);

/// unit * prod (1 - u) / prod (1 - v).  Kept in canonical multiset order.
struct BinomialProduct {
  UnitCoefficient unit;
  std::vector<UnitCoefficient> num;
  std::vector<UnitCoefficient> den;

  static BinomialProduct one() { return {}; }
};

BinomialProduct multiply(const BinomialProduct& a, const BinomialProduct& b,
                         const QSymbol& q = QSymbol::formal());
/// Cancels equal binomials.
BinomialProduct normalize(const BinomialProduct& a, const QSymbol& q = QSymbol::formal());
bool equal(const BinomialProduct& a, const BinomialProduct& b,
           const QSymbol& q = QSymbol::formal());
/// Some numerator binomial is 1 - 1.
bool is_zero(const BinomialProduct& a, const QSymbol& q = QSymbol::formal());
std::complex<double> evaluate(const BinomialProduct& a, const QSymbol& q);
std::string to_string(const BinomialProduct& a);

/// (1 - q_{a/2}^{-1/2} q_a^{-1} x)(1 + q_{a/2}^{-1/2} x) / ((1 - x)(1 + x)).
BinomialProduct c_factor(const RankOneStructure& s, const UnitCoefficient& x,
                         const QSymbol& q = QSymbol::formal());

/// chi(a_alpha) for every table entry.
UnitCoefficient chi_of(const RankOneStructure& s, const std::vector<UnitCoefficient>& z,
                       const QSymbol& q = QSymbol::formal());

/// Product over {alpha > 0 : w alpha < 0}.  Throws NonRegular when some
/// chi(a_alpha) = +-1.
BinomialProduct c_function(const SatakeParameter& chi, const SignedPermutation& w,
                           const std::vector<RankOneStructure>& table,
                           const QSymbol& q = QSymbol::formal());

struct NonvanishingReport {
  bool nonvanishing = true;
  /// Every |chi(a_alpha)| < 1 on the inverted roots, which rules out zeros.
  bool positivity_certificate = false;
};

NonvanishingReport nonvanishing_on_spherical(const SatakeParameter& chi, const SignedPermutation& w,
                                             const std::vector<RankOneStructure>& table,
                                             const QSymbol& q = QSymbol::formal());

/// Bridge to the rank-one Hecke parameter: a = q^d / x with d = 1 (SL2)
/// and d = 2 (SU21).
UnitCoefficient hecke_parameter_from_x(CGroupKind kind, const UnitCoefficient& x);
UnitCoefficient x_from_hecke_parameter(CGroupKind kind, const UnitCoefficient& a);

}  // namespace lsf

#endif  // LSF_CASSELMAN_HPP
