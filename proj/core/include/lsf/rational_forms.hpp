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

#ifndef LSF_RATIONAL_FORMS_HPP
#define LSF_RATIONAL_FORMS_HPP

#include <complex>
#include <string>
#include <vector>

#include "lsf/coeff.hpp"

namespace lsf {

/// unit * t^t_power * prod_j (1 - a_j t) / prod_k (1 - b_k t), with t = q^{-s}.
///
/// The numerator and denominator multisets are always kept in canonical
/// order (see compare()), so structurally equal values compare equal.
/// Nothing is cancelled until normalize() is called.
class FactoredRationalFunction {
 public:
  FactoredRationalFunction() = default;
  FactoredRationalFunction(UnitCoefficient unit, int t_power,
                           std::vector<UnitCoefficient> numerator,
                           std::vector<UnitCoefficient> denominator);

  static FactoredRationalFunction one() { return {}; }
  static FactoredRationalFunction monomial(UnitCoefficient unit, int t_power);
  /// 1 / prod (1 - a t): the shape of an L-factor.
  static FactoredRationalFunction L_factor(std::vector<UnitCoefficient> poles);
  /// prod (1 - a t)
  static FactoredRationalFunction polynomial(std::vector<UnitCoefficient> zeros);
  /// 1 - c t^{-1}, rewritten as (-c t^{-1}) (1 - c^{-1} t).
  static FactoredRationalFunction inverse_binomial(const UnitCoefficient& c);

  const UnitCoefficient& unit() const { return unit_; }
  int t_power() const { return t_power_; }
  const std::vector<UnitCoefficient>& numerator() const { return num_; }
  const std::vector<UnitCoefficient>& denominator() const { return den_; }

  bool is_monomial() const { return num_.empty() && den_.empty(); }
  /// Drops unit and t-power.
  FactoredRationalFunction non_monomial_part() const;

 private:
  UnitCoefficient unit_ = UnitCoefficient::one();
  int t_power_ = 0;
  std::vector<UnitCoefficient> num_;
  std::vector<UnitCoefficient> den_;
};

FactoredRationalFunction multiply(const FactoredRationalFunction& f,
                                  const FactoredRationalFunction& g,
                                  const QSymbol& q = QSymbol::formal());
FactoredRationalFunction invert(const FactoredRationalFunction& f);

/// Cancels equal numerator/denominator pairs until the two multisets are
/// disjoint.  Approx coefficients use the coeff_field tolerance.
FactoredRationalFunction normalize(const FactoredRationalFunction& f,
                                   const QSymbol& q = QSymbol::formal());
bool is_normalized(const FactoredRationalFunction& f, const QSymbol& q = QSymbol::formal());

/// s -> s + c: every coefficient and the monomial base pick up q^{-c}.
FactoredRationalFunction shift(const FactoredRationalFunction& f, const Rational& c,
                               const QSymbol& q = QSymbol::formal());

/// s -> 1 - s, i.e. t -> q^{-1} t^{-1}, using
///   1 - a q^{-1} t^{-1} = (-a q^{-1} t^{-1}) (1 - a^{-1} q t).
FactoredRationalFunction reflect(const FactoredRationalFunction& f,
                                 const QSymbol& q = QSymbol::formal());

/// s -> k s, i.e. t -> t^k.  Each 1 - a t^k is split exactly into the k
/// linear factors 1 - w t over the k-th roots w of a.
FactoredRationalFunction substitute_power(const FactoredRationalFunction& f, int k,
                                          const QSymbol& q = QSymbol::formal());

/// Exact after normalization: unit, t-power and both multisets agree.
bool equal(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
           const QSymbol& q = QSymbol::formal());
/// Same as equal() but ignoring the monomial parts.
bool equal_up_to_monomial(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                          const QSymbol& q = QSymbol::formal());

std::complex<double> evaluate_t(const FactoredRationalFunction& f, std::complex<double> t,
                                const QSymbol& q);
/// Evaluates at complex s with t = q^{-s}; q must be concrete.
std::complex<double> evaluate_s(const FactoredRationalFunction& f, std::complex<double> s,
                                const QSymbol& q);

/// gamma = epsilon * L(1-s, dual) / L(s).
struct LocalFactorTriple {
  FactoredRationalFunction L;
  FactoredRationalFunction L_dual;
  FactoredRationalFunction epsilon;
};

/// L := 1/prod over numerator factors; each denominator factor 1 - b t is
/// read as a reflected dual pole q/b; epsilon is the leftover monomial.
LocalFactorTriple extract_L_eps(const FactoredRationalFunction& gamma,
                                const QSymbol& q = QSymbol::formal());
FactoredRationalFunction recompose(const LocalFactorTriple& triple,
                                   const QSymbol& q = QSymbol::formal());

/// Re(s) of the poles of an L-factor, one per denominator factor.
std::vector<Abscissa> pole_abscissas(const FactoredRationalFunction& L,
                                     const QSymbol& q = QSymbol::formal());
bool holomorphic_on_right_half_plane(const FactoredRationalFunction& L,
                                     const QSymbol& q = QSymbol::formal());

std::string to_string(const FactoredRationalFunction& f);

}  // namespace lsf

#endif  // LSF_RATIONAL_FORMS_HPP
