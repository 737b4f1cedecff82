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

#ifndef LSF_TESTS_UNIT_SUPPORT_HPP
#define LSF_TESTS_UNIT_SUPPORT_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "lsf/lsf.hpp"

namespace lsf::test {

inline UnitCoefficient C(const char* text) { return parse_coefficient(text); }

inline std::vector<UnitCoefficient> Z(std::initializer_list<const char*> texts) {
  std::vector<UnitCoefficient> out;
  for (const auto* t : texts) out.push_back(C(t));
  return out;
}

/// 1 / prod (1 - a t) over the given poles.
inline FactoredRationalFunction Lf(std::initializer_list<const char*> poles) {
  return FactoredRationalFunction::L_factor(Z(poles));
}

inline const QSymbol& q3() {
  static const QSymbol q = QSymbol::concrete(3);
  return q;
}

/// Plain complex value of zeta * q^e, computed without the library.
inline std::complex<double> numeric(const UnitCoefficient& c, double q) {
  if (!c.is_exact()) return c.approx_value();
  const double turn = boost::rational_cast<double>(c.turn());
  const double e = boost::rational_cast<double>(c.exponent());
  return std::polar(std::pow(q, e), 2.0 * 3.141592653589793238 * turn);
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace lsf::test

#endif  // LSF_TESTS_UNIT_SUPPORT_HPP
