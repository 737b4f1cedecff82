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

#ifndef LSF_COEFF_HPP
#define LSF_COEFF_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "lsf/errors.hpp"

namespace boost {

// Under C++20 rewritten comparisons, boost's mixed rational<int64_t>/integer
// equality templates call each other forever.  Exact non-template overloads
// win overload resolution and break the cycle.
#define LSF_RATIONAL_EQ(I)                                                              \
  inline bool operator==(const rational<std::int64_t>& a, I b) {                        \
    return a.denominator() == 1 && a.numerator() == b;                                  \
  }                                                                                     \
  inline bool operator==(I a, const rational<std::int64_t>& b) { return b == a; }       \
  inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); }    \
  inline bool operator!=(I a, const rational<std::int64_t>& b) { return !(b == a); }
LSF_RATIONAL_EQ(int)
LSF_RATIONAL_EQ(std::int64_t)
#undef LSF_RATIONAL_EQ

}  // namespace boost

namespace lsf {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/r".  Throws BadInput on anything else.
Rational parse_rational(std::string_view text);
/// "p" for integers, "p/r" otherwise.
std::string to_string(const Rational& r);

/// Fractional part in [0,1).
Rational mod_one(const Rational& r);

/// The residue cardinality q.  Either a concrete rational > 1 or formal,
/// in which case only exponents of q are tracked.
class QSymbol {
 public:
  static QSymbol formal() { return QSymbol(); }
  static QSymbol concrete(const Rational& value);
  /// "formal" or a rational string.
  static QSymbol parse(std::string_view text);

  bool is_formal() const { return !value_.has_value(); }
  const Rational& value() const;
  double to_double() const;
  std::string to_string() const;

 private:
  QSymbol() = default;
  std::optional<Rational> value_;
};

/// Tolerance used by eq() in Approx mode: |a-b| <= tol * max(|a|,|b|).
double approx_tolerance();
void set_approx_tolerance(double tol);

/// A nonzero scalar zeta * q^e with zeta a root of unity and e rational
/// (Exact mode), or a nonzero binary64 complex number (Approx mode).
class UnitCoefficient {
 public:
  struct Exact {
    Rational turn;      // zeta = exp(2 pi i turn), 0 <= turn < 1
    Rational exponent;  // power of q
  };

  UnitCoefficient() : UnitCoefficient(one()) {}

  static UnitCoefficient one() { return exact(0, 0); }
  static UnitCoefficient minus_one() { return exact(Rational(1, 2), 0); }
  static UnitCoefficient exact(const Rational& turn, const Rational& exponent);
  static UnitCoefficient q_power(const Rational& exponent) { return exact(0, exponent); }
  static UnitCoefficient root_of_unity(const Rational& turn) { return exact(turn, 0); }
  static UnitCoefficient approx(std::complex<double> value);

  bool is_exact() const { return std::holds_alternative<Exact>(value_); }
  const Rational& turn() const;
  const Rational& exponent() const;
  std::complex<double> approx_value() const;

  /// Numeric value; Exact values need a concrete q.
  std::complex<double> evaluate(const QSymbol& q) const;

 private:
  explicit UnitCoefficient(std::variant<Exact, std::complex<double>> v) : value_(std::move(v)) {}
  std::variant<Exact, std::complex<double>> value_;
};

/// log_q |a|: exact rational in Exact mode, binary64 in Approx mode.
using Abscissa = std::variant<Rational, double>;
int sign(const Abscissa& x, double tol = 1e-9);
double to_double(const Abscissa& x);
std::string to_string(const Abscissa& x);

UnitCoefficient to_approx(const UnitCoefficient& a, const QSymbol& q);

UnitCoefficient mul(const UnitCoefficient& a, const UnitCoefficient& b,
                    const QSymbol& q = QSymbol::formal());
UnitCoefficient inv(const UnitCoefficient& a);
UnitCoefficient pow(const UnitCoefficient& a, std::int64_t k);
UnitCoefficient neg(const UnitCoefficient& a);
/// All k-th roots of a (k >= 1), in canonical order.
std::vector<UnitCoefficient> roots(const UnitCoefficient& a, int k);

bool eq(const UnitCoefficient& a, const UnitCoefficient& b,
        const QSymbol& q = QSymbol::formal());
bool is_one(const UnitCoefficient& a, const QSymbol& q = QSymbol::formal());

Abscissa log_q_modulus(const UnitCoefficient& a, const QSymbol& q = QSymbol::formal());

/// Total order used for canonical multisets: (exponent, turn) in Exact mode,
/// (log|z|, arg/2pi) in Approx mode, Exact before Approx.
int compare(const UnitCoefficient& a, const UnitCoefficient& b);

inline UnitCoefficient operator*(const UnitCoefficient& a, const UnitCoefficient& b) {
  return mul(a, b);
}
inline bool operator==(const UnitCoefficient& a, const UnitCoefficient& b) { return eq(a, b); }
inline bool operator<(const UnitCoefficient& a, const UnitCoefficient& b) {
  return compare(a, b) < 0;
}

/// Human-readable form, e.g. "-q^(1/2)", "e(1/3)*q^(-1)", "(0.5+1.2i)".
std::string to_string(const UnitCoefficient& a);

/// Text syntax accepted on the command line:
///   1, -1, q, -q, q^3/2, -q^(-1/2), e(1/3)*q^2, zeta(1/3), (re,im)
UnitCoefficient parse_coefficient(std::string_view text);

}  // namespace lsf

#endif  // LSF_COEFF_HPP
