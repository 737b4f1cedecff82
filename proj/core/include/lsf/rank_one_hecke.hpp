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

#ifndef LSF_RANK_ONE_HECKE_HPP
#define LSF_RANK_ONE_HECKE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsf/coeff.hpp"

namespace lsf {

/// Integer Laurent polynomial in formal q and a symbolic parameter a.
class LaurentPoly {
 public:
  using Key = std::pair<int, int>;  // (power of q, power of a)

  LaurentPoly() = default;
  static LaurentPoly constant(std::int64_t c);
  static LaurentPoly term(std::int64_t c, int q_power, int a_power);
  static LaurentPoly q() { return term(1, 1, 0); }
  static LaurentPoly a() { return term(1, 0, 1); }

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest a-power minus smallest, or -1 for zero.
  int a_degree_span() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Value at a concrete a (a UnitCoefficient); the result is zero iff
  /// the returned flag is true.  Exact when every coefficient is +-1
  /// and at most two terms survive the substitution.
  bool vanishes_at(const UnitCoefficient& a, const QSymbol& q = QSymbol::formal()) const;

  std::string to_string() const;

 private:
  void add(const Key& k, std::int64_t c);
  std::map<Key, std::int64_t> terms_;
};

/// 2x2 matrix in basis (e, f); column j is the image of basis vector j.
struct Matrix2 {
  std::array<LaurentPoly, 4> m;  // row-major: m11, m12, m21, m22

  const LaurentPoly& at(int r, int c) const { return m[2 * r + c]; }
  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 operator+(const Matrix2& o) const;
  Matrix2 operator-(const Matrix2& o) const;
  bool operator==(const Matrix2& o) const { return m == o.m; }
  bool is_zero() const;
  LaurentPoly det() const;
  LaurentPoly trace() const;
  static Matrix2 scalar(const LaurentPoly& c);
};

enum class RankOneKind { SL2, SU21 };
std::string to_string(RankOneKind k);
RankOneKind parse_rank_one_kind(std::string_view s);

struct RankOneGroup {
  RankOneKind kind = RankOneKind::SL2;
  int q_w_power() const { return kind == RankOneKind::SL2 ? 1 : 3; }
  int q_s_power() const { return 1; }
};

/// T_w(e) = f, T_w(f) = q_w e + (q_w - 1) f;
/// T_s(e) = (q - 1) e + (q/a) f, T_s(f) = a e.
struct HeckeMatrices {
  Matrix2 T_w;
  Matrix2 T_s;
};

HeckeMatrices matrices(const RankOneGroup& g);

/// (T + 1)(T - q_param) == 0 for both generators.
bool quadratic_check(const HeckeMatrices& m, const RankOneGroup& g);

struct Eigenline {
  LaurentPoly eigenvalue;
  std::array<LaurentPoly, 2> vector;  // coordinates (e, f)
};

struct EigenReport {
  std::array<Eigenline, 2> T_w;  // eigenvalues -1 then q_w
  std::array<Eigenline, 2> T_s;  // eigenvalues -1 then q_s
};

/// Eigenvalues from the characteristic polynomial, eigenvectors as kernel
/// vectors (m12, lambda - m11) with the common monomial removed.
EigenReport eigen(const HeckeMatrices& m);

enum class ReducibilityCase {
  Irreducible,
  TrivialSub,
  TrivialQuotient,
  TwoMaximalCompactSplit,
  DiscreteSeriesSub
};
std::string to_string(ReducibilityCase c);

/// Parameter a at which the T_w and T_s eigenlines coincide.
struct CommonLine {
  int w_index = 0;  // into EigenReport::T_w
  int s_index = 0;  // into EigenReport::T_s
  LaurentPoly determinant;  // linear in a
  UnitCoefficient locus;    // root of the determinant
};

/// All four eigenline pairs with their loci, in (w, s) index order.
std::vector<CommonLine> common_line_loci(const RankOneGroup& g);

struct ReducibilityReport {
  ReducibilityCase kind = ReducibilityCase::Irreducible;
  std::vector<CommonLine> common_lines;  // pairs that coincide at a
  bool K_fixed_line = false;             // e + f is a common line
  bool Kprime_fixed_line = false;        // q_w e - f is a common line
};

ReducibilityReport reducibility(const RankOneGroup& g, const UnitCoefficient& a,
                                const QSymbol& q = QSymbol::formal());

enum class CompactSide { K, Kprime };
std::string to_string(CompactSide s);

/// Values of the Whittaker functional on e and f, as Laurent polynomials
/// in a.  Unavailable (nullopt) for negative conductor exponent.
struct WhittakerReport {
  int conductor_exponent = 0;
  std::optional<LaurentPoly> lambda_e;
  std::optional<LaurentPoly> lambda_f;
  std::optional<LaurentPoly> lambda_e_plus_f;
  CompactSide generic_component = CompactSide::K;
};

/// SL2 only (BadInput otherwise).
WhittakerReport whittaker(const RankOneGroup& g, int conductor_exponent);

}  // namespace lsf

#endif  // LSF_RANK_ONE_HECKE_HPP
