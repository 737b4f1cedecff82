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

#ifndef LSF_ROOT_DATA_HPP
#define LSF_ROOT_DATA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lsf/coeff.hpp"

namespace lsf {

/// A: GL_n, B: SO_{2n+1}, C: Sp_{2n}, D: SO_{2n}, D_full: O_{2n}.
/// In every family `rank` is the number of torus coordinates.
enum class Family { A, B, C, D, D_full };

std::string to_string(Family f);
Family parse_family(std::string_view s);

struct ClassicalGroupTag {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const ClassicalGroupTag&, const ClassicalGroupTag&) = default;
};

/// Root-datum family of the complex dual group (B <-> C, the rest fixed).
Family dual_family(Family f);

/// Integer vectors in the standard e_1..e_N coordinates.  A weight beta
/// sends a Satake tuple z to prod z_j^{beta_j}.
using Weight = std::vector<int>;

/// Positive roots of the group in the standard coordinate models
/// (e_i - e_j, e_i + e_j, e_i for B, 2 e_i for C).
std::vector<Weight> positive_roots(const ClassicalGroupTag& g);
/// alpha_1..alpha_N: e_i - e_{i+1} and then e_N (B), 2e_N (C), e_{N-1}+e_N (D).
std::vector<Weight> simple_roots(const ClassicalGroupTag& g);
/// 2 alpha / (alpha, alpha).
Weight coroot(const Weight& alpha);

int dot(const Weight& a, const Weight& b);
Rational dot(const RationalVector& a, const Weight& b);

/// GL_m x G_n inside G_{m+n} (for A: GL_m x GL_n inside GL_{m+n}).
struct LeviDatum {
  ClassicalGroupTag ambient;
  int gl_rank = 0;             // m
  int g_rank = 0;              // n
  int removed_simple_root = 0; // 1-based index into simple_roots(ambient)
  int levels = 0;              // m(G,P)
  bool degenerate = false;     // family D with n = 1: the Levi is not maximal

  friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
};

LeviDatum build_levi(Family family, int m, int n);

/// levels[i-1] holds the weights of r_i: dual-group roots in the
/// unipotent radical with <tilde_alpha, beta^vee> = i.
struct LSWeightSystem {
  std::vector<std::vector<Weight>> levels;

  const std::vector<Weight>& level(int i) const;
  std::size_t total() const;
};

LSWeightSystem ls_weights(const LeviDatum& levi);

struct CocharacterData {
  RationalVector rho_P;        // half-sum of the roots in the unipotent radical
  Weight alpha_coroot;         // coroot of the removed simple root
  RationalVector tilde_alpha;  // rho_P / <rho_P, alpha^vee>
  std::vector<Weight> delta;   // delta[i-1] = i * alpha^vee

  /// <nu, delta_{r_level}> for a central exponent vector nu.
  Rational pairing(const RationalVector& nu, int level) const;
};

CocharacterData cocharacter_data(const LeviDatum& levi);

/// Roots of the dual Levi (both signs), in the same coordinates.
std::vector<Weight> dual_levi_roots(const LeviDatum& levi);
/// All roots (both signs) of the dual of the ambient group.
std::vector<Weight> dual_roots(const ClassicalGroupTag& g);

// -- Weyl groups ---------------------------------------------------------------

/// A signed permutation: coordinate i is sent to position perm[i], and
/// inverted (for Satake tuples) / negated (for vectors) when sign[i] < 0.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int n);
  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Composition (a * b)(x) = a(b(x)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);

Weight apply(const SignedPermutation& w, const Weight& v);
RationalVector apply(const SignedPermutation& w, const RationalVector& v);
std::vector<UnitCoefficient> apply(const SignedPermutation& w,
                                   const std::vector<UnitCoefficient>& z);

/// The simple reflection s_i (1-based) of the group's Weyl group.
SignedPermutation simple_reflection(const ClassicalGroupTag& g, int i);
/// w = s_{word[0]} s_{word[1]} ... s_{word[k-1]}.
SignedPermutation weyl_element(const ClassicalGroupTag& g, const std::vector<int>& word);
/// Every element of the Weyl group (D_full: all sign changes).
std::vector<SignedPermutation> weyl_group(const ClassicalGroupTag& g);
int weyl_length(const ClassicalGroupTag& g, const SignedPermutation& w);

}  // namespace lsf

#endif  // LSF_ROOT_DATA_HPP
