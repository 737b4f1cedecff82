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

#include "lsf/root_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lsf {

namespace {

Weight unit_vector(int n, int i, int c = 1) {
  Weight v(n, 0);
  v[i] = c;
  return v;
}

Weight pair_vector(int n, int i, int j, int si, int sj) {
  Weight v(n, 0);
  v[i] = si;
  v[j] = sj;
  return v;
}

// Roots of GL_m x G_n: supported in the first m coordinates with shape
// e_i - e_j, or supported in the last n coordinates.
bool in_levi(const Weight& root, int m) {
  bool low = false, high = false;
  for (int i = 0; i < static_cast<int>(root.size()); ++i) {
    if (root[i] == 0) continue;
    (i < m ? low : high) = true;
  }
  if (low && high) return false;
  if (high) return true;
  return std::accumulate(root.begin(), root.end(), 0) == 0;
}

void check_tag(const ClassicalGroupTag& g) {
  if (g.rank < 1) throw BadInput("group rank must be >= 1");
  if ((g.family == Family::D || g.family == Family::D_full) && g.rank < 2 &&
      g.rank != 1)
    throw BadInput("bad rank for family D");
}

std::vector<Weight> all_roots(const ClassicalGroupTag& g) {
  auto pos = positive_roots(g);
  std::vector<Weight> out = pos;
  for (auto r : pos) {
    for (auto& x : r) x = -x;
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::D_full: return "D_full";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "D_full") return Family::D_full;
  throw BadInput("unknown family '" + std::string(s) + "'");
}

Family dual_family(Family f) {
  switch (f) {
    case Family::B: return Family::C;
    case Family::C: return Family::B;
    default: return f;
  }
}

std::vector<Weight> positive_roots(const ClassicalGroupTag& g) {
  check_tag(g);
  const int n = g.rank;
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(pair_vector(n, i, j, 1, -1));
  if (g.family == Family::A) return out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(pair_vector(n, i, j, 1, 1));
  if (g.family == Family::B)
    for (int i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  if (g.family == Family::C)
    for (int i = 0; i < n; ++i) out.push_back(unit_vector(n, i, 2));
  return out;
}

std::vector<Weight> simple_roots(const ClassicalGroupTag& g) {
  check_tag(g);
  const int n = g.rank;
  std::vector<Weight> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back(pair_vector(n, i, i + 1, 1, -1));
  switch (g.family) {
    case Family::A: break;
    case Family::B: out.push_back(unit_vector(n, n - 1)); break;
    case Family::C: out.push_back(unit_vector(n, n - 1, 2)); break;
    case Family::D:
    case Family::D_full:
      if (n >= 2) out.push_back(pair_vector(n, n - 2, n - 1, 1, 1));
      break;
  }
  return out;
}

Weight coroot(const Weight& alpha) {
  int norm = dot(alpha, alpha);
  Weight out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if ((2 * alpha[i]) % norm != 0) throw DomainError("coroot is not integral");
    out[i] = 2 * alpha[i] / norm;
  }
  return out;
}

int dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw BadInput("dimension mismatch in pairing");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

Rational dot(const RationalVector& a, const Weight& b) {
  if (a.size() != b.size()) throw BadInput("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// -- Levi data -------------------------------------------------------------------

namespace {

struct LeviRoots {
  std::vector<Weight> unipotent;  // group-side positive roots outside the Levi
  CocharacterData cochar;
};

LeviRoots levi_roots(const LeviDatum& levi) {
  const int m = levi.gl_rank;
  LeviRoots out;
  for (const auto& r : positive_roots(levi.ambient))
    if (!in_levi(r, m)) out.unipotent.push_back(r);

  const int dim = levi.ambient.rank;
  auto& cd = out.cochar;
  cd.rho_P.assign(dim, Rational(0));
  for (const auto& r : out.unipotent)
    for (int i = 0; i < dim; ++i) cd.rho_P[i] += Rational(r[i], 2);
  cd.alpha_coroot = coroot(simple_roots(levi.ambient).at(levi.removed_simple_root - 1));
  Rational norm = dot(cd.rho_P, cd.alpha_coroot);
  if (norm <= 0) throw DomainError("rho_P does not pair positively with the removed coroot");
  cd.tilde_alpha.resize(dim);
  for (int i = 0; i < dim; ++i) cd.tilde_alpha[i] = cd.rho_P[i] / norm;
  return out;
}

}  // namespace

LeviDatum build_levi(Family family, int m, int n) {
  if (family == Family::D_full)
    throw BadInput("build_levi: D_full is only used for orbit bookkeeping");
  if (m < 1 || n < 0) throw BadInput("build_levi: need m >= 1 and n >= 0");
  if (family == Family::A && n < 1) throw BadInput("build_levi: family A needs n >= 1");
  if (family == Family::D && m + n < 2) throw BadInput("build_levi: family D needs m + n >= 2");
  LeviDatum levi;
  levi.ambient = {family, m + n};
  levi.gl_rank = m;
  levi.g_rank = n;
  levi.removed_simple_root = m;
  levi.degenerate = family == Family::D && n == 1;

  auto lr = levi_roots(levi);
  std::set<Rational> values;
  for (const auto& r : lr.unipotent) values.insert(dot(lr.cochar.tilde_alpha, coroot(r)));
  levi.levels = static_cast<int>(values.size());
  int expect = 1;
  for (const auto& v : values) {
    if (v != expect) throw DomainError("LS levels are not 1..m(G,P)");
    ++expect;
  }
  return levi;
}

const std::vector<Weight>& LSWeightSystem::level(int i) const {
  if (i < 1 || i > static_cast<int>(levels.size()))
    throw BadInput("LS level " + std::to_string(i) + " out of range");
  return levels[i - 1];
}

std::size_t LSWeightSystem::total() const {
  std::size_t s = 0;
  for (const auto& l : levels) s += l.size();
  return s;
}

LSWeightSystem ls_weights(const LeviDatum& levi) {
  auto lr = levi_roots(levi);
  LSWeightSystem out;
  out.levels.resize(levi.levels);
  for (const auto& r : lr.unipotent) {
    auto cr = coroot(r);
    Rational lvl = dot(lr.cochar.tilde_alpha, cr);
    if (lvl.denominator() != 1 || lvl < 1 || lvl > levi.levels)
      throw DomainError("non-integral LS level");
    out.levels[lvl.numerator() - 1].push_back(std::move(cr));
  }
  for (auto& l : out.levels) std::sort(l.begin(), l.end(), std::greater<>());
  return out;
}

CocharacterData cocharacter_data(const LeviDatum& levi) {
  auto cd = levi_roots(levi).cochar;
  for (int j = 1; j <= levi.levels; ++j) {
    Weight d = cd.alpha_coroot;
    for (auto& x : d) x *= j;
    cd.delta.push_back(std::move(d));
  }
  return cd;
}

Rational CocharacterData::pairing(const RationalVector& nu, int level) const {
  if (level < 1 || level > static_cast<int>(delta.size()))
    throw BadInput("LS level " + std::to_string(level) + " out of range");
  return dot(nu, delta[level - 1]);
}

std::vector<Weight> dual_levi_roots(const LeviDatum& levi) {
  std::vector<Weight> out;
  for (const auto& r : all_roots(levi.ambient))
    if (in_levi(r, levi.gl_rank)) out.push_back(coroot(r));
  return out;
}

std::vector<Weight> dual_roots(const ClassicalGroupTag& g) {
  std::vector<Weight> out;
  for (const auto& r : all_roots(g)) out.push_back(coroot(r));
  return out;
}

// -- Weyl groups ---------------------------------------------------------------

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw BadInput("Weyl elements of different rank");
  SignedPermutation c = SignedPermutation::identity(a.size());
  for (int i = 0; i < a.size(); ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.sign[i] = b.sign[i] * a.sign[b.perm[i]];
  }
  return c;
}

SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation v = SignedPermutation::identity(w.size());
  for (int i = 0; i < w.size(); ++i) {
    v.perm[w.perm[i]] = i;
    v.sign[w.perm[i]] = w.sign[i];
  }
  return v;
}

Weight apply(const SignedPermutation& w, const Weight& v) {
  if (static_cast<int>(v.size()) != w.size()) throw BadInput("Weyl action: dimension mismatch");
  Weight out(v.size());
  for (int i = 0; i < w.size(); ++i) out[w.perm[i]] = w.sign[i] * v[i];
  return out;
}

RationalVector apply(const SignedPermutation& w, const RationalVector& v) {
  if (static_cast<int>(v.size()) != w.size()) throw BadInput("Weyl action: dimension mismatch");
  RationalVector out(v.size());
  for (int i = 0; i < w.size(); ++i) out[w.perm[i]] = v[i] * w.sign[i];
  return out;
}

std::vector<UnitCoefficient> apply(const SignedPermutation& w,
                                   const std::vector<UnitCoefficient>& z) {
  if (static_cast<int>(z.size()) != w.size()) throw BadInput("Weyl action: dimension mismatch");
  std::vector<UnitCoefficient> out(z.size());
  for (int i = 0; i < w.size(); ++i) out[w.perm[i]] = w.sign[i] > 0 ? z[i] : inv(z[i]);
  return out;
}

SignedPermutation simple_reflection(const ClassicalGroupTag& g, int i) {
  const int n = g.rank;
  auto w = SignedPermutation::identity(n);
  if (i >= 1 && i < n) {
    std::swap(w.perm[i - 1], w.perm[i]);
    return w;
  }
  if (i == n && g.family != Family::A) {
    if (g.family == Family::B || g.family == Family::C) {
      w.sign[n - 1] = -1;
      return w;
    }
    if (n >= 2) {
      std::swap(w.perm[n - 2], w.perm[n - 1]);
      w.sign[n - 2] = w.sign[n - 1] = -1;
      return w;
    }
  }
  throw BadInput("no simple reflection s_" + std::to_string(i) + " in " + to_string(g.family) +
                 std::to_string(n));
}

SignedPermutation weyl_element(const ClassicalGroupTag& g, const std::vector<int>& word) {
  auto w = SignedPermutation::identity(g.rank);
  for (int i : word) w = compose(w, simple_reflection(g, i));
  return w;
}

std::vector<SignedPermutation> weyl_group(const ClassicalGroupTag& g) {
  const int n = g.rank;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SignedPermutation> out;
  do {
    const int sign_patterns = g.family == Family::A ? 1 : (1 << n);
    for (int mask = 0; mask < sign_patterns; ++mask) {
      if (g.family == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
      SignedPermutation w;
      w.perm = p;
      w.sign.resize(n);
      for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int weyl_length(const ClassicalGroupTag& g, const SignedPermutation& w) {
  ClassicalGroupTag h = g;
  if (h.family == Family::D_full) h.family = Family::D;
  auto pos = positive_roots(h);
  std::set<Weight> positive(pos.begin(), pos.end());
  int len = 0;
  for (const auto& r : pos)
    if (!positive.count(lsf::apply(w, r))) ++len;
  return len;
}

}  // namespace lsf
