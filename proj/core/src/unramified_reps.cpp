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

#include "lsf/unramified_reps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lsf {

namespace {

bool allows_inversion(Family f) { return f != Family::A; }
bool even_inversions(Family f) { return f == Family::D; }

RationalVector abs_values(const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] < 0 ? -v[i] : v[i];
  return out;
}

// Permutation sending index i to its rank under a stable decreasing sort.
std::vector<int> decreasing_ranks(const RationalVector& key) {
  std::vector<int> order(key.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
  std::vector<int> rank(key.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos);
  return rank;
}

bool simple_root_in_levi(const Weight& root, int m) {
  bool low = false, high = false;
  int sum = 0;
  for (int i = 0; i < static_cast<int>(root.size()); ++i) {
    if (root[i] == 0) continue;
    (i < m ? low : high) = true;
    sum += root[i];
  }
  return !(low && high) && (high || sum == 0);
}

SignedPermutation direct_sum(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation w = a;
  for (int i = 0; i < b.size(); ++i) {
    w.perm.push_back(b.perm[i] + a.size());
    w.sign.push_back(b.sign[i]);
  }
  return w;
}

std::vector<int> vanishing_simple_roots(const std::vector<Weight>& simple, const RationalVector& nu,
                                        const std::vector<int>& indices) {
  std::vector<int> theta;
  for (int i : indices)
    if (dot(nu, coroot(simple[i - 1])) == 0) theta.push_back(i);
  return theta;
}

}  // namespace

void SatakeParameter::validate() const {
  if (group.rank < 1) throw BadInput("Satake parameter: rank must be >= 1");
  if (static_cast<int>(z.size()) != group.rank)
    throw BadInput("Satake parameter: expected " + std::to_string(group.rank) + " entries, got " +
                   std::to_string(z.size()));
}

bool SatakeParameter::is_exact() const {
  return std::all_of(z.begin(), z.end(), [](const auto& c) { return c.is_exact(); });
}

bool equal(const SatakeParameter& a, const SatakeParameter& b, const QSymbol& q) {
  if (!(a.group == b.group) || a.z.size() != b.z.size()) return false;
  for (std::size_t i = 0; i < a.z.size(); ++i)
    if (!eq(a.z[i], b.z[i], q)) return false;
  return true;
}

SatakeParameter weyl_canonical(const SatakeParameter& pi) {
  pi.validate();
  SatakeParameter out = pi;
  int inversions = 0;
  bool has_fixed_point = false;
  if (allows_inversion(pi.group.family)) {
    for (auto& c : out.z) {
      auto ci = inv(c);
      if (eq(c, ci)) has_fixed_point = true;
      if (compare(ci, c) > 0) {
        c = ci;
        ++inversions;
      }
    }
  }
  auto greater = [](const auto& a, const auto& b) { return compare(a, b) > 0; };
  std::stable_sort(out.z.begin(), out.z.end(), greater);
  if (even_inversions(pi.group.family) && inversions % 2 == 1 && !has_fixed_point)
    out.z.back() = inv(out.z.back());
  return out;
}

SatakeParameter contragredient(const SatakeParameter& pi) {
  SatakeParameter out = pi;
  for (auto& c : out.z) c = inv(c);
  return out;
}

PolarDecomposition polar_decompose(const SatakeParameter& pi) {
  pi.validate();
  if (!pi.is_exact()) throw ModeMismatch("polar_decompose: use polar_decompose_approx for Approx input");
  PolarDecomposition out;
  out.unitary.group = pi.group;
  for (const auto& c : pi.z) {
    out.nu.push_back(-c.exponent());
    out.unitary.z.push_back(UnitCoefficient::root_of_unity(c.turn()));
  }
  return out;
}

ApproxPolarDecomposition polar_decompose_approx(const SatakeParameter& pi, const QSymbol& q) {
  pi.validate();
  ApproxPolarDecomposition out;
  out.unitary.group = pi.group;
  for (const auto& c : pi.z) {
    if (c.is_exact()) {
      out.nu.push_back(-boost::rational_cast<double>(c.exponent()));
      out.unitary.z.push_back(UnitCoefficient::root_of_unity(c.turn()));
    } else {
      auto v = c.approx_value();
      out.nu.push_back(-to_double(log_q_modulus(c, q)));
      out.unitary.z.push_back(UnitCoefficient::approx(v / std::abs(v)));
    }
  }
  return out;
}

SatakeParameter recompose_polar(const RationalVector& nu, const SatakeParameter& unitary) {
  if (nu.size() != unitary.z.size()) throw BadInput("recompose_polar: length mismatch");
  SatakeParameter out = unitary;
  for (std::size_t i = 0; i < nu.size(); ++i)
    out.z[i] = mul(unitary.z[i], UnitCoefficient::q_power(-nu[i]));
  return out;
}

bool is_unitary(const SatakeParameter& pi, const QSymbol& q) {
  return std::all_of(pi.z.begin(), pi.z.end(),
                     [&](const auto& c) { return sign(log_q_modulus(c, q)) == 0; });
}

SignedPermutation dominant_element(const ClassicalGroupTag& g, const RationalVector& nu) {
  const int n = static_cast<int>(nu.size());
  if (n != g.rank) throw BadInput("dominant_element: length mismatch");
  SignedPermutation w = SignedPermutation::identity(n);
  if (g.family == Family::A) {
    w.perm = decreasing_ranks(nu);
    return w;
  }
  int negatives = 0;
  for (int i = 0; i < n; ++i)
    if (nu[i] < 0) {
      w.sign[i] = -1;
      ++negatives;
    }
  auto key = abs_values(nu);
  w.perm = decreasing_ranks(key);
  if (g.family == Family::D && negatives % 2 == 1) {
    // flip the coordinate landing last; if it is zero this is harmless
    int last = static_cast<int>(std::find(w.perm.begin(), w.perm.end(), n - 1) - w.perm.begin());
    w.sign[last] = -w.sign[last];
  }
  return w;
}

namespace {

void fill_blocks(StandardModuleDatum& out) {
  const auto& g = out.group;
  const int n = g.rank;
  auto simple = simple_roots(g);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool last_in = false, second_last_in = false;
  for (int i : out.theta) {
    if (i == n) last_in = true;
    if (i == n - 1) second_last_in = true;
    int first = -1;
    for (int c = 0; c < n; ++c) {
      if (simple[i - 1][c] == 0) continue;
      if (first < 0) first = c;
      else parent[find(c)] = find(first);
    }
  }
  bool has_classical = false;
  if ((g.family == Family::B || g.family == Family::C) && last_in) has_classical = true;
  if ((g.family == Family::D || g.family == Family::D_full) && last_in && second_last_in)
    has_classical = true;
  std::vector<int> sizes(n, 0);
  for (int c = 0; c < n; ++c) ++sizes[find(c)];
  for (int c = 0; c < n; ++c) {
    if (find(c) != c) continue;
    if (has_classical && find(n - 1) == c) out.classical_rank = sizes[c];
    else out.gl_blocks.push_back(sizes[c]);
  }
}

}  // namespace

StandardModuleDatum langlands_data(const SatakeParameter& pi) {
  auto polar = polar_decompose(pi);
  StandardModuleDatum out;
  out.group = pi.group;
  out.weyl = dominant_element(pi.group, polar.nu);
  out.eta_exponents = lsf::apply(out.weyl, polar.nu);
  out.tempered_part = polar.unitary;
  out.tempered_part.z = lsf::apply(out.weyl, polar.unitary.z);
  std::vector<int> all(pi.group.family == Family::A ? pi.group.rank - 1 : pi.group.rank);
  std::iota(all.begin(), all.end(), 1);
  if (pi.group.family == Family::D && pi.group.rank == 1) all.clear();
  out.theta = vanishing_simple_roots(simple_roots(pi.group), out.eta_exponents, all);
  fill_blocks(out);
  return out;
}

LeviStandardModule langlands_data(const LeviDatum& levi, const SatakeParameter& pi) {
  pi.validate();
  if (!(pi.group == levi.ambient)) throw BadInput("langlands_data: Satake group does not match Levi");
  auto polar = polar_decompose(pi);
  const int m = levi.gl_rank, n = levi.g_rank;
  RationalVector gl(polar.nu.begin(), polar.nu.begin() + m);
  RationalVector rest(polar.nu.begin() + m, polar.nu.end());
  auto w = dominant_element({Family::A, m}, gl);
  if (n > 0) {
    Family f = levi.ambient.family;
    w = direct_sum(w, dominant_element({f, n}, rest));
  }
  LeviStandardModule out;
  out.levi = levi;
  out.weyl = w;
  out.eta_exponents = lsf::apply(w, polar.nu);
  out.moved = pi;
  out.moved.z = lsf::apply(w, pi.z);
  out.tempered_part = polar.unitary;
  out.tempered_part.z = lsf::apply(w, polar.unitary.z);
  auto simple = simple_roots(levi.ambient);
  std::vector<int> inside;
  for (int i = 1; i <= static_cast<int>(simple.size()); ++i)
    if (simple_root_in_levi(simple[i - 1], m)) inside.push_back(i);
  out.theta = vanishing_simple_roots(simple, out.eta_exponents, inside);
  return out;
}

}  // namespace lsf
