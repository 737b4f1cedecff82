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

#include "lsf/casselman.hpp"

#include <algorithm>
#include <cctype>

namespace lsf {

namespace {

void canonical_sort(std::vector<UnitCoefficient>& v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
}

bool is_negative_root(const Weight& r) {
  for (int c : r)
    if (c != 0) return c < 0;
  throw BadInput("zero vector is not a root");
}

bool same_multiset(const std::vector<UnitCoefficient>& a, const std::vector<UnitCoefficient>& b,
                   const QSymbol& q) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && eq(x, b[j], q)) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

std::string binomial(const UnitCoefficient& u) {
  auto s = to_string(u);
  if (s.front() == '-') return "(1 + " + s.substr(1) + ")";
  return "(1 - " + s + ")";
}

int hecke_shift(CGroupKind kind) {
  switch (kind) {
    case CGroupKind::SL2: return 1;
    case CGroupKind::SU21: return 2;
    case CGroupKind::Split: break;
  }
  throw BadInput("the Hecke parameter bridge is defined for SL2 and SU21 only");
}

}  // namespace

CGroup CGroup::parse(std::string_view text) {
  std::string s(text);
  std::string upper;
  for (char c : s) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "SL2") return sl2();
  if (upper == "SU21" || upper == "SU(2,1)") return su21();
  std::size_t split_at = 0;
  while (split_at < s.size() && !std::isdigit(static_cast<unsigned char>(s[split_at]))) ++split_at;
  if (split_at == 0 || split_at == s.size()) throw BadInput("unknown group '" + s + "'");
  ClassicalGroupTag tag{parse_family(s.substr(0, split_at)), 0};
  try {
    tag.rank = std::stoi(s.substr(split_at));
  } catch (const std::exception&) {
    throw BadInput("bad rank in group '" + s + "'");
  }
  if (tag.rank < 1 || tag.family == Family::D_full) throw BadInput("unsupported group '" + s + "'");
  return split(tag);
}

std::string CGroup::name() const {
  switch (kind) {
    case CGroupKind::SL2: return "SL2";
    case CGroupKind::SU21: return "SU21";
    case CGroupKind::Split: break;
  }
  return to_string(tag.family) + std::to_string(tag.rank);
}

std::vector<RankOneStructure> structure_table(const CGroup& g) {
  std::vector<RankOneStructure> out;
  switch (g.kind) {
    case CGroupKind::SL2:
      out.push_back({{1}, 1, 0, {1}});
      return out;
    case CGroupKind::SU21:
      out.push_back({{1}, 1, 2, {1}});
      return out;
    case CGroupKind::Split:
      break;
  }
  if (g.tag.family == Family::D_full) throw BadInput("structure_table: D_full is not a group here");
  for (const auto& r : positive_roots(g.tag)) out.push_back({r, 1, 0, coroot(r)});
  return out;
}

BinomialProduct multiply(const BinomialProduct& a, const BinomialProduct& b, const QSymbol& q) {
  BinomialProduct out{mul(a.unit, b.unit, q), a.num, a.den};
  out.num.insert(out.num.end(), b.num.begin(), b.num.end());
  out.den.insert(out.den.end(), b.den.begin(), b.den.end());
  canonical_sort(out.num);
  canonical_sort(out.den);
  return out;
}

BinomialProduct normalize(const BinomialProduct& a, const QSymbol& q) {
  BinomialProduct out{a.unit, {}, {}};
  std::vector<bool> cancelled(a.den.size(), false);
  for (const auto& u : a.num) {
    bool hit = false;
    for (std::size_t k = 0; k < a.den.size() && !hit; ++k)
      if (!cancelled[k] && eq(u, a.den[k], q)) cancelled[k] = hit = true;
    if (!hit) out.num.push_back(u);
  }
  for (std::size_t k = 0; k < a.den.size(); ++k)
    if (!cancelled[k]) out.den.push_back(a.den[k]);
  canonical_sort(out.num);
  canonical_sort(out.den);
  return out;
}

bool equal(const BinomialProduct& a, const BinomialProduct& b, const QSymbol& q) {
  auto x = normalize(a, q);
  auto y = normalize(b, q);
  return eq(x.unit, y.unit, q) && same_multiset(x.num, y.num, q) && same_multiset(x.den, y.den, q);
}

bool is_zero(const BinomialProduct& a, const QSymbol& q) {
  return std::any_of(a.num.begin(), a.num.end(), [&](const auto& u) { return is_one(u, q); });
}

std::complex<double> evaluate(const BinomialProduct& a, const QSymbol& q) {
  std::complex<double> v = a.unit.evaluate(q);
  for (const auto& u : a.num) v *= 1.0 - u.evaluate(q);
  for (const auto& u : a.den) v /= 1.0 - u.evaluate(q);
  return v;
}

std::string to_string(const BinomialProduct& a) {
  std::string num;
  if (!is_one(a.unit) || a.num.empty()) num = to_string(a.unit);
  for (const auto& u : a.num) num += (num.empty() ? "" : "*") + binomial(u);
  if (a.den.empty()) return num;
  std::string den;
  for (const auto& u : a.den) den += (den.empty() ? "" : "*") + binomial(u);
  return num + " / (" + den + ")";
}

UnitCoefficient chi_of(const RankOneStructure& s, const std::vector<UnitCoefficient>& z,
                       const QSymbol& q) {
  if (s.pairing.size() != z.size()) throw BadInput("chi(a_alpha): tuple length mismatch");
  auto v = UnitCoefficient::one();
  for (std::size_t i = 0; i < z.size(); ++i)
    if (s.pairing[i] != 0) v = mul(v, pow(z[i], s.pairing[i]), q);
  return v;
}

BinomialProduct c_factor(const RankOneStructure& s, const UnitCoefficient& x, const QSymbol& q) {
  if (is_one(x, q) || eq(x, UnitCoefficient::minus_one(), q))
    throw NonRegular("c-function: chi(a_alpha) = " + to_string(x) + " is not regular");
  const Rational half = -s.q_alpha_half_exp / 2;
  BinomialProduct f;
  f.num = {mul(UnitCoefficient::q_power(half - s.q_alpha_exp), x, q),
           neg(mul(UnitCoefficient::q_power(half), x, q))};
  f.den = {x, neg(x)};
  canonical_sort(f.num);
  canonical_sort(f.den);
  return f;
}

BinomialProduct c_function(const SatakeParameter& chi, const SignedPermutation& w,
                           const std::vector<RankOneStructure>& table, const QSymbol& q) {
  chi.validate();
  if (w.size() != chi.group.rank) throw BadInput("c-function: Weyl element has the wrong rank");
  auto out = BinomialProduct::one();
  for (const auto& s : table)
    if (is_negative_root(lsf::apply(w, s.root))) out = multiply(out, c_factor(s, chi_of(s, chi.z, q), q), q);
  return out;
}

NonvanishingReport nonvanishing_on_spherical(const SatakeParameter& chi, const SignedPermutation& w,
                                             const std::vector<RankOneStructure>& table,
                                             const QSymbol& q) {
  NonvanishingReport out;
  out.nonvanishing = !is_zero(c_function(chi, w, table, q), q);
  out.positivity_certificate = true;
  for (const auto& s : table)
    if (is_negative_root(lsf::apply(w, s.root)) && sign(log_q_modulus(chi_of(s, chi.z, q), q)) >= 0)
      out.positivity_certificate = false;
  return out;
}

UnitCoefficient hecke_parameter_from_x(CGroupKind kind, const UnitCoefficient& x) {
  return mul(UnitCoefficient::q_power(hecke_shift(kind)), inv(x));
}

UnitCoefficient x_from_hecke_parameter(CGroupKind kind, const UnitCoefficient& a) {
  return mul(UnitCoefficient::q_power(hecke_shift(kind)), inv(a));
}

}  // namespace lsf
