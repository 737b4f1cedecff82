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

#include "lsf/unitary_dual.hpp"

#include <algorithm>
#include <cmath>

namespace lsf {

namespace {

void check_unit_modulus(const UnitCoefficient& c, const QSymbol& q, const char* what) {
  if (sign(log_q_modulus(c, q)) != 0)
    throw BadInput(std::string(what) + " must have modulus 1, got " + to_string(c));
}

void check_d_family(const SatakeParameter& xi) {
  xi.validate();
  if (xi.group.family != Family::D && xi.group.family != Family::D_full)
    throw BadInput("orbit bookkeeping is only defined for family D");
}

}  // namespace

void UnramifiedClassification::validate(const QSymbol& q) const {
  if (l < 0) throw BadInput("negative part rank must be >= 0");
  if (group.family == Family::A) throw BadInput("classification needs a classical group");
  int total = l;
  for (const auto& t : E) {
    if (t.r < 1) throw BadInput("triple block size must be >= 1");
    if (t.alpha <= 0) throw BadInput("triple exponent must be > 0");
    check_unit_modulus(t.xi, q, "triple character");
    total += t.r;
  }
  if (total != group.rank)
    throw BadInput("sum of block sizes plus l is " + std::to_string(total) + ", group rank is " +
                   std::to_string(group.rank));
}

bool unitarity_necessary(const UnramifiedClassification& cls) {
  return std::all_of(cls.E.begin(), cls.E.end(), [](const auto& t) { return t.alpha < 1; });
}

UnramifiedClassification induce_gl_twist(const UnramifiedClassification& cls,
                                         const std::vector<UnitCoefficient>& etas,
                                         const Rational& t, const QSymbol& q) {
  cls.validate(q);
  if (t <= 0) throw BadInput("induce_gl_twist: exponent must be > 0");
  UnramifiedClassification out = cls;
  for (const auto& eta : etas) {
    check_unit_modulus(eta, q, "twist character");
    out.E.push_back({1, eta, t});
  }
  out.group.rank += static_cast<int>(etas.size());
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::NotUnitary ? "NotUnitary" : "NecessaryConditionHolds";
}

TwistVerdict theorem3_verdict(const UnramifiedClassification& cls,
                              const std::vector<UnitCoefficient>& etas, const Rational& s,
                              const QSymbol& q) {
  if (s <= 0) throw BadInput("theorem3_verdict: s must be > 0");
  if (etas.empty()) throw BadInput("theorem3_verdict: need m >= 1 twist characters");
  cls.validate(q);
  if (!unitarity_necessary(cls))
    throw DomainError("theorem3_verdict: input classification fails the unitarity condition");
  TwistVerdict out;
  out.induced = induce_gl_twist(cls, etas, s, q);
  out.boundary = s == 1;
  out.verdict = s > 1 ? Verdict::NotUnitary : Verdict::NecessaryConditionHolds;
  return out;
}

TwistVerdict theorem3_verdict_approx(const UnramifiedClassification& cls,
                                     const std::vector<UnitCoefficient>& etas, double s,
                                     const QSymbol& q) {
  if (!(s > 0) || !std::isfinite(s)) throw BadInput("theorem3_verdict: s must be > 0");
  if (etas.empty()) throw BadInput("theorem3_verdict: need m >= 1 twist characters");
  cls.validate(q);
  if (!unitarity_necessary(cls))
    throw DomainError("theorem3_verdict: input classification fails the unitarity condition");
  TwistVerdict out;
  out.boundary = std::abs(s - 1.0) <= approx_tolerance();
  out.verdict = (s > 1 && !out.boundary) ? Verdict::NotUnitary : Verdict::NecessaryConditionHolds;
  // the induced record keeps the nearest exact exponent with bounded denominator
  Rational t(static_cast<std::int64_t>(std::llround(s * 1000000)), 1000000);
  if (t <= 0) t = Rational(1, 1000000);
  out.induced = induce_gl_twist(cls, etas, t, q);
  return out;
}

SatakeParameter so_even_orbit(const SatakeParameter& xi, OrbitMode mode) {
  check_d_family(xi);
  SatakeParameter t = xi;
  t.group.family = mode == OrbitMode::O ? Family::D_full : Family::D;
  return weyl_canonical(t);
}

SatakeParameter sigma_twist(const SatakeParameter& xi) {
  check_d_family(xi);
  SatakeParameter out = xi;
  out.z.back() = inv(out.z.back());
  return out;
}

bool pi_plus_equal(const SatakeParameter& xi, const SatakeParameter& eta) {
  if (xi.group.rank != eta.group.rank) return false;
  return equal(so_even_orbit(xi, OrbitMode::O), so_even_orbit(eta, OrbitMode::O));
}

}  // namespace lsf
