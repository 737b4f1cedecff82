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

#include "lsf/rational_forms.hpp"

#include <algorithm>
#include <cmath>

namespace lsf {

namespace {

void canonical_sort(std::vector<UnitCoefficient>& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return compare(a, b) < 0; });
}

bool same_multiset(const std::vector<UnitCoefficient>& a, const std::vector<UnitCoefficient>& b,
                   const QSymbol& q) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && eq(x, b[j], q)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string binomial_string(const UnitCoefficient& a) {
  auto s = to_string(a);
  if (s == "1") return "(1 - t)";
  if (s == "-1") return "(1 + t)";
  if (s.front() == '-') return "(1 + " + s.substr(1) + "*t)";
  return "(1 - " + s + "*t)";
}

}  // namespace

FactoredRationalFunction::FactoredRationalFunction(UnitCoefficient unit, int t_power,
                                                   std::vector<UnitCoefficient> numerator,
                                                   std::vector<UnitCoefficient> denominator)
    : unit_(std::move(unit)),
      t_power_(t_power),
      num_(std::move(numerator)),
      den_(std::move(denominator)) {
  canonical_sort(num_);
  canonical_sort(den_);
}

FactoredRationalFunction FactoredRationalFunction::monomial(UnitCoefficient unit, int t_power) {
  return {std::move(unit), t_power, {}, {}};
}

FactoredRationalFunction FactoredRationalFunction::L_factor(std::vector<UnitCoefficient> poles) {
  return {UnitCoefficient::one(), 0, {}, std::move(poles)};
}

FactoredRationalFunction FactoredRationalFunction::polynomial(std::vector<UnitCoefficient> zeros) {
  return {UnitCoefficient::one(), 0, std::move(zeros), {}};
}

FactoredRationalFunction FactoredRationalFunction::inverse_binomial(const UnitCoefficient& c) {
  return {neg(c), -1, {inv(c)}, {}};
}

FactoredRationalFunction FactoredRationalFunction::non_monomial_part() const {
  return {UnitCoefficient::one(), 0, num_, den_};
}

FactoredRationalFunction multiply(const FactoredRationalFunction& f,
                                  const FactoredRationalFunction& g, const QSymbol& q) {
  auto num = f.numerator();
  num.insert(num.end(), g.numerator().begin(), g.numerator().end());
  auto den = f.denominator();
  den.insert(den.end(), g.denominator().begin(), g.denominator().end());
  return {mul(f.unit(), g.unit(), q), f.t_power() + g.t_power(), std::move(num), std::move(den)};
}

FactoredRationalFunction invert(const FactoredRationalFunction& f) {
  return {inv(f.unit()), -f.t_power(), f.denominator(), f.numerator()};
}

FactoredRationalFunction normalize(const FactoredRationalFunction& f, const QSymbol& q) {
  std::vector<UnitCoefficient> num;
  std::vector<bool> cancelled(f.denominator().size(), false);
  for (const auto& a : f.numerator()) {
    bool hit = false;
    for (std::size_t k = 0; k < f.denominator().size() && !hit; ++k) {
      if (!cancelled[k] && eq(a, f.denominator()[k], q)) {
        cancelled[k] = true;
        hit = true;
      }
    }
    if (!hit) num.push_back(a);
  }
  std::vector<UnitCoefficient> den;
  for (std::size_t k = 0; k < f.denominator().size(); ++k)
    if (!cancelled[k]) den.push_back(f.denominator()[k]);
  return {f.unit(), f.t_power(), std::move(num), std::move(den)};
}

bool is_normalized(const FactoredRationalFunction& f, const QSymbol& q) {
  for (const auto& a : f.numerator())
    for (const auto& b : f.denominator())
      if (eq(a, b, q)) return false;
  return true;
}

FactoredRationalFunction shift(const FactoredRationalFunction& f, const Rational& c,
                               const QSymbol& q) {
  // q^{-(s+c)} = q^{-c} t
  const auto scale = UnitCoefficient::q_power(-c);
  auto rescale = [&](const std::vector<UnitCoefficient>& v) {
    std::vector<UnitCoefficient> out;
    out.reserve(v.size());
    for (const auto& a : v) out.push_back(mul(a, scale, q));
    return out;
  };
  auto unit = mul(f.unit(), pow(scale, f.t_power()), q);
  return {unit, f.t_power(), rescale(f.numerator()), rescale(f.denominator())};
}

FactoredRationalFunction reflect(const FactoredRationalFunction& f, const QSymbol& q) {
  const auto q_inv = UnitCoefficient::q_power(-1);
  // monomial: unit * (q^{-1} t^{-1})^n
  auto unit = mul(f.unit(), pow(q_inv, f.t_power()), q);
  int t_power = -f.t_power();
  std::vector<UnitCoefficient> num, den;
  for (const auto& a : f.numerator()) {
    // 1 - a q^{-1} t^{-1} = (-a q^{-1}) t^{-1} (1 - a^{-1} q t)
    unit = mul(unit, neg(mul(a, q_inv, q)), q);
    t_power -= 1;
    num.push_back(mul(inv(a), inv(q_inv), q));
  }
  for (const auto& b : f.denominator()) {
    unit = mul(unit, inv(neg(mul(b, q_inv, q))), q);
    t_power += 1;
    den.push_back(mul(inv(b), inv(q_inv), q));
  }
  return {unit, t_power, std::move(num), std::move(den)};
}

FactoredRationalFunction substitute_power(const FactoredRationalFunction& f, int k,
                                          const QSymbol& q) {
  if (k < 1) throw BadInput("substitute_power needs k >= 1");
  (void)q;
  auto split = [&](const std::vector<UnitCoefficient>& v) {
    std::vector<UnitCoefficient> out;
    for (const auto& a : v) {
      auto r = roots(a, k);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  };
  return {f.unit(), f.t_power() * k, split(f.numerator()), split(f.denominator())};
}

bool equal(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
           const QSymbol& q) {
  auto a = normalize(f, q);
  auto b = normalize(g, q);
  return a.t_power() == b.t_power() && eq(a.unit(), b.unit(), q) &&
         same_multiset(a.numerator(), b.numerator(), q) &&
         same_multiset(a.denominator(), b.denominator(), q);
}

bool equal_up_to_monomial(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                          const QSymbol& q) {
  return equal(f.non_monomial_part(), g.non_monomial_part(), q);
}

std::complex<double> evaluate_t(const FactoredRationalFunction& f, std::complex<double> t,
                                const QSymbol& q) {
  std::complex<double> v = f.unit().evaluate(q) * std::pow(t, f.t_power());
  for (const auto& a : f.numerator()) v *= 1.0 - a.evaluate(q) * t;
  for (const auto& b : f.denominator()) v /= 1.0 - b.evaluate(q) * t;
  return v;
}

std::complex<double> evaluate_s(const FactoredRationalFunction& f, std::complex<double> s,
                                const QSymbol& q) {
  auto t = std::exp(-s * std::log(q.to_double()));
  return evaluate_t(f, t, q);
}

LocalFactorTriple extract_L_eps(const FactoredRationalFunction& gamma, const QSymbol& q) {
  if (!is_normalized(gamma, q))
    throw BadInput("extract_L_eps: gamma has a common numerator/denominator factor");
  LocalFactorTriple out;
  out.L = FactoredRationalFunction::L_factor(gamma.numerator());
  const auto qq = UnitCoefficient::q_power(1);
  std::vector<UnitCoefficient> dual_poles;
  for (const auto& b : gamma.denominator()) dual_poles.push_back(mul(qq, inv(b), q));
  out.L_dual = FactoredRationalFunction::L_factor(std::move(dual_poles));
  // epsilon = gamma * L / reflect(L_dual)
  auto eps = multiply(multiply(gamma, out.L, q), invert(reflect(out.L_dual, q)), q);
  eps = normalize(eps, q);
  if (!eps.is_monomial())
    throw DomainError("extract_L_eps: denominator is not a reflected L-factor");
  out.epsilon = eps;
  return out;
}

FactoredRationalFunction recompose(const LocalFactorTriple& triple, const QSymbol& q) {
  auto g = multiply(triple.epsilon, reflect(triple.L_dual, q), q);
  return normalize(multiply(g, invert(triple.L), q), q);
}

std::vector<Abscissa> pole_abscissas(const FactoredRationalFunction& L, const QSymbol& q) {
  if (!L.numerator().empty()) throw BadInput("pole_abscissas: not an L-factor (has zeros)");
  std::vector<Abscissa> out;
  out.reserve(L.denominator().size());
  for (const auto& a : L.denominator()) out.push_back(log_q_modulus(a, q));
  return out;
}

bool holomorphic_on_right_half_plane(const FactoredRationalFunction& L, const QSymbol& q) {
  for (const auto& x : pole_abscissas(L, q))
    if (sign(x) > 0) return false;
  return true;
}

std::string to_string(const FactoredRationalFunction& f) {
  std::string out;
  auto u = to_string(f.unit());
  bool wrote = false;
  if (u != "1") {
    out += u;
    wrote = true;
  }
  if (f.t_power() != 0) {
    if (wrote) out += "*";
    out += f.t_power() == 1 ? "t" : "t^" + std::to_string(f.t_power());
    wrote = true;
  }
  if (!f.numerator().empty()) {
    if (wrote) out += "*";
    for (const auto& a : f.numerator()) out += binomial_string(a);
    wrote = true;
  }
  if (!wrote) out = "1";
  if (!f.denominator().empty()) {
    out += " / ";
    if (f.denominator().size() > 1) out += "(";
    for (const auto& b : f.denominator()) out += binomial_string(b);
    if (f.denominator().size() > 1) out += ")";
  }
  return out;
}

}  // namespace lsf
