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

#include <gtest/gtest.h>

#include "unit/support.hpp"

namespace lsf {
namespace {

using test::C;
using test::Lf;
using test::Z;
using FRF = FactoredRationalFunction;

const std::complex<double> kProbes[] = {{0.3, 0.1}, {-0.7, 2.0}, {1.9, -0.4}, {0.05, 5.0}};

// A generic factored function used by the numeric identities below.
FRF sample() {
  return FRF(C("e(1/3)*q^(1/2)"), 2, Z({"q^(-1)", "e(1/4)"}), Z({"-q^(1/2)", "q^(3/2)", "e(2/5)"}));
}

TEST(RationalForms, ConstructionKeepsCanonicalOrder) {
  auto a = FRF(C("1"), 0, Z({"q", "1"}), {});
  auto b = FRF(C("1"), 0, Z({"1", "q"}), {});
  EXPECT_TRUE(equal(a, b));
  EXPECT_EQ(to_string(Lf({"q^(1/2)"})), to_string(FRF::L_factor(Z({"q^(1/2)"}))));
}

TEST(RationalForms, NormalizeCancelsUntilDisjoint) {
  auto f = FRF(C("q"), 1, Z({"q", "q", "-1"}), Z({"q", "e(1/3)"}));
  EXPECT_FALSE(is_normalized(f));
  auto g = normalize(f);
  EXPECT_TRUE(is_normalized(g));
  EXPECT_EQ(g.numerator().size(), 2u);
  EXPECT_EQ(g.denominator().size(), 1u);
  EXPECT_TRUE(equal(f, g));
}

TEST(RationalForms, MultiplyAndInvert) {
  auto f = sample();
  auto one = normalize(multiply(f, invert(f)));
  EXPECT_TRUE(one.is_monomial());
  EXPECT_TRUE(is_one(one.unit()));
  EXPECT_EQ(one.t_power(), 0);
}

TEST(RationalForms, InverseBinomialIdentity) {
  // 1 - c t^{-1} = (-c t^{-1})(1 - c^{-1} t)
  auto c = C("e(1/6)*q^(2/3)");
  auto f = FRF::inverse_binomial(c);
  for (auto t : {std::complex<double>(0.4, 0.2), std::complex<double>(-1.3, 0.0)}) {
    auto want = 1.0 - test::numeric(c, 3.0) / t;
    EXPECT_TRUE(test::close(evaluate_t(f, t, test::q3()), want));
  }
}

TEST(RationalForms, ReflectMatchesSubstitution) {
  auto f = sample();
  auto r = reflect(f);
  for (auto s : kProbes)
    EXPECT_TRUE(test::close(evaluate_s(r, s, test::q3()), evaluate_s(f, 1.0 - s, test::q3())));
}

TEST(RationalForms, ReflectIsAnInvolution) {
  auto f = sample();
  EXPECT_TRUE(equal(reflect(reflect(f)), f));
}

TEST(RationalForms, ReflectFixesCenterBinomial) {
  // 1 - q^{-1/2} t is invariant under s -> 1 - s up to the monomial factor,
  // and both sides agree at s = 1/2.
  auto f = FRF::polynomial(Z({"q^(-1/2)"}));
  auto r = reflect(f);
  EXPECT_TRUE(test::close(evaluate_s(r, 0.5, test::q3()), evaluate_s(f, 0.5, test::q3())));
}

TEST(RationalForms, ShiftMatchesSubstitution) {
  auto f = sample();
  for (Rational c : {Rational(1, 2), Rational(-3, 4), Rational(2)}) {
    auto g = shift(f, c);
    double cd = boost::rational_cast<double>(c);
    for (auto s : kProbes)
      EXPECT_TRUE(test::close(evaluate_s(g, s, test::q3()), evaluate_s(f, s + cd, test::q3())));
  }
}

TEST(RationalForms, ShiftComposes) {
  auto f = sample();
  EXPECT_TRUE(equal(shift(shift(f, Rational(1, 3)), Rational(1, 6)), shift(f, Rational(1, 2))));
  EXPECT_TRUE(equal(shift(f, 0), f));
}

TEST(RationalForms, SubstitutePowerMatchesSubstitution) {
  auto f = sample();
  for (int k : {1, 2, 3, 5}) {
    auto g = substitute_power(f, k);
    EXPECT_EQ(g.numerator().size(), f.numerator().size() * k);
    for (auto s : kProbes) {
      auto s_k = static_cast<double>(k) * s;
      EXPECT_TRUE(test::close(evaluate_s(g, s, test::q3()), evaluate_s(f, s_k, test::q3())))
          << "k=" << k;
    }
  }
}

TEST(RationalForms, ExtractAndRecompose) {
  // gamma = eps * L(1-s, dual) / L(s) with L = 1/(1 - q^{1/2} t), dual pole q^{-1/2}.
  auto L = Lf({"q^(1/2)", "e(1/3)"});
  auto Ld = Lf({"q^(-1/2)", "e(2/3)"});
  auto eps = FRF::monomial(C("-q^(1/2)"), -1);
  auto gamma = normalize(multiply(multiply(eps, reflect(Ld)), invert(L)));
  auto t = extract_L_eps(gamma);
  EXPECT_TRUE(equal(t.L, L));
  EXPECT_TRUE(equal(t.L_dual, Ld));
  EXPECT_TRUE(equal(t.epsilon, eps));
  EXPECT_TRUE(equal(recompose(t), gamma));
}

TEST(RationalForms, ExtractRejectsCommonFactors) {
  auto f = FRF(C("1"), 0, Z({"q"}), Z({"q"}));
  EXPECT_THROW(extract_L_eps(f), BadInput);
}

TEST(RationalForms, PoleAbscissas) {
  auto L = Lf({"q^(1/2)", "e(1/4)", "-q^(-1)"});
  auto p = pole_abscissas(L);
  ASSERT_EQ(p.size(), 3u);
  std::vector<Rational> got;
  for (const auto& x : p) got.push_back(std::get<Rational>(x));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<Rational>{Rational(-1), Rational(0), Rational(1, 2)}));
  EXPECT_FALSE(holomorphic_on_right_half_plane(L));
  EXPECT_TRUE(holomorphic_on_right_half_plane(Lf({"e(1/4)", "-q^(-1)"})));
  EXPECT_THROW(pole_abscissas(FRF::polynomial(Z({"q"}))), BadInput);
}

TEST(RationalForms, PoleIsWhereTheFactorBlowsUp) {
  // 1 - a q^{-s} = 0 at Re(s) = log_q |a|.
  auto L = Lf({"q^(3/2)"});
  auto near = evaluate_s(L, std::complex<double>(1.5 + 1e-7, 0.0), test::q3());
  EXPECT_GT(std::abs(near), 1e6);
}

TEST(RationalForms, ApproxModeAgreesWithExact) {
  auto f = sample();
  const auto& q = test::q3();
  std::vector<UnitCoefficient> num, den;
  for (const auto& a : f.numerator()) num.push_back(to_approx(a, q));
  for (const auto& b : f.denominator()) den.push_back(to_approx(b, q));
  FRF g(to_approx(f.unit(), q), f.t_power(), num, den);
  for (auto s : kProbes)
    EXPECT_TRUE(test::close(evaluate_s(reflect(g, q), s, q), evaluate_s(reflect(f), s, q)));
  EXPECT_TRUE(equal(shift(g, Rational(1, 2), q), shift(g, Rational(1, 2), q), q));
}

}  // namespace
}  // namespace lsf
