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

std::vector<LeviDatum> all_levis(int max_rank) {
  std::vector<LeviDatum> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (auto& l : levis_up_to(f, max_rank)) out.push_back(l);
  return out;
}

// Direct numeric L(s) = prod 1/(1 - beta(z) q^{-s}) from complex z values.
std::complex<double> numeric_L(const std::vector<Weight>& weights,
                               const std::vector<UnitCoefficient>& z, std::complex<double> s,
                               double q) {
  std::complex<double> t = std::exp(-s * std::log(q)), out = 1.0;
  for (const auto& beta : weights) {
    std::complex<double> v = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) v *= std::pow(test::numeric(z[j], q), beta[j]);
    out /= 1.0 - v * t;
  }
  return out;
}

TEST(GaloisL, SteinbergCharacter) {
  auto z = Z({"q^(-1/2)", "q^(1/2)", "1"});
  EXPECT_TRUE(equal(weight_L({{1, 0, -1}}, z), Lf({"q^(-1/2)"})));
  EXPECT_TRUE(equal(weight_L({{0, 1, -1}}, z), Lf({"q^(1/2)"})));
  auto levi = build_levi(Family::A, 2, 1);
  EXPECT_TRUE(equal(galois_L({levi, {levi.ambient, z}}), Lf({"q^(-1/2)", "q^(1/2)"})));
}

TEST(GaloisL, SiegelSymSquare) {
  auto levi = build_levi(Family::B, 2, 0);
  auto z = Z({"e(1/5)*q^(1/3)", "-q^(-1/4)"});
  auto want = FRF::L_factor({pow(z[0], 2), mul(z[0], z[1]), pow(z[1], 2)});
  EXPECT_TRUE(equal(galois_L({levi, {levi.ambient, z}}), want));
}

TEST(GaloisL, EmptyWeightListIsOne) {
  EXPECT_TRUE(equal(weight_L({}, Z({"q"})), FRF::one()));
}

TEST(GaloisL, MatchesNumericProduct) {
  Sampler rng(11);
  for (const auto& levi : all_levis(5)) {
    auto z = rng.exact_tuple(levi.ambient.rank);
    auto weights = ls_weights(levi);
    for (int i = 1; i <= levi.levels; ++i) {
      auto L = galois_L({levi, {levi.ambient, z}, i});
      for (auto s : {std::complex<double>(2.7, 0.3), std::complex<double>(-0.4, 1.1)})
        EXPECT_TRUE(test::close(evaluate_s(L, s, test::q3()), numeric_L(weights.level(i), z, s, 3.0)));
    }
  }
}

TEST(GaloisL, ShapeErrors) {
  auto levi = build_levi(Family::C, 1, 1);
  EXPECT_THROW(galois_L({levi, {levi.ambient, Z({"q"})}}), BadInput);
  EXPECT_THROW(galois_L({levi, {{Family::B, 2}, Z({"q", "1"})}}), BadInput);
  EXPECT_THROW(galois_L({levi, {levi.ambient, Z({"q", "1"})}, 2}), BadInput);
}

TEST(Gamma, FunctionalEquationIsExactlyOne) {
  Sampler rng(5);
  for (const auto& levi : all_levis(5))
    for (int k : {0, 1, 3}) {
      SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
      for (int i = 1; i <= levi.levels; ++i) {
        AdditiveCharacterData psi{k};
        auto g = gamma_unramified({levi, pi, i, psi});
        auto gd = gamma_unramified({levi, contragredient(pi), i, psi});
        auto prod = normalize(multiply(g, reflect(gd)));
        EXPECT_TRUE(prod.is_monomial());
        EXPECT_TRUE(is_one(prod.unit())) << to_string(prod);
        EXPECT_EQ(prod.t_power(), 0);
      }
    }
}

TEST(Gamma, EpsilonConvention) {
  auto levi = build_levi(Family::A, 1, 1);
  SatakeParameter pi{levi.ambient, Z({"q^(1/2)", "e(1/3)"})};
  EXPECT_TRUE(equal(epsilon({levi, pi, 1, {0}}), FRF::one()));
  // one weight beta(z) = q^{1/2} e(-1/3); conductor 2: beta^{-2} q^{-1} t^{-2}
  auto eps = epsilon({levi, pi, 1, {2}});
  EXPECT_TRUE(equal(eps, FRF::monomial(C("e(2/3)*q^(-2)"), -2)));
}

TEST(Gamma, DecomposesIntoTriple) {
  Sampler rng(8);
  for (const auto& levi : all_levis(4)) {
    SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
    FactorRequest req{levi, pi, 1, {1}};
    auto t = local_factors(req);
    EXPECT_TRUE(equal(recompose(t), gamma_unramified(req)));
  }
}

TEST(Gamma, UnitaryInputGivesUnitModulusLAndDualPoles) {
  Sampler rng(9);
  auto levi = build_levi(Family::A, 2, 2);
  for (int rep = 0; rep < 20; ++rep) {
    SatakeParameter pi{levi.ambient, rng.unitary_tuple(4)};
    auto t = extract_L_eps(gamma_unramified({levi, pi}));
    for (const auto& a : t.L.denominator()) EXPECT_EQ(a.exponent(), Rational(0));
    for (const auto& a : t.L_dual.denominator()) EXPECT_EQ(a.exponent(), Rational(0));
  }
}

TEST(TwistShift, IdentityAndLevelScaling) {
  auto levi = build_levi(Family::C, 2, 1);
  auto L = Lf({"q", "e(1/3)"});
  EXPECT_TRUE(equal(twist_shift(L, {0, 0, 0}, levi, 1), L));
  RationalVector nu{Rational(1, 3), Rational(1, 3), 0};
  auto once = twist_shift(L, nu, levi, 1);
  auto twice = twist_shift(L, nu, levi, 2);
  EXPECT_TRUE(equal(shift(once, Rational(1, 3)), twice));
  EXPECT_THROW(twist_shift(L, {0, 0}, levi, 1), BadInput);
}

TEST(TwistShift, CentralTwistOfTheGlBlockIsAShift) {
  Sampler rng(21);
  for (const auto& levi : all_levis(5)) {
    const int dim = levi.ambient.rank;
    auto z = rng.exact_tuple(dim);
    Rational c = rng.rational(2, 6);
    auto twisted = z;
    RationalVector nu(dim, Rational(0));
    for (int j = 0; j < levi.gl_rank; ++j) {
      twisted[j] = mul(z[j], UnitCoefficient::q_power(-c));
      nu[j] = c;
    }
    for (int i = 1; i <= levi.levels; ++i) {
      FactorRequest base{levi, {levi.ambient, z}, i};
      FactorRequest tw{levi, {levi.ambient, twisted}, i};
      EXPECT_TRUE(equal(galois_L(tw), twist_shift(galois_L(base), nu, levi, i)));
      EXPECT_TRUE(equal_up_to_monomial(gamma_unramified(tw),
                                       twist_shift(gamma_unramified(base), nu, levi, i)));
    }
  }
}

TEST(LGeneral, AgreesWithGaloisRoute) {
  Sampler rng(31);
  for (const auto& levi : all_levis(5)) {
    for (int rep = 0; rep < 5; ++rep) {
      SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
      for (int i = 1; i <= levi.levels; ++i) {
        FactorRequest req{levi, pi, i};
        EXPECT_TRUE(equal(L_general(req), galois_L(req))) << to_string(levi.ambient.family);
      }
    }
  }
}

TEST(LGeneral, TemperedInputIsOneBlockPerWeightClass) {
  auto levi = build_levi(Family::C, 2, 1);
  SatakeParameter pi{levi.ambient, Z({"e(1/3)", "-1", "e(1/7)"})};
  auto r = L_general_detailed({levi, pi});
  for (const auto& b : r.blocks) EXPECT_EQ(b.shift, Rational(0));
  EXPECT_TRUE(equal(r.L, galois_L({levi, pi})));
}

TEST(LGeneral, BlocksCarryTheDominantShift) {
  auto levi = build_levi(Family::A, 2, 1);
  SatakeParameter pi{levi.ambient, Z({"q^(-1/2)", "q^(1/2)", "1"})};
  auto r = L_general_detailed({levi, pi});
  std::vector<Rational> shifts;
  for (const auto& b : r.blocks) {
    EXPECT_TRUE(equal(b.L, shift(b.unitary_L, b.shift)));
    shifts.push_back(b.shift);
  }
  std::sort(shifts.begin(), shifts.end());
  EXPECT_EQ(shifts, (std::vector<Rational>{Rational(-1, 2), Rational(1, 2)}));
  EXPECT_TRUE(equal(r.L, Lf({"q^(-1/2)", "q^(1/2)"})));
}

TEST(LGeneral, ApproxInputIsRejected) {
  auto levi = build_levi(Family::C, 1, 1);
  SatakeParameter pi{levi.ambient, {UnitCoefficient::approx({0.5, 0}), C("1")}};
  EXPECT_THROW(L_general({levi, pi}), DomainError);
}

TEST(GammaMultiplicativity, SteinbergCancellation) {
  auto levi = build_levi(Family::A, 2, 1);
  SatakeParameter st{levi.ambient, Z({"q^(-1/2)", "q^(1/2)", "1"})};
  auto gm = L_via_gamma_multiplicativity({levi, st});
  ASSERT_EQ(gm.component_gammas.size(), 2u);
  EXPECT_TRUE(equal(gm.factors.L, Lf({"q^(-1/2)"})));
  // One pole of galois_L cancels against a zero of the other component.
  EXPECT_EQ(galois_L({levi, st}).denominator().size(), 2u);
  EXPECT_TRUE(equal(recompose(gm.factors), gm.gamma));
}

TEST(LocalCoefficient, SingleLevelIsGamma) {
  Sampler rng(2);
  for (const auto& levi : levis_up_to(Family::A, 4)) {
    SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
    EXPECT_TRUE(equal(local_coefficient(levi, pi, {}), gamma_unramified({levi, pi})));
  }
}

TEST(LocalCoefficient, IsTheProductOfGammaAtMultiplesOfS) {
  Sampler rng(4);
  for (const auto& levi : all_levis(4)) {
    SatakeParameter pi{levi.ambient, rng.exact_tuple(levi.ambient.rank)};
    AdditiveCharacterData psi{1};
    auto lc = local_coefficient(levi, pi, psi);
    for (auto s : {std::complex<double>(0.37, 0.2), std::complex<double>(1.3, -2.0)}) {
      std::complex<double> want = 1.0;
      for (int i = 1; i <= levi.levels; ++i)
        want *= evaluate_s(gamma_unramified({levi, pi, i, psi}), static_cast<double>(i) * s, test::q3());
      EXPECT_TRUE(test::close(evaluate_s(lc, s, test::q3()), want, 1e-7));
    }
  }
}

TEST(LocalCoefficient, UnitaryZerosAndPolesSitOnTheExpectedLines) {
  // Level i contributes zeros at Re(s) = 0 and poles at Re(s) = 1/i.
  auto levi = build_levi(Family::B, 1, 1);
  ASSERT_EQ(levi.levels, 2);
  Sampler rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    SatakeParameter pi{levi.ambient, rng.unitary_tuple(2)};
    auto lc = local_coefficient(levi, pi, {});
    for (const auto& a : lc.numerator()) EXPECT_EQ(a.exponent(), Rational(0));
    for (const auto& b : lc.denominator()) {
      auto x = b.exponent();
      EXPECT_TRUE(x == Rational(1) || x == Rational(1, 2)) << to_string(x);
    }
  }
}

TEST(TemperedCheck, UnitaryPassesShiftedControlFailsAtOneHalf) {
  Sampler rng(13);
  for (const auto& levi : all_levis(5)) {
    SatakeParameter pi{levi.ambient, rng.unitary_tuple(levi.ambient.rank)};
    auto ok = tempered_L_check(levi, pi);
    EXPECT_TRUE(ok.pass);
    EXPECT_TRUE(ok.unitary_input);
    for (const auto& l : ok.levels)
      for (const auto& p : l.poles) EXPECT_EQ(std::get<Rational>(p), Rational(0));

    auto cd = cocharacter_data(levi);
    int k = 0;
    for (int j = 0; j < levi.gl_rank; ++j) k += cd.alpha_coroot[j];
    auto z = pi.z;
    for (int j = 0; j < levi.gl_rank; ++j) z[j] = mul(z[j], UnitCoefficient::q_power(Rational(1, 2 * k)));
    auto bad = tempered_L_check(levi, {levi.ambient, z});
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.unitary_input);
    for (const auto& p : bad.levels.at(0).poles) EXPECT_EQ(std::get<Rational>(p), Rational(1, 2));
  }
}

TEST(TemperedCheck, ApproxModeAgrees) {
  const auto& q = test::q3();
  auto levi = build_levi(Family::D, 2, 2);
  Sampler rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    auto z = rng.unitary_tuple(4);
    for (auto& c : z) c = to_approx(c, q);
    EXPECT_TRUE(tempered_L_check(levi, {levi.ambient, z}, q).pass);
    z[0] = mul(z[0], UnitCoefficient::q_power(Rational(1, 2)), q);
    EXPECT_FALSE(tempered_L_check(levi, {levi.ambient, z}, q).pass);
  }
}

}  // namespace
}  // namespace lsf
