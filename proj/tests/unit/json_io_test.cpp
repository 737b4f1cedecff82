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
using test::Z;
using test::Lf;

TEST(JsonIo, RationalsAndQ) {
  for (const char* r : {"0", "-3", "7/4", "-1/6"}) {
    auto v = parse_rational(r);
    EXPECT_EQ(rational_from_json(to_json(v)), v);
  }
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json(0.5)), BadInput);
  EXPECT_TRUE(qsymbol_from_json(to_json(QSymbol::formal())).is_formal());
  EXPECT_EQ(qsymbol_from_json(to_json(QSymbol::concrete(Rational(9, 2)))).value(), Rational(9, 2));
  EXPECT_EQ(qsymbol_from_json(Json(7)).value(), Rational(7));
  EXPECT_THROW(qsymbol_from_json(Json::array()), BadInput);
}

TEST(JsonIo, Coefficients) {
  for (const char* text : {"1", "-q^(1/2)", "e(2/7)*q^(-3)", "e(1/3)"}) {
    auto c = C(text);
    auto back = coefficient_from_json(to_json(c));
    EXPECT_TRUE(back.is_exact());
    EXPECT_TRUE(eq(back, c)) << text;
  }
  auto a = UnitCoefficient::approx({0.25, -1.5});
  auto back = coefficient_from_json(to_json(a));
  EXPECT_FALSE(back.is_exact());
  EXPECT_EQ(back.approx_value(), a.approx_value());
  EXPECT_TRUE(eq(coefficient_from_json(Json(-1)), UnitCoefficient::minus_one()));
  EXPECT_TRUE(eq(coefficient_from_json(Json{{"e", "2"}}), C("q^2")));
  EXPECT_THROW(coefficient_from_json(Json(true)), BadInput);
}

TEST(JsonIo, FactoredRationalFunction) {
  auto f = Lf({"q^(-1/2)", "e(1/3)"});
  auto back = frf_from_json(to_json(f));
  EXPECT_TRUE(equal(back, f));
  EXPECT_EQ(to_json(f).at("text"), to_string(f));
}

TEST(JsonIo, GroupsLevisAndSatake) {
  ClassicalGroupTag g{Family::D, 4};
  EXPECT_EQ(group_from_json(to_json(g)), g);
  EXPECT_THROW(group_from_json(Json{{"family", "C"}, {"rank", 0}}), BadInput);
  EXPECT_THROW(group_from_json(Json{{"family", "Q"}, {"rank", 2}}), BadInput);
  EXPECT_THROW(group_from_json(Json{{"rank", 2}}), BadInput);

  auto levi = build_levi(Family::B, 2, 3);
  EXPECT_EQ(levi_from_json(to_json(levi)), levi);

  SatakeParameter pi{{Family::C, 2}, Z({"e(1/5)*q", "-1"})};
  EXPECT_TRUE(equal(satake_from_json(to_json(pi)), pi));
  EXPECT_THROW(satake_from_json(Json{{"group", to_json(g)}, {"z", Json::array({"1"})}}), BadInput);
  EXPECT_THROW(satake_from_json(Json{{"group", to_json(g)}, {"z", "1"}}), BadInput);
}

TEST(JsonIo, Classification) {
  UnramifiedClassification c;
  c.E = {{2, C("e(1/3)"), Rational(1, 4)}, {1, C("-1"), Rational(3, 4)}};
  c.l = 1;
  c.negative_label = "sigma";
  c.group = {Family::B, 4};
  auto back = classification_from_json(to_json(c));
  ASSERT_EQ(back.E.size(), 2u);
  EXPECT_EQ(back.E[0].r, 2);
  EXPECT_TRUE(eq(back.E[0].xi, C("e(1/3)")));
  EXPECT_EQ(back.E[1].alpha, Rational(3, 4));
  EXPECT_EQ(back.l, 1);
  EXPECT_EQ(back.negative_label, "sigma");
  EXPECT_EQ(back.group, c.group);
  EXPECT_THROW(classification_from_json(Json{{"E", 3}, {"group", to_json(c.group)}}), BadInput);
}

TEST(JsonIo, HeckeAndStructure) {
  auto m = matrices(RankOneGroup{RankOneKind::SL2});
  auto j = to_json(m.T_w);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0][1], m.T_w.at(0, 1).to_string());
  auto s = to_json(structure_table(CGroup::su21())[0]);
  EXPECT_EQ(s.at("q_alpha"), "q^1");
  EXPECT_EQ(s.at("q_alpha_half"), "q^2");
}

}  // namespace
}  // namespace lsf
