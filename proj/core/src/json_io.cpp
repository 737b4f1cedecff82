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

#include "lsf/json_io.hpp"

namespace lsf {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw BadInput(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw BadInput(std::string("JSON: '") + what + "' must be an integer");
  return j.get<int>();
}

Json coefficient_list(const std::vector<UnitCoefficient>& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

std::vector<UnitCoefficient> coefficients_from_json(const Json& j) {
  if (!j.is_array()) throw BadInput("JSON: expected an array of coefficients");
  std::vector<UnitCoefficient> out;
  for (const auto& c : j) out.push_back(coefficient_from_json(c));
  return out;
}

Json weight_list(const std::vector<Weight>& v) {
  Json a = Json::array();
  for (const auto& w : v) a.push_back(w);
  return a;
}

Json rational_list(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw BadInput("JSON: rationals are strings \"p/r\" or integers");
}

Json to_json(const UnitCoefficient& c) {
  if (c.is_exact()) return Json{{"zeta", to_string(c.turn())}, {"e", to_string(c.exponent())}};
  auto v = c.approx_value();
  return Json{{"re", v.real()}, {"im", v.imag()}};
}

UnitCoefficient coefficient_from_json(const Json& j) {
  if (j.is_string()) return parse_coefficient(j.get<std::string>());
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v == 1) return UnitCoefficient::one();
    if (v == -1) return UnitCoefficient::minus_one();
  }
  if (j.is_number()) return UnitCoefficient::approx({j.get<double>(), 0.0});
  if (!j.is_object()) throw BadInput("JSON: bad coefficient " + j.dump());
  if (j.contains("re") || j.contains("im")) {
    double re = j.value("re", 0.0), im = j.value("im", 0.0);
    return UnitCoefficient::approx({re, im});
  }
  Rational turn = j.contains("zeta") ? rational_from_json(j.at("zeta")) : Rational(0);
  Rational e = j.contains("e") ? rational_from_json(j.at("e")) : Rational(0);
  return UnitCoefficient::exact(turn, e);
}

Json to_json(const QSymbol& q) { return q.to_string(); }

QSymbol qsymbol_from_json(const Json& j) {
  if (j.is_string()) return QSymbol::parse(j.get<std::string>());
  if (j.is_number_integer()) return QSymbol::concrete(Rational(j.get<std::int64_t>()));
  throw BadInput("JSON: q must be \"formal\" or a rational string");
}

Json to_json(const Abscissa& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return to_string(*r);
  return std::get<double>(x);
}

Json to_json(const FactoredRationalFunction& f) {
  return Json{{"unit", to_json(f.unit())},
              {"t_power", f.t_power()},
              {"num", coefficient_list(f.numerator())},
              {"den", coefficient_list(f.denominator())},
              {"text", to_string(f)}};
}

FactoredRationalFunction frf_from_json(const Json& j) {
  auto unit = j.contains("unit") ? coefficient_from_json(j.at("unit")) : UnitCoefficient::one();
  int tp = j.contains("t_power") ? int_from_json(j.at("t_power"), "t_power") : 0;
  auto num = j.contains("num") ? coefficients_from_json(j.at("num")) : std::vector<UnitCoefficient>{};
  auto den = j.contains("den") ? coefficients_from_json(j.at("den")) : std::vector<UnitCoefficient>{};
  return {unit, tp, std::move(num), std::move(den)};
}

Json to_json(const LocalFactorTriple& t) {
  return Json{{"L", to_json(t.L)}, {"L_dual", to_json(t.L_dual)}, {"eps", to_json(t.epsilon)}};
}

Json to_json(const ClassicalGroupTag& g) {
  return Json{{"family", to_string(g.family)}, {"rank", g.rank}};
}

ClassicalGroupTag group_from_json(const Json& j) {
  const auto& fam = require(j, "family");
  if (!fam.is_string()) throw BadInput("JSON: family must be a string");
  ClassicalGroupTag g{parse_family(fam.get<std::string>()), int_from_json(require(j, "rank"), "rank")};
  if (g.rank < 1) throw BadInput("JSON: rank must be >= 1");
  return g;
}

Json to_json(const SatakeParameter& p) {
  return Json{{"group", to_json(p.group)}, {"z", coefficient_list(p.z)}};
}

SatakeParameter satake_from_json(const Json& j) {
  SatakeParameter p{group_from_json(require(j, "group")), coefficients_from_json(require(j, "z"))};
  p.validate();
  return p;
}

Json to_json(const LeviDatum& l) {
  return Json{{"family", to_string(l.ambient.family)},
              {"m", l.gl_rank},
              {"n", l.g_rank},
              {"ambient", to_json(l.ambient)},
              {"removed_simple_root", l.removed_simple_root},
              {"levels", l.levels},
              {"degenerate", l.degenerate}};
}

LeviDatum levi_from_json(const Json& j) {
  const auto& fam = require(j, "family");
  if (!fam.is_string()) throw BadInput("JSON: family must be a string");
  return build_levi(parse_family(fam.get<std::string>()), int_from_json(require(j, "m"), "m"),
                    int_from_json(require(j, "n"), "n"));
}

Json to_json(const LSWeightSystem& w) {
  Json a = Json::array();
  for (const auto& l : w.levels) a.push_back(weight_list(l));
  return a;
}

Json to_json(const CocharacterData& c) {
  return Json{{"rho_P", rational_list(c.rho_P)},
              {"alpha_coroot", c.alpha_coroot},
              {"tilde_alpha", rational_list(c.tilde_alpha)},
              {"delta", weight_list(c.delta)}};
}

Json to_json(const StandardModuleDatum& s) {
  return Json{{"group", to_json(s.group)},
              {"theta", s.theta},
              {"gl_blocks", s.gl_blocks},
              {"classical_rank", s.classical_rank},
              {"eta_exponents", rational_list(s.eta_exponents)},
              {"tempered_part", to_json(s.tempered_part)},
              {"weyl", Json{{"perm", s.weyl.perm}, {"sign", s.weyl.sign}}}};
}

Json to_json(const LeviStandardModule& s) {
  return Json{{"levi", to_json(s.levi)},
              {"theta", s.theta},
              {"eta_exponents", rational_list(s.eta_exponents)},
              {"tempered_part", to_json(s.tempered_part)},
              {"weyl", Json{{"perm", s.weyl.perm}, {"sign", s.weyl.sign}}}};
}

Json to_json(const BinomialProduct& b) {
  return Json{{"unit", to_json(b.unit)},
              {"num", coefficient_list(b.num)},
              {"den", coefficient_list(b.den)},
              {"text", to_string(b)}};
}

Json to_json(const RankOneStructure& s) {
  return Json{{"root", s.root},
              {"q_alpha", "q^" + to_string(s.q_alpha_exp)},
              {"q_alpha_half", s.q_alpha_half_exp == 0 ? std::string("1")
                                                       : "q^" + to_string(s.q_alpha_half_exp)},
              {"a_alpha_pairing", s.pairing}};
}

Json to_json(const LaurentPoly& p) { return p.to_string(); }

Json to_json(const Matrix2& m) {
  return Json::array({Json::array({to_json(m.at(0, 0)), to_json(m.at(0, 1))}),
                      Json::array({to_json(m.at(1, 0)), to_json(m.at(1, 1))})});
}

Json to_json(const UnitarityTriple& t) {
  return Json{{"r", t.r}, {"xi", to_json(t.xi)}, {"alpha", to_json(t.alpha)}};
}

UnitarityTriple triple_from_json(const Json& j) {
  return {int_from_json(require(j, "r"), "r"), coefficient_from_json(require(j, "xi")),
          rational_from_json(require(j, "alpha"))};
}

Json to_json(const UnramifiedClassification& c) {
  Json e = Json::array();
  for (const auto& t : c.E) e.push_back(to_json(t));
  return Json{{"E", e}, {"negative_label", c.negative_label}, {"l", c.l}, {"group", to_json(c.group)}};
}

UnramifiedClassification classification_from_json(const Json& j) {
  UnramifiedClassification c;
  const auto& e = require(j, "E");
  if (!e.is_array()) throw BadInput("JSON: E must be an array");
  for (const auto& t : e) c.E.push_back(triple_from_json(t));
  c.l = j.contains("l") ? int_from_json(j.at("l"), "l") : 0;
  if (j.contains("negative_label")) c.negative_label = j.at("negative_label").get<std::string>();
  c.group = group_from_json(require(j, "group"));
  return c;
}

}  // namespace lsf
