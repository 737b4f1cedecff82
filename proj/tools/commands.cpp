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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/rational.hpp>

#include "lsf/catalog.hpp"
#include "lsf/sampling.hpp"

namespace lsf::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw BadInput(std::string("request: missing field '") + key + "'");
  return j.at(key);
}

std::vector<UnitCoefficient> tuple_from(const Json& j, const RunConfig& cfg) {
  if (!j.is_array()) throw BadInput("request: 'z' must be an array");
  std::vector<UnitCoefficient> z;
  for (const auto& c : j) {
    auto v = coefficient_from_json(c);
    z.push_back(cfg.approx ? to_approx(v, cfg.q) : v);
  }
  return z;
}

UnitCoefficient coefficient_in_mode(const Json& j, const RunConfig& cfg) {
  auto v = coefficient_from_json(j);
  return cfg.approx ? to_approx(v, cfg.q) : v;
}

Json poles_json(const std::vector<Abscissa>& poles) {
  Json a = Json::array();
  for (const auto& p : poles) a.push_back(Json{{"abscissa", to_json(p)}});
  return a;
}

Json level_report(const FactorRequest& req, const std::string& route, const RunConfig& cfg,
                  int& exit_code) {
  LocalFactorTriple t;
  Json extra = Json::object();
  if (route == "galois") {
    t = local_factors(req, cfg.q);
  } else if (route == "general") {
    t = local_factors(req, cfg.q);
    auto general = L_general(req);
    bool agree = equal(general, t.L, cfg.q);
    extra["galois_agreement"] = agree;
    if (!agree) exit_code = std::max(exit_code, static_cast<int>(kPropertyFailure));
    t.L = general;
  } else if (route == "gamma-multiplicativity") {
    auto gm = L_via_gamma_multiplicativity(req, cfg.q);
    t = gm.factors;
    extra["gamma"] = to_json(gm.gamma);
  } else {
    throw BadInput("request: unknown route '" + route + "' (galois, general, gamma-multiplicativity)");
  }
  auto poles = pole_abscissas(t.L, cfg.q);
  bool holo = holomorphic_on_right_half_plane(t.L, cfg.q);
  Json r{{"level", req.level},
         {"route", route},
         {"L", to_json(t.L)},
         {"L_dual", to_json(t.L_dual)},
         {"eps", to_json(t.epsilon)},
         {"poles", poles_json(poles)},
         {"verdict", holo ? "holomorphic" : "pole-in-right-half-plane"}};
  for (auto& [k, v] : extra.items()) r[k] = v;
  return r;
}

struct ParsedFactorRequest {
  LeviDatum levi;
  SatakeParameter satake;
  std::vector<int> levels;
  AdditiveCharacterData psi;
};

ParsedFactorRequest parse_factor_request(const Json& request, const RunConfig& cfg) {
  ParsedFactorRequest p;
  p.levi = levi_from_json(field(request, "levi"));
  p.satake = {p.levi.ambient, tuple_from(field(request, "z"), cfg)};
  p.satake.validate();
  if (request.contains("level")) {
    if (!request.at("level").is_number_integer()) throw BadInput("request: 'level' must be an integer");
    p.levels = {request.at("level").get<int>()};
  } else {
    for (int i = 1; i <= p.levi.levels; ++i) p.levels.push_back(i);
  }
  if (request.contains("conductor")) {
    if (!request.at("conductor").is_number_integer())
      throw BadInput("request: 'conductor' must be an integer");
    p.psi.conductor_exponent = request.at("conductor").get<int>();
  }
  return p;
}

Rational ratio_from(const Json& j) { return rational_from_json(j); }

}  // namespace

CommandResult cmd_lfactor(const Json& request, const RunConfig& cfg) {
  auto p = parse_factor_request(request, cfg);
  std::string route = request.value("route", std::string("galois"));
  CommandResult res;
  Json levels = Json::array();
  for (int lvl : p.levels)
    levels.push_back(level_report({p.levi, p.satake, lvl, p.psi}, route, cfg, res.exit_code));
  if (request.contains("level")) {
    res.body = levels.at(0);
  } else {
    res.body = Json{{"levi", to_json(p.levi)}, {"levels", levels}};
  }
  return res;
}

CommandResult cmd_gamma(const Json& request, const RunConfig& cfg) {
  auto p = parse_factor_request(request, cfg);
  CommandResult res;
  Json levels = Json::array();
  for (int lvl : p.levels) {
    FactorRequest req{p.levi, p.satake, lvl, p.psi};
    auto g = gamma_unramified(req, cfg.q);
    FactorRequest dual{p.levi, contragredient(p.satake), lvl, p.psi};
    auto fe = normalize(multiply(g, reflect(gamma_unramified(dual, cfg.q), cfg.q), cfg.q), cfg.q);
    bool fe_ok = fe.is_monomial();
    if (!fe_ok) res.exit_code = kPropertyFailure;
    levels.push_back(Json{{"level", lvl},
                          {"gamma", to_json(g)},
                          {"factors", to_json(extract_L_eps(g, cfg.q))},
                          {"functional_equation", fe_ok}});
  }
  res.body = Json{{"levi", to_json(p.levi)}, {"levels", levels}};
  if (request.value("local_coefficient", false))
    res.body["local_coefficient"] = to_json(local_coefficient(p.levi, p.satake, p.psi, cfg.q));
  return res;
}

CommandResult cmd_standard_module(const Json& request, const RunConfig& cfg) {
  CommandResult res;
  if (request.contains("levi")) {
    auto levi = levi_from_json(request.at("levi"));
    SatakeParameter pi{levi.ambient, tuple_from(field(request, "z"), cfg)};
    res.body = to_json(langlands_data(levi, pi));
    return res;
  }
  SatakeParameter pi{group_from_json(field(request, "group")), tuple_from(field(request, "z"), cfg)};
  res.body = to_json(langlands_data(pi));
  res.body["canonical"] = to_json(weyl_canonical(pi));
  return res;
}

CommandResult cmd_unitary_check(const Json& request, const RunConfig& cfg) {
  auto cls = classification_from_json(request);
  cls.validate(cfg.q);
  CommandResult res;
  res.body = Json{{"classification", to_json(cls)},
                  {"necessary_condition", unitarity_necessary(cls)}};
  if (!request.contains("twist")) return res;
  const auto& tw = request.at("twist");
  std::vector<UnitCoefficient> etas;
  if (tw.contains("etas")) {
    for (const auto& e : tw.at("etas")) etas.push_back(coefficient_in_mode(e, cfg));
  }
  if (tw.contains("m")) {
    if (!tw.at("m").is_number_integer()) throw BadInput("twist: 'm' must be an integer");
    int m = tw.at("m").get<int>();
    if (!tw.contains("etas")) etas.assign(std::max(m, 0), UnitCoefficient::one());
    if (m != static_cast<int>(etas.size())) throw BadInput("twist: m does not match the number of etas");
  }
  const auto& s = field(tw, "s");
  TwistVerdict v;
  if (s.is_number_float()) v = theorem3_verdict_approx(cls, etas, s.get<double>(), cfg.q);
  else v = theorem3_verdict(cls, etas, ratio_from(s), cfg.q);
  res.body["verdict"] = to_string(v.verdict);
  res.body["boundary"] = v.boundary;
  res.body["induced"] = to_json(v.induced);
  return res;
}

CommandResult cmd_cfunction(const Json& request, const RunConfig& cfg) {
  const auto& gj = field(request, "group");
  CGroup g = gj.is_string() ? CGroup::parse(gj.get<std::string>()) : CGroup::split(group_from_json(gj));
  std::vector<int> word;
  if (request.contains("word")) {
    if (!request.at("word").is_array()) throw BadInput("request: 'word' must be an array");
    for (const auto& i : request.at("word")) {
      if (!i.is_number_integer()) throw BadInput("request: Weyl word entries are integers");
      word.push_back(i.get<int>());
    }
  }
  SatakeParameter chi{g.weyl_tag(), tuple_from(field(request, "z"), cfg)};
  chi.validate();
  auto w = weyl_element(g.weyl_tag(), word);
  auto table = structure_table(g);
  auto value = c_function(chi, w, table, cfg.q);
  auto report = nonvanishing_on_spherical(chi, w, table, cfg.q);
  CommandResult res;
  Json structures = Json::array();
  for (const auto& s : table) structures.push_back(to_json(s));
  res.body = Json{{"group", g.name()},
                  {"word", word},
                  {"structure_table", structures},
                  {"value", to_json(value)},
                  {"normalized", to_json(normalize(value, cfg.q))},
                  {"nonvanishing", report.nonvanishing},
                  {"positivity_certificate", report.positivity_certificate}};
  if (g.kind != CGroupKind::Split && !cfg.approx) {
    auto x = chi_of(table.front(), chi.z, cfg.q);
    res.body["x"] = to_json(x);
    res.body["hecke_a"] = to_json(hecke_parameter_from_x(g.kind, x));
  }
  return res;
}

CommandResult cmd_hecke_rank1(const Json& request, const RunConfig& cfg) {
  const auto& gj = field(request, "group");
  if (!gj.is_string()) throw BadInput("request: 'group' must be \"sl2\" or \"su21\"");
  RankOneGroup g{parse_rank_one_kind(gj.get<std::string>())};
  auto a = coefficient_in_mode(field(request, "a"), cfg);
  auto m = matrices(g);
  auto e = eigen(m);
  auto red = reducibility(g, a, cfg.q);
  auto line = [](const Eigenline& l) {
    return Json{{"eigenvalue", to_json(l.eigenvalue)},
                {"vector", Json::array({to_json(l.vector[0]), to_json(l.vector[1])})}};
  };
  Json common = Json::array();
  for (const auto& c : red.common_lines)
    common.push_back(Json{{"T_w_eigenvalue", to_json(e.T_w[c.w_index].eigenvalue)},
                          {"T_s_eigenvalue", to_json(e.T_s[c.s_index].eigenvalue)},
                          {"determinant", to_json(c.determinant)},
                          {"locus", to_json(c.locus)}});
  CommandResult res;
  bool quad = quadratic_check(m, g);
  if (!quad) res.exit_code = kPropertyFailure;
  res.body = Json{{"group", to_string(g.kind)},
                  {"a", to_json(a)},
                  {"matrices", Json{{"T_w", to_json(m.T_w)}, {"T_s", to_json(m.T_s)}}},
                  {"quadratic_relations", quad},
                  {"eigen", Json{{"T_w", Json::array({line(e.T_w[0]), line(e.T_w[1])})},
                                 {"T_s", Json::array({line(e.T_s[0]), line(e.T_s[1])})}}},
                  {"case", to_string(red.kind)},
                  {"common_lines", common},
                  {"K_fixed_line", red.K_fixed_line},
                  {"Kprime_fixed_line", red.Kprime_fixed_line}};
  if (request.contains("conductor")) {
    if (!request.at("conductor").is_number_integer())
      throw BadInput("request: 'conductor' must be an integer");
    auto w = whittaker(g, request.at("conductor").get<int>());
    Json wj{{"conductor_exponent", w.conductor_exponent},
            {"generic_component", to_string(w.generic_component)}};
    auto opt = [](const std::optional<LaurentPoly>& p) { return p ? to_json(*p) : Json(nullptr); };
    wj["lambda_e"] = opt(w.lambda_e);
    wj["lambda_f"] = opt(w.lambda_f);
    wj["lambda_e_plus_f"] = opt(w.lambda_e_plus_f);
    if (w.lambda_e_plus_f) wj["lambda_e_plus_f_vanishes"] = w.lambda_e_plus_f->vanishes_at(a, cfg.q);
    res.body["whittaker"] = wj;
  }
  return res;
}

CommandResult cmd_tempered_check(const TemperedCheckOptions& opt, const RunConfig& cfg) {
  if (opt.max_rank < 1 || opt.samples < 0) throw BadInput("tempered-check: bad sample sizes");
  if (opt.family == Family::D_full) throw BadInput("tempered-check: use family D");
  Sampler sampler(opt.seed);
  auto prepare = [&](std::vector<UnitCoefficient> z) {
    if (cfg.approx)
      for (auto& c : z) c = to_approx(c, cfg.q);
    return z;
  };
  CommandResult res;
  Json failures = Json::array();
  long checked = 0, controls = 0, detected = 0;
  auto levis = levis_up_to(opt.family, opt.max_rank);
  auto record_failure = [&](const LeviDatum& levi, const SatakeParameter& pi,
                            const TemperedReport& rep) {
    Json bad = Json::array();
    for (const auto& l : rep.levels)
      if (!l.holomorphic) bad.push_back(Json{{"level", l.level}, {"poles", poles_json(l.poles)}});
    failures.push_back(Json{{"levi", to_json(levi)}, {"satake", to_json(pi)}, {"levels", bad}});
  };
  for (const auto& levi : levis) {
    for (int i = 0; i < opt.samples; ++i) {
      SatakeParameter pi{levi.ambient, prepare(sampler.unitary_tuple(levi.ambient.rank))};
      auto rep = tempered_L_check(levi, pi, cfg.q);
      ++checked;
      if (!rep.pass) record_failure(levi, pi, rep);
    }
    // control: the GL block twisted so that every level-1 pole sits at 1/2
    auto cd = cocharacter_data(levi);
    int k = 0;
    for (int j = 0; j < levi.gl_rank; ++j) k += cd.alpha_coroot[j];
    auto z = sampler.unitary_tuple(levi.ambient.rank);
    for (int j = 0; j < levi.gl_rank; ++j) z[j] = mul(z[j], UnitCoefficient::q_power(Rational(1, 2 * k)));
    SatakeParameter pi{levi.ambient, prepare(z)};
    auto rep = tempered_L_check(levi, pi, cfg.q);
    ++controls;
    bool at_half = !rep.levels.empty() && !rep.levels[0].poles.empty();
    for (const auto& p : at_half ? rep.levels[0].poles : std::vector<Abscissa>{})
      if (std::abs(to_double(p) - 0.5) > 1e-9 ||
          (std::holds_alternative<Rational>(p) && std::get<Rational>(p) != Rational(1, 2)))
        at_half = false;
    if (!rep.pass && at_half) ++detected;
    if (opt.inject_control) {
      ++checked;
      if (!rep.pass) record_failure(levi, pi, rep);
    }
  }
  bool pass = failures.empty() && detected == controls;
  res.exit_code = pass ? kOk : kPropertyFailure;
  res.body = Json{{"family", to_string(opt.family)},
                  {"max_rank", opt.max_rank},
                  {"samples", opt.samples},
                  {"seed", opt.seed},
                  {"q", cfg.q.to_string()},
                  {"mode", cfg.approx ? "approx" : "exact"},
                  {"levis", static_cast<long>(levis.size())},
                  {"checked", checked},
                  {"failures", failures},
                  {"controls", Json{{"checked", controls}, {"detected", detected}}},
                  {"inject_control", opt.inject_control},
                  {"pass", pass}};
  return res;
}

CommandResult cmd_catalog_regen(const std::string& path) {
  write_catalog(path);
  CommandResult res;
  res.body = Json{{"path", path},
                  {"version", kCatalogVersion},
                  {"max_rank", kCatalogMaxRank},
                  {"entries", static_cast<long>(catalog_levis().size())}};
  return res;
}

CommandResult dispatch(const Handler& handler, const Json& request, const RunConfig& cfg) {
  auto run_one = [&](const Json& r) -> CommandResult {
    try {
      return handler(r, cfg);
    } catch (const DomainError& e) {
      return {Json{{"error", e.what()}, {"exit_code", kDomainError}}, kDomainError};
    } catch (const BadInput& e) {
      return {Json{{"error", e.what()}, {"exit_code", kBadInput}}, kBadInput};
    } catch (const nlohmann::json::exception& e) {
      return {Json{{"error", e.what()}, {"exit_code", kBadInput}}, kBadInput};
    } catch (const boost::bad_rational& e) {
      return {Json{{"error", e.what()}, {"exit_code", kBadInput}}, kBadInput};
    } catch (const Error& e) {
      return {Json{{"error", e.what()}, {"exit_code", kBadInput}}, kBadInput};
    }
  };
  if (!request.is_array()) return run_one(request);
  CommandResult out;
  out.body = Json::array();
  for (const auto& r : request) {
    auto one = run_one(r);
    out.exit_code = std::max(out.exit_code, one.exit_code);
    out.body.push_back(std::move(one.body));
  }
  return out;
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  auto label = prefix.empty() ? std::string() : prefix + ": ";
  if (j.is_object() && j.contains("text") && j.at("text").is_string()) {
    os << label << j.at("text").get<std::string>() << "\n";
    return;
  }
  // exact coefficients {"zeta", "e"} print in the input syntax
  if (j.is_object() && j.size() == 2 && j.contains("zeta") && j.contains("e")) {
    os << label << to_string(coefficient_from_json(j)) << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      os << label << j.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i)
      render(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << label << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& body) {
  std::ostringstream os;
  render(body, "", os);
  return os.str();
}

}  // namespace lsf::cli
