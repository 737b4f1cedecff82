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

#include "commands.hpp"

namespace lsf::cli {
namespace {

CommandResult ok_handler(const Json& r, const RunConfig&) { return {Json{{"echo", r.at("x")}}, kOk}; }

CommandResult throwing_handler(const Json& r, const RunConfig&) {
  auto kind = r.at("kind").get<std::string>();
  if (kind == "domain") throw DomainError("outside the domain");
  if (kind == "nonregular") throw NonRegular("singular");
  if (kind == "bad") throw BadInput("malformed");
  if (kind == "json") return {r.at("missing"), kOk};
  return {Json::object(), kPropertyFailure};
}

TEST(Dispatch, MapsExceptionsToExitCodes) {
  RunConfig cfg;
  EXPECT_EQ(dispatch(throwing_handler, Json{{"kind", "domain"}}, cfg).exit_code, kDomainError);
  EXPECT_EQ(dispatch(throwing_handler, Json{{"kind", "nonregular"}}, cfg).exit_code, kDomainError);
  EXPECT_EQ(dispatch(throwing_handler, Json{{"kind", "bad"}}, cfg).exit_code, kBadInput);
  EXPECT_EQ(dispatch(throwing_handler, Json{{"kind", "json"}}, cfg).exit_code, kBadInput);
  EXPECT_EQ(dispatch(throwing_handler, Json{{"kind", "property"}}, cfg).exit_code, kPropertyFailure);
  auto err = dispatch(throwing_handler, Json{{"kind", "bad"}}, cfg);
  EXPECT_EQ(err.body.at("error"), "malformed");
}

TEST(Dispatch, BatchKeepsOrderAndWorstExit) {
  RunConfig cfg;
  Json batch = Json::array({Json{{"x", 1}}, Json{{"y", 2}}, Json{{"x", 3}}});
  auto r = dispatch(ok_handler, batch, cfg);
  EXPECT_EQ(r.exit_code, kBadInput);
  ASSERT_EQ(r.body.size(), 3u);
  EXPECT_EQ(r.body[0].at("echo"), 1);
  EXPECT_TRUE(r.body[1].contains("error"));
  EXPECT_EQ(r.body[2].at("echo"), 3);
}

TEST(Commands, LfactorSteinberg) {
  RunConfig cfg;
  Json req{{"levi", {{"family", "A"}, {"m", 2}, {"n", 1}}},
           {"z", {"q^(-1/2)", "q^(1/2)", "1"}},
           {"level", 1}};
  auto r = dispatch(cmd_lfactor, req, cfg);
  ASSERT_EQ(r.exit_code, kOk) << r.body.dump();
  EXPECT_EQ(frf_from_json(r.body.at("L")).denominator().size(), 2u);
}

TEST(Commands, HeckeRequiresKnownGroup) {
  RunConfig cfg;
  EXPECT_EQ(dispatch(cmd_hecke_rank1, Json{{"group", "gl3"}, {"a", "q"}}, cfg).exit_code, kBadInput);
  auto r = dispatch(cmd_hecke_rank1, Json{{"group", "sl2"}, {"a", "-q"}, {"conductor", 0}}, cfg);
  ASSERT_EQ(r.exit_code, kOk) << r.body.dump();
  EXPECT_EQ(r.body.at("case"), "TwoMaximalCompactSplit");
  EXPECT_TRUE(r.body.at("quadratic_relations").get<bool>());
}

TEST(Commands, TemperedCheckPassesAndDetectsControls) {
  RunConfig cfg;
  TemperedCheckOptions opt;
  opt.family = Family::B;
  opt.max_rank = 3;
  opt.samples = 10;
  EXPECT_EQ(cmd_tempered_check(opt, cfg).exit_code, kOk);
  opt.inject_control = true;
  EXPECT_EQ(cmd_tempered_check(opt, cfg).exit_code, kPropertyFailure);
}

TEST(RenderText, FlattensNestedBodies) {
  Json body{{"a", 1}, {"b", {{"text", "1 / (1 - t)"}, {"num", Json::array()}}}, {"c", {1, 2}},
            {"d", Json::array({Json{{"e", "x"}}})}, {"z", to_json(parse_coefficient("-q^(1/2)"))}};
  EXPECT_EQ(render_text(body), "a: 1\nb: 1 / (1 - t)\nc: [1,2]\nd[0].e: x\nz: -q^(1/2)\n");
}

}  // namespace
}  // namespace lsf::cli
