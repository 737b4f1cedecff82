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

// lsf: command-line driver for the lsf core library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using lsf::Json;
using namespace lsf::cli;

struct RequestSource {
  std::string file;
  std::string inline_json;
};

Json read_request(const RequestSource& src) {
  if (!src.inline_json.empty()) return Json::parse(src.inline_json);
  if (src.file.empty()) throw lsf::BadInput("no request: pass --request FILE or --json TEXT");
  if (src.file == "-") return Json::parse(std::cin);
  std::ifstream f(src.file);
  if (!f) throw lsf::BadInput("cannot open request file '" + src.file + "'");
  return Json::parse(f);
}

void add_request_options(CLI::App* sub, RequestSource& src) {
  sub->add_option("-r,--request", src.file, "request JSON file ('-' for stdin); an array runs a batch");
  sub->add_option("-j,--json", src.inline_json, "request JSON given inline");
}

int emit(const CommandResult& r, bool text) {
  if (text) std::cout << render_text(r.body);
  else std::cout << r.body.dump(2) << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Langlands-Shahidi local factors for unramified representations"};
  app.require_subcommand(1);

  std::string q_text, mode = "exact", output = "json";
  app.add_option("--q", q_text, "residue cardinality: a rational > 1 or 'formal' (env LSF_Q)");
  app.add_option("--mode", mode, "coefficient mode")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"json", "text"}));

  RequestSource src;
  struct JsonCommand {
    const char* name;
    const char* help;
    Handler handler;
  };
  const JsonCommand json_commands[] = {
      {"lfactor", "L, L_dual and eps for a Levi, Satake tuple and level", cmd_lfactor},
      {"gamma", "gamma factors, functional-equation check, local coefficient", cmd_gamma},
      {"standard-module", "Langlands data of a Satake parameter", cmd_standard_module},
      {"unitary-check", "necessary unitarity condition and twist verdict", cmd_unitary_check},
      {"cfunction", "c-function on the spherical line for a Weyl word", cmd_cfunction},
  };
  std::vector<std::pair<CLI::App*, Handler>> json_subs;
  for (const auto& c : json_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_request_options(sub, src);
    json_subs.emplace_back(sub, c.handler);
  }

  auto* hecke = app.add_subcommand("hecke-rank1", "rank-one Iwahori-Hecke module atlas entry");
  std::string hecke_group, hecke_a;
  std::optional<int> hecke_conductor;
  hecke->add_option("--group", hecke_group, "sl2 or su21");
  hecke->add_option("--a", hecke_a, "Hecke parameter a, e.g. -q or q^4");
  hecke->add_option("--conductor", hecke_conductor, "conductor exponent of psi (enables Whittaker)");
  add_request_options(hecke, src);

  auto* tempered = app.add_subcommand("tempered-check", "seeded right-half-plane holomorphy suite");
  TemperedCheckOptions topt;
  std::string family = "C";
  tempered->add_option("--family", family, "A, B, C or D");
  tempered->add_option("--max-rank", topt.max_rank, "largest m + n");
  tempered->add_option("--samples", topt.samples, "tuples per Levi");
  tempered->add_option("--seed", topt.seed, "RNG seed");
  tempered->add_flag("--inject-control", topt.inject_control,
                     "add the twisted non-unitary controls to the sample");

  auto* catalog = app.add_subcommand("catalog-regen", "regenerate the Levi weight catalog");
  std::string catalog_path = "catalog.json";
  catalog->add_option("--out", catalog_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  RunConfig cfg;
  cfg.text = output == "text";
  cfg.approx = mode == "approx";
  auto run = [&](auto&& body) -> int {
    try {
      if (q_text.empty())
        if (const char* env = std::getenv("LSF_Q")) q_text = env;
      if (!q_text.empty()) cfg.q = lsf::QSymbol::parse(q_text);
      if (cfg.approx && cfg.q.is_formal())
        throw lsf::ModeMismatch("--mode approx needs a concrete --q");
      return emit(body(), cfg.text);
    } catch (const lsf::DomainError& e) {
      std::cerr << "lsf: " << e.what() << "\n";
      return kDomainError;
    } catch (const std::exception& e) {
      std::cerr << "lsf: " << e.what() << "\n";
      return kBadInput;
    }
  };

  for (auto& [sub, handler] : json_subs)
    if (sub->parsed())
      return run([&] { return dispatch(handler, read_request(src), cfg); });

  if (hecke->parsed()) {
    return run([&] {
      Json request;
      if (!src.file.empty() || !src.inline_json.empty()) {
        request = read_request(src);
      } else {
        request = Json{{"group", hecke_group}, {"a", hecke_a}};
        if (hecke_conductor) request["conductor"] = *hecke_conductor;
      }
      return dispatch(cmd_hecke_rank1, request, cfg);
    });
  }
  if (tempered->parsed()) {
    return run([&] {
      topt.family = lsf::parse_family(family);
      return dispatch([&](const Json&, const RunConfig& c) { return cmd_tempered_check(topt, c); },
                      Json::object(), cfg);
    });
  }
  if (catalog->parsed()) {
    return run([&] {
      return dispatch([&](const Json&, const RunConfig&) { return cmd_catalog_regen(catalog_path); },
                      Json::object(), cfg);
    });
  }
  return kBadInput;
}
