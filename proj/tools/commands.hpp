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

#ifndef LSF_TOOLS_COMMANDS_HPP
#define LSF_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "lsf/json_io.hpp"

namespace lsf::cli {

enum ExitCode : int { kOk = 0, kPropertyFailure = 1, kBadInput = 2, kDomainError = 3 };

struct RunConfig {
  QSymbol q = QSymbol::formal();
  bool approx = false;
  bool text = false;
};

struct CommandResult {
  Json body;
  int exit_code = kOk;
};

using Handler = std::function<CommandResult(const Json& request, const RunConfig& cfg)>;

CommandResult cmd_lfactor(const Json& request, const RunConfig& cfg);
CommandResult cmd_gamma(const Json& request, const RunConfig& cfg);
CommandResult cmd_standard_module(const Json& request, const RunConfig& cfg);
CommandResult cmd_unitary_check(const Json& request, const RunConfig& cfg);
CommandResult cmd_cfunction(const Json& request, const RunConfig& cfg);
CommandResult cmd_hecke_rank1(const Json& request, const RunConfig& cfg);

struct TemperedCheckOptions {
  Family family = Family::C;
  int max_rank = 4;
  int samples = 200;
  std::uint64_t seed = 1;
  bool inject_control = false;
};
CommandResult cmd_tempered_check(const TemperedCheckOptions& opt, const RunConfig& cfg);

CommandResult cmd_catalog_regen(const std::string& path);

/// Maps library exceptions to exit codes; a JSON array runs each element
/// and keeps the order, with the largest exit code winning.
CommandResult dispatch(const Handler& handler, const Json& request, const RunConfig& cfg);

/// "key: value" lines; objects carrying a "text" field print that field.
std::string render_text(const Json& body);

}  // namespace lsf::cli

#endif  // LSF_TOOLS_COMMANDS_HPP
