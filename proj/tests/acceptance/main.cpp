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

// lsf_acceptance: one PASS/FAIL line per acceptance criterion.
//
//   lsf_acceptance                 all criteria, exit 1 if any fails
//   lsf_acceptance --criterion N   criterion N only
//   lsf_acceptance --mutant NAME   run the owning criterion with a seeded
//                                  defect; exit 1 when the defect is caught

#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "acceptance/criteria.hpp"

namespace {

using namespace lsf::acceptance;

void print(const Outcome& o) {
  std::cout << "AC" << o.criterion << " " << (o.pass() ? "PASS" : "FAIL") << "  " << o.title << "  ["
            << std::fixed << std::setprecision(2) << o.seconds << "s]";
  auto failed = o.failed();
  if (!failed.empty()) {
    std::cout << "  failed:";
    for (const auto& f : failed) std::cout << " {" << f << "}";
  }
  std::cout << "\n";
  for (const auto& c : o.checks)
    std::cerr << "    " << (c.pass ? "ok  " : "FAIL") << " " << c.name << (c.detail.empty() ? "" : ": ")
              << c.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::optional<int> criterion;
  std::string mutant;
  app.add_option("--criterion", criterion, "run one criterion")->check(CLI::Range(1, 8));
  app.add_option("--mutant", mutant, "run with a seeded defect");
  CLI11_PARSE(app, argc, argv);

  if (!mutant.empty()) {
    const Mutant* m = nullptr;
    for (const auto& x : mutants())
      if (x.name == mutant) m = &x;
    if (!m) {
      std::cerr << "unknown mutant '" << mutant << "'\n";
      return 2;
    }
    auto clean = run_criterion(m->criterion);
    auto mutated = run_criterion(m->criterion, m->name);
    print(mutated);
    bool caught = detected(clean, mutated);
    std::cout << "mutant " << m->name << ": " << (caught ? "DETECTED" : "NOT DETECTED") << "\n";
    return caught ? 1 : 0;
  }

  bool all = true;
  for (int n = 1; n <= 8; ++n) {
    if (criterion && *criterion != n) continue;
    auto o = run_criterion(n);
    print(o);
    all = all && o.pass();
  }
  return all ? 0 : 1;
}
