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

#ifndef LSF_TESTS_ACCEPTANCE_CRITERIA_HPP
#define LSF_TESTS_ACCEPTANCE_CRITERIA_HPP

#include <string>
#include <vector>

namespace lsf::acceptance {

struct Check {
  std::string name;
  bool pass = true;
  bool timing = false;  // wall-clock budgets never count towards mutant detection
  std::string detail;
};

struct Outcome {
  int criterion = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
  std::vector<std::string> failed(bool include_timing = true) const;
};

struct Mutant {
  std::string name;
  int criterion;
  std::string what;
};

const std::vector<Mutant>& mutants();

/// Runs criterion n (1..8).  An empty mutant name runs the clean suite.
Outcome run_criterion(int n, const std::string& mutant = "");

/// A mutant is detected when a non-timing check that passes on the clean
/// run fails under the mutant.
bool detected(const Outcome& clean, const Outcome& mutated);

}  // namespace lsf::acceptance

#endif  // LSF_TESTS_ACCEPTANCE_CRITERIA_HPP
