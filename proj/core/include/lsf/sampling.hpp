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

#ifndef LSF_SAMPLING_HPP
#define LSF_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lsf/coeff.hpp"
#include "lsf/root_data.hpp"
#include "lsf/unramified_reps.hpp"

namespace lsf {

/// Seeded generator whose draws are identical on every platform: only raw
/// mt19937_64 output is used, never the std distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() & 1u) != 0; }

  /// Root of unity e(k/n) with n <= max_order.
  UnitCoefficient root_of_unity(int max_order = 12);
  /// e(k/n) * q^{a/b} with |a/b| <= max_abs and b <= max_den.
  UnitCoefficient exact(int max_order = 12, int max_abs = 2, int max_den = 4);
  Rational rational(int max_abs, int max_den);

  std::vector<UnitCoefficient> unitary_tuple(int n, int max_order = 12);
  std::vector<UnitCoefficient> exact_tuple(int n, int max_order = 12, int max_abs = 2,
                                           int max_den = 4);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Every valid maximal Levi with m + n <= max_rank in the family.
std::vector<LeviDatum> levis_up_to(Family family, int max_rank);

}  // namespace lsf

#endif  // LSF_SAMPLING_HPP
