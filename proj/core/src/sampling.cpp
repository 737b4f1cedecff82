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

#include "lsf/sampling.hpp"

namespace lsf {

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw BadInput("Sampler::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

UnitCoefficient Sampler::root_of_unity(int max_order) {
  auto n = integer(1, max_order);
  return UnitCoefficient::root_of_unity(Rational(integer(0, n - 1), n));
}

Rational Sampler::rational(int max_abs, int max_den) {
  auto den = integer(1, max_den);
  return Rational(integer(-max_abs * den, max_abs * den), den);
}

UnitCoefficient Sampler::exact(int max_order, int max_abs, int max_den) {
  auto z = root_of_unity(max_order);
  return UnitCoefficient::exact(z.turn(), rational(max_abs, max_den));
}

std::vector<UnitCoefficient> Sampler::unitary_tuple(int n, int max_order) {
  std::vector<UnitCoefficient> z;
  for (int i = 0; i < n; ++i) z.push_back(root_of_unity(max_order));
  return z;
}

std::vector<UnitCoefficient> Sampler::exact_tuple(int n, int max_order, int max_abs, int max_den) {
  std::vector<UnitCoefficient> z;
  for (int i = 0; i < n; ++i) z.push_back(exact(max_order, max_abs, max_den));
  return z;
}

std::vector<LeviDatum> levis_up_to(Family family, int max_rank) {
  std::vector<LeviDatum> out;
  for (int total = 1; total <= max_rank; ++total)
    for (int m = 1; m <= total; ++m) {
      int n = total - m;
      if (family == Family::A && n < 1) continue;
      if (family == Family::D && total < 2) continue;
      out.push_back(build_levi(family, m, n));
    }
  return out;
}

}  // namespace lsf
