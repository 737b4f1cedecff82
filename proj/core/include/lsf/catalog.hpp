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

#ifndef LSF_CATALOG_HPP
#define LSF_CATALOG_HPP

#include <string>
#include <vector>

#include "lsf/json_io.hpp"

namespace lsf {

inline constexpr int kCatalogVersion = 1;
inline constexpr int kCatalogMaxRank = 8;

/// Every valid (family, m, n) with m + n <= max_rank, families A, B, C, D.
std::vector<LeviDatum> catalog_levis(int max_rank = kCatalogMaxRank);

/// Levi datum, cocharacter data and weights per level.
Json catalog_entry(const LeviDatum& levi);

/// Deterministic text: a header line, then one compact JSON entry per line.
std::string render_catalog(int max_rank = kCatalogMaxRank);

void write_catalog(const std::string& path, int max_rank = kCatalogMaxRank);

}  // namespace lsf

#endif  // LSF_CATALOG_HPP
