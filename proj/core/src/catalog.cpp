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

#include "lsf/catalog.hpp"

#include <fstream>

#include "lsf/sampling.hpp"

namespace lsf {

std::vector<LeviDatum> catalog_levis(int max_rank) {
  std::vector<LeviDatum> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    auto l = levis_up_to(f, max_rank);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

Json catalog_entry(const LeviDatum& levi) {
  return Json{{"levi", to_json(levi)},
              {"cocharacter", to_json(cocharacter_data(levi))},
              {"weights", to_json(ls_weights(levi))}};
}

std::string render_catalog(int max_rank) {
  Json header{{"catalog", "ls-weights"}, {"version", kCatalogVersion}, {"max_rank", max_rank}};
  std::string out = "{\"header\":" + header.dump() + ",\n\"entries\":[\n";
  auto levis = catalog_levis(max_rank);
  for (std::size_t i = 0; i < levis.size(); ++i) {
    out += catalog_entry(levis[i]).dump();
    out += i + 1 < levis.size() ? ",\n" : "\n";
  }
  out += "]}\n";
  return out;
}

void write_catalog(const std::string& path, int max_rank) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BadInput("cannot open '" + path + "' for writing");
  f << render_catalog(max_rank);
  if (!f) throw BadInput("failed writing '" + path + "'");
}

}  // namespace lsf
