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

#ifndef LSF_JSON_IO_HPP
#define LSF_JSON_IO_HPP

#include <json.hpp>

#include "lsf/casselman.hpp"
#include "lsf/coeff.hpp"
#include "lsf/ls_factors.hpp"
#include "lsf/rank_one_hecke.hpp"
#include "lsf/rational_forms.hpp"
#include "lsf/root_data.hpp"
#include "lsf/unitary_dual.hpp"
#include "lsf/unramified_reps.hpp"

namespace lsf {

using Json = nlohmann::ordered_json;

// Every reader throws BadInput on malformed input.

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"zeta":"k/n","e":"p/r"} or {"re":x,"im":y}.  Readers also accept the
/// text syntax of parse_coefficient().
Json to_json(const UnitCoefficient& c);
UnitCoefficient coefficient_from_json(const Json& j);

Json to_json(const QSymbol& q);
QSymbol qsymbol_from_json(const Json& j);

Json to_json(const Abscissa& x);

/// {"unit":..., "t_power":n, "num":[...], "den":[...]} plus a "text" field.
Json to_json(const FactoredRationalFunction& f);
FactoredRationalFunction frf_from_json(const Json& j);

Json to_json(const LocalFactorTriple& t);

Json to_json(const ClassicalGroupTag& g);
ClassicalGroupTag group_from_json(const Json& j);

/// {"group":{"family":"C","rank":2},"z":[...]}.
Json to_json(const SatakeParameter& p);
SatakeParameter satake_from_json(const Json& j);

Json to_json(const LeviDatum& l);
/// {"family":"A","m":2,"n":1}.
LeviDatum levi_from_json(const Json& j);

Json to_json(const LSWeightSystem& w);
Json to_json(const CocharacterData& c);
Json to_json(const StandardModuleDatum& s);
Json to_json(const LeviStandardModule& s);

Json to_json(const BinomialProduct& b);
Json to_json(const RankOneStructure& s);

Json to_json(const LaurentPoly& p);
Json to_json(const Matrix2& m);

Json to_json(const UnitarityTriple& t);
UnitarityTriple triple_from_json(const Json& j);
Json to_json(const UnramifiedClassification& c);
UnramifiedClassification classification_from_json(const Json& j);

}  // namespace lsf

#endif  // LSF_JSON_IO_HPP
