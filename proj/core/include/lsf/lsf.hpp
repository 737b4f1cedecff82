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

#ifndef LSF_LSF_HPP
#define LSF_LSF_HPP

#include "lsf/casselman.hpp"
#include "lsf/catalog.hpp"
#include "lsf/coeff.hpp"
#include "lsf/errors.hpp"
#include "lsf/json_io.hpp"
#include "lsf/ls_factors.hpp"
#include "lsf/rank_one_hecke.hpp"
#include "lsf/rational_forms.hpp"
#include "lsf/root_data.hpp"
#include "lsf/sampling.hpp"
#include "lsf/unitary_dual.hpp"
#include "lsf/unramified_reps.hpp"

#endif  // LSF_LSF_HPP
