/*
   Copyright 2026 The thueff authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "thueff/sequences.hpp"
#include "thueff/solver.hpp"

namespace thueff {

using OrderedJson = nlohmann::ordered_json;

/** Result documents for the CLI commands; key order and formatting are stable. */
OrderedJson solve_result_json(const ThueInstance& inst, const SolutionSet& set);
OrderedJson check_result_json(const ThueInstance& inst, const Classification& c);
OrderedJson classify_result_json(const std::set<int>& exponents);
OrderedJson units_result_json(const UnitDecomposition& dec);
OrderedJson search_result_json(const ThueInstance& inst, int max_deg,
                               const std::vector<GaussRat>& coeff_set, long long budget,
                               const std::vector<std::pair<Poly, Poly>>& found);
OrderedJson table_result_json(long n_min, long n_max);
OrderedJson error_json(const std::string& kind, const std::string& message);

/** Canonical rendering: two-space indentation plus a trailing newline. */
std::string render_json(const OrderedJson& doc);

} // namespace thueff
