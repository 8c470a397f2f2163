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

#include <string_view>
#include <vector>

#include "thueff/poly.hpp"

namespace thueff {

/**
 * Parses a Gaussian rational: "3", "-3/4", "i", "2i", "1+2i", "1/2-3i".
 * ParseError (with byte offset) on malformed input.
 */
GaussRat parse_gauss_rat(std::string_view text);

/**
 * Parses a polynomial in the named variable, e.g. with variable "T":
 * "T^2 - (1+2i)*T + 3/4", "-2T", "(1/2)T^3 + i".  Sums and differences of
 * terms coeff ['*'] var ['^' uint]; coefficients with an internal sign must
 * be parenthesized.  '*' is optional, whitespace insignificant.
 * ParseError (with byte offset) on malformed input.
 */
Poly parse_poly(std::string_view text, std::string_view variable);

/** Parses a comma-separated list of Gaussian rationals, e.g. "0,1,-1,i,-i". */
std::vector<GaussRat> parse_coeff_set(std::string_view text);

} // namespace thueff
