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

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "thueff/quad_ext.hpp"

namespace thueff {

/**
 * One instance of the quartic equation
 *   F(X, Y) = X(X - Y)(X + Y)(X - lambda*Y) + Y^4 = xi
 * over the polynomial ring, with nonconstant lambda and nonzero constant xi.
 */
struct ThueInstance {
    ThueInstance(Poly lambda_in, GaussRat xi_in);

    Poly lambda;
    GaussRat xi;
};

/** The six families of solutions, each parametrized by a fourth root zeta of xi. */
enum class SolutionShape {
    kZetaZero,          // (zeta, 0)
    kZeroZeta,          // (0, zeta)
    kZetaZeta,          // (zeta, zeta)
    kNegZetaZeta,       // (-zeta, zeta)
    kZetaLambdaZeta,    // (zeta*lambda, zeta)
    kNegZetaZetaLambda, // (-zeta, zeta*lambda)
};

inline constexpr SolutionShape kAllShapes[] = {
    SolutionShape::kZetaZero,          SolutionShape::kZeroZeta,
    SolutionShape::kZetaZeta,          SolutionShape::kNegZetaZeta,
    SolutionShape::kZetaLambdaZeta,    SolutionShape::kNegZetaZetaLambda,
};

std::string_view shape_name(SolutionShape s);

/** The concrete pair (x, y) belonging to a shape for a given zeta and lambda. */
std::pair<Poly, Poly> instantiate_shape(SolutionShape s, const GaussRat& zeta,
                                        const Poly& lambda);

/** Shape plus the fourth root that produces a concrete solution. */
struct SolutionFamily {
    SolutionShape shape;
    GaussRat zeta;
};

/**
 * Unit certificate of a solution: theta = x^2 - y^2 - x*y*u is a unit of the
 * quadratic extension and factors as c * u^m with m in {-2, 0, 1}.
 */
struct SolutionCertificate {
    QuadExtElem theta;
    GaussRat c;
    long m;
};

struct SolvedPair {
    SolutionFamily family;
    Poly x;
    Poly y;
};

/**
 * The complete solution set over the coefficient field.  When xi has no
 * fourth root in the field, entries is empty and zeta_in_field is false: the
 * equation then has solutions over an extension but none with coefficients
 * in the field.
 */
struct SolutionSet {
    std::vector<SolvedPair> entries;
    bool zeta_in_field = false;
};

/** F(x, y), computed in expanded and factored form and cross-checked. */
Poly form_eval(const ThueInstance& inst, const Poly& x, const Poly& y);

/**
 * Verifies the quadratic-extension factorization of the form: with
 * theta = x^2 - y^2 - x*y*u, the product theta * sigma(theta) lies in the
 * base ring and equals F(x, y).
 */
bool form_decomposition_check(const ThueInstance& inst, const Poly& x, const Poly& y);

/** All 24 solutions (6 shapes x 4 roots), each verified; see SolutionSet. */
SolutionSet solution_set(const ThueInstance& inst);

struct Classification {
    enum class Kind { kSolution, kNotASolution, kTheoremViolation };

    Kind kind;
    // Populated for kSolution:
    std::optional<SolutionFamily> family;
    std::optional<SolutionCertificate> certificate;
    // Populated for kNotASolution:
    std::optional<Poly> residual;  // F(x, y) - xi
};

/**
 * Decides whether (x, y) solves the instance.  Solutions are matched to their
 * family and given a unit certificate; non-solutions report the residual.
 * kTheoremViolation flags a verified solution outside all six families, which
 * the completeness theorem rules out — reaching it means a library defect.
 */
Classification classify_solution(const ThueInstance& inst, const Poly& x, const Poly& y);

/**
 * Exhaustive search over all pairs of polynomials of degree <= max_deg with
 * coefficients drawn from coeff_set.  Returns all solutions found, canonically
 * sorted.  SearchSpaceTooLarge when |coeff_set|^(2*(max_deg+1)) exceeds the
 * budget.  An independent oracle for solution_set, not a fast path.
 */
std::vector<std::pair<Poly, Poly>> brute_search(const ThueInstance& inst, int max_deg,
                                                std::vector<GaussRat> coeff_set,
                                                long long budget = 100000000);

} // namespace thueff
