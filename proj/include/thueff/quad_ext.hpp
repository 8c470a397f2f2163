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

#include <utility>

#include "thueff/poly.hpp"

namespace thueff {

/** Element a + b*u of the quadratic extension, coordinates in the base ring. */
struct QuadExtElem {
    Poly a;
    Poly b;

    static QuadExtElem from_poly(Poly p) { return {std::move(p), Poly()}; }
    static QuadExtElem from_scalar(const GaussRat& s) { return {Poly(s), Poly()}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

    QuadExtElem operator-() const { return {-a, -b}; }
    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
        return {x.a - y.a, x.b - y.b};
    }
};

/** Writes t = c * u^n with a nonzero scalar c; produced only for units. */
struct UnitDecomposition {
    GaussRat c;
    long n;
};

/**
 * The quadratic extension R[u] of the polynomial ring R, where u satisfies
 * u^2 = lambda*u - 1 for a fixed nonconstant lambda.  Elements are written on
 * the basis (1, u); u is invertible with u^-1 = lambda - u, and conjugation
 * sigma fixes R and swaps u with u^-1.
 */
class QuadExtRing {
public:
    /** Requires deg(lambda) >= 1; NonconstantLambda otherwise. */
    explicit QuadExtRing(Poly lambda);

    const Poly& lambda() const { return lambda_; }

    /** (a1 + b1 u)(a2 + b2 u) reduced by u^2 = lambda*u - 1. */
    QuadExtElem mul(const QuadExtElem& x, const QuadExtElem& y) const;

    /** sigma(a + b u) = (a + b*lambda) - b*u. */
    QuadExtElem conj(const QuadExtElem& t) const;

    /** N(t) = t * sigma(t) = a^2 + lambda*a*b + b^2, an element of R. */
    Poly norm(const QuadExtElem& t) const;

    /** Units are exactly the elements whose norm is a nonzero constant. */
    bool is_unit(const QuadExtElem& t) const { return norm(t).degree() == 0; }

    /**
     * Decomposes a unit as c * u^n by degree descent: repeatedly multiply by
     * u or u^-1, whichever strictly lowers deg(b); NotAUnit when neither does
     * or the element is not a unit.
     */
    UnitDecomposition unit_decompose(const QuadExtElem& t) const;

    /** u^n on the basis (1, u), for any integer n. */
    QuadExtElem u_power(long n) const;

private:
    Poly lambda_;
};

} // namespace thueff
