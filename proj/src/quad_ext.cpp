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

#include "thueff/quad_ext.hpp"

namespace thueff {

QuadExtRing::QuadExtRing(Poly lambda) : lambda_(std::move(lambda)) {
    if (lambda_.degree() < 1) {
        throw DomainError("NonconstantLambda", "the ring parameter must be nonconstant");
    }
}

QuadExtElem QuadExtRing::mul(const QuadExtElem& x, const QuadExtElem& y) const {
    // (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + a2 b1) u + b1 b2 (lambda*u - 1)
    Poly bb = x.b * y.b;
    return {x.a * y.a - bb, x.a * y.b + x.b * y.a + lambda_ * bb};
}

QuadExtElem QuadExtRing::conj(const QuadExtElem& t) const {
    return {t.a + t.b * lambda_, -t.b};
}

Poly QuadExtRing::norm(const QuadExtElem& t) const {
    return t.a * t.a + lambda_ * t.a * t.b + t.b * t.b;
}

UnitDecomposition QuadExtRing::unit_decompose(const QuadExtElem& t) const {
    if (norm(t).degree() != 0) {
        throw DomainError("NotAUnit", "norm is not a nonzero constant");
    }
    Poly a = t.a;
    Poly b = t.b;
    long n = 0;
    while (!a.is_zero() && !b.is_zero()) {
        const int db = b.degree();
        if (a.degree() < db) {
            // (a + b u) u^-1 = (b + lambda*a) - a*u, so t = [(b + lambda*a) - a*u] * u.
            Poly na = b + lambda_ * a;
            b = -a;
            a = std::move(na);
            ++n;
        } else {
            // (a + b u) u = -b + (a + lambda*b) u, so t = [-b + (a + lambda*b) u] * u^-1.
            Poly nb = a + lambda_ * b;
            if (nb.degree() >= db) {
                throw DomainError("NotAUnit", "degree descent stalled; not of the form c*u^n");
            }
            a = -b;
            b = std::move(nb);
            --n;
        }
        if (b.degree() >= db) {
            throw InternalError("InternalInconsistency", "unit descent did not reduce deg(b)");
        }
    }
    if (b.is_zero()) {
        if (a.degree() != 0) throw DomainError("NotAUnit", "terminal coordinate is nonconstant");
        return {a.coeff(0), n};
    }
    if (b.degree() != 0) throw DomainError("NotAUnit", "terminal coordinate is nonconstant");
    // t * u^-n = b0 * u, i.e. t = b0 * u^(n+1); flip the bookkeeping sign of n.
    return {b.coeff(0), n + 1};
}

QuadExtElem QuadExtRing::u_power(long n) const {
    Poly a(GaussRat(1));
    Poly b;
    if (n >= 0) {
        for (long k = 0; k < n; ++k) {
            // (a + b u) u = -b + (a + lambda*b) u
            Poly na = -b;
            b = a + lambda_ * b;
            a = std::move(na);
        }
    } else {
        for (long k = 0; k < -n; ++k) {
            // (a + b u) u^-1 = (b + lambda*a) - a u
            Poly na = b + lambda_ * a;
            b = -a;
            a = std::move(na);
        }
    }
    return {std::move(a), std::move(b)};
}

} // namespace thueff
