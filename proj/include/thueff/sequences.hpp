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

#include <map>
#include <mutex>
#include <set>
#include <utility>

#include "thueff/poly.hpp"

namespace thueff {

/**
 * Memoized companion sequences of the fundamental unit: writing u^n on the
 * basis (1, u) gives integer polynomials U_n, V_n with u^n = U_n(X) + V_n(X)u,
 * via U_0 = 1, V_0 = 0, U_{n+1} = -V_n, V_{n+1} = U_n + X V_n (and the inverse
 * step backwards).  H_n is the derived sequence H_0 = 1, H_1 = 2,
 * H_{n+2} = X H_{n+1} + H_n extended to negative indices.
 *
 * The cache is safe for concurrent use; all entries are cross-checked against
 * an independent identity on insertion.
 */
class SequenceCache {
public:
    std::pair<Poly, Poly> uv(long n);
    Poly h(long n);

private:
    void ensure_uv(long n);
    void ensure_h(long n);

    std::mutex mu_;
    std::map<long, std::pair<Poly, Poly>> uv_;
    std::map<long, Poly> h_;
};

/** (U_n, V_n) from a process-wide cache. */
std::pair<Poly, Poly> sequence_uv(long n);

/** The conjugate pair (U_n + 2i V_n, U_n - 2i V_n). */
std::pair<Poly, Poly> sequence_g(long n);

/** H_n, cross-checked against H_n = (-i)^n G_n(iX) on computation. */
Poly sequence_h(long n);

/** Fibonacci number F_l with F_0 = 0, F_1 = 1; l must be nonnegative. */
mpz_class fibonacci(long l);

/**
 * All m with |m| <= n_max such that H_m is a square up to a constant factor.
 * These are exactly the exponents for which c*u^m can certify a solution.
 */
std::set<int> classify_square_exponents(int n_max);

} // namespace thueff
