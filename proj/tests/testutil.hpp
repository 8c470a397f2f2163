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

#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thueff/errors.hpp"
#include "thueff/poly.hpp"

namespace thueff::testutil {

/** Exact rational num/den. */
inline GaussRat q(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return GaussRat(v);
}

/** Gaussian integer re + im*i. */
inline GaussRat gi(long re, long im) { return GaussRat(mpq_class(re), mpq_class(im)); }

/** Integer-coefficient polynomial, coefficients ascending by exponent. */
inline Poly P(std::initializer_list<long> coeffs) {
    std::vector<GaussRat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(GaussRat(v));
    return Poly(std::move(c));
}

/** Runs fn, returns the kind of the error of type E it throws ("" if none). */
template <class E, class Fn>
std::string thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const E& e) {
        return e.kind();
    } catch (...) {
        return "<wrong exception type>";
    }
    return "<no exception>";
}

/** Runs fn, returns the offset of the ParseError it throws (nullopt if none). */
template <class Fn>
std::optional<std::size_t> parse_error_offset(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::nullopt;
}

/** Deterministic generator for property tests. */
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }

    mpq_class rational(long max_num = 6, long max_den = 3) {
        mpq_class v(pick(-max_num, max_num), pick(1, max_den));
        v.canonicalize();
        return v;
    }

    GaussRat scalar() { return GaussRat(rational(), rational()); }

    GaussRat nonzero_scalar() {
        for (;;) {
            GaussRat s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    /** Random polynomial of degree <= max_deg (possibly zero). */
    Poly poly(int max_deg) {
        int d = static_cast<int>(pick(0, max_deg));
        std::vector<GaussRat> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) c.push_back(scalar());
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_deg) {
        for (;;) {
            Poly p = poly(max_deg);
            if (!p.is_zero()) return p;
        }
    }

    /** Random polynomial of exact degree d. */
    Poly poly_exact(int d) {
        std::vector<GaussRat> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k < d; ++k) c.push_back(scalar());
        c.push_back(nonzero_scalar());
        return Poly(std::move(c));
    }

    /** Random monic polynomial of exact degree d. */
    Poly monic_poly(int d) {
        std::vector<GaussRat> c;
        c.reserve(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k < d; ++k) c.push_back(scalar());
        c.push_back(GaussRat(1));
        return Poly(std::move(c));
    }

    /** Random nonconstant ring parameter, degree 1..max_deg. */
    Poly lambda(int max_deg) { return poly_exact(static_cast<int>(pick(1, max_deg))); }
};

} // namespace thueff::testutil
