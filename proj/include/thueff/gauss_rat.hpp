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

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "thueff/errors.hpp"

namespace thueff {

/** Exact square root of a nonnegative rational, if the result is rational. */
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/**
 * Gaussian rational a + b*i with exact arbitrary-precision rational parts.
 *
 * This is the coefficient field everywhere in the library: it is the smallest
 * computable field that contains i, which the solution formulas and the unit
 * certificates need.  Both parts are kept in canonical mpq form.
 */
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}                      // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}    // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    /** The imaginary unit. */
    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    /** num/den as a real rational; canonicalizes, den must be nonzero. */
    static GaussRat from_ratio(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("DivisionByZero", "zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussRat(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /** True when the value lies in Z (real with unit denominator). */
    bool is_rational_integer() const { return im_ == 0 && re_.get_den() == 1; }

    GaussRat conj() const { return GaussRat(re_, mpq_class(-im_)); }

    /** Field norm re^2 + im^2 (a nonnegative rational, zero iff *this is zero). */
    mpq_class norm() const { return mpq_class(re_ * re_ + im_ * im_); }

    GaussRat operator-() const { return GaussRat(mpq_class(-re_), mpq_class(-im_)); }

    friend GaussRat operator+(const GaussRat& x, const GaussRat& y) {
        return GaussRat(mpq_class(x.re_ + y.re_), mpq_class(x.im_ + y.im_));
    }
    friend GaussRat operator-(const GaussRat& x, const GaussRat& y) {
        return GaussRat(mpq_class(x.re_ - y.re_), mpq_class(x.im_ - y.im_));
    }
    friend GaussRat operator*(const GaussRat& x, const GaussRat& y) {
        return GaussRat(mpq_class(x.re_ * y.re_ - x.im_ * y.im_),
                        mpq_class(x.re_ * y.im_ + x.im_ * y.re_));
    }

    /** Multiplicative inverse; DivisionByZero on zero. */
    GaussRat inv() const {
        mpq_class n = norm();
        if (n == 0) throw DomainError("DivisionByZero", "inverse of zero");
        return GaussRat(mpq_class(re_ / n), mpq_class(-im_ / n));
    }

    friend GaussRat operator/(const GaussRat& x, const GaussRat& y) { return x * y.inv(); }

    GaussRat& operator+=(const GaussRat& y) { return *this = *this + y; }
    GaussRat& operator-=(const GaussRat& y) { return *this = *this - y; }
    GaussRat& operator*=(const GaussRat& y) { return *this = *this * y; }
    GaussRat& operator/=(const GaussRat& y) { return *this = *this / y; }

    /** Integer power; negative exponents invert first (DivisionByZero on zero base). */
    GaussRat pow(long e) const {
        if (e < 0) return inv().pow(-e);
        GaussRat base = *this;
        GaussRat acc(1);
        unsigned long k = static_cast<unsigned long>(e);
        while (k != 0) {
            if (k & 1UL) acc *= base;
            base *= base;
            k >>= 1UL;
        }
        return acc;
    }

    friend bool operator==(const GaussRat& x, const GaussRat& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const GaussRat& x, const GaussRat& y) { return !(x == y); }

    /** Lexicographic (re, im) order; used only for canonical sorting, not magnitude. */
    friend std::strong_ordering operator<=>(const GaussRat& x, const GaussRat& y) {
        int c = cmp(x.re_, y.re_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        c = cmp(x.im_, y.im_);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /**
     * Exact square root, if one exists in Q(i); the canonical root has
     * positive real part, or zero real part and nonnegative imaginary part.
     */
    std::optional<GaussRat> sqrt() const {
        const mpq_class& a = re_;
        const mpq_class& b = im_;
        if (b == 0) {
            if (a >= 0) {
                auto r = rational_sqrt(a);
                if (!r) return std::nullopt;
                return GaussRat(*r);
            }
            auto r = rational_sqrt(mpq_class(-a));
            if (!r) return std::nullopt;
            return GaussRat(mpq_class(0), *r);
        }
        // z = p + q*i with p^2 = (a + |z^2|)/2 > 0, q = b/(2p).  A root exists in
        // Q(i) iff both a^2 + b^2 and (a + sqrt(a^2 + b^2))/2 are rational squares.
        auto r = rational_sqrt(mpq_class(a * a + b * b));
        if (!r) return std::nullopt;
        auto p = rational_sqrt(mpq_class((a + *r) / 2));
        if (!p || *p == 0) return std::nullopt;
        GaussRat z(*p, mpq_class(b / (2 * (*p))));
        if (z * z == *this) return z;
        return std::nullopt;
    }

    /** Canonical text form: "0", "-1", "3/4", "i", "-2/3i", "1+i", "-1+2i". */
    std::string str() const {
        if (im_ == 0) return re_.get_str();
        mpq_class ia(abs(im_));
        std::string ipart = (ia == 1) ? "i" : ia.get_str() + "i";
        if (re_ == 0) return (im_ < 0 ? "-" : "") + ipart;
        return re_.get_str() + (im_ < 0 ? "-" : "+") + ipart;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << x.str(); }

private:
    mpq_class re_;
    mpq_class im_;
};

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    // num/den canonical implies sn/sd canonical (coprimality survives square roots).
    return mpq_class(sn, sd);
}

/** i^k for any integer k. */
inline GaussRat i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussRat(1);
        case 1: return GaussRat::i();
        case 2: return GaussRat(-1);
        default: return -GaussRat::i();
    }
}

/**
 * All fourth roots of x in Q(i), sorted canonically.  The result has size 0
 * (no fourth root lies in the field) or 4 (a full orbit z, iz, -z, -iz).
 * ZeroInput on x = 0.
 */
inline std::vector<GaussRat> fourth_roots(const GaussRat& x) {
    if (x.is_zero()) throw DomainError("ZeroInput", "fourth roots of zero are degenerate");
    auto w = x.sqrt();
    if (!w) return {};
    auto z = w->sqrt();
    if (!z) z = (-*w).sqrt();   // the other square root of x may be the square
    if (!z) return {};
    std::vector<GaussRat> roots{*z, GaussRat::i() * (*z), -*z, -(GaussRat::i() * (*z))};
    std::sort(roots.begin(), roots.end());
    for (const GaussRat& r : roots) {
        if (!(r.pow(4) == x))
            throw InternalError("InternalInconsistency", "fourth-root orbit failed verification");
    }
    return roots;
}

} // namespace thueff
