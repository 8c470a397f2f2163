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

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thueff/gauss_rat.hpp"

namespace thueff {

/**
 * Dense univariate polynomial over the Gaussian rationals.
 *
 * Coefficients are stored ascending by exponent with no trailing zeros, so
 * representation equality is ring equality.  The zero polynomial has an empty
 * coefficient vector and degree kZeroDegree.
 */
class Poly {
public:
    /** Degree of the zero polynomial: a stand-in for -infinity below all ints. */
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(GaussRat constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    /** The monomial X. */
    static Poly variable() { return Poly(std::vector<GaussRat>{GaussRat(0), GaussRat(1)}); }

    static Poly constant(long n) { return Poly(GaussRat(n)); }

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /** Coefficient of X^k (zero beyond the degree). */
    const GaussRat& coeff(int k) const {
        static const GaussRat zero;
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    /** Leading coefficient; ZeroInput on the zero polynomial. */
    const GaussRat& leading() const {
        if (c_.empty()) throw DomainError("ZeroInput", "zero polynomial has no leading coefficient");
        return c_.back();
    }

    const std::vector<GaussRat>& coeffs() const { return c_; }

    Poly operator-() const {
        std::vector<GaussRat> out;
        out.reserve(c_.size());
        for (const GaussRat& x : c_) out.push_back(-x);
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<GaussRat> out(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = f.coeff(static_cast<int>(k)) + g.coeff(static_cast<int>(k));
        }
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<GaussRat> out(f.c_.size() + g.c_.size() - 1);
        for (std::size_t a = 0; a < f.c_.size(); ++a) {
            if (f.c_[a].is_zero()) continue;
            for (std::size_t b = 0; b < g.c_.size(); ++b) {
                out[a + b] += f.c_[a] * g.c_[b];
            }
        }
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& f, const GaussRat& s) {
        if (s.is_zero()) return Poly();
        std::vector<GaussRat> out;
        out.reserve(f.c_.size());
        for (const GaussRat& x : f.c_) out.push_back(x * s);
        return Poly(std::move(out));
    }
    friend Poly operator*(const GaussRat& s, const Poly& f) { return f * s; }

    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly pow(unsigned e) const {
        Poly base = *this;
        Poly acc(GaussRat(1));
        while (e != 0) {
            if (e & 1U) acc *= base;
            base *= base;
            e >>= 1U;
        }
        return acc;
    }

    /** Euclidean division (quotient, remainder); DivisionByZero on zero divisor. */
    std::pair<Poly, Poly> divrem(const Poly& g) const;

    /** Monic gcd; gcd(f, 0) = monic(f); BothZero when both inputs vanish. */
    static Poly gcd(const Poly& f, const Poly& g);

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<GaussRat> out;
        out.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            out.push_back(c_[k] * GaussRat(static_cast<long>(k)));
        }
        return Poly(std::move(out));
    }

    GaussRat eval(const GaussRat& t) const {
        GaussRat acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
        return acc;
    }

    /** f(s*X): substitute a scaled variable. */
    Poly subst_scaled(const GaussRat& s) const {
        std::vector<GaussRat> out = c_;
        GaussRat p(1);
        for (std::size_t k = 1; k < out.size(); ++k) {
            p *= s;
            out[k] *= p;
        }
        return Poly(std::move(out));
    }

    Poly compose(const Poly& g) const {
        Poly acc;
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + Poly(c_[k]);
        return acc;
    }

    /** Scale to leading coefficient 1; ZeroInput on the zero polynomial. */
    Poly monic() const {
        if (is_zero()) throw DomainError("ZeroInput", "cannot normalize the zero polynomial");
        return *this * leading().inv();
    }

    /**
     * Exact polynomial square root by top-down coefficient matching, or
     * nullopt when *this is not a perfect square.  ZeroInput on zero.
     */
    std::optional<Poly> sqrt_exact() const;

    /**
     * (content, primitive part) for a polynomial with integer coefficients:
     * content is the positive coefficient gcd and primitive = *this / content.
     * NotIntegerPolynomial when a coefficient lies outside Z; ZeroInput on zero.
     */
    std::pair<mpz_class, Poly> content_and_primitive() const;

    /** Canonical text form, descending powers ("T^2 + (-1-2i)T + 3/4"). */
    std::string str(std::string_view var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<GaussRat> c_;
};

/** One square-free factor with its multiplicity. */
struct SquareFreePart {
    Poly factor;       // monic, square-free, nonconstant
    int multiplicity;  // >= 1, strictly increasing across parts
};

/** unit * prod factor_i^multiplicity_i, reproducing the input exactly. */
struct SquareFreeDecomposition {
    GaussRat unit;
    std::vector<SquareFreePart> parts;

    Poly reassemble() const {
        Poly acc(unit);
        for (const SquareFreePart& p : parts) {
            acc *= p.factor.pow(static_cast<unsigned>(p.multiplicity));
        }
        return acc;
    }
};

/** Square-free decomposition (characteristic zero, Yun); ZeroInput on zero. */
SquareFreeDecomposition squarefree_decompose(const Poly& f);

/**
 * Decides whether f = C * h^2 for a constant C and monic h; returns (h, C)
 * or nullopt.  Works via even multiplicities in the square-free decomposition.
 * ZeroInput on zero.
 */
std::optional<std::pair<Poly, GaussRat>> as_square_up_to_constant(const Poly& f);

/** Canonical order on polynomials: by degree, then coefficients from the top. */
bool poly_less(const Poly& f, const Poly& g);

} // namespace thueff
