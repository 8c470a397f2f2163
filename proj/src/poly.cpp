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

#include "thueff/poly.hpp"

namespace thueff {

std::pair<Poly, Poly> Poly::divrem(const Poly& g) const {
    if (g.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
    if (is_zero() || degree() < g.degree()) return {Poly(), *this};

    const int dg = g.degree();
    const int dq = degree() - dg;
    std::vector<GaussRat> rem = c_;
    std::vector<GaussRat> quot(static_cast<std::size_t>(dq) + 1);
    const GaussRat lg_inv = g.leading().inv();

    for (int k = dq; k >= 0; --k) {
        GaussRat f = rem[static_cast<std::size_t>(k + dg)] * lg_inv;
        quot[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dg; ++j) {
            rem[static_cast<std::size_t>(k + j)] -= f * g.c_[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) {
        throw DomainError("BothZero", "gcd of two zero polynomials is undefined");
    }
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        // Normalizing each remainder keeps coefficient growth in check.
        if (!r.is_zero()) r = r.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = f.divrem(g);
    if (!r.is_zero()) {
        throw InternalError("InternalInconsistency", "polynomial division expected to be exact");
    }
    return q;
}

} // namespace

SquareFreeDecomposition squarefree_decompose(const Poly& f) {
    if (f.is_zero()) throw DomainError("ZeroInput", "cannot decompose the zero polynomial");
    SquareFreeDecomposition out;
    out.unit = f.leading();
    if (f.is_constant()) return out;

    // Yun's algorithm on the monic part (characteristic zero).
    Poly p = f.monic();
    Poly d = p.derivative();
    Poly a = Poly::gcd(p, d);
    if (a.degree() == 0) {
        out.parts.push_back({p, 1});
    } else {
        Poly b = exact_div(p, a);
        Poly c = exact_div(d, a);
        int mult = 1;
        while (b.degree() > 0) {
            Poly w = c - b.derivative();
            Poly g = Poly::gcd(b, w);
            if (g.degree() > 0) out.parts.push_back({g, mult});
            b = exact_div(b, g);
            c = exact_div(w, g);
            ++mult;
        }
    }

    for (std::size_t k = 1; k < out.parts.size(); ++k) {
        if (out.parts[k - 1].multiplicity >= out.parts[k].multiplicity) {
            throw InternalError("InternalInconsistency",
                                "square-free multiplicities are not strictly increasing");
        }
    }
    if (!(out.reassemble() == f)) {
        throw InternalError("InternalInconsistency",
                            "square-free decomposition failed to reproduce its input");
    }
    return out;
}

std::optional<std::pair<Poly, GaussRat>> as_square_up_to_constant(const Poly& f) {
    SquareFreeDecomposition dec = squarefree_decompose(f);
    Poly h(GaussRat(1));
    for (const SquareFreePart& p : dec.parts) {
        if (p.multiplicity % 2 != 0) return std::nullopt;
        h *= p.factor.pow(static_cast<unsigned>(p.multiplicity / 2));
    }
    return std::make_pair(h, dec.unit);
}

std::optional<Poly> Poly::sqrt_exact() const {
    if (is_zero()) throw DomainError("ZeroInput", "square root of the zero polynomial");
    const int d = degree();
    if (d % 2 != 0) return std::nullopt;
    auto top = leading().sqrt();
    if (!top) return std::nullopt;

    const int m = d / 2;
    std::vector<GaussRat> g(static_cast<std::size_t>(m) + 1);
    g[static_cast<std::size_t>(m)] = *top;
    const GaussRat half_inv = (GaussRat(2) * (*top)).inv();
    // Matching coefficients of X^(m+k) in g^2 determines g_k from g_{k+1}..g_m.
    for (int k = m - 1; k >= 0; --k) {
        GaussRat acc = coeff(m + k);
        for (int p = k + 1; p <= m - 1; ++p) {
            acc -= g[static_cast<std::size_t>(p)] * g[static_cast<std::size_t>(m + k - p)];
        }
        g[static_cast<std::size_t>(k)] = acc * half_inv;
    }
    Poly root(std::move(g));
    if (root * root == *this) return root;
    return std::nullopt;
}

std::pair<mpz_class, Poly> Poly::content_and_primitive() const {
    if (is_zero()) throw DomainError("ZeroInput", "content of the zero polynomial");
    mpz_class content(0);
    for (const GaussRat& x : c_) {
        if (!x.is_rational_integer()) {
            throw DomainError("NotIntegerPolynomial",
                              "content requires integer coefficients, got " + x.str());
        }
        mpz_class n(x.re().get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    GaussRat inv_content = GaussRat(mpq_class(mpz_class(1), content));
    return {content, *this * inv_content};
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const GaussRat& c = coeff(k);
        if (c.is_zero()) continue;
        const bool first = out.empty();
        std::string vp;
        if (k == 1) {
            vp = std::string(var);
        } else if (k >= 2) {
            vp = std::string(var) + "^" + std::to_string(k);
        }
        if (c.is_real()) {
            const bool neg = c.re() < 0;
            mpq_class mag(abs(c.re()));
            std::string body;
            if (k == 0) {
                body = mag.get_str();
            } else if (mag == 1) {
                body = vp;
            } else {
                body = mag.get_str() + vp;
            }
            if (first) {
                out += (neg ? "-" : "") + body;
            } else {
                out += (neg ? " - " : " + ") + body;
            }
        } else {
            // Non-real coefficients are parenthesized and never sign-split.
            std::string body = "(" + c.str() + ")" + vp;
            out += first ? body : " + " + body;
        }
    }
    return out;
}

bool poly_less(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int k = f.degree(); k >= 0; --k) {
        auto c = f.coeff(k) <=> g.coeff(k);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace thueff
