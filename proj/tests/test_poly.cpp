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

#include <doctest.h>

#include "testutil.hpp"
#include "thueff/poly.hpp"

using namespace thueff;
using namespace thueff::testutil;

TEST_SUITE("poly") {

TEST_CASE("representation is canonical") {
    CHECK(Poly().degree() == Poly::kZeroDegree);
    CHECK(Poly().is_zero());
    CHECK(Poly(std::vector<GaussRat>{GaussRat(1), GaussRat(0), GaussRat(0)}).degree() == 0);
    CHECK(P({0, 0, 3}).degree() == 2);
    CHECK(P({1, 2}).coeff(5) == GaussRat(0));
    CHECK(P({1, 2}).coeff(-1) == GaussRat(0));
    CHECK(Poly::kZeroDegree < -1000000);
    CHECK(thrown_kind<DomainError>([] { Poly().leading(); }) == "ZeroInput");
}

TEST_CASE("arithmetic on frozen examples") {
    Poly x = Poly::variable();
    CHECK((x + Poly(GaussRat(1))) * (x - Poly(GaussRat(1))) == P({-1, 0, 1}));
    CHECK((x + Poly(GaussRat(1))).pow(2) == P({1, 2, 1}));
    CHECK(P({1, 1}) - P({1, 1}) == Poly());
    CHECK(P({0, 1}) * GaussRat(-2) == P({0, -2}));
    CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
    CHECK(Poly().derivative() == Poly());
}

TEST_CASE("ring axioms hold on random triples") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        Poly a = rng.poly(5);
        Poly b = rng.poly(5);
        Poly c = rng.poly(5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Poly() == a);
        CHECK(a * Poly(GaussRat(1)) == a);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("division with remainder") {
    auto [quot, rem] = P({1, 2, 0, 1}).divrem(P({1, 0, 1}));
    CHECK(quot == P({0, 1}));
    CHECK(rem == P({1, 1}));
    CHECK(thrown_kind<DomainError>([] { P({1}).divrem(Poly()); }) == "DivisionByZero");

    Rng rng(102);
    for (int t = 0; t < 200; ++t) {
        Poly f = rng.poly(6);
        Poly g = rng.nonzero_poly(4);
        auto [q2, r2] = f.divrem(g);
        CHECK(q2 * g + r2 == f);
        CHECK(r2.degree() < g.degree());
    }
}

TEST_CASE("monic gcd") {
    Poly x = Poly::variable();
    Poly a = (x + Poly(GaussRat(1))) * P({2, 0, 1});
    Poly b = (x + Poly(GaussRat(1))) * P({3, 1});
    CHECK(Poly::gcd(a, b) == P({1, 1}));
    CHECK(Poly::gcd(P({2, 2}), P({3, 3})) == P({1, 1}));
    CHECK(Poly::gcd(P({0, 0, 4}), Poly()) == P({0, 0, 1}));
    CHECK(Poly::gcd(Poly(), P({5})) == P({1}));
    CHECK(thrown_kind<DomainError>([] { Poly::gcd(Poly(), Poly()); }) == "BothZero");

    Rng rng(103);
    for (int t = 0; t < 100; ++t) {
        Poly f = rng.nonzero_poly(4);
        Poly g = rng.nonzero_poly(4);
        Poly h = rng.nonzero_poly(3);
        Poly d = Poly::gcd(f, g);
        CHECK(d.leading() == GaussRat(1));
        CHECK(f.divrem(d).second.is_zero());
        CHECK(g.divrem(d).second.is_zero());
        CHECK(Poly::gcd(f * h, g * h) == (Poly::gcd(f, g) * h).monic());
    }
}

TEST_CASE("evaluation, scaling, composition") {
    CHECK(P({1, 0, 1}).eval(GaussRat(2)) == GaussRat(5));
    CHECK(P({1, 0, 1}).subst_scaled(gi(0, 1)) == P({1, 0, -1}));

    Rng rng(104);
    for (int t = 0; t < 200; ++t) {
        Poly f = rng.poly(5);
        Poly g = rng.poly(3);
        GaussRat s = rng.scalar();
        GaussRat u = rng.scalar();
        CHECK((f * g).eval(u) == f.eval(u) * g.eval(u));
        CHECK((f + g).eval(u) == f.eval(u) + g.eval(u));
        CHECK(f.subst_scaled(s).eval(u) == f.eval(s * u));
        CHECK(f.compose(g).eval(u) == f.eval(g.eval(u)));
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("square-free decomposition on frozen examples") {
    Poly x = Poly::variable();
    Poly f = Poly(GaussRat(3)) * (x + Poly(GaussRat(1))) * (x - Poly(GaussRat(2))).pow(2);
    SquareFreeDecomposition dec = squarefree_decompose(f);
    CHECK(dec.unit == GaussRat(3));
    REQUIRE(dec.parts.size() == 2);
    CHECK(dec.parts[0].factor == P({1, 1}));
    CHECK(dec.parts[0].multiplicity == 1);
    CHECK(dec.parts[1].factor == P({-2, 1}));
    CHECK(dec.parts[1].multiplicity == 2);
    CHECK(dec.reassemble() == f);

    SquareFreeDecomposition cube = squarefree_decompose(P({1, 0, 1}).pow(3));
    REQUIRE(cube.parts.size() == 1);
    CHECK(cube.parts[0].factor == P({1, 0, 1}));
    CHECK(cube.parts[0].multiplicity == 3);

    SquareFreeDecomposition constant = squarefree_decompose(P({-7}));
    CHECK(constant.unit == GaussRat(-7));
    CHECK(constant.parts.empty());

    SquareFreeDecomposition xonly = squarefree_decompose(P({0, 0, 0, 1}));
    REQUIRE(xonly.parts.size() == 1);
    CHECK(xonly.parts[0].factor == P({0, 1}));
    CHECK(xonly.parts[0].multiplicity == 3);

    CHECK(thrown_kind<DomainError>([] { squarefree_decompose(Poly()); }) == "ZeroInput");
}

TEST_CASE("square-free decomposition on random factor products") {
    Rng rng(105);
    for (int t = 0; t < 100; ++t) {
        // Distinct monic linear factors guarantee known pairwise-coprime parts.
        long r1 = rng.pick(-8, 8);
        long r2 = r1 + rng.pick(1, 5);
        long r3 = r2 + rng.pick(1, 5);
        Poly f1 = P({-r1, 1});
        Poly f2 = P({-r2, 1});
        Poly f3 = P({-r3, 1});
        GaussRat unit = rng.nonzero_scalar();
        int m1 = static_cast<int>(rng.pick(1, 3));
        int m2 = static_cast<int>(rng.pick(m1 + 1, m1 + 3));
        Poly f = Poly(unit) * f1.pow(static_cast<unsigned>(m1)) *
                 f2.pow(static_cast<unsigned>(m1)) * f3.pow(static_cast<unsigned>(m2));
        SquareFreeDecomposition dec = squarefree_decompose(f);
        CHECK(dec.unit == unit);
        REQUIRE(dec.parts.size() == 2);
        CHECK(dec.parts[0].factor == f1 * f2);
        CHECK(dec.parts[0].multiplicity == m1);
        CHECK(dec.parts[1].factor == f3);
        CHECK(dec.parts[1].multiplicity == m2);
        CHECK(dec.reassemble() == f);
        for (const SquareFreePart& part : dec.parts) {
            CHECK(Poly::gcd(part.factor, part.factor.derivative()).degree() == 0);
        }
    }
}

TEST_CASE("squares up to a constant") {
    Poly x = Poly::variable();
    auto r1 = as_square_up_to_constant(P({1, 2, 1}));
    REQUIRE(r1.has_value());
    CHECK(r1->first == P({1, 1}));
    CHECK(r1->second == GaussRat(1));

    auto r2 = as_square_up_to_constant(P({2, 4, 2}));
    REQUIRE(r2.has_value());
    CHECK(r2->first == P({1, 1}));
    CHECK(r2->second == GaussRat(2));

    Poly h = P({1, 3, 1});
    auto r3 = as_square_up_to_constant(Poly(gi(0, 5)) * h * h);
    REQUIRE(r3.has_value());
    CHECK(r3->first == h);
    CHECK(r3->second == gi(0, 5));

    CHECK(!as_square_up_to_constant(x * P({1, 1}).pow(2)).has_value());
    CHECK(!as_square_up_to_constant(P({2, 1})).has_value());
    auto r4 = as_square_up_to_constant(P({42}));
    REQUIRE(r4.has_value());
    CHECK(r4->first == P({1}));

    Rng rng(106);
    for (int t = 0; t < 100; ++t) {
        Poly g = rng.monic_poly(static_cast<int>(rng.pick(1, 4)));
        GaussRat c = rng.nonzero_scalar();
        auto sq = as_square_up_to_constant(Poly(c) * g * g);
        REQUIRE(sq.has_value());
        CHECK(Poly(sq->second) * sq->first * sq->first == Poly(c) * g * g);
        // Append a linear factor that is fresh for g: odd multiplicity kills squareness.
        long a = rng.pick(9, 20);
        if (!g.eval(GaussRat(a)).is_zero()) {
            CHECK(!as_square_up_to_constant(Poly(c) * g * g * P({-a, 1})).has_value());
        }
    }
}

TEST_CASE("squareness under composition") {
    // Odd-degree non-squares can still compose into squares, so only
    // even-degree inputs transfer non-squareness through composition.
    Poly x = Poly::variable();
    Poly xsq = P({0, 0, 1});
    CHECK(!as_square_up_to_constant(x).has_value());
    CHECK(as_square_up_to_constant(x.compose(xsq)).has_value());

    // Even degree, two simple roots: no nonconstant substitution is a square.
    Poly f = x * P({-1, 1});
    CHECK(!as_square_up_to_constant(f.compose(xsq)).has_value());
    CHECK(!as_square_up_to_constant(f.compose(P({1, 2, 3}))).has_value());
}

TEST_CASE("exact square root") {
    Poly g = Poly(std::vector<GaussRat>{GaussRat(3), gi(0, 1), GaussRat(1)});
    auto root = (g * g).sqrt_exact();
    REQUIRE(root.has_value());
    CHECK(*root == g);

    auto r4x2 = P({0, 0, 4}).sqrt_exact();
    REQUIRE(r4x2.has_value());
    CHECK(*r4x2 == P({0, 2}));

    auto rneg = P({0, 0, -1}).sqrt_exact();
    REQUIRE(rneg.has_value());
    CHECK(*rneg == Poly(std::vector<GaussRat>{GaussRat(0), gi(0, 1)}));

    CHECK(!P({1, 0, 1}).sqrt_exact().has_value());   // square-free
    CHECK(!P({0, 0, 0, 1}).sqrt_exact().has_value()); // odd degree
    CHECK(!P({0, 0, 2}).sqrt_exact().has_value());    // leading coefficient not a square
    CHECK(thrown_kind<DomainError>([] { Poly().sqrt_exact(); }) == "ZeroInput");

    Rng rng(107);
    for (int t = 0; t < 100; ++t) {
        Poly h = rng.nonzero_poly(4);
        auto r = (h * h).sqrt_exact();
        REQUIRE(r.has_value());
        CHECK(*r * *r == h * h);
        CHECK((*r == h || *r == -h));
        // Same even degree, extra distinct linear factors: not a square.
        long a = rng.pick(9, 20);
        if (!h.eval(GaussRat(a)).is_zero() && !h.eval(GaussRat(a + 1)).is_zero()) {
            Poly nonsq = h * h * P({-a, 1}) * P({-(a + 1), 1});
            CHECK(!nonsq.sqrt_exact().has_value());
        }
    }
}

TEST_CASE("content and primitive part") {
    auto [c1, p1] = P({2, 4, 6}).content_and_primitive();
    CHECK(c1 == 2);
    CHECK(p1 == P({1, 2, 3}));

    auto [c2, p2] = P({2, -4}).content_and_primitive();
    CHECK(c2 == 2);
    CHECK(p2 == P({1, -2}));

    auto [c3, p3] = P({7}).content_and_primitive();
    CHECK(c3 == 7);
    CHECK(p3 == P({1}));

    CHECK(thrown_kind<DomainError>([] {
              Poly(q(1, 2)).content_and_primitive();
          }) == "NotIntegerPolynomial");
    CHECK(thrown_kind<DomainError>([] {
              Poly(gi(1, 1)).content_and_primitive();
          }) == "NotIntegerPolynomial");
    CHECK(thrown_kind<DomainError>([] { Poly().content_and_primitive(); }) == "ZeroInput");
}

TEST_CASE("canonical text form") {
    CHECK(Poly().str("X") == "0");
    CHECK(P({-1, 0, 1}).str("X") == "X^2 - 1");
    CHECK(P({2, -1}).str("X") == "-X + 2");
    CHECK(P({2, 1, 2}).str("X") == "2X^2 + X + 2");
    CHECK(P({0, -2, 0, 1}).str("X") == "X^3 - 2X");
    Poly mixed(std::vector<GaussRat>{q(3, 4), gi(-1, -2), GaussRat(1)});
    CHECK(mixed.str("T") == "T^2 + (-1-2i)T + 3/4");
    CHECK(Poly(std::vector<GaussRat>{GaussRat(0), GaussRat(0), gi(0, 2)}).str("X") == "(2i)X^2");
    CHECK(Poly(gi(1, 1)).str("T") == "(1+i)");
    CHECK(Poly(std::vector<GaussRat>{GaussRat(0), q(1, 2)}).str("T") == "1/2T");
}

TEST_CASE("canonical ordering") {
    CHECK(poly_less(Poly(), P({1})));
    CHECK(poly_less(P({5}), P({0, 1})));
    CHECK(poly_less(P({0, 1}), P({0, 2})));
    CHECK(poly_less(P({1, 1}), P({2, 1})));
    CHECK(!poly_less(P({1, 1}), P({1, 1})));
}

} // TEST_SUITE
