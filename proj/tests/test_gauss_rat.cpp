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
#include "thueff/gauss_rat.hpp"

using namespace thueff;
using namespace thueff::testutil;

TEST_SUITE("gauss_rat") {

TEST_CASE("arithmetic on frozen examples") {
    CHECK(gi(1, 2) * gi(3, -1) == gi(5, 5));
    CHECK(gi(1, 1) / gi(1, -1) == gi(0, 1));
    CHECK(gi(0, 2).inv() == GaussRat(mpq_class(0), mpq_class(-1, 2)));
    CHECK(gi(3, 4).conj() == gi(3, -4));
    CHECK(gi(3, 4).norm() == 25);
    CHECK(gi(2, -5) + gi(-2, 5) == GaussRat(0));
    CHECK((q(1, 2) * q(2, 3)) == q(1, 3));
}

TEST_CASE("field axioms hold on random triples") {
    Rng rng(20260815);
    for (int t = 0; t < 200; ++t) {
        GaussRat a = rng.scalar();
        GaussRat b = rng.scalar();
        GaussRat c = rng.scalar();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GaussRat(0) == a);
        CHECK(a * GaussRat(1) == a);
        GaussRat nz = rng.nonzero_scalar();
        CHECK(nz * nz.inv() == GaussRat(1));
        CHECK((a / nz) * nz == a);
    }
}

TEST_CASE("powers") {
    CHECK(gi(1, 1).pow(4) == GaussRat(-4));
    CHECK(gi(1, 1).pow(-2) == GaussRat(mpq_class(0), mpq_class(-1, 2)));
    CHECK(gi(0, 1).pow(7) == gi(0, -1));
    CHECK(GaussRat(0).pow(0) == GaussRat(1));
    CHECK(thrown_kind<DomainError>([] { GaussRat(0).pow(-1); }) == "DivisionByZero");
    CHECK(i_power(0) == GaussRat(1));
    CHECK(i_power(1) == gi(0, 1));
    CHECK(i_power(-1) == gi(0, -1));
    CHECK(i_power(6) == GaussRat(-1));
    CHECK(i_power(-7) == gi(0, 1));
}

TEST_CASE("division by zero") {
    CHECK(thrown_kind<DomainError>([] { GaussRat(0).inv(); }) == "DivisionByZero");
    CHECK(thrown_kind<DomainError>([] { GaussRat(1) / GaussRat(0); }) == "DivisionByZero");
    CHECK(thrown_kind<DomainError>([] { GaussRat::from_ratio(1, 0); }) == "DivisionByZero");
}

TEST_CASE("square roots on frozen examples") {
    CHECK(GaussRat(4).sqrt() == GaussRat(2));
    CHECK(q(9, 4).sqrt() == q(3, 2));
    CHECK(GaussRat(-4).sqrt() == gi(0, 2));
    CHECK(GaussRat(-1).sqrt() == gi(0, 1));
    CHECK(gi(0, 2).sqrt() == gi(1, 1));
    CHECK(gi(0, -2).sqrt() == gi(1, -1));
    CHECK(gi(3, 4).sqrt() == gi(2, 1));
    CHECK(GaussRat(0).sqrt() == GaussRat(0));
    CHECK(!GaussRat(2).sqrt().has_value());
    CHECK(!gi(0, 1).sqrt().has_value());
    CHECK(!gi(1, 1).sqrt().has_value());
    CHECK(!q(1, 3).sqrt().has_value());
}

TEST_CASE("square roots are exact and canonical on random squares") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        GaussRat z = rng.scalar();
        GaussRat sq = z * z;
        auto r = sq.sqrt();
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
        // Canonical representative: positive real part, or on the imaginary axis
        // a nonnegative imaginary part.
        bool canonical = r->re() > 0 || (r->re() == 0 && r->im() >= 0);
        CHECK(canonical);
        CHECK((*r == z || *r == -z));
    }
}

TEST_CASE("fourth roots on frozen examples") {
    CHECK(fourth_roots(GaussRat(1)) ==
          std::vector<GaussRat>{GaussRat(-1), gi(0, -1), gi(0, 1), GaussRat(1)});
    CHECK(fourth_roots(GaussRat(16)) ==
          std::vector<GaussRat>{GaussRat(-2), gi(0, -2), gi(0, 2), GaussRat(2)});
    CHECK(fourth_roots(GaussRat(-4)) ==
          std::vector<GaussRat>{gi(-1, -1), gi(-1, 1), gi(1, -1), gi(1, 1)});
    CHECK(fourth_roots(GaussRat(-1)).empty());
    CHECK(fourth_roots(GaussRat(2)).empty());
    CHECK(fourth_roots(gi(0, 1)).empty());
    CHECK(fourth_roots(q(1, 16)) ==
          std::vector<GaussRat>{q(-1, 2), GaussRat(mpq_class(0), mpq_class(-1, 2)),
                                GaussRat(mpq_class(0), mpq_class(1, 2)), q(1, 2)});
    CHECK(thrown_kind<DomainError>([] { fourth_roots(GaussRat(0)); }) == "ZeroInput");
}

TEST_CASE("fourth roots recover random fourth powers") {
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        GaussRat z = rng.nonzero_scalar();
        GaussRat x = z.pow(4);
        std::vector<GaussRat> roots = fourth_roots(x);
        REQUIRE(roots.size() == 4);
        bool found = false;
        for (const GaussRat& r : roots) {
            CHECK(r.pow(4) == x);
            if (r == z) found = true;
        }
        CHECK(found);
        CHECK(std::is_sorted(roots.begin(), roots.end()));
    }
}

TEST_CASE("canonical text form") {
    CHECK(GaussRat(0).str() == "0");
    CHECK(GaussRat(1).str() == "1");
    CHECK(GaussRat(-1).str() == "-1");
    CHECK(q(3, 4).str() == "3/4");
    CHECK(gi(0, 1).str() == "i");
    CHECK(gi(0, -1).str() == "-i");
    CHECK(gi(0, 2).str() == "2i");
    CHECK(GaussRat(mpq_class(0), mpq_class(-2, 3)).str() == "-2/3i");
    CHECK(gi(1, 1).str() == "1+i");
    CHECK(gi(1, -2).str() == "1-2i");
    CHECK(GaussRat(mpq_class(-1, 2), mpq_class(3, 4)).str() == "-1/2+3/4i");
}

TEST_CASE("from_ratio canonicalizes") {
    CHECK(GaussRat::from_ratio(2, 4) == q(1, 2));
    CHECK(GaussRat::from_ratio(-6, -3) == GaussRat(2));
    CHECK(GaussRat::from_ratio(3, -6) == q(-1, 2));
}

} // TEST_SUITE
