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

#include "thueff/parse.hpp"

#include <cctype>

namespace thueff {

namespace {

constexpr unsigned kMaxExponent = 100000;  // dense storage; keep memory sane

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos, message); }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

mpz_class parse_digits(Cursor& cur) {
    if (!is_digit(cur.peek())) cur.fail("expected a digit");
    std::size_t start = cur.pos;
    while (is_digit(cur.peek())) ++cur.pos;
    return mpz_class(std::string(cur.s.substr(start, cur.pos - start)), 10);
}

// rational := digits ['/' digits]
mpq_class parse_rational(Cursor& cur) {
    mpz_class num = parse_digits(cur);
    cur.skip_ws();
    if (cur.accept('/')) {
        cur.skip_ws();
        std::size_t den_pos = cur.pos;
        mpz_class den = parse_digits(cur);
        if (den == 0) throw ParseError(den_pos, "zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

// part := 'i' | rational ['i'] ; returns (magnitude, is_imaginary)
std::pair<mpq_class, bool> parse_part(Cursor& cur) {
    cur.skip_ws();
    if (cur.accept('i')) return {mpq_class(1), true};
    if (!is_digit(cur.peek())) cur.fail("expected a number or 'i'");
    mpq_class mag = parse_rational(cur);
    cur.skip_ws();
    if (cur.accept('i')) return {mag, true};
    return {mag, false};
}

// gaussrat := ['+'|'-'] part [('+'|'-') part] with at most one real and one
// imaginary part, real first.
GaussRat parse_gauss_rat_at(Cursor& cur) {
    cur.skip_ws();
    bool neg1 = false;
    if (cur.accept('-')) {
        neg1 = true;
    } else {
        cur.accept('+');
    }
    auto [mag1, imag1] = parse_part(cur);
    if (neg1) mag1 = -mag1;
    cur.skip_ws();
    if (cur.peek() == '+' || cur.peek() == '-') {
        std::size_t sign_pos = cur.pos;
        bool neg2 = cur.accept('-');
        if (!neg2) cur.accept('+');
        auto [mag2, imag2] = parse_part(cur);
        if (neg2) mag2 = -mag2;
        if (imag1 || !imag2) {
            throw ParseError(sign_pos, "expected a single real part followed by an imaginary part");
        }
        return GaussRat(mag1, mag2);
    }
    return imag1 ? GaussRat(mpq_class(0), mag1) : GaussRat(mag1);
}

bool starts_variable(const Cursor& cur, std::string_view variable) {
    return cur.s.substr(cur.pos, variable.size()) == variable;
}

// exponent := uint, after '^'
unsigned parse_exponent(Cursor& cur) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    if (!is_digit(cur.peek())) cur.fail("expected exponent digits after '^'");
    mpz_class e = parse_digits(cur);
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return static_cast<unsigned>(e.get_ui());
}

// term := coeff ['*'] [var ['^' uint]] | var ['^' uint]
// where coeff := '(' gaussrat ')' | part  (a bare coefficient has no inner sign)
Poly parse_term(Cursor& cur, std::string_view variable) {
    cur.skip_ws();
    GaussRat coeff(1);
    bool have_coeff = false;
    if (cur.accept('(')) {
        coeff = parse_gauss_rat_at(cur);
        cur.skip_ws();
        if (!cur.accept(')')) cur.fail("expected ')'");
        have_coeff = true;
    } else if (!starts_variable(cur, variable)) {
        auto [mag, imag] = parse_part(cur);
        coeff = imag ? GaussRat(mpq_class(0), mag) : GaussRat(mag);
        have_coeff = true;
    }
    cur.skip_ws();
    const bool star = have_coeff && cur.accept('*');
    cur.skip_ws();
    unsigned exponent = 0;
    if (starts_variable(cur, variable)) {
        cur.pos += variable.size();
        cur.skip_ws();
        exponent = cur.accept('^') ? parse_exponent(cur) : 1;
    } else if (star) {
        cur.fail("expected the variable after '*'");
    } else if (!have_coeff) {
        cur.fail("expected a term");
    }
    std::vector<GaussRat> coeffs(static_cast<std::size_t>(exponent) + 1);
    coeffs.back() = coeff;
    return Poly(std::move(coeffs));
}

} // namespace

GaussRat parse_gauss_rat(std::string_view text) {
    Cursor cur{text};
    GaussRat value = parse_gauss_rat_at(cur);
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return value;
}

Poly parse_poly(std::string_view text, std::string_view variable) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.at_end()) cur.fail("empty polynomial");
    Poly acc;
    bool negate = false;
    if (cur.accept('-')) {
        negate = true;
    } else {
        cur.accept('+');
    }
    for (;;) {
        Poly term = parse_term(cur, variable);
        acc = negate ? acc - term : acc + term;
        cur.skip_ws();
        if (cur.accept('-')) {
            negate = true;
        } else if (cur.accept('+')) {
            negate = false;
        } else {
            break;
        }
    }
    if (!cur.at_end()) cur.fail("unexpected character in polynomial");
    return acc;
}

std::vector<GaussRat> parse_coeff_set(std::string_view text) {
    Cursor cur{text};
    std::vector<GaussRat> out;
    for (;;) {
        out.push_back(parse_gauss_rat_at(cur));
        cur.skip_ws();
        if (cur.at_end()) break;
        if (!cur.accept(',')) cur.fail("expected ','");
    }
    return out;
}

} // namespace thueff
