// Copyright 2026 The dccode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <stdexcept>

#include "dccode/bordered.hpp"
#include "dccode/circulant.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dccode;

namespace {

RingElement P(std::size_t m, const char* text) { return parse_ring_element(text, m); }

bool generator_matches_oracle(const BorderedDescriptor& b) {
    const oracle::Code o = oracle::bordered_code(b.f().to_bits(), b.m(), b.alpha());
    const BinaryCode c = build(b);
    if (c.length() != o.n || c.dimension() != o.rows.size()) return false;
    for (std::size_t i = 0; i < o.rows.size(); ++i) {
        for (std::size_t j = 0; j < o.n; ++j) {
            if (c.generator().get(i, j) != (((o.rows[i] >> j) & 1U) != 0)) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("build") {
    const BinaryCode c3 = build(BorderedDescriptor(P(3, "x+x^2"), false));
    CHECK(c3.length() == 8);
    CHECK(c3.dimension() == 4);
    const BinaryCode c1 = build(BorderedDescriptor(RingElement::zero(1), false));
    CHECK(c1.generator() == BitMatrix::from_strings({"1001", "0110"}));
    const BinaryCode c5 = build(BorderedDescriptor(P(5, "x+x^2+x^3+x^4"), false));
    CHECK(c5.length() == 12);
    CHECK(c5.dimension() == 6);
    CHECK_THROWS_AS(BorderedDescriptor(4, P(3, "1"), false), std::invalid_argument);
    for (std::size_t m = 1; m <= 7; ++m) {
        for (Word f = 0; f < (Word{1} << m); ++f) {
            REQUIRE(generator_matches_oracle(BorderedDescriptor(RingElement::from_bits(m, f), false)));
            REQUIRE(generator_matches_oracle(BorderedDescriptor(RingElement::from_bits(m, f), true)));
        }
    }
}

TEST_CASE("is_self_dual examples") {
    CHECK(is_self_dual(BorderedDescriptor(P(3, "x+x^2"), false)));
    CHECK_FALSE(is_self_dual(BorderedDescriptor(P(3, "x+x^2"), true)));
    for (Word f = 0; f < 16; ++f) CHECK_FALSE(is_self_dual(BorderedDescriptor(RingElement::from_bits(4, f), false)));
}

TEST_CASE("bordered self-duality agrees with G G^T = 0 for every f, m <= 10") {
    for (std::size_t m = 1; m <= 10; ++m) {
        for (Word f = 0; f < (Word{1} << m); ++f) {
            for (bool alpha : {false, true}) {
                const BorderedDescriptor b(RingElement::from_bits(m, f), alpha);
                REQUIRE(is_self_dual(b) == oracle::self_dual(oracle::bordered_code(f, m, alpha)));
            }
        }
    }
}

TEST_CASE("circulant block of a self-dual bordered code satisfies A A^T = J - I; reciprocal closure") {
    for (std::size_t m = 1; m <= 11; m += 2) {
        BitMatrix j_minus_i(m, m);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) j_minus_i.set(r, c, r != c);
        }
        for (Word f = 1; f < (Word{1} << m); ++f) {
            const RingElement g = RingElement::from_bits(m, f);
            if (!is_self_dual(BorderedDescriptor(g, false))) continue;
            const BitMatrix a = from_poly(g).dense();
            REQUIRE(multiply(a, a.transposed()) == j_minus_i);
            REQUIRE(is_self_dual(BorderedDescriptor(reciprocal(g), false)));
        }
    }
}

TEST_CASE("complement_lift") {
    const BorderedDescriptor b5 = complement_lift(P(5, "x^2"));
    CHECK(b5.f() == P(5, "1+x+x^3+x^4"));
    CHECK(mul(b5.f(), conjugate(b5.f())) == P(5, "x+x^2+x^3+x^4"));
    CHECK(is_self_dual(build(b5)));
    const BorderedDescriptor b9 = complement_lift(P(9, "x^6+x^4+x^3+x+1"));
    CHECK(build(b9).length() == 20);
    CHECK(is_self_dual(build(b9)));
    CHECK_THROWS_AS(complement_lift(P(4, "1+x+x^2")), std::invalid_argument);
    CHECK_THROWS_AS(complement_lift(P(5, "1+x")), std::invalid_argument);
}

TEST_CASE("extremality_transfer") {
    CHECK(extremality_transfer(P(9, "x^6+x^4+x^3+x+1")));
    CHECK(min_distance(build(complement_lift(P(9, "x^6+x^4+x^3+x+1")))) == 4);
    CHECK_THROWS_AS(extremality_transfer(P(5, "x^2")), std::invalid_argument);
    CHECK_THROWS_AS(extremality_transfer(P(3, "x")), std::invalid_argument);
    CHECK_THROWS_AS(extremality_transfer(P(11, "x^7+x^4+x^2+x+1")), std::invalid_argument);
}

TEST_CASE("all_ones_minus_constant") {
    const BorderedDescriptor b3 = all_ones_minus_constant(3);
    CHECK(b3.f() == P(3, "x+x^2"));
    for (std::size_t m = 3; m <= 9; m += 2) {
        const BinaryCode c = build(all_ones_minus_constant(m));
        CHECK(is_self_dual(c));
        CHECK(is_extremal(c));
    }
    const BinaryCode c11 = build(all_ones_minus_constant(11));
    CHECK(c11.length() == 24);
    CHECK(is_self_dual(c11));
    CHECK(min_distance(c11) < 8);
    CHECK_FALSE(is_extremal(c11));
    // m = 1 gives the [4, 2, 2] code, self-dual but below the bound of 4.
    const BinaryCode c1 = build(all_ones_minus_constant(1));
    CHECK(is_self_dual(c1));
    CHECK_FALSE(is_extremal(c1));
    CHECK_THROWS_AS(all_ones_minus_constant(4), std::invalid_argument);
}

TEST_CASE("dc_is_lcd examples") {
    CHECK(dc_is_lcd(DcDescriptor(P(4, "1+x"))));
    CHECK_FALSE(dc_is_lcd(DcDescriptor(P(3, "1+x"))));
    CHECK_FALSE(dc_is_lcd(DcDescriptor(P(9, "x^6+x^4+x^3+x+1"))));
}

TEST_CASE("bordered LCD parity and constructions") {
    CHECK(bordered_lcd_parity_ok(BorderedDescriptor(P(5, "x^2+x^3+x^4"), false)));
    CHECK(bordered_lcd_parity_ok(BorderedDescriptor(P(4, "x^2+x^3"), false)));
    CHECK_FALSE(bordered_lcd_parity_ok(BorderedDescriptor(P(3, "1+x"), false)));
    CHECK_THROWS_AS(bordered_lcd_parity_ok(BorderedDescriptor(P(3, "1+x"), true)), std::invalid_argument);

    const BorderedDescriptor b4 = bordered_lcd_alpha0(P(4, "1+x"));
    CHECK(b4.f() == P(4, "x^2+x^3"));
    CHECK(build(b4).length() == 10);
    CHECK(hull_dimension(build(b4)) == 0);
    const BorderedDescriptor b5 = bordered_lcd_alpha0(P(5, "1+x"));
    CHECK(b5.f() == P(5, "x^2+x^3+x^4"));
    CHECK(hull_dimension(build(b5)) == 0);
    CHECK_THROWS_AS(bordered_lcd_alpha0(P(3, "1+x")), std::invalid_argument);

    for (Word f = 0; f < 4; ++f) CHECK_FALSE(bordered_lcd_alpha1(BorderedDescriptor(RingElement::from_bits(2, f), true)));
    CHECK(bordered_lcd_alpha1(BorderedDescriptor(P(5, "1+x"), true)));
    CHECK(bordered_lcd_alpha1(BorderedDescriptor(complement(P(5, "1+x")), true)));
    CHECK_FALSE(bordered_lcd_alpha1(BorderedDescriptor(P(4, "1+x"), true)));
    CHECK_THROWS_AS(bordered_lcd_alpha1(BorderedDescriptor(P(4, "1+x"), false)), std::invalid_argument);
}

TEST_CASE("parity is necessary for alpha = 0 LCD; alpha = 1 predicate matches the hull oracle") {
    for (std::size_t m = 1; m <= 9; ++m) {
        for (Word f = 0; f < (Word{1} << m); ++f) {
            const RingElement g = RingElement::from_bits(m, f);
            const std::size_t h0 = oracle::hull_dimension(oracle::bordered_code(f, m, false));
            if (!bordered_lcd_parity_ok(BorderedDescriptor(g, false))) REQUIRE(h0 > 0);
            const std::size_t h1 = oracle::hull_dimension(oracle::bordered_code(f, m, true));
            REQUIRE(bordered_lcd_alpha1(BorderedDescriptor(g, true)) == (h1 == 0));
        }
    }
}
