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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dccode/circulant.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dccode;

namespace {

RingElement P(std::size_t m, const char* text) { return parse_ring_element(text, m); }

std::vector<std::vector<std::size_t>> residue_sets(const CosetPartition& p) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : p.cosets) out.push_back(c.residues);
    return out;
}

}  // namespace

TEST_CASE("from_poly rows") {
    CHECK(from_poly(P(2, "1")).dense() == BitMatrix::from_strings({"10", "01"}));
    CHECK(from_poly(P(3, "x")).dense() == BitMatrix::from_strings({"010", "001", "100"}));
    const CirculantMatrix a = from_poly(P(4, "1+x+x^2"));
    CHECK(a.dense() == BitMatrix::from_strings({"1110", "0111", "1011", "1101"}));
    for (std::size_t i = 0; i < 4; ++i) CHECK(a.row(i) == shift(a.first_row(), i));
}

TEST_CASE("is_orthogonal") {
    CHECK(is_orthogonal(from_poly(P(4, "1+x+x^2"))));
    CHECK(is_orthogonal(from_poly(P(5, "x^3"))));
    CHECK_FALSE(is_orthogonal(from_poly(P(3, "1+x"))));
}

TEST_CASE("is_orthogonal matches the dense product A A^T == I for m <= 12") {
    for (std::size_t m = 1; m <= 12; ++m) {
        const BitMatrix id = BitMatrix::identity(m);
        for (Word f = 0; f < (Word{1} << m); ++f) {
            const CirculantMatrix a = from_poly(RingElement::from_bits(m, f));
            const BitMatrix d = a.dense();
            REQUIRE(is_orthogonal(a) == (multiply(d, d.transposed()) == id));
        }
    }
}

TEST_CASE("cyclotomic cosets") {
    using V = std::vector<std::vector<std::size_t>>;
    const CosetPartition p5 = cyclotomic_cosets(5);
    CHECK(residue_sets(p5) == V{{0}, {1, 2, 3, 4}});
    CHECK(p5.cosets[1].self_reciprocal);

    const CosetPartition p7 = cyclotomic_cosets(7);
    CHECK(residue_sets(p7) == V{{0}, {1, 2, 4}, {3, 5, 6}});
    CHECK_FALSE(p7.cosets[1].self_reciprocal);
    CHECK(p7.cosets[1].reciprocal_index == 2);
    CHECK(p7.cosets[2].reciprocal_index == 1);

    const CosetPartition p9 = cyclotomic_cosets(9);
    CHECK(residue_sets(p9) == V{{0}, {1, 2, 4, 5, 7, 8}, {3, 6}});
    CHECK(p9.cosets[1].self_reciprocal);
    CHECK(p9.cosets[2].self_reciprocal);

    CHECK_THROWS_AS(cyclotomic_cosets(6), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_cosets(0), std::invalid_argument);
}

TEST_CASE("coset partition structure for odd m <= 63") {
    for (std::size_t m = 1; m <= 63; m += 2) {
        const CosetPartition p = cyclotomic_cosets(m);
        std::size_t order = 1;  // multiplicative order of 2 mod m
        if (m > 1) {
            std::size_t x = 2 % m;
            while (x != 1) x = (x * 2) % m, ++order;
        }
        std::vector<int> hit(m, 0);
        std::size_t total = 0;
        CHECK(p.cosets.front().residues == std::vector<std::size_t>{0});
        CHECK(p.cosets.front().self_reciprocal);
        for (const auto& c : p.cosets) {
            total += c.residues.size();
            CHECK(order % c.residues.size() == 0);
            for (auto r : c.residues) {
                ++hit[r];
                CHECK(std::binary_search(c.residues.begin(), c.residues.end(), (2 * r) % m));
            }
        }
        CHECK(total == m);
        CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    }
}

TEST_CASE("count_orthogonal values") {
    CHECK(count_orthogonal(5) == 5);
    CHECK(count_orthogonal(7) == 7);
    CHECK(count_orthogonal(9) == 27);
    CHECK(count_orthogonal(2) == 2);
    CHECK(count_orthogonal(1) == 1);
    CHECK_THROWS_AS(count_orthogonal(0), std::invalid_argument);
    for (std::size_t m = 1; m <= 200; ++m) CHECK(count_orthogonal(m) >= m);
    // Large m stays exact.
    CHECK(count_orthogonal(1024) == BigInt(1) << 513);
}

TEST_CASE("count_orthogonal matches brute force for m <= 16") {
    for (std::size_t m = 1; m <= 16; ++m) {
        CAPTURE(m);
        CHECK(count_orthogonal(m) == oracle::count_orthogonal(m));
    }
}

TEST_CASE("explanation is consistent with the count") {
    for (std::size_t m = 1; m <= 48; ++m) {
        const auto ex = explain_count_orthogonal(m);
        CHECK(ex.total == count_orthogonal(m));
        CHECK(ex.odd_core % 2 == 1);
        BigInt prod = 1;
        for (const auto& t : ex.terms) prod *= t.factor;
        CHECK(prod == ex.odd_count);
        BigInt total = ex.odd_count;
        std::size_t s = ex.odd_core;
        for (const auto& step : ex.steps) {
            CHECK(step.from == s);
            CHECK(step.to == 2 * s);
            total <<= step.exponent;
            s = step.to;
        }
        CHECK(s == m);
        CHECK(total == ex.total);
    }
}
