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

#include "dccode/circulant.hpp"

#include <algorithm>
#include <stdexcept>

namespace dccode {

bool CirculantMatrix::entry(std::size_t i, std::size_t j) const noexcept {
    const std::size_t m = size();
    return first_row_.coeff((j + m - i % m) % m);
}

BitMatrix CirculantMatrix::dense() const {
    const std::size_t m = size();
    BitMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (entry(i, j)) out.set(i, j, true);
        }
    }
    return out;
}

bool is_orthogonal(const CirculantMatrix& a) {
    const RingElement& f = a.polynomial();
    return mul(f, conjugate(f)).is_one();
}

CosetPartition cyclotomic_cosets(std::size_t m) {
    if (m == 0 || m % 2 == 0) {
        throw std::invalid_argument("cyclotomic_cosets: m must be odd, got " + std::to_string(m));
    }
    CosetPartition out;
    out.m = m;
    std::vector<std::size_t> owner(m, m);
    for (std::size_t s = 0; s < m; ++s) {
        if (owner[s] != m) continue;
        Coset c;
        std::size_t x = s;
        do {
            owner[x] = out.cosets.size();
            c.residues.push_back(x);
            x = (2 * x) % m;
        } while (x != s);
        std::sort(c.residues.begin(), c.residues.end());
        out.cosets.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < out.cosets.size(); ++i) {
        const std::size_t s = out.cosets[i].residues.front();
        const std::size_t neg = (m - s) % m;
        out.cosets[i].reciprocal_index = owner[neg];
        out.cosets[i].self_reciprocal = owner[neg] == i;
    }
    return out;
}

namespace {

BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

// Exponent of the factor relating |O_2s| to |O_s|.
std::size_t doubling_exponent(std::size_t s) {
    if (s % 2 == 1) return (s + 1) / 2;
    if ((s / 2) % 2 == 1) return s / 2 + 1;
    return s / 2;
}

}  // namespace

OrthogonalCountExplanation explain_count_orthogonal(std::size_t m) {
    if (m == 0) throw std::invalid_argument("count_orthogonal: m must be >= 1");
    OrthogonalCountExplanation ex;
    ex.m = m;

    std::size_t core = m;
    std::vector<std::size_t> halvings;
    while (core % 2 == 0) {
        core /= 2;
        halvings.push_back(core);
    }
    ex.odd_core = core;

    // |O_1| = 1: the only 1x1 orthogonal matrix is (1), and Z_1 has just {0}.
    const CosetPartition part = cyclotomic_cosets(core);
    BigInt count = 1;
    for (std::size_t i = 1; i < part.cosets.size(); ++i) {
        const Coset& c = part.cosets[i];
        if (c.self_reciprocal) {
            OrthogonalCountExplanation::CosetTerm t{c.residues, {}, true, pow2(c.residues.size() / 2) + 1};
            count *= t.factor;
            ex.terms.push_back(std::move(t));
        } else if (c.reciprocal_index > i) {
            const Coset& partner = part.cosets[c.reciprocal_index];
            OrthogonalCountExplanation::CosetTerm t{c.residues, partner.residues, false, pow2(c.residues.size()) - 1};
            count *= t.factor;
            ex.terms.push_back(std::move(t));
        }
    }
    ex.odd_count = count;

    for (auto it = halvings.rbegin(); it != halvings.rend(); ++it) {
        const std::size_t s = *it;
        const std::size_t e = doubling_exponent(s);
        count <<= e;
        ex.steps.push_back({s, 2 * s, e});
    }
    ex.total = count;
    return ex;
}

BigInt count_orthogonal(std::size_t m) { return explain_count_orthogonal(m).total; }

}  // namespace dccode
