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

#include "dccode/dc_codes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dccode/circulant.hpp"

namespace dccode {

DcDescriptor::DcDescriptor(std::size_t m, RingElement f) : f_(std::move(f)) {
    if (f_.modulus() != m) {
        throw std::invalid_argument("DcDescriptor: f has modulus " + std::to_string(f_.modulus()) + ", expected " +
                                    std::to_string(m));
    }
}

BinaryCode build(const DcDescriptor& d) {
    const std::size_t m = d.m();
    BitMatrix g(m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        g.set(i, i, true);
        const RingElement row = shift(d.f(), i);
        for (std::size_t j = 0; j < m; ++j) {
            if (row.coeff(j)) g.set(i, m + j, true);
        }
    }
    return BinaryCode(std::move(g));
}

bool is_self_dual(const DcDescriptor& d) { return is_orthogonal(from_poly(d.f())); }

std::vector<RingElement> equivalence_class(const DcDescriptor& d) {
    if (d.f().is_zero()) throw std::invalid_argument("equivalence_class: f must be nonzero");
    const RingElement rec = reciprocal(d.f());
    std::vector<RingElement> orbit;
    orbit.reserve(2 * d.m());
    for (std::size_t i = 0; i < d.m(); ++i) {
        orbit.push_back(shift(d.f(), i));
        orbit.push_back(shift(rec, i));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

RingElement canonical_form(const DcDescriptor& d) {
    if (d.f().is_zero()) throw std::invalid_argument("canonical_form: f must be nonzero");
    const RingElement rec = reciprocal(d.f());
    RingElement best = d.f();
    for (std::size_t i = 0; i < d.m(); ++i) {
        best = std::min({best, shift(d.f(), i), shift(rec, i)});
    }
    return best;
}

namespace {

void require_self_dual(const DcDescriptor& d, const char* who) {
    if (!is_self_dual(d)) throw std::invalid_argument(std::string(who) + ": f * conj(f) != 1, code is not self-dual");
}

bool some_shift_sum_has_weight_two(const RingElement& f) {
    for (std::size_t i = 1; i < f.modulus(); ++i) {
        if (weight(f + shift(f, i)) == 2) return true;
    }
    return false;
}

}  // namespace

bool extremal_upto20(const DcDescriptor& d) {
    require_self_dual(d, "extremal_upto20");
    if (2 * d.m() > 20) throw std::invalid_argument("extremal_upto20: length 2m exceeds 20");
    const std::size_t w = weight(d.f());
    if (w == 3) return true;
    if (w < 3) return false;
    return some_shift_sum_has_weight_two(d.f());
}

bool extremal_22(const DcDescriptor& d) {
    if (d.m() != 11) throw std::invalid_argument("extremal_22: requires m == 11");
    require_self_dual(d, "extremal_22");
    if (weight(d.f()) != 5) throw std::invalid_argument("extremal_22: requires wt(f) == 5");
    return !some_shift_sum_has_weight_two(d.f());
}

bool extremal_24_44(const DcDescriptor& d) {
    if (d.m() < 12 || d.m() > 22) throw std::invalid_argument("extremal_24_44: requires 12 <= m <= 22");
    require_self_dual(d, "extremal_24_44");
    if (weight(d.f()) != 7) throw std::invalid_argument("extremal_24_44: requires wt(f) == 7");
    const RingElement& f = d.f();
    const std::size_t m = d.m();
    if (some_shift_sum_has_weight_two(f)) return false;
    for (std::size_t i = 1; i < m; ++i) {
        const RingElement fi = f + shift(f, i);
        for (std::size_t j = 1; j < m; ++j) {
            if (j != i && weight(fi + shift(f, j)) == 1) return false;
        }
    }
    return true;
}

DcDescriptor trisection(std::size_t m) {
    if (m == 0 || m % 4 != 0) throw std::invalid_argument("trisection: m must be a positive multiple of 4");
    if (2 * m > 20) throw std::invalid_argument("trisection: only stated for length 2m <= 20");
    return DcDescriptor(RingElement::from_exponents(m, {0, m / 4, m / 2}));
}

bool no_extremal_by_count(std::size_t m) {
    if (m < 2) throw std::invalid_argument("no_extremal_by_count: requires m >= 2");
    return count_orthogonal(m) == m;
}

}  // namespace dccode
