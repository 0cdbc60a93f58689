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

#include "dccode/bordered.hpp"

#include <stdexcept>
#include <string>

namespace dccode {

BorderedDescriptor::BorderedDescriptor(std::size_t m, RingElement f, bool alpha) : f_(std::move(f)), alpha_(alpha) {
    if (f_.modulus() != m) {
        throw std::invalid_argument("BorderedDescriptor: f has modulus " + std::to_string(f_.modulus()) +
                                    ", expected " + std::to_string(m));
    }
}

BinaryCode build(const BorderedDescriptor& b) {
    const std::size_t m = b.m();
    const std::size_t k = m + 1;
    BitMatrix g(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) g.set(i, i, true);
    // Border row.
    g.set(0, k, b.alpha());
    for (std::size_t j = 1; j <= m; ++j) g.set(0, k + j, true);
    for (std::size_t i = 0; i < m; ++i) {
        g.set(i + 1, k, true);
        const RingElement row = shift(b.f(), i);
        for (std::size_t j = 0; j < m; ++j) {
            if (row.coeff(j)) g.set(i + 1, k + 1 + j, true);
        }
    }
    return BinaryCode(std::move(g));
}

bool is_self_dual(const BorderedDescriptor& b) {
    if (b.alpha() || b.m() % 2 == 0 || weight(b.f()) % 2 != 0) return false;
    return mul(b.f(), conjugate(b.f())) == RingElement::all_but_constant(b.m());
}

BorderedDescriptor complement_lift(const RingElement& f) {
    if (f.modulus() % 2 == 0) throw std::invalid_argument("complement_lift: m must be odd");
    if (!is_self_dual(DcDescriptor(f))) throw std::invalid_argument("complement_lift: f * conj(f) != 1");
    return BorderedDescriptor(complement(f), false);
}

bool extremality_transfer(const RingElement& f, const EnumerationLimits& limits) {
    const DcDescriptor d(f);
    if (d.m() % 2 == 0) throw std::invalid_argument("extremality_transfer: m must be odd");
    if (2 * d.m() > 18) throw std::invalid_argument("extremality_transfer: only stated for length 2m <= 18");
    if (!is_self_dual(d)) throw std::invalid_argument("extremality_transfer: f * conj(f) != 1");
    if (!extremal_upto20(d)) throw std::invalid_argument("extremality_transfer: the DC code of f is not extremal");
    return is_extremal(build(complement_lift(f)), limits);
}

BorderedDescriptor all_ones_minus_constant(std::size_t m) {
    if (m % 2 == 0) throw std::invalid_argument("all_ones_minus_constant: m must be odd");
    return BorderedDescriptor(RingElement::all_but_constant(m), false);
}

bool dc_is_lcd(const DcDescriptor& d) {
    const RingElement& f = d.f();
    const RingElement t = RingElement::one(d.m()) + mul(f, conjugate(f));
    return free_gcd(lift(t), FreePoly::x_pow_minus_one(d.m())).is_one();
}

bool bordered_lcd_parity_ok(const BorderedDescriptor& b) {
    if (b.alpha()) throw std::invalid_argument("bordered_lcd_parity_ok: requires alpha == 0");
    return b.m() % 2 == weight(b.f()) % 2;
}

BorderedDescriptor bordered_lcd_alpha0(const RingElement& f) {
    if (!dc_is_lcd(DcDescriptor(f))) {
        throw std::invalid_argument("bordered_lcd_alpha0: gcd(1 + f conj(f), x^m - 1) != 1");
    }
    return BorderedDescriptor(complement(f), false);
}

bool bordered_lcd_alpha1(const BorderedDescriptor& b) {
    if (!b.alpha()) throw std::invalid_argument("bordered_lcd_alpha1: requires alpha == 1");
    if (b.m() % 2 == 0) return false;
    if (dc_is_lcd(DcDescriptor(b.f())) || dc_is_lcd(DcDescriptor(complement(b.f())))) return true;
    // Only a sufficient condition is known; ask the oracle.
    return hull_dimension(build(b)) == 0;
}

}  // namespace dccode
