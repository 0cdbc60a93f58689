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

#ifndef DCCODE_BORDERED_HPP
#define DCCODE_BORDERED_HPP

#include <cstddef>

#include "dccode/dc_codes.hpp"
#include "dccode/gf2ring.hpp"
#include "dccode/linear_code.hpp"

namespace dccode {

/**
 * A bordered double circulant code: generator [I_{m+1} | A'] where
 *
 *        | alpha 1 ... 1 |
 *   A' = |   1           |
 *        |   :     A     |
 *        |   1           |
 *
 * and A is the circulant of f. Border entries are 1 (over F2, -1 = 1).
 */
class BorderedDescriptor {
   public:
    BorderedDescriptor(RingElement f, bool alpha) : f_(std::move(f)), alpha_(alpha) {}
    /// Throws std::invalid_argument unless f.modulus() == m.
    BorderedDescriptor(std::size_t m, RingElement f, bool alpha);

    std::size_t m() const noexcept { return f_.modulus(); }
    const RingElement& f() const noexcept { return f_; }
    bool alpha() const noexcept { return alpha_; }

    friend bool operator==(const BorderedDescriptor&, const BorderedDescriptor&) = default;

   private:
    RingElement f_;
    bool alpha_;
};

/// The [2m + 2, m + 1] code.
BinaryCode build(const BorderedDescriptor& b);

/// alpha == 0, m odd, wt(f) even and f * conj(f) == x + x^2 + ... + x^(m-1).
bool is_self_dual(const BorderedDescriptor& b);

/// (m, complement(f), 0) for odd m and self-dual f; its code is self-dual.
BorderedDescriptor complement_lift(const RingElement& f);

/// Whether the bordered code on complement(f) is extremal, computed by the
/// minimum-distance oracle. Requires odd m, 2m <= 18, f self-dual and the DC
/// code of f extremal.
bool extremality_transfer(const RingElement& f, const EnumerationLimits& limits = {});

/// (m, x + x^2 + ... + x^(m-1), 0) for odd m.
BorderedDescriptor all_ones_minus_constant(std::size_t m);

/// gcd(1 + f * conj(f), x^m - 1) == 1, i.e. the DC code is LCD.
bool dc_is_lcd(const DcDescriptor& d);

/// parity(m) == parity(wt(f)); necessary for an alpha = 0 bordered code to be
/// LCD. Throws for alpha == 1.
bool bordered_lcd_parity_ok(const BorderedDescriptor& b);

/// (m, complement(f), 0) when f passes the gcd criterion; that code is LCD.
BorderedDescriptor bordered_lcd_alpha0(const RingElement& f);

/// Whether an alpha = 1 bordered code is LCD. Even m is never LCD. For odd m
/// the gcd criterion on f or on complement(f) is sufficient; anything else is
/// settled by the hull oracle. Throws for alpha == 0.
bool bordered_lcd_alpha1(const BorderedDescriptor& b);

}  // namespace dccode

#endif  // DCCODE_BORDERED_HPP
