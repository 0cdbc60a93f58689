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

#ifndef DCCODE_DC_CODES_HPP
#define DCCODE_DC_CODES_HPP

#include <cstddef>
#include <vector>

#include "dccode/gf2ring.hpp"
#include "dccode/linear_code.hpp"

namespace dccode {

/// The pure double circulant code generated by (1, f(x)) in R^2.
class DcDescriptor {
   public:
    explicit DcDescriptor(RingElement f) : f_(std::move(f)) {}
    /// Throws std::invalid_argument unless f.modulus() == m.
    DcDescriptor(std::size_t m, RingElement f);

    std::size_t m() const noexcept { return f_.modulus(); }
    const RingElement& f() const noexcept { return f_; }

    friend bool operator==(const DcDescriptor&, const DcDescriptor&) = default;

   private:
    RingElement f_;
};

/// The [2m, m] code with generator [I_m | A], A the circulant of f.
BinaryCode build(const DcDescriptor& d);

/// f * conj(f) == 1 in R.
bool is_self_dual(const DcDescriptor& d);

/// {x^i f, x^i f*} for 0 <= i < m, sorted and without repeats. This is also
/// the closure of {f} under shift and reciprocal. Throws for f == 0.
std::vector<RingElement> equivalence_class(const DcDescriptor& d);

/// Smallest member of equivalence_class as an unsigned integer. Throws for f == 0.
RingElement canonical_form(const DcDescriptor& d);

// Extremality predicates. Each one checks its own scope (self-duality, length
// and generator weight) and throws std::invalid_argument outside of it.

/// Length 2m <= 20: wt(f) == 3, or wt(f) > 3 and wt(f + x^i f) == 2 for some i.
bool extremal_upto20(const DcDescriptor& d);

/// Length 22 (m == 11), wt(f) == 5: wt(f + x^i f) != 2 for every i.
bool extremal_22(const DcDescriptor& d);

/// 12 <= m <= 22, wt(f) == 7: no i with wt(f + x^i f) == 2 and no i != j with
/// wt(f + x^i f + x^j f) == 1.
bool extremal_24_44(const DcDescriptor& d);

/// f = 1 + x^(m/4) + x^(m/2) for m divisible by 4 with 2m <= 20.
DcDescriptor trisection(std::size_t m);

/// True when |O_m| == m, i.e. the only self-dual DC codes of length 2m come
/// from monomials and have d = 2. Requires m >= 2.
bool no_extremal_by_count(std::size_t m);

}  // namespace dccode

#endif  // DCCODE_DC_CODES_HPP
