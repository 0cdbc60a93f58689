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

#ifndef DCCODE_CIRCULANT_HPP
#define DCCODE_CIRCULANT_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dccode/bitmatrix.hpp"
#include "dccode/gf2ring.hpp"

namespace dccode {

using BigInt = boost::multiprecision::cpp_int;

/// An m x m circulant over F2. Row i is the first row cyclically shifted right
/// by i, i.e. the coefficients of x^i f(x).
class CirculantMatrix {
   public:
    explicit CirculantMatrix(RingElement first_row) : first_row_(std::move(first_row)) {}

    std::size_t size() const noexcept { return first_row_.modulus(); }
    const RingElement& first_row() const noexcept { return first_row_; }
    const RingElement& polynomial() const noexcept { return first_row_; }

    RingElement row(std::size_t i) const { return shift(first_row_, i); }
    /// Entry (i, j) = f_{(j - i) mod m}.
    bool entry(std::size_t i, std::size_t j) const noexcept;
    BitMatrix dense() const;

   private:
    RingElement first_row_;
};

inline CirculantMatrix from_poly(const RingElement& f) { return CirculantMatrix(f); }

/// A A^T = I, decided through f * conj(f) == 1 in R.
bool is_orthogonal(const CirculantMatrix& a);

struct Coset {
    std::vector<std::size_t> residues;  // sorted
    bool self_reciprocal = false;       // C_s == C_{-s}
    std::size_t reciprocal_index = 0;   // index of C_{-s} in the partition
};

/// Orbits of s -> 2s on Z_m for odd m, ordered by smallest residue, so
/// cosets[0] is always {0}.
struct CosetPartition {
    std::size_t m = 0;
    std::vector<Coset> cosets;
};

/// Throws std::invalid_argument for even or zero m.
CosetPartition cyclotomic_cosets(std::size_t m);

/// Number of m x m orthogonal circulants over F2 (|O_m|). Throws for m == 0.
BigInt count_orthogonal(std::size_t m);

/// How count_orthogonal arrived at its value.
struct OrthogonalCountExplanation {
    struct CosetTerm {
        std::vector<std::size_t> residues;
        std::vector<std::size_t> partner;  // reciprocal coset; empty when self-reciprocal
        bool self_reciprocal = false;
        BigInt factor;  // 2^c + 1 or 2^d - 1
    };
    struct DoublingStep {
        std::size_t from = 0;  // s
        std::size_t to = 0;    // 2s
        std::size_t exponent = 0;
    };

    std::size_t m = 0;
    std::size_t odd_core = 0;
    std::vector<CosetTerm> terms;      // for the odd core
    std::vector<DoublingStep> steps;   // innermost first
    BigInt odd_count;
    BigInt total;
};

OrthogonalCountExplanation explain_count_orthogonal(std::size_t m);

}  // namespace dccode

#endif  // DCCODE_CIRCULANT_HPP
