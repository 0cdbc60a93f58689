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

#ifndef DCCODE_GF2RING_HPP
#define DCCODE_GF2RING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace dccode {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Word storage for coefficient vectors. Bit i of the vector lives in word
/// i / 64 at position i % 64 (little-endian within and across words).
using WordVec = boost::container::small_vector<Word, 2>;

/**
 * An element of R = F2[x]/(x^m - 1).
 *
 * Exactly m coefficient bits are stored; bits at positions >= m are always
 * clear. Values are immutable once constructed.
 */
class RingElement {
   public:
    /// The zero element of R for the given modulus degree. Throws if m == 0.
    explicit RingElement(std::size_t m);

    /// Takes ownership of raw words. Bits at positions >= m must be clear.
    RingElement(std::size_t m, WordVec words);

    static RingElement zero(std::size_t m) { return RingElement(m); }
    static RingElement one(std::size_t m);
    /// x^(e mod m).
    static RingElement monomial(std::size_t m, std::size_t e);
    /// Coefficient pattern given as an unsigned integer (bit i = coeff of x^i).
    static RingElement from_bits(std::size_t m, Word bits);
    /// Sum of x^(e mod m) over the given exponents; repeated terms cancel.
    static RingElement from_exponents(std::size_t m, std::initializer_list<std::size_t> exps);
    static RingElement from_exponents(std::size_t m, std::span<const std::size_t> exps);
    /// x + x^2 + ... + x^(m-1).
    static RingElement all_but_constant(std::size_t m);

    std::size_t modulus() const noexcept { return m_; }
    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
    bool coeff(std::size_t i) const noexcept;

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Degree of the canonical representative; nullopt for zero.
    std::optional<std::size_t> degree() const noexcept;

    /// The coefficient pattern as an integer; requires m <= 64.
    Word to_bits() const;

    friend bool operator==(const RingElement& lhs, const RingElement& rhs) noexcept;
    /// Orders by modulus, then by coefficient vector read as an unsigned
    /// integer with bit 0 least significant.
    friend std::strong_ordering operator<=>(const RingElement& lhs, const RingElement& rhs) noexcept;

   private:
    std::size_t m_;
    WordVec words_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }

/// x^m a(1/x) mod x^m - 1: coefficient i moves to m - i, the constant stays.
RingElement conjugate(const RingElement& a);

/// x^deg(a) a(1/x), the coefficient list up to deg(a) reversed. Throws on zero.
RingElement reciprocal(const RingElement& a);

/// x^i a.
RingElement shift(const RingElement& a, std::size_t i);

/// Flips all m coefficient bits.
RingElement complement(const RingElement& a);

inline std::size_t weight(const RingElement& a) noexcept { return a.weight(); }

/**
 * A polynomial over F2 of unbounded degree.
 *
 * The word vector never carries trailing zero words, so the zero
 * polynomial has no words at all.
 */
class FreePoly {
   public:
    /// Degree reported for the zero polynomial.
    static constexpr long kZeroDegree = std::numeric_limits<long>::min();

    FreePoly() = default;
    explicit FreePoly(WordVec words);

    static FreePoly monomial(std::size_t e);
    static FreePoly from_exponents(std::initializer_list<std::size_t> exps);
    /// x^m + 1, which is x^m - 1 over F2.
    static FreePoly x_pow_minus_one(std::size_t m);

    long degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(std::size_t i) const noexcept;
    std::size_t weight() const noexcept;
    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

    friend bool operator==(const FreePoly& lhs, const FreePoly& rhs) noexcept = default;

   private:
    WordVec words_;

    void normalize() noexcept;
};

FreePoly operator+(const FreePoly& a, const FreePoly& b);
FreePoly operator*(const FreePoly& a, const FreePoly& b);

struct FreeDivision {
    FreePoly quotient;
    FreePoly remainder;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
FreeDivision divmod(const FreePoly& a, const FreePoly& b);
inline FreePoly operator%(const FreePoly& a, const FreePoly& b) { return divmod(a, b).remainder; }

/// Monic gcd over F2 (every nonzero polynomial is monic). Throws when both are zero.
FreePoly free_gcd(const FreePoly& a, const FreePoly& b);

/// The representative of degree < m.
FreePoly lift(const RingElement& a);

/// Reduction mod x^m - 1.
RingElement reduce(const FreePoly& p, std::size_t m);

/// Sparse text, descending exponents: "x^6+x^4+x^3+x+1"; zero prints "0".
std::string to_string(const RingElement& a);
std::string to_string(const FreePoly& p);

/// Hex text with explicit modulus: "m=9:0x05B".
std::string to_hex(const RingElement& a);

/**
 * Parses either the hex form "m=<m>:0x<hex>" or a sparse monomial sum such as
 * "x^6+x^4+x^3+x+1" (braces as in "x^{10}" are accepted). Sparse input needs
 * `m`; exponents are reduced mod m and repeated terms cancel. When both the
 * text and `m` name a modulus they must agree. Throws std::invalid_argument.
 */
RingElement parse_ring_element(std::string_view text, std::optional<std::size_t> m = std::nullopt);

}  // namespace dccode

#endif  // DCCODE_GF2RING_HPP
