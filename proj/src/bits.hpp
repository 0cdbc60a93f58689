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

// Word-level helpers shared by the polynomial and matrix code. Not installed.

#ifndef DCCODE_SRC_BITS_HPP
#define DCCODE_SRC_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace dccode::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kBits = 64;

constexpr std::size_t words_for(std::size_t nbits) noexcept { return (nbits + kBits - 1) / kBits; }

constexpr Word low_mask(std::size_t nbits) noexcept {
    return nbits >= kBits ? ~Word{0} : ((Word{1} << nbits) - 1);
}

inline bool test(std::span<const Word> v, std::size_t i) noexcept {
    return (v[i / kBits] >> (i % kBits)) & 1U;
}

inline void flip(std::span<Word> v, std::size_t i) noexcept { v[i / kBits] ^= Word{1} << (i % kBits); }

inline void set(std::span<Word> v, std::size_t i, bool value) noexcept {
    const Word bit = Word{1} << (i % kBits);
    if (value) {
        v[i / kBits] |= bit;
    } else {
        v[i / kBits] &= ~bit;
    }
}

inline std::size_t popcount(std::span<const Word> v) noexcept {
    std::size_t n = 0;
    for (Word w : v) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

/// Clears every bit at position >= nbits.
inline void clear_above(std::span<Word> v, std::size_t nbits) noexcept {
    for (std::size_t w = 0; w < v.size(); ++w) {
        const std::size_t lo = w * kBits;
        if (lo >= nbits) {
            v[w] = 0;
        } else if (nbits - lo < kBits) {
            v[w] &= low_mask(nbits - lo);
        }
    }
}

/// dst ^= src << s, truncated to dst's width.
inline void xor_shl(std::span<Word> dst, std::span<const Word> src, std::size_t s) noexcept {
    const std::size_t ws = s / kBits;
    const std::size_t bs = s % kBits;
    for (std::size_t i = 0; i < src.size() && i + ws < dst.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (bs != 0 && i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (kBits - bs);
    }
}

/// dst ^= src >> s, truncated to dst's width.
inline void xor_shr(std::span<Word> dst, std::span<const Word> src, std::size_t s) noexcept {
    const std::size_t ws = s / kBits;
    const std::size_t bs = s % kBits;
    for (std::size_t i = ws; i < src.size(); ++i) {
        const std::size_t d = i - ws;
        if (d >= dst.size()) break;
        dst[d] ^= src[i] >> bs;
        if (bs != 0 && d >= 1) dst[d - 1] ^= src[i] << (kBits - bs);
    }
}

/// Index of the highest set bit; v must be nonzero.
inline std::size_t highest_bit(std::span<const Word> v) noexcept {
    for (std::size_t w = v.size(); w-- > 0;) {
        if (v[w] != 0) return w * kBits + (kBits - 1 - static_cast<std::size_t>(std::countl_zero(v[w])));
    }
    return 0;
}

/// Rotation of an m-bit pattern (m <= 64) upwards by s < m.
constexpr Word rotl_m(Word x, std::size_t s, std::size_t m) noexcept {
    if (s == 0) return x;
    return ((x << s) | (x >> (m - s))) & low_mask(m);
}

/// Multiplication in F2[x]/(x^m - 1) for m <= 64.
constexpr Word cyclic_mul_word(Word a, Word b, std::size_t m) noexcept {
    Word r = 0;
    while (a != 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(a));
        r ^= rotl_m(b, i, m);
        a &= a - 1;
    }
    return r;
}

/// Conjugate in F2[x]/(x^m - 1) for m <= 64: bit i moves to (m - i) mod m.
constexpr Word conjugate_word(Word a, std::size_t m) noexcept {
    Word r = a & 1U;
    a &= ~Word{1};
    while (a != 0) {
        const auto i = static_cast<std::size_t>(std::countr_zero(a));
        r |= Word{1} << (m - i);
        a &= a - 1;
    }
    return r;
}

}  // namespace dccode::bits

#endif  // DCCODE_SRC_BITS_HPP
