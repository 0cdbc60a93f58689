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

#include "dccode/gf2ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "bits.hpp"

namespace dccode {

namespace {

void require_same_modulus(const RingElement& a, const RingElement& b, const char* op) {
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument(std::string(op) + ": modulus mismatch (m=" + std::to_string(a.modulus()) +
                                    " vs m=" + std::to_string(b.modulus()) + ")");
    }
}

WordVec zero_words(std::size_t nbits) { return WordVec(bits::words_for(nbits), 0); }

std::span<Word> mut(WordVec& v) { return {v.data(), v.size()}; }
std::span<const Word> view(const WordVec& v) { return {v.data(), v.size()}; }

// Rotation of an m-bit vector upwards by s (0 <= s < m), xored into dst.
void xor_rotated(std::span<Word> dst, std::span<const Word> src, std::size_t s, std::size_t m) {
    if (s == 0) {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
        return;
    }
    // The left shift may spill above bit m; the caller masks afterwards.
    bits::xor_shl(dst, src, s);
    bits::xor_shr(dst, src, m - s);
}

}  // namespace

// --- RingElement ------------------------------------------------------------

RingElement::RingElement(std::size_t m) : m_(m), words_(zero_words(m)) {
    if (m == 0) throw std::invalid_argument("RingElement: modulus degree m must be >= 1");
}

RingElement::RingElement(std::size_t m, WordVec words) : m_(m), words_(std::move(words)) {
    if (m == 0) throw std::invalid_argument("RingElement: modulus degree m must be >= 1");
    if (words_.size() != bits::words_for(m)) throw std::invalid_argument("RingElement: word count does not match m");
    WordVec masked = words_;
    bits::clear_above(mut(masked), m);
    if (masked != words_) throw std::invalid_argument("RingElement: bits set at or above position m");
}

RingElement RingElement::one(std::size_t m) { return monomial(m, 0); }

RingElement RingElement::monomial(std::size_t m, std::size_t e) {
    RingElement r(m);
    bits::flip(mut(r.words_), e % m);
    return r;
}

RingElement RingElement::from_bits(std::size_t m, Word pattern) {
    RingElement r(m);
    if (m < kWordBits && (pattern >> m) != 0) {
        throw std::invalid_argument("RingElement::from_bits: pattern has bits at or above m");
    }
    r.words_[0] = pattern;
    return r;
}

RingElement RingElement::from_exponents(std::size_t m, std::initializer_list<std::size_t> exps) {
    return from_exponents(m, std::span<const std::size_t>(exps.begin(), exps.size()));
}

RingElement RingElement::from_exponents(std::size_t m, std::span<const std::size_t> exps) {
    RingElement r(m);
    for (std::size_t e : exps) bits::flip(mut(r.words_), e % m);
    return r;
}

RingElement RingElement::all_but_constant(std::size_t m) {
    RingElement r = complement(RingElement(m));
    bits::flip(mut(r.words_), 0);
    return r;
}

bool RingElement::coeff(std::size_t i) const noexcept { return i < m_ && bits::test(view(words_), i); }

std::size_t RingElement::weight() const noexcept { return bits::popcount(view(words_)); }

bool RingElement::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool RingElement::is_one() const noexcept {
    if (words_[0] != 1) return false;
    return std::all_of(words_.begin() + 1, words_.end(), [](Word w) { return w == 0; });
}

std::optional<std::size_t> RingElement::degree() const noexcept {
    if (is_zero()) return std::nullopt;
    return bits::highest_bit(view(words_));
}

Word RingElement::to_bits() const {
    if (m_ > kWordBits) throw std::invalid_argument("RingElement::to_bits: m exceeds 64");
    return words_[0];
}

bool operator==(const RingElement& lhs, const RingElement& rhs) noexcept {
    return lhs.m_ == rhs.m_ && lhs.words_ == rhs.words_;
}

std::strong_ordering operator<=>(const RingElement& lhs, const RingElement& rhs) noexcept {
    if (auto c = lhs.m_ <=> rhs.m_; c != 0) return c;
    for (std::size_t w = lhs.words_.size(); w-- > 0;) {
        if (auto c = lhs.words_[w] <=> rhs.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// --- ring operations ----------------------------------------------------------

RingElement add(const RingElement& a, const RingElement& b) {
    require_same_modulus(a, b, "add");
    WordVec out(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= b.words()[i];
    return RingElement(a.modulus(), std::move(out));
}

RingElement mul(const RingElement& a, const RingElement& b) {
    require_same_modulus(a, b, "mul");
    const std::size_t m = a.modulus();
    if (m <= kWordBits) {
        return RingElement(m, WordVec{bits::cyclic_mul_word(a.words()[0], b.words()[0], m)});
    }
    WordVec out = zero_words(m);
    const auto aw = a.words();
    for (std::size_t w = 0; w < aw.size(); ++w) {
        for (Word x = aw[w]; x != 0; x &= x - 1) {
            const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            xor_rotated(mut(out), b.words(), i, m);
        }
    }
    bits::clear_above(mut(out), m);
    return RingElement(m, std::move(out));
}

RingElement conjugate(const RingElement& a) {
    const std::size_t m = a.modulus();
    if (m <= kWordBits) return RingElement(m, WordVec{bits::conjugate_word(a.words()[0], m)});
    WordVec out = zero_words(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeff(i)) bits::flip(mut(out), i == 0 ? 0 : m - i);
    }
    return RingElement(m, std::move(out));
}

RingElement reciprocal(const RingElement& a) {
    const auto deg = a.degree();
    if (!deg) throw std::invalid_argument("reciprocal: zero polynomial has no degree");
    WordVec out = zero_words(a.modulus());
    for (std::size_t j = 0; j <= *deg; ++j) {
        if (a.coeff(*deg - j)) bits::flip(mut(out), j);
    }
    return RingElement(a.modulus(), std::move(out));
}

RingElement shift(const RingElement& a, std::size_t i) {
    const std::size_t m = a.modulus();
    const std::size_t s = i % m;
    if (m <= kWordBits) return RingElement(m, WordVec{bits::rotl_m(a.words()[0], s, m)});
    WordVec out = zero_words(m);
    xor_rotated(mut(out), a.words(), s, m);
    bits::clear_above(mut(out), m);
    return RingElement(m, std::move(out));
}

RingElement complement(const RingElement& a) {
    WordVec out(a.words().begin(), a.words().end());
    for (Word& w : out) w = ~w;
    bits::clear_above(mut(out), a.modulus());
    return RingElement(a.modulus(), std::move(out));
}

// --- FreePoly -------------------------------------------------------------------

FreePoly::FreePoly(WordVec words) : words_(std::move(words)) { normalize(); }

void FreePoly::normalize() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

FreePoly FreePoly::monomial(std::size_t e) {
    WordVec w = zero_words(e + 1);
    bits::flip(mut(w), e);
    return FreePoly(std::move(w));
}

FreePoly FreePoly::from_exponents(std::initializer_list<std::size_t> exps) {
    std::size_t top = 0;
    for (std::size_t e : exps) top = std::max(top, e);
    WordVec w = zero_words(top + 1);
    for (std::size_t e : exps) bits::flip(mut(w), e);
    return FreePoly(std::move(w));
}

FreePoly FreePoly::x_pow_minus_one(std::size_t m) {
    if (m == 0) throw std::invalid_argument("x_pow_minus_one: m must be >= 1");
    return FreePoly::from_exponents({m, 0});
}

long FreePoly::degree() const noexcept {
    if (words_.empty()) return kZeroDegree;
    return static_cast<long>(bits::highest_bit(view(words_)));
}

bool FreePoly::coeff(std::size_t i) const noexcept {
    return i / kWordBits < words_.size() && bits::test(view(words_), i);
}

std::size_t FreePoly::weight() const noexcept { return bits::popcount(view(words_)); }

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
    const auto& big = a.words().size() >= b.words().size() ? a : b;
    const auto& small = a.words().size() >= b.words().size() ? b : a;
    WordVec out(big.words().begin(), big.words().end());
    for (std::size_t i = 0; i < small.words().size(); ++i) out[i] ^= small.words()[i];
    return FreePoly(std::move(out));
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    if (a.is_zero() || b.is_zero()) return FreePoly();
    WordVec out(a.words().size() + b.words().size(), 0);
    const auto aw = a.words();
    for (std::size_t w = 0; w < aw.size(); ++w) {
        for (Word x = aw[w]; x != 0; x &= x - 1) {
            const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            bits::xor_shl(mut(out), b.words(), i);
        }
    }
    return FreePoly(std::move(out));
}

FreeDivision divmod(const FreePoly& a, const FreePoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    const long db = b.degree();
    WordVec rem(a.words().begin(), a.words().end());
    WordVec quo(rem.size(), 0);
    for (;;) {
        FreePoly r(rem);
        const long dr = r.degree();
        if (dr < db) break;
        const auto s = static_cast<std::size_t>(dr - db);
        bits::xor_shl(mut(rem), b.words(), s);
        bits::flip(mut(quo), s);
    }
    return {FreePoly(std::move(quo)), FreePoly(std::move(rem))};
}

FreePoly free_gcd(const FreePoly& a, const FreePoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("free_gcd: both arguments are zero");
    FreePoly x = a;
    FreePoly y = b;
    while (!y.is_zero()) {
        FreePoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

FreePoly lift(const RingElement& a) { return FreePoly(WordVec(a.words().begin(), a.words().end())); }

RingElement reduce(const FreePoly& p, std::size_t m) {
    if (m == 0) throw std::invalid_argument("reduce: modulus degree m must be >= 1");
    WordVec out = zero_words(m);
    for (std::size_t w = 0; w < p.words().size(); ++w) {
        for (Word x = p.words()[w]; x != 0; x &= x - 1) {
            const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            bits::flip(mut(out), i % m);
        }
    }
    return RingElement(m, std::move(out));
}

// --- text ---------------------------------------------------------------------------

namespace {

std::string sparse_text(std::span<const Word> words, long top) {
    if (top < 0) return "0";
    std::string out;
    for (long i = top; i >= 0; --i) {
        if (!bits::test(words, static_cast<std::size_t>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += '1';
        } else if (i == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
    s = trim(s);
    std::size_t v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || p != end) {
        throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

RingElement parse_hex(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("hex polynomial needs the form m=<m>:0x<hex>");
    const std::size_t m = parse_size(text.substr(2, colon - 2), "modulus");
    if (m == 0) throw std::invalid_argument("modulus m must be >= 1");
    std::string_view hex = trim(text.substr(colon + 1));
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("empty hex coefficient string");
    WordVec words = zero_words(std::max<std::size_t>(m, 4 * hex.size()));
    std::size_t pos = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        int v = 0;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else {
            throw std::invalid_argument(std::string("bad hex digit '") + *it + "'");
        }
        for (int b = 0; b < 4; ++b) {
            if ((v >> b) & 1) bits::flip(mut(words), pos + static_cast<std::size_t>(b));
        }
    }
    for (std::size_t i = m; i < words.size() * kWordBits; ++i) {
        if (bits::test(view(words), i)) throw std::invalid_argument("hex pattern has a coefficient at or above x^m");
    }
    words.resize(bits::words_for(m));
    return RingElement(m, std::move(words));
}

std::vector<std::size_t> parse_sparse_terms(std::string_view text) {
    std::vector<std::size_t> exps;
    text = trim(text);
    if (text == "0") return exps;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto plus = text.find('+', start);
        std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
        if (term.empty()) throw std::invalid_argument("empty term in polynomial '" + std::string(text) + "'");
        if (term == "1") {
            exps.push_back(0);
        } else if (term == "x" || term == "X") {
            exps.push_back(1);
        } else if ((term[0] == 'x' || term[0] == 'X') && term.size() > 2 && term[1] == '^') {
            std::string_view e = term.substr(2);
            if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
            exps.push_back(parse_size(e, "exponent"));
        } else {
            throw std::invalid_argument("bad term '" + std::string(term) + "'");
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return exps;
}

}  // namespace

std::string to_string(const RingElement& a) {
    const auto d = a.degree();
    return sparse_text(a.words(), d ? static_cast<long>(*d) : -1);
}

std::string to_string(const FreePoly& p) { return sparse_text(p.words(), p.is_zero() ? -1 : p.degree()); }

std::string to_hex(const RingElement& a) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const std::size_t ndigits = (a.modulus() + 3) / 4;
    std::string hex(ndigits, '0');
    for (std::size_t d = 0; d < ndigits; ++d) {
        int v = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (a.coeff(4 * d + b)) v |= 1 << b;
        }
        hex[ndigits - 1 - d] = kDigits[v];
    }
    return "m=" + std::to_string(a.modulus()) + ":0x" + hex;
}

RingElement parse_ring_element(std::string_view text, std::optional<std::size_t> m) {
    text = trim(text);
    if (text.starts_with("m=")) {
        RingElement r = parse_hex(text);
        if (m && *m != r.modulus()) {
            throw std::invalid_argument("polynomial text names m=" + std::to_string(r.modulus()) +
                                        " but m=" + std::to_string(*m) + " was requested");
        }
        return r;
    }
    if (!m) throw std::invalid_argument("sparse polynomial text needs an explicit m");
    if (*m == 0) throw std::invalid_argument("modulus m must be >= 1");
    const auto exps = parse_sparse_terms(text);
    return RingElement::from_exponents(*m, exps);
}

}  // namespace dccode
