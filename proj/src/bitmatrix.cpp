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

#include "dccode/bitmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "bits.hpp"

namespace dccode {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(bits::words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = rows[r][c];
            if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix::from_strings: expected 0 or 1");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const noexcept { return bits::test(row(r), c); }

void BitMatrix::set(std::size_t r, std::size_t c, bool value) noexcept { bits::set(row(r), c, value); }

void BitMatrix::xor_row_into(std::size_t dst, std::size_t src) noexcept {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

std::size_t BitMatrix::row_weight(std::size_t r) const noexcept { return bits::popcount(row(r)); }

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

std::string BitMatrix::to_string() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            auto src = b.row(k);
            for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transpose: column counts differ");
    BitMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ri = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto rj = b.row(j);
            std::uint64_t acc = 0;
            for (std::size_t w = 0; w < ri.size(); ++w) acc ^= ri[w] & rj[w];
            if (std::popcount(acc) & 1) out.set(i, j, true);
        }
    }
    return out;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.get(r, c)) out.set(r, c, true);
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (b.get(r, c)) out.set(r, a.cols() + c, true);
        }
    }
    return out;
}

std::size_t rank(BitMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) m.xor_row_into(i, r);
        }
        ++r;
    }
    return r;
}

}  // namespace dccode
