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

#ifndef DCCODE_BITMATRIX_HPP
#define DCCODE_BITMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dccode {

/// Dense matrix over F2, rows packed into 64-bit words (column j of a row is
/// bit j % 64 of word j / 64).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    /// Builds from rows of '0'/'1' characters; all rows must have equal length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t row_words() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const noexcept;
    void set(std::size_t r, std::size_t c, bool value) noexcept;

    std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<std::uint64_t> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

    void xor_row_into(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    std::size_t row_weight(std::size_t r) const noexcept;

    bool is_zero() const noexcept;
    BitMatrix transposed() const;

    std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// a * b^T; entry (i, j) is the parity of row_i(a) & row_j(b).
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

/// [a | b].
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);

/// Rank over F2 by Gaussian elimination on packed rows.
std::size_t rank(BitMatrix m);

}  // namespace dccode

#endif  // DCCODE_BITMATRIX_HPP
