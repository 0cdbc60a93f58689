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

#ifndef DCCODE_LINEAR_CODE_HPP
#define DCCODE_LINEAR_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dccode/bitmatrix.hpp"

namespace dccode {

/// Raised when exact enumeration would exceed the configured dimension cap.
class EnumerationTooLarge : public std::runtime_error {
   public:
    EnumerationTooLarge(std::size_t k, std::size_t cap);
    std::size_t dimension() const noexcept { return k_; }
    std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t k_;
    std::size_t cap_;
};

struct EnumerationLimits {
    std::size_t max_dimension = 28;
    /// Threads used to split the message space; 0 or 1 runs inline.
    unsigned workers = 1;
};

/**
 * A binary [n, k] linear code given by a k x n generator matrix of full row
 * rank. Construction rejects dependent rows and k outside [1, n].
 */
class BinaryCode {
   public:
    explicit BinaryCode(BitMatrix generator);

    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    const BitMatrix& generator() const noexcept { return generator_; }

   private:
    BitMatrix generator_;
};

struct CodeMetrics {
    std::size_t min_distance = 0;
    std::vector<std::uint64_t> weight_distribution;
    std::size_t hull_dimension = 0;
    bool self_dual = false;
    bool doubly_even = false;
};

/// [A^T | I_{n-k}] for a generator in standard form [I_k | A]; throws otherwise.
BitMatrix parity_check_standard(const BinaryCode& code);

/// Codeword counts per weight (length n + 1) by Gray-code enumeration of all
/// 2^k messages. Never stores codewords.
std::vector<std::uint64_t> weight_distribution(const BinaryCode& code, const EnumerationLimits& limits = {});

/// Exact minimum nonzero weight.
std::size_t min_distance(const BinaryCode& code, const EnumerationLimits& limits = {});

bool is_self_dual(const BinaryCode& code);

/// dim(C ∩ C^⊥) = k - rank(G G^T).
std::size_t hull_dimension(const BinaryCode& code);

/// Upper bound on d for a binary self-dual code of even length n.
std::size_t extremal_bound(std::size_t n);

/// Throws std::invalid_argument when the code is not self-dual.
bool is_extremal(const BinaryCode& code, const EnumerationLimits& limits = {});

bool is_doubly_even(const std::vector<std::uint64_t>& distribution) noexcept;

CodeMetrics compute_metrics(const BinaryCode& code, const EnumerationLimits& limits = {});

}  // namespace dccode

#endif  // DCCODE_LINEAR_CODE_HPP
