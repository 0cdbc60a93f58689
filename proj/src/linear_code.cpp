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

#include "dccode/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "bits.hpp"

namespace dccode {

EnumerationTooLarge::EnumerationTooLarge(std::size_t k, std::size_t cap)
    : std::runtime_error("enumeration too large: dimension k=" + std::to_string(k) + " exceeds the cap of " +
                         std::to_string(cap)),
      k_(k),
      cap_(cap) {}

BinaryCode::BinaryCode(BitMatrix generator) : generator_(std::move(generator)) {
    const std::size_t k = generator_.rows();
    const std::size_t n = generator_.cols();
    if (k < 1 || k > n) {
        throw std::invalid_argument("BinaryCode: need 1 <= k <= n, got k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n));
    }
    if (rank(generator_) != k) throw std::invalid_argument("BinaryCode: generator rows are linearly dependent");
}

BitMatrix parity_check_standard(const BinaryCode& code) {
    const BitMatrix& g = code.generator();
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            if (g.get(r, c) != (r == c)) throw std::invalid_argument("parity_check_standard: generator is not [I_k | A]");
        }
    }
    BitMatrix h(n - k, n);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = k; c < n; ++c) {
            if (g.get(r, c)) h.set(c - k, r, true);
        }
    }
    for (std::size_t i = 0; i < n - k; ++i) h.set(i, k + i, true);
    return h;
}

namespace {

using Hist = std::vector<std::uint64_t>;

// Messages [begin, end) in Gray order: message index i selects the rows set
// in i ^ (i >> 1). Consecutive indices differ in row ctz(i).
void enumerate_single_word(const std::vector<std::uint64_t>& rows, std::uint64_t begin, std::uint64_t end,
                           Hist& hist) {
    std::uint64_t cw = 0;
    const std::uint64_t g = begin ^ (begin >> 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((g >> r) & 1U) cw ^= rows[r];
    }
    ++hist[static_cast<std::size_t>(std::popcount(cw))];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        cw ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++hist[static_cast<std::size_t>(std::popcount(cw))];
    }
}

void enumerate_multi_word(const BitMatrix& g, std::uint64_t begin, std::uint64_t end, Hist& hist) {
    const std::size_t words = g.row_words();
    std::vector<std::uint64_t> cw(words, 0);
    auto add_row = [&](std::size_t r) {
        const auto row = g.row(r);
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
    };
    const std::uint64_t gray = begin ^ (begin >> 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if ((gray >> r) & 1U) add_row(r);
    }
    ++hist[bits::popcount(cw)];
    for (std::uint64_t i = begin + 1; i < end; ++i) {
        add_row(static_cast<std::size_t>(std::countr_zero(i)));
        ++hist[bits::popcount(cw)];
    }
}

}  // namespace

std::vector<std::uint64_t> weight_distribution(const BinaryCode& code, const EnumerationLimits& limits) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k > limits.max_dimension) throw EnumerationTooLarge(k, limits.max_dimension);
    // Beyond 63 the message counter itself would overflow.
    if (k > 63) throw EnumerationTooLarge(k, 63);

    const std::uint64_t total = std::uint64_t{1} << k;
    const BitMatrix& g = code.generator();
    std::vector<std::uint64_t> packed;
    if (n <= bits::kBits) {
        packed.reserve(k);
        for (std::size_t r = 0; r < k; ++r) packed.push_back(g.row(r)[0]);
    }
    auto run = [&](std::uint64_t begin, std::uint64_t end, Hist& hist) {
        if (n <= bits::kBits) {
            enumerate_single_word(packed, begin, end, hist);
        } else {
            enumerate_multi_word(g, begin, end, hist);
        }
    };

    // Small spaces are not worth a thread.
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(limits.workers == 0 ? 1 : limits.workers, 1, std::max<std::uint64_t>(1, total >> 12));
    std::vector<Hist> partial(workers, Hist(n + 1, 0));
    if (workers == 1) {
        run(0, total, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = total / workers;
        const std::uint64_t extra = total % workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk + std::min(w, extra);
            const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
            pool.emplace_back([&, w, begin, end] { run(begin, end, partial[w]); });
        }
    }
    Hist hist(n + 1, 0);
    for (const Hist& h : partial) {
        for (std::size_t i = 0; i <= n; ++i) hist[i] += h[i];
    }
    return hist;
}

std::size_t min_distance(const BinaryCode& code, const EnumerationLimits& limits) {
    const auto hist = weight_distribution(code, limits);
    for (std::size_t w = 1; w < hist.size(); ++w) {
        if (hist[w] != 0) return w;
    }
    // Unreachable: k >= 1 and independent rows guarantee a nonzero codeword.
    throw std::logic_error("min_distance: code has no nonzero codeword");
}

bool is_self_dual(const BinaryCode& code) {
    if (code.length() != 2 * code.dimension()) return false;
    return multiply_transpose(code.generator(), code.generator()).is_zero();
}

std::size_t hull_dimension(const BinaryCode& code) {
    return code.dimension() - rank(multiply_transpose(code.generator(), code.generator()));
}

std::size_t extremal_bound(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("extremal_bound: n must be even and >= 2, got " + std::to_string(n));
    return 4 * (n / 24) + (n % 24 == 22 ? 6 : 4);
}

bool is_extremal(const BinaryCode& code, const EnumerationLimits& limits) {
    if (!is_self_dual(code)) throw std::invalid_argument("is_extremal: code is not self-dual");
    return min_distance(code, limits) == extremal_bound(code.length());
}

bool is_doubly_even(const std::vector<std::uint64_t>& distribution) noexcept {
    for (std::size_t w = 0; w < distribution.size(); ++w) {
        if (w % 4 != 0 && distribution[w] != 0) return false;
    }
    return true;
}

CodeMetrics compute_metrics(const BinaryCode& code, const EnumerationLimits& limits) {
    CodeMetrics m;
    m.weight_distribution = weight_distribution(code, limits);
    for (std::size_t w = 1; w < m.weight_distribution.size(); ++w) {
        if (m.weight_distribution[w] != 0) {
            m.min_distance = w;
            break;
        }
    }
    m.hull_dimension = hull_dimension(code);
    m.self_dual = is_self_dual(code);
    m.doubly_even = is_doubly_even(m.weight_distribution);
    return m;
}

}  // namespace dccode
