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

#ifndef DCCODE_SEARCH_HPP
#define DCCODE_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dccode/bordered.hpp"
#include "dccode/dc_codes.hpp"

namespace dccode {

enum class SearchKind { selfdual_dc, extremal_dc, lcd_dc, bordered_selfdual, bordered_lcd };
enum class OraclePolicy { always, spot, off };
enum class OutputFormat { csv, json };

/// Which rule classified a candidate.
enum class PredicateUsed {
    thm_upto20,           // extremal_upto20
    thm_22,               // extremal_22
    thm_24_44,            // extremal_24_44
    generator_weight,     // (1, f) alone has weight below the extremal bound
    gcd_criterion,        // dc_is_lcd
    bordered_conditions,  // bordered self-duality conditions
    bordered_lcd_thm,     // complement of a gcd-admissible polynomial
    oracle_only,          // no theorem applies; decided by enumeration
};

std::string_view to_string(SearchKind k) noexcept;
std::string_view to_string(OraclePolicy p) noexcept;
std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(PredicateUsed p) noexcept;
SearchKind parse_search_kind(std::string_view s);
OraclePolicy parse_oracle_policy(std::string_view s);
OutputFormat parse_output_format(std::string_view s);
PredicateUsed parse_predicate_used(std::string_view s);

/// Largest m each family may be searched at (bounded by the enumeration cap).
inline constexpr std::size_t kMaxSearchMDc = 22;
inline constexpr std::size_t kMaxSearchMBordered = 13;
/// Under OraclePolicy::spot, every this-many-th class is cross-checked.
inline constexpr std::size_t kSpotInterval = 64;

struct SearchConfig {
    std::size_t m_min = 1;
    std::size_t m_max = 1;
    SearchKind kind = SearchKind::selfdual_dc;
    std::optional<std::set<std::size_t>> weight_filter;
    unsigned workers = 1;
    OutputFormat output_format = OutputFormat::csv;
    /// nullopt selects `always` for m <= 16 and `spot` above.
    std::optional<OraclePolicy> oracle;
    /// Table reproduction runs refuse OraclePolicy::off.
    bool table_reproduction = false;
};

/// One equivalence class found by a search.
struct SearchReport {
    std::size_t m = 0;
    std::string canonical_f;
    std::size_t weight = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;  // 0 when neither a theorem nor the oracle fixed it
    bool self_dual = false;
    bool extremal = false;
    bool lcd = false;
    PredicateUsed predicate_used = PredicateUsed::oracle_only;
    bool oracle_confirmed = false;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// A theorem-level predicate disagreed with the oracle, or an equivalence
/// class was classified inconsistently.
class CrossCheckFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

OraclePolicy effective_oracle_policy(const SearchConfig& cfg, std::size_t m) noexcept;

/// Rule that decides extremality of a self-dual DC code of length 2m whose
/// generator has weight w.
PredicateUsed extremality_route(std::size_t m, std::size_t w);

/// Extremality of a self-dual DC code from the routed theorem; nullopt when
/// the route is oracle_only. Throws if d is not self-dual.
std::optional<bool> predicted_extremal(const DcDescriptor& d);

/// LCD decision for an alpha = 0 bordered code: parity test, then the
/// complement theorem, then the hull oracle.
bool bordered_alpha0_is_lcd(const BorderedDescriptor& b);

/// Per-m counts gathered by search(): survivors before deduplication and the
/// number of distinct classes emitted.
struct SearchStats {
    std::map<std::size_t, std::uint64_t> survivors;
    std::map<std::size_t, std::uint64_t> classes;
};

/**
 * Exhaustive search over all 2^m coefficient patterns for each m in range.
 * Survivors of the kind's predicate chain are deduplicated by canonical form,
 * cross-checked against the linear-code oracle per the oracle policy, and
 * returned sorted by (m, canonical_f read as an unsigned integer).
 */
std::vector<SearchReport> search(const SearchConfig& cfg, SearchStats* stats = nullptr);

}  // namespace dccode

#endif  // DCCODE_SEARCH_HPP
