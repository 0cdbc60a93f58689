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

#include "dccode/tables.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dccode/dc_codes.hpp"
#include "dccode/search.hpp"

namespace dccode {

namespace {

constexpr std::array<TableRow, 11> kRows = {{
    {1, 4, "x^2+x+1", 8, 4, 4, ""},
    {1, 6, "x^4+x^3+x^2+x+1", 12, 6, 4, ""},
    {1, 8, "x^4+x^2+1", 16, 8, 4, ""},
    {1, 8, "x^6+x^5+x^4+x^2+1", 16, 8, 4, ""},
    {1, 8, "x^6+x^5+x^4+x^3+x^2+x+1", 16, 8, 4, ""},
    {1, 9, "x^6+x^4+x^3+x+1", 18, 9, 4, ""},
    {1, 10, "x^9+x^7+x^5+x^4+1", 20, 10, 4, ""},
    {1, 10, "x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1", 20, 10, 4, ""},
    {2, 12, "x^8+x^6+x^5+x^4+x^3+x+1", 24, 12, 8, ""},
    // A [2m, m] code; the source listing prints the dimension as 12.
    {2, 16, "x^9+x^8+x^7+x^6+x^5+x^3+1", 32, 16, 8, "[32, 12, 8]"},
    {2, 20, "x^10+x^9+x^8+x^4+x^3+x+1", 40, 20, 8, ""},
}};

constexpr std::size_t kSweepMin = 4;
constexpr std::size_t kSweepMax = 10;
constexpr std::array<std::size_t, 2> kEmptyAt = {5, 7};

std::string params(std::size_t n, std::size_t k, std::size_t d) {
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + std::to_string(d) + "]";
}

RingElement row_poly(const TableRow& row) { return parse_ring_element(row.f, row.m); }

// Full enumeration of the row's own code.
std::string check_row_code(const TableRow& row, const unsigned workers) {
    const DcDescriptor d(row_poly(row));
    if (!is_self_dual(d)) return "not self-dual";
    const BinaryCode code = build(d);
    const CodeMetrics mt = compute_metrics(code, EnumerationLimits{.workers = workers});
    const std::string got = params(code.length(), code.dimension(), mt.min_distance);
    if (code.length() != row.n || code.dimension() != row.k || mt.min_distance != row.d) {
        return "expected " + params(row.n, row.k, row.d) + ", got " + got;
    }
    if (mt.min_distance != extremal_bound(code.length())) return got + " is not extremal";
    if (row.table == 2 && !extremal_24_44(d)) return "weight-7 criterion rejects it";
    return {};
}

}  // namespace

std::span<const TableRow> expected_table_rows() { return kRows; }

bool is_table_row_class(std::size_t m, const RingElement& canonical) {
    return std::any_of(kRows.begin(), kRows.end(), [&](const TableRow& row) {
        return row.m == m && canonical_form(DcDescriptor(row_poly(row))) == canonical;
    });
}

TablesOutcome reproduce_tables(unsigned workers) {
    SearchConfig cfg;
    cfg.m_min = kSweepMin;
    cfg.m_max = kSweepMax;
    cfg.kind = SearchKind::extremal_dc;
    cfg.workers = workers;
    cfg.oracle = OraclePolicy::always;
    cfg.table_reproduction = true;
    const std::vector<SearchReport> found = search(cfg);

    std::set<std::pair<std::size_t, std::string>> classes;
    for (const auto& r : found) classes.emplace(r.m, r.canonical_f);

    TablesOutcome out;
    out.ok = true;
    std::set<std::pair<std::size_t, std::string>> listed;
    for (const TableRow& row : kRows) {
        TableRowCheck chk{row, true, {}};
        const std::string canon = to_string(canonical_form(DcDescriptor(row_poly(row))));
        listed.emplace(row.m, canon);
        if (row.table == 1 && !classes.contains({row.m, canon})) {
            chk.ok = false;
            chk.detail = "class " + canon + " not found by the sweep";
        }
        if (chk.ok) {
            chk.detail = check_row_code(row, workers);
            chk.ok = chk.detail.empty();
        }
        if (chk.ok) chk.detail = "class " + canon;
        out.ok = out.ok && chk.ok;
        out.rows.push_back(std::move(chk));
    }
    for (std::size_t m : kEmptyAt) {
        const bool empty =
            std::none_of(found.begin(), found.end(), [m](const SearchReport& r) { return r.m == m; });
        out.empty_checks.emplace_back(m, empty);
        out.ok = out.ok && empty;
    }
    for (const auto& [m, canon] : classes) {
        if (!listed.contains({m, canon})) out.unlisted_classes.push_back("m=" + std::to_string(m) + " " + canon);
    }
    return out;
}

int print_tables_outcome(const TablesOutcome& outcome, std::ostream& out) {
    for (const auto& chk : outcome.rows) {
        out << (chk.ok ? "ok       " : "MISMATCH ") << "table " << chk.row.table << "  m=" << chk.row.m << "  "
            << chk.row.f << "  " << params(chk.row.n, chk.row.k, chk.row.d);
        if (!chk.row.printed.empty()) out << " (listed as " << chk.row.printed << ")";
        out << "  " << chk.detail << '\n';
    }
    for (const auto& [m, empty] : outcome.empty_checks) {
        out << (empty ? "ok       " : "MISMATCH ") << "m=" << m << "  no extremal classes expected"
            << (empty ? "" : ", some found") << '\n';
    }
    for (const auto& c : outcome.unlisted_classes) out << "note     extremal class not listed: " << c << '\n';
    out << (outcome.ok ? "tables: all rows reproduced" : "tables: mismatches found") << '\n';
    return outcome.ok ? 0 : 1;
}

}  // namespace dccode
