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

#ifndef DCCODE_TABLES_HPP
#define DCCODE_TABLES_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dccode/gf2ring.hpp"

namespace dccode {

/// A published extremal self-dual DC code.
struct TableRow {
    int table;  // 1: length <= 20, 2: lengths 24..44
    std::size_t m;
    std::string_view f;
    std::size_t n;
    std::size_t k;
    std::size_t d;
    /// Parameters as originally printed, when they differ from n, k, d.
    std::string_view printed;
};

std::span<const TableRow> expected_table_rows();

/// True when `canonical` is the canonical form of some listed row at m.
bool is_table_row_class(std::size_t m, const RingElement& canonical);

struct TableRowCheck {
    TableRow row;
    bool ok = false;
    std::string detail;
};

struct TablesOutcome {
    std::vector<TableRowCheck> rows;
    /// m values whose search must come back empty, and whether it did.
    std::vector<std::pair<std::size_t, bool>> empty_checks;
    /// Extremal classes found that no listed row represents.
    std::vector<std::string> unlisted_classes;
    bool ok = false;
};

/// Runs the length <= 20 sweep and verifies the length 24..44 rows by full
/// codeword enumeration.
TablesOutcome reproduce_tables(unsigned workers = 1);

/// Human-readable diff, one line per row; returns the process exit status.
int print_tables_outcome(const TablesOutcome& outcome, std::ostream& out);

}  // namespace dccode

#endif  // DCCODE_TABLES_HPP
