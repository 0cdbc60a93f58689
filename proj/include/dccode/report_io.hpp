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

#ifndef DCCODE_REPORT_IO_HPP
#define DCCODE_REPORT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dccode/search.hpp"

namespace dccode {

inline constexpr std::string_view kCsvHeader = "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate";

/// CSV (header plus one row per report) or a JSON array; output is a pure
/// function of the reports.
std::string emit(const std::vector<SearchReport>& reports, OutputFormat format);

/// Inverse of emit(..., OutputFormat::json). Throws std::invalid_argument.
std::vector<SearchReport> parse_reports_json(std::string_view text);

}  // namespace dccode

#endif  // DCCODE_REPORT_IO_HPP
