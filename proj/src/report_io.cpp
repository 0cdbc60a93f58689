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

#include "dccode/report_io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dccode {

namespace {

const char* boolean(bool b) { return b ? "true" : "false"; }

nlohmann::ordered_json to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["f"] = r.canonical_f;
    j["weight"] = r.weight;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["self_dual"] = r.self_dual;
    j["extremal"] = r.extremal;
    j["lcd"] = r.lcd;
    j["predicate"] = std::string(to_string(r.predicate_used));
    j["oracle_confirmed"] = r.oracle_confirmed;
    return j;
}

}  // namespace

std::string emit(const std::vector<SearchReport>& reports, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& r : reports) {
        os << r.m << ',' << r.canonical_f << ',' << r.weight << ',' << r.n << ',' << r.k << ',' << r.d << ','
           << boolean(r.self_dual) << ',' << boolean(r.extremal) << ',' << boolean(r.lcd) << ','
           << to_string(r.predicate_used) << '\n';
    }
    return os.str();
}

std::vector<SearchReport> parse_reports_json(std::string_view text) {
    std::vector<SearchReport> out;
    try {
        const auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw std::invalid_argument("parse_reports_json: expected a JSON array");
        for (const auto& j : arr) {
            SearchReport r;
            r.m = j.at("m").get<std::size_t>();
            r.canonical_f = j.at("f").get<std::string>();
            r.weight = j.at("weight").get<std::size_t>();
            r.n = j.at("n").get<std::size_t>();
            r.k = j.at("k").get<std::size_t>();
            r.d = j.at("d").get<std::size_t>();
            r.self_dual = j.at("self_dual").get<bool>();
            r.extremal = j.at("extremal").get<bool>();
            r.lcd = j.at("lcd").get<bool>();
            r.predicate_used = parse_predicate_used(j.at("predicate").get<std::string>());
            r.oracle_confirmed = j.at("oracle_confirmed").get<bool>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("parse_reports_json: ") + e.what());
    }
    return out;
}

}  // namespace dccode
