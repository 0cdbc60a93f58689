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

#include <stdexcept>

#include "dccode/report_io.hpp"
#include "doctest.h"

using namespace dccode;

namespace {

SearchReport sample() {
    SearchReport r;
    r.m = 9;
    r.canonical_f = "x^6+x^4+x^3+x+1";
    r.weight = 5;
    r.n = 18;
    r.k = 9;
    r.d = 4;
    r.self_dual = true;
    r.extremal = true;
    r.predicate_used = PredicateUsed::thm_upto20;
    r.oracle_confirmed = true;
    return r;
}

}  // namespace

TEST_CASE("csv") {
    CHECK(emit({}, OutputFormat::csv) == std::string(kCsvHeader) + "\n");
    CHECK(emit({sample()}, OutputFormat::csv) ==
          "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate\n"
          "9,x^6+x^4+x^3+x+1,5,18,9,4,true,true,false,thm_upto20\n");
}

TEST_CASE("json round trip") {
    CHECK(parse_reports_json(emit({}, OutputFormat::json)).empty());
    SearchReport b = sample();
    b.m = 11;
    b.canonical_f = "x^7+x^4+x^2+x+1";
    b.predicate_used = PredicateUsed::oracle_only;
    b.lcd = true;
    b.oracle_confirmed = false;
    const std::vector<SearchReport> rs{sample(), b};
    CHECK(parse_reports_json(emit(rs, OutputFormat::json)) == rs);
    CHECK(emit(rs, OutputFormat::json) == emit(parse_reports_json(emit(rs, OutputFormat::json)), OutputFormat::json));
}

TEST_CASE("json errors") {
    CHECK_THROWS_AS(parse_reports_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_reports_json("[{\"m\": 1}]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_reports_json("not json"), std::invalid_argument);
}
