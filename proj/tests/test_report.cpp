/*
 * Copyright 2026 The apncodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "apncodes/report.hpp"

using namespace apncodes;

TEST_CASE("the four built-in parameter sets verify against the goldens") {
    VerifyResult v = verify_paper();
    REQUIRE(v.reports.size() == 4);
    CHECK(v.ok());
    for (const auto& r : v.reports) CHECK(r.status == "verified");
    CHECK(v.reports[0].span == 6);
    CHECK(v.reports[1].span == 18);
    CHECK(v.reports[2].span == 16);
    CHECK(v.reports[3].span == 160);
    CHECK(v.reports[3].code_k == 863);
    CHECK(v.reports[3].dual_k == 160);
    CHECK(v.reports[3].dist.lower >= 5);
}

TEST_CASE("a corrupted golden is reported with the first differing coefficient") {
    auto goldens = default_goldens();
    // flip one coefficient of the first generator string
    goldens[0].generator = "x^6+2x^5+2x^4+x^2+x+1";
    goldens.resize(1);
    VerifyResult v = verify_paper(goldens);
    CHECK(!v.ok());
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0].find("coefficient 2") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    auto f = Field::preset("ex1");
    Report a = build_report(f, Family::InverseApn);
    Report b = build_report(Field::preset("ex1"), Family::InverseApn);
    CHECK(report_text(a) == report_text(b));
    CHECK(report_json(a) == report_json(b));
}

TEST_CASE("report fields for the first parameter set") {
    Report r = build_report(Field::preset("ex1"), Family::InverseApn);
    CHECK(r.code_n == 8);
    CHECK(r.code_k == 2);
    CHECK(r.dist.exact == 6);
    CHECK(r.dual_k == 6);
    CHECK(r.dual_d == 2);
    CHECK(r.bch >= 5);
    REQUIRE(r.ht.has_value());
    CHECK(*r.ht >= r.bch);
    CHECK(r.bm_match == true);
    CHECK(r.gcd_match == true);
    CHECK(r.minpoly == "x^6+2x^5+2x^4+2x^2+x+1");
    CHECK(report_text(r).find("status: verified") != std::string::npos);
}

TEST_CASE("auto-field report reproduces the forced degree with a different basis") {
    auto f = Field::auto_field(3, 1, 3);
    Report r = build_report(f, Family::InverseApn);
    CHECK(r.code_n == 26);
    CHECK(r.code_k == 8);
    CHECK(r.span == 18);
    CHECK(r.status == "verified");
}

TEST_CASE("dobbertin report at i = 3 runs formula and LFSR routes") {
    auto f = Field::auto_field(2, 1, 15);
    Report r = build_report(f, Family::Dobbertin, 3);
    CHECK(r.n == 32767);
    CHECK(r.span == 616);
    CHECK(r.code_k == 32767 - 616);
    CHECK(r.bm_match == true);
    CHECK(!r.gcd_match.has_value());  // above the gcd-route cap
    CHECK(!r.ht.has_value());         // above the progression-search cap
    CHECK(r.status == "verified");
}

TEST_CASE("exit code taxonomy") {
    CHECK(exit_code_for(Errc::InvalidParameter) == 2);
    CHECK(exit_code_for(Errc::NotIrreducible) == 2);
    CHECK(exit_code_for(Errc::UnsupportedSize) == 3);
    CHECK(exit_code_for(Errc::InternalInvariant) == 4);
}
