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

#include <numeric>
#include <set>

#include "apncodes/cyclotomic.hpp"
#include "apncodes/errors.hpp"

using namespace apncodes;

TEST_CASE("single cosets") {
    CHECK(coset(0, 3, 8) == std::vector<uint64_t>{0});
    CHECK(coset(1, 3, 8) == std::vector<uint64_t>{1, 3});
    CHECK(coset(1, 2, 31) == std::vector<uint64_t>{1, 2, 4, 8, 16});
    CHECK(coset(9, 3, 8) == std::vector<uint64_t>{1, 3});  // input reduced mod n
    CHECK_THROWS_AS(static_cast<void>(coset(1, 2, 0)), Error);
}

TEST_CASE("table for q=3, n=8") {
    CosetTable t = CosetTable::build(3, 8);
    CHECK(t.leaders() == std::vector<uint64_t>{0, 1, 2, 4, 5});
    CHECK(t.size_of(0) == 1);
    CHECK(t.size_of(1) == 2);
    CHECK(t.size_of(2) == 2);
    CHECK(t.size_of(4) == 1);  // 4*3 = 12 = 4 mod 8
    CHECK(t.size_of(5) == 2);
    CHECK(t.leader_of(7) == 5);
}

TEST_CASE("table for q=2, n=31") {
    CosetTable t = CosetTable::build(2, 31);
    CHECK(t.leaders().size() == 7);
    CHECK(t.size_of(0) == 1);
    for (uint64_t lead : t.leaders())
        if (lead != 0) CHECK(t.size_of(lead) == 5);
}

TEST_CASE("degenerate modulus") {
    CosetTable t = CosetTable::build(7, 1);
    CHECK(t.leaders() == std::vector<uint64_t>{0});
    CHECK(coset(3, 7, 1) == std::vector<uint64_t>{0});
}

TEST_CASE("cosets partition Z_n for a spread of parameters") {
    const std::pair<uint64_t, uint64_t> cases[] = {
        {2, 1023}, {2, 65535}, {3, 26}, {3, 6560}, {9, 80}, {5, 24}, {2, 31}};
    for (auto [q, n] : cases) {
        CosetTable t = CosetTable::build(q, n);
        uint64_t total = 0;
        std::set<uint64_t> seen;
        for (uint64_t lead : t.leaders()) {
            auto mem = t.members(lead);
            CHECK(mem.size() == t.size_of(lead));
            CHECK(*std::min_element(mem.begin(), mem.end()) == lead);
            total += mem.size();
            for (uint64_t v : mem) CHECK(seen.insert(v).second);
        }
        CHECK(total == n);
        // membership map agrees with orbit enumeration
        for (uint64_t j = 0; j < std::min<uint64_t>(n, 500); ++j) {
            auto mem = t.members(j);
            CHECK(t.leader_of(j) == *std::min_element(mem.begin(), mem.end()));
        }
    }
}

TEST_CASE("coset size divides the multiplicative order of q") {
    // l_j | ord of q modulo n / gcd(n, j), brute force
    for (uint64_t n : {15ull, 31ull, 63ull, 255ull, 1023ull}) {
        for (uint64_t q : {2ull}) {
            CosetTable t = CosetTable::build(q, n);
            for (uint64_t j = 1; j < n; j += 17) {
                uint64_t nn = n / std::gcd(n, j);
                uint64_t ord = 1, cur = q % nn;
                while (cur != 1 % nn) {
                    cur = cur * q % nn;
                    ++ord;
                    REQUIRE(ord <= nn);
                }
                CHECK(ord % t.size_of(t.leader_of(j)) == 0);
            }
        }
    }
}
