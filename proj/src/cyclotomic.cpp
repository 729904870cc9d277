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

#include "apncodes/cyclotomic.hpp"

#include <algorithm>

#include "apncodes/errors.hpp"

namespace apncodes {

static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t n) {
    return uint64_t((unsigned __int128)a * b % n);
}

std::vector<uint64_t> coset(uint64_t j, uint64_t q, uint64_t n) {
    require(n >= 1, Errc::InvalidModulus, "modulus must be positive");
    std::vector<uint64_t> orbit;
    uint64_t start = j % n;
    uint64_t cur = start;
    do {
        orbit.push_back(cur);
        cur = mulmod(cur, q, n);
    } while (cur != start);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

CosetTable CosetTable::build(uint64_t q, uint64_t n) {
    require(n >= 1, Errc::InvalidModulus, "modulus must be positive");
    CosetTable t;
    t.q_ = q;
    t.n_ = n;
    t.leader_idx_.assign(size_t(n), UINT32_MAX);
    for (uint64_t j = 0; j < n; ++j) {
        if (t.leader_idx_[size_t(j)] != UINT32_MAX) continue;
        // j is unvisited, hence the smallest member of its orbit
        uint32_t idx = uint32_t(t.leaders_.size());
        t.leaders_.push_back(j);
        uint32_t size = 0;
        uint64_t cur = j;
        do {
            t.leader_idx_[size_t(cur)] = idx;
            ++size;
            cur = mulmod(cur, q, n);
        } while (cur != j);
        t.sizes_.push_back(size);
    }
    return t;
}

uint64_t CosetTable::size_of(uint64_t leader) const {
    return sizes_[leader_idx_[size_t(leader % n_)]];
}

}  // namespace apncodes
