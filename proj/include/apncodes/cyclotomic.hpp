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

#ifndef APNCODES_CYCLOTOMIC_HPP
#define APNCODES_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

namespace apncodes {

/// The q-cyclotomic coset of j modulo n (orbit of j under multiplication
/// by q), sorted ascending.
std::vector<uint64_t> coset(uint64_t j, uint64_t q, uint64_t n);

/// Full partition of Z_n into q-cyclotomic cosets.  Leaders are the
/// numerically smallest members, which keeps emitted representatives stable.
class CosetTable {
   public:
    static CosetTable build(uint64_t q, uint64_t n);

    uint64_t q() const { return q_; }
    uint64_t n() const { return n_; }
    const std::vector<uint64_t>& leaders() const { return leaders_; }
    uint64_t leader_of(uint64_t j) const { return leaders_[leader_idx_[size_t(j % n_)]]; }
    uint64_t size_of(uint64_t leader) const;
    std::vector<uint64_t> members(uint64_t j) const { return coset(j, q_, n_); }

   private:
    uint64_t q_ = 0, n_ = 0;
    std::vector<uint64_t> leaders_;        // sorted
    std::vector<uint32_t> leader_idx_;     // j -> index into leaders_
    std::vector<uint32_t> sizes_;          // parallel to leaders_
};

}  // namespace apncodes

#endif
