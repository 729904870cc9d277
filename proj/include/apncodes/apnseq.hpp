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

#ifndef APNCODES_APNSEQ_HPP
#define APNCODES_APNSEQ_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "apncodes/galois.hpp"
#include "apncodes/polyring.hpp"

namespace apncodes {

/// One period of s_t = Tr((1 + alpha^t)^e), values in GF(q).
struct Sequence {
    FieldPtr field;
    uint64_t e = 0;
    std::vector<FieldElem> values;  // length n = q^m - 1
};

Sequence gen_sequence(const FieldPtr& field, uint64_t e);

/// Shortest LFSR reproducing the periodic sequence; returns the monic
/// minimal polynomial and the linear span.  Runs over two concatenated
/// periods so the connection polynomial of the infinite periodic extension
/// is pinned down exactly.
std::pair<Poly, int64_t> berlekamp_massey(const FieldPtr& field,
                                          const std::vector<FieldElem>& period);
std::pair<Poly, int64_t> berlekamp_massey(const Sequence& seq);

/// Eq-(4)-style gcd route re-exported over a Sequence for convenience.
std::pair<Poly, int64_t> minimal_poly_gcd_formula(const Sequence& seq);

/// Coefficients of the unique expansion s_t = sum_i c_i alpha^{it},
/// recovered by inverse evaluation over all n points: c_i is
/// -sum_t s_t alpha^{-it}.  O(n^2) field operations; this is the
/// Lucas-free oracle for the coefficient profile.
std::vector<FieldElem> expand_sequence(const Sequence& seq);

constexpr uint64_t kExpandCap = 4096;

/// Binomial coefficient C(N, M) mod p via base-p digit products.
uint32_t lucas_binom(uint64_t N, uint64_t M, uint32_t p);

/// The map i -> C(i) = sum_{j<m} C(e, q^j i mod n) mod p, together with its
/// support and one representative per q-cyclotomic coset of the support.
struct CoeffProfile {
    uint64_t e = 0;
    uint32_t p = 0;
    uint64_t q = 0;
    uint32_t m = 0;
    uint64_t n = 0;
    std::vector<uint32_t> coeff;            // size n, values in [0, p)
    std::vector<uint64_t> support;          // sorted
    std::vector<uint64_t> reduced_support;  // one representative per coset

    /// Base-q digit sum of i (m digits).
    uint32_t digit_sum(uint64_t i) const;
};

CoeffProfile coeff_profile(uint64_t e, uint64_t q, uint32_t m, uint32_t p);

/// Support of the e = q^m - 2 profile by the digit-sum rule
/// { i : s_q(i) + m != 0 mod p }; its size is q^m (1 - 1/p).
CoeffProfile inverse_apn_support(uint64_t q, uint32_t m, uint32_t p);

/// Closed-form minimal polynomial for e = q^m - 2: the monic product of
/// the minimal polynomials of alpha^{-i} over the reduced support.
Poly minimal_poly_inverse_apn(const FieldPtr& field);

// ---------------------------------------------------------------------------
// Exponents e = 2^{4i} + 2^{3i} + 2^{2i} + 2^i - 1 over GF(2^{5i})
// ---------------------------------------------------------------------------

uint64_t dobbertin_exponent(uint32_t i);

/// Bitwise domination of m-bit words: every set bit of x is set in y.
bool is_covered(uint64_t x, uint64_t y, uint32_t m);
/// Number of cyclic rotations of x that are covered by e_pattern.
uint32_t cover_count(uint64_t x, uint64_t e_pattern, uint32_t m);
bool is_odd_pattern(uint64_t x, uint64_t e_pattern, uint32_t m);
uint64_t rotate_right(uint64_t x, uint32_t j, uint32_t m);

/// Rotation-class representatives of the odd words for m = 5i.  The three
/// isolated set bits of the exponent pattern sit at positions {2i, 3i, 4i}
/// ("anchors"); the solid block of ones occupies positions [0, i).
struct RSets {
    uint32_t i = 0;
    uint32_t m = 0;
    std::vector<uint64_t> low_runs;      // one run of bits inside the low block
    std::vector<uint64_t> mixed;         // >=1 anchor and >=2 low bits
    std::vector<uint64_t> w4;            // all three anchors plus one low bit
    std::vector<uint64_t> w3;            // two anchors plus one interior low bit
    std::vector<uint64_t> w2;            // the two odd weight-2 classes
    std::vector<uint64_t> w1;            // the single-bit word (even i only)
    std::vector<uint64_t> w0;            // the zero word (odd i only)
    std::vector<uint64_t> all;           // sorted union
};

RSets build_r_sets(uint32_t i);

/// Support of the coefficient profile for the exponent above, assembled
/// from the rotation orbits of the class representatives.
CoeffProfile dobbertin_support(uint32_t i);
/// Linear span predicted for block parameter i (m = 5i).
uint64_t dobbertin_span(uint32_t i);

constexpr uint32_t kDobbertinCap = 4;  // m <= 20, n <= 2^20 - 1

Poly minimal_poly_dobbertin(const FieldPtr& field, uint32_t i);

/// Max solution count of f(x+a) - f(x) = b over all a != 0, b, for
/// f(x) = x^e.  2 certifies APN, 1 planar.  Brute force over all (a, x);
/// the sweep may be partitioned across threads (max-combine).
uint32_t differential_uniformity(const FieldPtr& field, uint64_t e, uint32_t threads = 1);

constexpr uint64_t kDiffUniformityCap = uint64_t(1) << 16;

}  // namespace apncodes

#endif
