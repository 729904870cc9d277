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

#include "apncodes/apnseq.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "apncodes/cyclotomic.hpp"

namespace apncodes {

Sequence gen_sequence(const FieldPtr& field, uint64_t e) {
    const uint64_t n = field->n();
    require(e <= n - 1, Errc::ExponentOutOfRange, "need 0 <= e <= q^m - 2");
    Sequence seq{field, e, {}};
    seq.values.reserve(static_cast<size_t>(n));
    const FieldElem one = field->one();
    for (uint64_t t = 0; t < n; ++t) {
        FieldElem base = field->add(one, field->alpha_pow(int64_t(t)));
        // 0^e = 0 for e > 0 and 0^0 = 1, so the t with 1 + alpha^t = 0
        // contributes Tr(0) except when e = 0
        seq.values.push_back(field->trace(field->pow(base, int64_t(e))));
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Berlekamp-Massey
// ---------------------------------------------------------------------------

std::pair<Poly, int64_t> berlekamp_massey(const FieldPtr& field,
                                          const std::vector<FieldElem>& period) {
    require(!period.empty(), Errc::EmptySequence, "empty sequence");
    const auto& f = *field;
    const size_t n = period.size();
    auto at = [&](size_t t) { return period[t % n]; };

    std::vector<FieldElem> C{f.one()}, B{f.one()};
    size_t L = 0, shift = 1;
    FieldElem b = f.one();
    const size_t total = 2 * n;  // two periods pin the periodic LFSR exactly
    for (size_t t = 0; t < total; ++t) {
        FieldElem d = at(t);
        for (size_t j = 1; j <= L && j < C.size(); ++j)
            d = f.add(d, f.mul(C[j], at(t - j)));
        if (f.is_zero(d)) {
            ++shift;
            continue;
        }
        FieldElem coef = f.div(d, b);
        std::vector<FieldElem> T = C;
        if (C.size() < shift + B.size()) C.resize(shift + B.size(), f.zero());
        for (size_t j = 0; j < B.size(); ++j)
            C[shift + j] = f.sub(C[shift + j], f.mul(coef, B[j]));
        if (2 * L <= t) {
            L = t + 1 - L;
            B = std::move(T);
            b = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    Poly M = Poly(field, std::move(C)).monic();
    require(M.degree() == int64_t(L), Errc::InternalInvariant,
            "minimal polynomial degree does not match the register length");
    return {M, int64_t(L)};
}

std::pair<Poly, int64_t> berlekamp_massey(const Sequence& seq) {
    return berlekamp_massey(seq.field, seq.values);
}

std::pair<Poly, int64_t> minimal_poly_gcd_formula(const Sequence& seq) {
    return sequence_minimal_poly_gcd(seq.field, seq.values);
}

std::vector<FieldElem> expand_sequence(const Sequence& seq) {
    require(!seq.values.empty(), Errc::EmptySequence, "empty sequence");
    const auto& f = *seq.field;
    const uint64_t n = f.n();
    require(seq.values.size() == n, Errc::LengthMismatch, "period must be q^m - 1");
    require(n <= kExpandCap, Errc::UnsupportedSize,
            "inverse evaluation capped at n <= " + std::to_string(kExpandCap));
    std::vector<FieldElem> c(size_t(n), f.zero());
    for (uint64_t i = 0; i < n; ++i) {
        const FieldElem w = f.alpha_pow(-int64_t(i));
        FieldElem cur = f.one(), acc = f.zero();
        for (uint64_t t = 0; t < n; ++t) {
            acc = f.add(acc, f.mul(seq.values[size_t(t)], cur));
            cur = f.mul(cur, w);
        }
        // sum_t alpha^{(j-i)t} is n = -1 at j = i and 0 elsewhere
        c[size_t(i)] = f.neg(acc);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Lucas and coefficient profiles
// ---------------------------------------------------------------------------

static uint32_t small_binom_mod_p(uint32_t a, uint32_t b, uint32_t p) {
    // a, b < p; exact value of C(a, b) mod p via multiplicative formula
    if (b > a) return 0;
    b = std::min(b, a - b);
    uint64_t num = 1, den = 1;
    for (uint32_t t = 1; t <= b; ++t) {
        num = num * ((a - b + t) % p) % p;
        den = den * (t % p) % p;
    }
    // den is invertible: all factors are in [1, p)
    uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return uint32_t(num * inv % p);
}

uint32_t lucas_binom(uint64_t N, uint64_t M, uint32_t p) {
    if (p == 2) return ((M & ~N) == 0) ? 1u : 0u;
    uint32_t result = 1;
    while ((N || M) && result) {
        uint32_t nd = uint32_t(N % p), md = uint32_t(M % p);
        result = uint32_t(uint64_t(result) * small_binom_mod_p(nd, md, p) % p);
        N /= p;
        M /= p;
    }
    return result;
}

uint32_t CoeffProfile::digit_sum(uint64_t i) const {
    uint32_t sum = 0;
    for (uint32_t j = 0; j < m; ++j) {
        sum += uint32_t(i % q);
        i /= q;
    }
    return sum;
}

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t n) {
    return uint64_t((unsigned __int128)a * b % n);
}

static void finalize_profile(CoeffProfile& pr) {
    CosetTable tab = CosetTable::build(pr.q, pr.n);
    std::vector<char> seen_leader(size_t(pr.n), 0);
    for (uint64_t i = 0; i < pr.n; ++i) {
        if (pr.coeff[size_t(i)] == 0) continue;
        pr.support.push_back(i);
        uint64_t lead = tab.leader_of(i);
        if (!seen_leader[size_t(lead)]) {
            seen_leader[size_t(lead)] = 1;
            pr.reduced_support.push_back(lead);
        }
    }
}

CoeffProfile coeff_profile(uint64_t e, uint64_t q, uint32_t m, uint32_t p) {
    uint64_t v = q;
    uint32_t s = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++s;
    }
    require(v == 1 && s >= 1, Errc::InvalidParameter, "q must be a power of p");
    uint64_t n = 1;
    for (uint32_t j = 0; j < m; ++j) {
        n *= q;
        require(n <= Field::kSizeCap, Errc::UnsupportedSize, "q^m exceeds 2^32");
    }
    n -= 1;
    require(e < n, Errc::ExponentOutOfRange, "need 0 <= e < n");

    CoeffProfile pr;
    pr.e = e;
    pr.p = p;
    pr.q = q;
    pr.m = m;
    pr.n = n;
    pr.coeff.assign(size_t(n), 0);

    auto value_at = [&](uint64_t i) {
        uint32_t acc = 0;
        uint64_t idx = i;
        for (uint32_t j = 0; j < m; ++j) {
            acc = (acc + lucas_binom(e, idx, p)) % p;
            idx = mulmod_u64(idx, q, n);
        }
        return acc;
    };

    if (n <= 65536) {
        for (uint64_t i = 0; i < n; ++i) pr.coeff[size_t(i)] = value_at(i);
        // the profile must be constant on q-cyclotomic cosets
        for (uint64_t i = 0; i < n; ++i)
            require(pr.coeff[size_t(mulmod_u64(i, q, n))] == pr.coeff[size_t(i)],
                    Errc::InternalInvariant, "profile not constant on cosets");
    } else {
        CosetTable tab = CosetTable::build(q, n);
        for (uint64_t lead : tab.leaders()) {
            uint32_t val = value_at(lead);
            if (val == 0) continue;
            uint64_t cur = lead;
            do {
                pr.coeff[size_t(cur)] = val;
                cur = mulmod_u64(cur, q, n);
            } while (cur != lead);
        }
    }
    finalize_profile(pr);
    return pr;
}

CoeffProfile inverse_apn_support(uint64_t q, uint32_t m, uint32_t p) {
    uint64_t v = q;
    uint32_t s = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++s;
    }
    require(v == 1 && s >= 1, Errc::InvalidParameter, "q must be a power of p");
    uint64_t qm = 1;
    for (uint32_t j = 0; j < m; ++j) {
        qm *= q;
        require(qm <= Field::kSizeCap, Errc::UnsupportedSize, "q^m exceeds 2^32");
    }
    const uint64_t n = qm - 1;

    CoeffProfile pr;
    pr.e = n - 1;  // q^m - 2
    pr.p = p;
    pr.q = q;
    pr.m = m;
    pr.n = n;
    pr.coeff.assign(size_t(n), 0);
    for (uint64_t i = 0; i < n; ++i) {
        uint32_t cls = (pr.digit_sum(i) + m) % p;
        if (cls == 0) continue;
        // C(e+1, i) never vanishes mod p since every base-p digit of
        // e + 1 = q^m - 1 is p - 1
        pr.coeff[size_t(i)] = uint32_t(uint64_t(lucas_binom(n, i, p)) * cls % p);
        require(pr.coeff[size_t(i)] != 0, Errc::InternalInvariant, "vanishing support value");
    }
    finalize_profile(pr);
    const uint64_t expected = qm - qm / p;  // q^m (1 - 1/p)
    require(pr.support.size() == expected, Errc::InternalInvariant,
            "support size disagrees with q^m(1-1/p)");
    return pr;
}

Poly minimal_poly_inverse_apn(const FieldPtr& field) {
    CoeffProfile pr = inverse_apn_support(field->q(), field->m(), field->p());
    Poly M = Poly::one(field);
    for (uint64_t i : pr.reduced_support)
        M = M * minimal_poly_of_element(field, field->alpha_pow(-int64_t(i)));
    require(uint64_t(M.degree()) == pr.support.size(), Errc::InternalInvariant,
            "closed-form degree disagrees with support size");
    // dimension identity: n - L = q^m / p - 1
    uint64_t qm = pr.n + 1;
    require(pr.n - uint64_t(M.degree()) == qm / field->p() - 1, Errc::InternalInvariant,
            "dimension identity n - L = q^m/p - 1 failed");
    return M;
}

// ---------------------------------------------------------------------------
// Dobbertin exponent machinery
// ---------------------------------------------------------------------------

uint64_t dobbertin_exponent(uint32_t i) {
    require(i >= 1 && i <= 12, Errc::InvalidParameter, "need 1 <= i <= 12");
    return (uint64_t(1) << (4 * i)) + (uint64_t(1) << (3 * i)) + (uint64_t(1) << (2 * i)) +
           (uint64_t(1) << i) - 1;
}

static uint64_t word_mask(uint32_t m) { return (uint64_t(1) << m) - 1; }

bool is_covered(uint64_t x, uint64_t y, uint32_t m) {
    require(m >= 1 && m <= 63, Errc::InvalidParameter, "word length out of range");
    require(x <= word_mask(m) && y <= word_mask(m), Errc::LengthMismatch,
            "word does not fit in m bits");
    return (x & ~y) == 0;
}

uint64_t rotate_right(uint64_t x, uint32_t j, uint32_t m) {
    j %= m;
    if (j == 0) return x & word_mask(m);
    x &= word_mask(m);
    return ((x >> j) | (x << (m - j))) & word_mask(m);
}

uint32_t cover_count(uint64_t x, uint64_t e_pattern, uint32_t m) {
    require(m >= 1 && m <= 63, Errc::InvalidParameter, "word length out of range");
    require(x <= word_mask(m) && e_pattern <= word_mask(m), Errc::LengthMismatch,
            "word does not fit in m bits");
    uint32_t count = 0;
    for (uint32_t j = 0; j < m; ++j)
        count += (rotate_right(x, j, m) & ~e_pattern) == 0;
    return count;
}

bool is_odd_pattern(uint64_t x, uint64_t e_pattern, uint32_t m) {
    return cover_count(x, e_pattern, m) % 2 == 1;
}

RSets build_r_sets(uint32_t i) {
    require(i >= 1 && i <= 12, Errc::InvalidParameter, "need 1 <= i <= 12");
    RSets r;
    r.i = i;
    r.m = 5 * i;
    const uint64_t a2 = uint64_t(1) << (2 * i);
    const uint64_t a3 = uint64_t(1) << (3 * i);
    const uint64_t a4 = uint64_t(1) << (4 * i);

    // one run of length l inside the low block, top bit pinned at i-1,
    // bottom at i-l, interior free; only lengths with l == i (mod 2)
    for (uint32_t l = 2; l <= i; ++l) {
        if ((l % 2) != (i % 2)) continue;
        const uint64_t top = uint64_t(1) << (i - 1);
        const uint64_t bottom = uint64_t(1) << (i - l);
        const uint32_t free_bits = l - 2;
        for (uint64_t fill = 0; fill < (uint64_t(1) << free_bits); ++fill)
            r.low_runs.push_back(top | bottom | (fill << (i - l + 1)));
    }

    // nonempty anchor subset and any low pattern of weight >= 2
    for (uint32_t anchors = 1; anchors < 8; ++anchors) {
        uint64_t high = (anchors & 1 ? a2 : 0) | (anchors & 2 ? a3 : 0) | (anchors & 4 ? a4 : 0);
        for (uint64_t low = 0; low < (uint64_t(1) << i); ++low)
            if (std::popcount(low) >= 2) r.mixed.push_back(high | low);
    }

    for (uint32_t j = 0; j < i; ++j) r.w4.push_back(a4 | a3 | a2 | (uint64_t(1) << j));

    const uint64_t pairs[3] = {a4 | a3, a4 | a2, a3 | a2};
    for (uint64_t high : pairs)
        for (uint32_t j = 1; j < i; ++j) r.w3.push_back(high | (uint64_t(1) << j));

    r.w2 = {a4 | a3, a4 | a2};
    if (i % 2 == 0) r.w1 = {1};
    else r.w0 = {0};

    const uint64_t expect_low_runs = (i % 2 == 0) ? ((uint64_t(1) << i) - 1) / 3
                                                  : ((uint64_t(1) << i) - 2) / 3;
    require(r.low_runs.size() == expect_low_runs, Errc::InternalInvariant, "low-run class size");
    require(r.mixed.size() == 7 * ((uint64_t(1) << i) - i - 1), Errc::InternalInvariant,
            "mixed class size");
    require(r.w4.size() == i, Errc::InternalInvariant, "weight-4 class size");
    require(r.w3.size() == 3 * size_t(i - 1), Errc::InternalInvariant, "weight-3 class size");
    require(r.w2.size() == 2, Errc::InternalInvariant, "weight-2 class size");

    for (const auto* cls : {&r.low_runs, &r.mixed, &r.w4, &r.w3, &r.w2, &r.w1, &r.w0})
        r.all.insert(r.all.end(), cls->begin(), cls->end());
    std::sort(r.all.begin(), r.all.end());
    require(std::adjacent_find(r.all.begin(), r.all.end()) == r.all.end(),
            Errc::InternalInvariant, "classes are not pairwise disjoint");
    return r;
}

uint64_t dobbertin_span(uint32_t i) {
    require(i >= 1 && i <= 12, Errc::InvalidParameter, "need 1 <= i <= 12");
    const uint64_t m = 5 * uint64_t(i);
    const uint64_t pw = uint64_t(1) << i;
    if (i % 2 == 0) return m * (22 * (pw - 1) / 3 - 3 * i);
    return m * (22 * (pw - 2) / 3 - 3 * i + 6) + 1;
}

CoeffProfile dobbertin_support(uint32_t i) {
    require(i >= 1, Errc::InvalidParameter, "need i >= 1");
    require(i <= kDobbertinCap, Errc::UnsupportedSize,
            "rotation-orbit machinery capped at i <= " + std::to_string(kDobbertinCap));
    RSets r = build_r_sets(i);
    const uint32_t m = 5 * i;
    const uint64_t n = (uint64_t(1) << m) - 1;

    CoeffProfile pr;
    pr.e = dobbertin_exponent(i);
    pr.p = 2;
    pr.q = 2;
    pr.m = m;
    pr.n = n;
    pr.coeff.assign(size_t(n), 0);
    for (uint64_t rep : r.all) {
        uint32_t orbit = 0;
        uint64_t cur = rep;
        do {
            require(pr.coeff[size_t(cur)] == 0, Errc::InternalInvariant,
                    "representatives share a rotation orbit");
            pr.coeff[size_t(cur)] = 1;
            ++orbit;
            cur = mulmod_u64(cur, 2, n);  // doubling mod 2^m - 1 rotates the word
        } while (cur != rep);
        require(rep == 0 ? orbit == 1 : orbit == m, Errc::InternalInvariant,
                "orbit size must be m for nonzero words");
    }
    pr.reduced_support = r.all;
    for (uint64_t idx = 0; idx < n; ++idx)
        if (pr.coeff[size_t(idx)]) pr.support.push_back(idx);
    require(pr.support.size() == dobbertin_span(i), Errc::InternalInvariant,
            "support size disagrees with the span formula");
    return pr;
}

Poly minimal_poly_dobbertin(const FieldPtr& field, uint32_t i) {
    require(field->p() == 2 && field->s() == 1 && field->m() == 5 * i, Errc::FieldMismatch,
            "field must be GF(2^(5i))");
    CoeffProfile pr = dobbertin_support(i);
    Poly M = Poly::one(field);
    for (uint64_t rep : pr.reduced_support)
        M = M * minimal_poly_of_element(field, field->alpha_pow(-int64_t(rep)));
    require(uint64_t(M.degree()) == pr.support.size(), Errc::InternalInvariant,
            "closed-form degree disagrees with the span");
    return M;
}

// ---------------------------------------------------------------------------
// Differential uniformity
// ---------------------------------------------------------------------------

uint32_t differential_uniformity(const FieldPtr& field, uint64_t e, uint32_t threads) {
    const uint64_t r = field->order();
    require(r <= kDiffUniformityCap, Errc::UnsupportedSize,
            "brute-force differential sweep capped at p^k <= 2^16");
    const auto& f = *field;
    std::vector<uint32_t> lut(static_cast<size_t>(r));
    for (uint64_t x = 0; x < r; ++x)
        lut[size_t(x)] = f.pow(FieldElem{uint32_t(x), f.id()}, int64_t(e)).rep;

    threads = std::max(1u, std::min(threads, 64u));
    std::vector<uint32_t> maxima(threads, 0);
    auto worker = [&](uint32_t tid) {
        std::vector<uint32_t> count(static_cast<size_t>(r));
        uint32_t best = 0;
        for (uint64_t a = 1 + tid; a < r; a += threads) {
            std::fill(count.begin(), count.end(), 0);
            const FieldElem ae{uint32_t(a), f.id()};
            for (uint64_t x = 0; x < r; ++x) {
                const FieldElem xe{uint32_t(x), f.id()};
                uint32_t d = f.sub(FieldElem{lut[size_t(f.add(xe, ae).rep)], f.id()},
                                   FieldElem{lut[size_t(x)], f.id()})
                                 .rep;
                best = std::max(best, ++count[size_t(d)]);
            }
        }
        maxima[tid] = best;
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (uint32_t tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }
    return *std::max_element(maxima.begin(), maxima.end());
}

}  // namespace apncodes
