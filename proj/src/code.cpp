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

#include "apncodes/code.hpp"

#include <algorithm>
#include <numeric>

namespace apncodes {

CyclicCode CyclicCode::from_generator(const Poly& g, uint64_t n, const FieldPtr& field) {
    require(n == field->n(), Errc::InvalidParameter, "code length must equal q^m - 1");
    require(n <= kConstructionCap, Errc::UnsupportedSize,
            "code construction capped at n <= " + std::to_string(kConstructionCap));
    require(!g.is_zero() && g.is_monic(), Errc::InvalidParameter, "generator must be monic");
    require(g.field()->id() == field->id(), Errc::FieldMismatch, "generator over a different field");
    for (const auto& c : g.coeffs())
        require(field->in_subfield(c, field->q()), Errc::InvalidParameter,
                "generator coefficients must lie in GF(q)");

    CyclicCode code;
    code.field_ = field;
    code.n_ = n;
    code.g_ = g;
    auto [h, rem] = Poly::x_pow_minus_one(field, n).divmod(g);
    require(rem.is_zero(), Errc::NotADivisor, "generator does not divide x^n - 1");
    code.h_ = h;
    code.k_ = n - uint64_t(g.degree());
    for (uint64_t i = 0; i < n; ++i)
        if (field->is_zero(g.eval(field->alpha_pow(int64_t(i))))) code.zeros_.push_back(i);
    require(code.zeros_.size() == uint64_t(g.degree()), Errc::InternalInvariant,
            "defining set size must equal deg g");
    return code;
}

std::vector<FieldElem> CyclicCode::encode(const std::vector<FieldElem>& message) const {
    require(message.size() == k_, Errc::LengthMismatch, "message length must equal k");
    const auto& f = *field_;
    for (const auto& c : message)
        require(f.in_subfield(c, f.q()), Errc::InvalidParameter, "message symbol outside GF(q)");
    std::vector<FieldElem> out(size_t(n_), f.zero());
    const auto& gc = g_.coeffs();
    for (size_t i = 0; i < message.size(); ++i) {
        if (message[i].rep == 0) continue;
        for (size_t j = 0; j < gc.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(message[i], gc[j]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Distance machinery
// ---------------------------------------------------------------------------

namespace {

uint64_t sat_pow(uint64_t base, uint64_t e, uint64_t cap) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

// number of low-weight candidates: sum_{t<=w} C(n,t) (q-1)^(t-1), saturated
uint64_t low_weight_budget(uint64_t n, uint64_t q, uint64_t w, uint64_t cap) {
    uint64_t total = 0;
    for (uint64_t t = 1; t <= w; ++t) {
        long double candidates = 1.0L;
        for (uint64_t j = 0; j < t; ++j) candidates = candidates * (long double)(n - j) / (j + 1);
        for (uint64_t j = 0; j + 1 < t; ++j) candidates *= (long double)(q - 1);
        if (candidates > (long double)cap) return cap + 1;
        total += uint64_t(candidates);
        if (total > cap) return cap + 1;
    }
    return total;
}

}  // namespace

/// Walks every message of GF(q)^k in odometer order, maintaining the
/// codeword message(x)*g(x) and its weight incrementally.
template <typename Fn>
static void for_each_codeword_weight(const CyclicCode& code, Fn&& fn) {
    const auto& f = *code.field();
    const auto& elems = f.subfield_elements();
    const auto& gc = code.generator().coeffs();
    const uint64_t k = code.k();
    const uint64_t q = f.q();

    std::vector<uint32_t> idx(size_t(k), 0);
    std::vector<FieldElem> cw(size_t(code.n()), f.zero());
    uint64_t weight = 0;
    fn(uint64_t(0));  // zero message
    while (true) {
        size_t j = 0;
        while (j < k && idx[j] + 1 == q) ++j;
        if (j == k) break;
        // digits 0..j-1 wrap to 0, digit j increments
        for (size_t t = 0; t <= j; ++t) {
            uint32_t old = idx[t];
            uint32_t fresh = (t == j) ? old + 1 : 0;
            idx[t] = fresh;
            FieldElem delta = f.sub(elems[fresh], elems[old]);
            if (delta.rep == 0) continue;
            for (size_t u = 0; u < gc.size(); ++u) {
                if (gc[u].rep == 0) continue;
                FieldElem& slot = cw[t + u];
                weight -= (slot.rep != 0);
                slot = f.add(slot, f.mul(delta, gc[u]));
                weight += (slot.rep != 0);
            }
        }
        fn(weight);
    }
}

DistanceInfo CyclicCode::min_distance(DistanceStrategy strategy, uint64_t w_max) const {
    if (k_ == 0) return {std::nullopt, n_ + 1, n_ + 1};  // zero code, no nonzero words
    if (g_.degree() == 0) return {uint64_t(1), 1, 1};    // full space
    const uint64_t singleton = n_ - k_ + 1;
    const uint64_t qk = sat_pow(field_->q(), k_, kExhaustiveCap);

    auto exhaustive = [&]() -> DistanceInfo {
        require(qk <= kExhaustiveCap, Errc::UnsupportedSize,
                "exhaustive distance needs q^k <= 2^24");
        uint64_t best = n_ + 1;
        for_each_codeword_weight(*this, [&](uint64_t w) {
            if (w != 0 && w < best) best = w;
        });
        return {best, best, best};
    };

    auto low_weight = [&](uint64_t wm) -> DistanceInfo {
        require(wm >= 1, Errc::InvalidParameter, "w_max must be >= 1");
        wm = std::min(wm, n_);
        require(low_weight_budget(n_, field_->q(), wm, kLowWeightBudget) <= kLowWeightBudget,
                Errc::UnsupportedSize, "low-weight search budget exceeded");
        const auto& f = *field_;
        const size_t dg = size_t(g_.degree());
        // x^j mod g for every coordinate
        std::vector<std::vector<FieldElem>> synd(static_cast<size_t>(n_));
        std::vector<FieldElem> cur(dg, f.zero());
        cur[0] = f.one();
        const auto& gc = g_.coeffs();
        for (uint64_t j = 0; j < n_; ++j) {
            synd[size_t(j)] = cur;
            FieldElem top = cur[dg - 1];
            for (size_t t = dg - 1; t > 0; --t) cur[t] = cur[t - 1];
            cur[0] = f.zero();
            if (top.rep != 0)
                for (size_t t = 0; t < dg; ++t) cur[t] = f.sub(cur[t], f.mul(top, gc[t]));
        }
        const auto& elems = f.subfield_elements();  // elems[0] = 0, elems[1] = 1
        const uint64_t q = f.q();
        std::vector<FieldElem> acc(dg, f.zero());
        for (uint64_t w = 1; w <= wm; ++w) {
            std::vector<uint64_t> pos(static_cast<size_t>(w));
            std::iota(pos.begin(), pos.end(), 0);
            std::vector<uint32_t> coefsel(size_t(w), 1);  // indices 1..q-1 into elems
            while (true) {
                // scan coefficient patterns with the lowest position pinned to 1
                while (true) {
                    std::fill(acc.begin(), acc.end(), f.zero());
                    for (uint64_t t = 0; t < w; ++t) {
                        FieldElem c = (t == 0) ? f.one() : elems[coefsel[size_t(t)]];
                        const auto& sd = synd[size_t(pos[size_t(t)])];
                        for (size_t u = 0; u < dg; ++u) acc[u] = f.add(acc[u], f.mul(c, sd[u]));
                    }
                    bool zero = std::all_of(acc.begin(), acc.end(),
                                            [](FieldElem e) { return e.rep == 0; });
                    if (zero) return {w, w, w};
                    size_t t = 1;
                    while (t < w && coefsel[t] + 1 == q) coefsel[t++] = 1;
                    if (t >= w) break;
                    ++coefsel[t];
                }
                // next support combination
                size_t t = w;
                while (t-- > 0) {
                    if (pos[t] + (w - t) <= n_ - 1) {
                        ++pos[t];
                        for (size_t u = t + 1; u < w; ++u) pos[u] = pos[u - 1] + 1;
                        break;
                    }
                    if (t == 0) goto next_weight;
                }
            }
        next_weight:;
        }
        return {std::nullopt, wm + 1, singleton};
    };

    switch (strategy) {
        case DistanceStrategy::Exhaustive:
            return exhaustive();
        case DistanceStrategy::LowWeight:
            return low_weight(w_max == 0 ? 4 : w_max);
        case DistanceStrategy::Auto: {
            if (qk <= kExhaustiveCap) return exhaustive();
            // candidate count weighted by per-candidate syndrome cost, so
            // wide-symbol codes do not stall on a hopeless search
            const uint64_t op_budget = uint64_t(1) << 28;
            const uint64_t per_candidate = uint64_t(g_.degree() + 1);
            uint64_t wm = 0;
            while (wm < n_ &&
                   low_weight_budget(n_, field_->q(), wm + 1, kLowWeightBudget) <=
                       kLowWeightBudget &&
                   low_weight_budget(n_, field_->q(), wm + 1,
                                     op_budget / ((wm + 1) * per_candidate) + 1) <=
                       op_budget / ((wm + 1) * per_candidate))
                ++wm;
            DistanceInfo di =
                wm >= 1 ? low_weight(wm) : DistanceInfo{std::nullopt, 1, singleton};
            if (!di.is_exact()) {
                di.lower = std::max(di.lower, bch_bound());
                if (n_ <= 4096) di.lower = std::max(di.lower, hartmann_tzeng_bound());
                di.upper = singleton;
            }
            return di;
        }
    }
    raise(Errc::InvalidParameter, "unknown distance strategy");
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

namespace {

// longest cyclic run of consecutive true entries; n if all true
uint64_t longest_cyclic_run(const std::vector<char>& in) {
    const uint64_t n = in.size();
    if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) return n;
    uint64_t best = 0, cur = 0;
    for (uint64_t t = 0; t < 2 * n; ++t) {
        if (in[size_t(t % n)]) {
            ++cur;
            best = std::max(best, std::min(cur, n));
        } else {
            cur = 0;
        }
    }
    return best;
}

std::vector<char> membership(const std::vector<uint64_t>& zs, uint64_t n) {
    std::vector<char> in(size_t(n), 0);
    for (uint64_t z : zs) in[size_t(z)] = 1;
    return in;
}

std::vector<uint64_t> negate_set(const std::vector<uint64_t>& zs, uint64_t n) {
    std::vector<uint64_t> out;
    out.reserve(zs.size());
    for (uint64_t z : zs) out.push_back((n - z) % n);
    std::sort(out.begin(), out.end());
    return out;
}

constexpr uint64_t kHtGridCap = 128;  // full (delta, s) grid search below this n

}  // namespace

uint64_t CyclicCode::bch_bound() const {
    uint64_t best = 0;
    for (const auto& zs : {zeros_, negate_set(zeros_, n_)})
        best = std::max(best, longest_cyclic_run(membership(zs, n_)));
    uint64_t delta = best + 1;
    // an even-weight binary code has even minimum distance
    if (field_->q() == 2 && g_.weight() % 2 == 0 && delta % 2 == 1 && delta <= n_) ++delta;
    return delta;
}

uint64_t CyclicCode::hartmann_tzeng_bound() const {
    require(n_ <= 4096, Errc::UnsupportedSize,
            "arithmetic-progression bound search capped at n <= 4096");
    const uint64_t n = n_;
    uint64_t best = 1;
    for (const auto& zs : {zeros_, negate_set(zeros_, n_)}) {
        if (zs.empty()) continue;
        if (zs.size() == n) {
            best = std::max(best, n + 1);
            continue;
        }
        std::vector<char> in = membership(zs, n);
        std::vector<uint64_t> order(static_cast<size_t>(n)), runlen(static_cast<size_t>(n));
        for (uint64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            // visit the step-a cycle and record, per residue, the length of
            // the run of defining-set members starting there
            uint64_t cur = 0;
            for (uint64_t j = 0; j < n; ++j) {
                order[size_t(j)] = cur;
                cur = (cur + a) % n;
            }
            uint64_t maxrun = 0, carry = 0;
            for (uint64_t rep = 0; rep < 2; ++rep) {
                for (uint64_t j = n; j-- > 0;) {
                    uint64_t b = order[size_t(j)];
                    carry = in[size_t(b)] ? std::min(carry + 1, n) : 0;
                    runlen[size_t(b)] = carry;
                    if (rep) maxrun = std::max(maxrun, carry);
                }
            }
            best = std::max(best, maxrun + 1);
            if (n > kHtGridCap) continue;
            // two-dimensional grids: delta-1 consecutive steps of a repeated
            // along s+1 consecutive steps of c, with gcd(c, n) < delta
            std::vector<char> good(static_cast<size_t>(n));
            for (uint64_t delta = 2; delta <= maxrun + 1; ++delta) {
                for (uint64_t b = 0; b < n; ++b) good[size_t(b)] = runlen[size_t(b)] >= delta - 1;
                for (uint64_t c = 1; c < n; ++c) {
                    const uint64_t g = std::gcd(c, n);
                    if (g >= delta) continue;
                    const uint64_t cyc = n / g;
                    for (uint64_t start = 0; start < g; ++start) {
                        uint64_t run = 0, longest = 0;
                        const uint64_t limit = 2 * cyc;
                        bool full = true;
                        for (uint64_t step = 0; step < limit; ++step) {
                            uint64_t b = (start + step * c) % n;
                            if (good[size_t(b)]) {
                                run = std::min(run + 1, cyc);
                                longest = std::max(longest, run);
                            } else {
                                run = 0;
                                full = false;
                            }
                        }
                        if (full) longest = cyc;
                        if (longest >= 1) best = std::max(best, delta + longest - 1);
                    }
                }
            }
        }
    }
    if (field_->q() == 2 && g_.weight() % 2 == 0 && best % 2 == 1 && best <= n_) ++best;
    return best;
}

CyclicCode CyclicCode::dual() const {
    return from_generator(h_.reciprocal(), n_, field_);
}

std::map<uint64_t, uint64_t> CyclicCode::weight_distribution() const {
    const uint64_t qk = sat_pow(field_->q(), k_, kExhaustiveCap);
    require(qk <= kExhaustiveCap, Errc::UnsupportedSize,
            "weight distribution needs q^k <= 2^24");
    std::map<uint64_t, uint64_t> hist;
    for_each_codeword_weight(*this, [&](uint64_t w) { ++hist[w]; });
    return hist;
}

}  // namespace apncodes
