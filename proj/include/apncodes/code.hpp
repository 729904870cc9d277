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

#ifndef APNCODES_CODE_HPP
#define APNCODES_CODE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apncodes/polyring.hpp"

namespace apncodes {

/// Minimum-distance knowledge: exact value when a full or low-weight search
/// settled it, otherwise the interval [lower, upper].
struct DistanceInfo {
    std::optional<uint64_t> exact;
    uint64_t lower = 1;
    uint64_t upper = 0;

    bool is_exact() const { return exact.has_value(); }
};

enum class DistanceStrategy { Auto, Exhaustive, LowWeight };

/// Cyclic code of length n = q^m - 1 over GF(q), as the ideal generated by
/// a monic divisor g of x^n - 1.  Immutable after construction.
class CyclicCode {
   public:
    static CyclicCode from_generator(const Poly& g, uint64_t n, const FieldPtr& field);

    // caps for the exact searches
    static constexpr uint64_t kExhaustiveCap = uint64_t(1) << 24;  // q^k
    static constexpr uint64_t kLowWeightBudget = uint64_t(1) << 26;
    static constexpr uint64_t kConstructionCap = uint64_t(1) << 16;  // n

    uint64_t n() const { return n_; }
    uint64_t k() const { return k_; }
    const Poly& generator() const { return g_; }
    const Poly& check_poly() const { return h_; }
    const FieldPtr& field() const { return field_; }
    /// Exponents i with g(alpha^i) = 0 (the defining set), sorted.
    const std::vector<uint64_t>& zero_exponents() const { return zeros_; }

    /// Coefficients of message(x) * g(x), zero-padded to length n.
    std::vector<FieldElem> encode(const std::vector<FieldElem>& message) const;

    DistanceInfo min_distance(DistanceStrategy strategy = DistanceStrategy::Auto,
                              uint64_t w_max = 0) const;

    /// Longest run of consecutive defining-set exponents, searched on both
    /// the code and its reciprocal-generator twin (their weight
    /// distributions coincide), plus the even-weight rounding for binary
    /// codes whose generator rows all have even weight.
    uint64_t bch_bound() const;
    /// Hartmann-Tzeng arithmetic-progression search over the same two
    /// defining sets; always at least the consecutive-run bound.
    uint64_t hartmann_tzeng_bound() const;

    CyclicCode dual() const;
    std::map<uint64_t, uint64_t> weight_distribution() const;

   private:
    CyclicCode() = default;

    FieldPtr field_;
    Poly g_, h_;
    uint64_t n_ = 0, k_ = 0;
    std::vector<uint64_t> zeros_;
};

}  // namespace apncodes

#endif
