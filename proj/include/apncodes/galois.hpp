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

#ifndef APNCODES_GALOIS_HPP
#define APNCODES_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "apncodes/errors.hpp"

namespace apncodes {

/// Polynomial arithmetic over GF(p) on plain digit vectors (ascending
/// coefficients, no trailing zeros).  This is the bootstrap layer used to
/// validate a field's defining polynomial before the field itself exists;
/// the element-based Poly class lives in polyring.hpp.
namespace modp {

using PolyP = std::vector<uint32_t>;

PolyP trim(PolyP a);
PolyP add(const PolyP& a, const PolyP& b, uint32_t p);
PolyP sub(const PolyP& a, const PolyP& b, uint32_t p);
PolyP mul(const PolyP& a, const PolyP& b, uint32_t p);
std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, uint32_t p);
PolyP gcd(PolyP a, PolyP b, uint32_t p);
/// x^e mod f, computed by square-and-multiply.
PolyP x_powmod(uint64_t e, const PolyP& f, uint32_t p);
/// Rabin's irreducibility test (exact, no randomness).
bool is_irreducible(const PolyP& f, uint32_t p);

}  // namespace modp

bool is_prime(uint64_t v);
std::vector<uint64_t> prime_factors(uint64_t v);

/// Defining data for GF(p^k) with k = s*m, realized as GF(p)[x]/(modulus).
/// q = p^s is the ground field of the codes; m the extension degree, so the
/// sequence period is n = q^m - 1 = p^k - 1.
struct FieldParams {
    uint32_t p = 2;
    uint32_t s = 1;
    uint32_t m = 1;
    std::vector<uint32_t> modulus;  // ascending, degree k, monic, over GF(p)
    std::vector<uint32_t> alpha;    // power-basis coordinates, length <= k

    /// Text form `p=..,s=..,m=..,mod=c0,..,ck,alpha=c0,..` (ascending coeffs).
    static FieldParams parse(const std::string& spec);
    std::string to_spec() const;
};

/// An element of GF(p^k), stored as the base-p packing of its power-basis
/// coordinates.  `fid` ties the element to the field that created it.
struct FieldElem {
    uint32_t rep = 0;
    uint32_t fid = 0;

    friend bool operator==(FieldElem a, FieldElem b) = default;
};

enum class TableMode { Auto, Require, Never };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable handle for GF(p^k) arithmetic.  Construction verifies that the
/// modulus is irreducible and that alpha generates the full multiplicative
/// group; discrete-log tables are built when p^k <= 2^20 so that mul/inv/pow
/// are O(1) afterwards.  All operations are pure and safe to call
/// concurrently.
class Field : public std::enable_shared_from_this<Field> {
   public:
    static constexpr uint64_t kTableCap = uint64_t(1) << 20;
    static constexpr uint64_t kSizeCap = uint64_t(1) << 32;

    static FieldPtr create(const FieldParams& params, TableMode table = TableMode::Auto);
    /// The built-in parameterizations "ex1".."ex4".
    static FieldPtr preset(const std::string& name);
    /// Deterministic default field: smallest lexicographic monic irreducible
    /// modulus (ascending coefficient order) whose residue x is primitive.
    static FieldPtr auto_field(uint32_t p, uint32_t s, uint32_t m, TableMode table = TableMode::Auto);

    const FieldParams& params() const { return params_; }
    uint32_t p() const { return params_.p; }
    uint32_t s() const { return params_.s; }
    uint32_t m() const { return params_.m; }
    uint32_t k() const { return k_; }
    uint64_t q() const { return q_; }
    uint64_t order() const { return r_; }  // p^k
    uint64_t n() const { return n_; }      // p^k - 1
    uint32_t id() const { return fid_; }
    bool has_table() const { return !exp_.empty(); }
    std::string label() const;  // e.g. "GF(3^2)"

    FieldElem zero() const { return {0, fid_}; }
    FieldElem one() const { return {1, fid_}; }
    FieldElem alpha() const { return alpha_; }

    FieldElem from_coeffs(const std::vector<uint32_t>& coeffs) const;
    std::vector<uint32_t> coeffs(FieldElem a) const;
    /// c * 1 for c in [0, p): the prime-subfield embedding of an integer.
    FieldElem from_int(uint32_t c) const;
    /// Inverse of from_int; requires the element to lie in GF(p).
    uint32_t to_int(FieldElem a) const;

    bool is_zero(FieldElem a) const { check(a); return a.rep == 0; }
    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    /// a^t with t any integer; negative t means pow(inv(a), -t); 0^0 = 1.
    FieldElem pow(FieldElem a, int64_t t) const;
    /// t with alpha^t = a, in [0, p^k - 1).
    uint64_t dlog(FieldElem a) const;
    FieldElem alpha_pow(int64_t t) const;

    /// Relative trace onto GF(q'), q' = p^s' with s' | k: sum of a^(q'^j).
    FieldElem trace_to_subfield(FieldElem a, uint64_t q_sub) const;
    FieldElem trace(FieldElem a) const { return trace_to_subfield(a, q_); }
    bool in_subfield(FieldElem a, uint64_t q_sub) const;
    /// The q elements of GF(q) inside this field: zero first, then the
    /// powers of alpha^(n/(q-1)).
    const std::vector<FieldElem>& subfield_elements() const { return subfield_; }

   private:
    Field() = default;
    void check(FieldElem a) const {
        if (a.fid != fid_) raise(Errc::FieldMismatch, "element belongs to a different field");
    }
    uint32_t digit(uint32_t rep, uint32_t j) const;
    uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free multiply
    uint32_t raw_pow(uint32_t a, uint64_t e) const;

    FieldParams params_;
    uint32_t k_ = 0;
    uint64_t q_ = 0, r_ = 0, n_ = 0;
    uint32_t fid_ = 0;
    FieldElem alpha_{};
    std::vector<uint64_t> ppow_;  // p^j for digit packing
    std::vector<uint32_t> exp_;   // exp_[t] = rep of alpha^t (table mode)
    std::vector<uint32_t> log_;   // log_[rep] = t               (table mode)
    std::vector<FieldElem> subfield_;
};

}  // namespace apncodes

#endif
