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

#ifndef APNCODES_POLYRING_HPP
#define APNCODES_POLYRING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "apncodes/galois.hpp"

namespace apncodes {

/// Dense polynomial with coefficients in a field (in practice the ground
/// field GF(q) embedded in GF(q^m)).  Canonical form: no stored trailing
/// zero coefficients; the zero polynomial is the empty vector and reports
/// degree -1 (standing in for degree minus infinity).
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FieldElem> coeffs);

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(const FieldPtr& f);
    static Poly monomial(const FieldPtr& f, uint64_t deg, FieldElem coef);
    /// Coefficients given as integers in [0, p) (prime-subfield values).
    static Poly from_ints(const FieldPtr& f, const std::vector<uint32_t>& coeffs);
    static Poly x_pow_minus_one(const FieldPtr& f, uint64_t n);

    const FieldPtr& field() const { return f_; }
    int64_t degree() const { return int64_t(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    FieldElem coeff(uint64_t i) const;
    const std::vector<FieldElem>& coeffs() const { return c_; }
    std::vector<uint32_t> coeff_ints() const;  // requires prime-subfield coeffs

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool operator==(const Poly& o) const;

    Poly monic() const;
    /// x^deg * a(1/x), normalized monic; involution when a(0) != 0.
    Poly reciprocal() const;
    FieldElem eval(FieldElem x) const;
    uint64_t weight() const;  // number of nonzero coefficients

    static Poly gcd(Poly a, Poly b);

    /// Text form with descending powers, e.g. "x^6+2x^5+2x^4+2x^2+x+1".
    /// Coefficients outside the prime subfield print as powers of the field
    /// generator ("a^t*x^d").
    std::string to_string() const;
    static Poly parse(const FieldPtr& f, const std::string& text);

   private:
    void normalize();
    void check_same(const Poly& o) const;

    FieldPtr f_;
    std::vector<FieldElem> c_;
};

/// Monic minimal polynomial of gamma over GF(q): the product of
/// (x - gamma^(q^j)) over the distinct conjugates.
Poly minimal_poly_of_element(const FieldPtr& f, FieldElem gamma);

/// Minimal polynomial and linear span of a periodic sequence, computed by
/// the gcd route: M(x) = (x^n - 1) / gcd(x^n - 1, S(x)) with
/// S(x) = s_0 + s_1 x + ... + s_{n-1} x^{n-1}.  Quadratic in n, so capped.
std::pair<Poly, int64_t> sequence_minimal_poly_gcd(const FieldPtr& f,
                                                   const std::vector<FieldElem>& period);

constexpr uint64_t kGcdFormulaCap = 4096;

}  // namespace apncodes

#endif
