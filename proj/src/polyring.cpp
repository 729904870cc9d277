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

#include "apncodes/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace apncodes {

Poly::Poly(FieldPtr f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        require(c.fid == f_->id(), Errc::FieldMismatch, "coefficient from a different field");
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().rep == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    require(f_ && o.f_ && f_->id() == o.f_->id(), Errc::FieldMismatch,
            "polynomials over different fields");
}

Poly Poly::one(const FieldPtr& f) { return Poly(f, {f->one()}); }

Poly Poly::monomial(const FieldPtr& f, uint64_t deg, FieldElem coef) {
    if (f->is_zero(coef)) return Poly(f);
    std::vector<FieldElem> c(size_t(deg) + 1, f->zero());
    c.back() = coef;
    return Poly(f, std::move(c));
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<uint32_t>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (uint32_t v : coeffs) c.push_back(f->from_int(v));
    return Poly(f, std::move(c));
}

Poly Poly::x_pow_minus_one(const FieldPtr& f, uint64_t n) {
    require(n >= 1, Errc::InvalidParameter, "need n >= 1");
    std::vector<FieldElem> c(size_t(n) + 1, f->zero());
    c[0] = f->neg(f->one());
    c.back() = f->one();
    return Poly(f, std::move(c));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].rep == 1; }

bool Poly::is_monic() const { return !c_.empty() && c_.back().rep == 1; }

FieldElem Poly::coeff(uint64_t i) const {
    return i < c_.size() ? c_[i] : f_->zero();
}

std::vector<uint32_t> Poly::coeff_ints() const {
    std::vector<uint32_t> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f_->to_int(c));
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    check_same(o);
    std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<FieldElem> c(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].rep == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].rep == 0) continue;
            c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
        }
    }
    return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same(d);
    require(!d.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    if (c_.size() < d.c_.size()) return {Poly(f_), *this};
    std::vector<FieldElem> rem = c_;
    std::vector<FieldElem> quo(c_.size() - d.c_.size() + 1, f_->zero());
    const FieldElem lead_inv = f_->inv(d.c_.back());
    while (rem.size() >= d.c_.size() && !rem.empty()) {
        if (rem.back().rep == 0) {
            rem.pop_back();
            continue;
        }
        FieldElem c = f_->mul(rem.back(), lead_inv);
        size_t shift = rem.size() - d.c_.size();
        quo[shift] = c;
        for (size_t i = 0; i + 1 < d.c_.size(); ++i)
            rem[shift + i] = f_->sub(rem[shift + i], f_->mul(c, d.c_[i]));
        rem.pop_back();
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

bool Poly::operator==(const Poly& o) const {
    if (!f_ || !o.f_) return c_.empty() && o.c_.empty();
    if (f_->id() != o.f_->id()) return false;
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i].rep != o.c_[i].rep) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    FieldElem s = f_->inv(c_.back());
    std::vector<FieldElem> c(c_.size(), f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
    return Poly(f_, std::move(c));
}

Poly Poly::reciprocal() const {
    require(!is_zero(), Errc::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<FieldElem> c(c_.rbegin(), c_.rend());
    return Poly(f_, std::move(c)).monic();
}

FieldElem Poly::eval(FieldElem x) const {
    FieldElem acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

uint64_t Poly::weight() const {
    uint64_t w = 0;
    for (const auto& c : c_) w += (c.rep != 0);
    return w;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (!a.is_zero() && !b.is_zero()) a.check_same(b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    const auto& f = *f_;
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        FieldElem c = c_[i];
        if (c.rep == 0) continue;
        if (!first) os << "+";
        first = false;
        std::string cs;
        bool needs_star = false;
        if (c.rep == 1) {
            cs = "1";
        } else if (c.rep < f.p()) {
            cs = std::to_string(c.rep);
        } else {
            cs = "a^" + std::to_string(f.dlog(c));
            needs_star = true;
        }
        if (i == 0) {
            os << cs;
        } else {
            if (c.rep != 1) os << cs << (needs_star ? "*" : "");
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly Poly::parse(const FieldPtr& f, const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    require(!t.empty(), Errc::InvalidParameter, "empty polynomial text");
    if (t == "0") return Poly(f);

    std::vector<FieldElem> acc;
    auto add_term = [&](FieldElem coef, uint64_t deg) {
        require(deg <= 1u << 24, Errc::InvalidParameter, "degree out of range");
        if (acc.size() <= deg) acc.resize(size_t(deg) + 1, f->zero());
        acc[deg] = f->add(acc[deg], coef);
    };

    size_t pos = 0;
    auto read_uint = [&]() -> uint64_t {
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        require(pos > start, Errc::InvalidParameter, "expected integer in polynomial text");
        return std::stoull(t.substr(start, pos - start));
    };

    while (pos < t.size()) {
        if (t[pos] == '+') {
            ++pos;
            continue;
        }
        FieldElem coef = f->one();
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
            uint64_t v = read_uint();
            require(v < f->p(), Errc::InvalidParameter, "coefficient not in [0, p)");
            coef = f->from_int(uint32_t(v));
            saw_coef = true;
        } else if (t[pos] == 'a') {
            ++pos;
            uint64_t e = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                e = read_uint();
            }
            coef = f->alpha_pow(int64_t(e));
            saw_coef = true;
        }
        if (pos < t.size() && t[pos] == '*') ++pos;
        uint64_t deg = 0;
        if (pos < t.size() && t[pos] == 'x') {
            ++pos;
            deg = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                deg = read_uint();
            }
        } else {
            require(saw_coef, Errc::InvalidParameter,
                    "unexpected character in polynomial text at position " + std::to_string(pos));
        }
        add_term(coef, deg);
    }
    return Poly(f, std::move(acc));
}

// ---------------------------------------------------------------------------
// Minimal polynomials
// ---------------------------------------------------------------------------

Poly minimal_poly_of_element(const FieldPtr& f, FieldElem gamma) {
    require(!f->is_zero(gamma), Errc::DivisionByZero, "minimal polynomial of zero");
    Poly acc = Poly::one(f);
    FieldElem conj = gamma;
    const int64_t q = int64_t(f->q());
    do {
        acc = acc * Poly(f, {f->neg(conj), f->one()});
        conj = f->pow(conj, q);
    } while (!(conj == gamma));
    for (const auto& c : acc.coeffs())
        require(f->in_subfield(c, f->q()), Errc::InternalInvariant,
                "minimal polynomial coefficient outside GF(q)");
    return acc;
}

std::pair<Poly, int64_t> sequence_minimal_poly_gcd(const FieldPtr& f,
                                                   const std::vector<FieldElem>& period) {
    require(!period.empty(), Errc::EmptySequence, "empty sequence");
    const uint64_t n = f->n();
    require(period.size() == n, Errc::LengthMismatch, "sequence length must be q^m - 1");
    require(n <= kGcdFormulaCap, Errc::UnsupportedSize,
            "gcd-formula route capped at n <= " + std::to_string(kGcdFormulaCap));
    Poly xn1 = Poly::x_pow_minus_one(f, n);
    Poly S(f, period);
    // gcd(x^n - 1, 0) = x^n - 1, so the all-zero sequence lands on (1, 0)
    Poly g = Poly::gcd(xn1, S);
    Poly M = (xn1 / g).monic();
    int64_t span = int64_t(n) - g.degree();
    return {M, span};
}

}  // namespace apncodes
