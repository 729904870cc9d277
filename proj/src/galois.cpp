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

#include "apncodes/galois.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace apncodes {

namespace modp {

PolyP trim(PolyP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PolyP add(const PolyP& a, const PolyP& b, uint32_t p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    return trim(std::move(r));
}

PolyP sub(const PolyP& a, const PolyP& b, uint32_t p) {
    PolyP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t av = i < a.size() ? a[i] : 0;
        uint32_t bv = i < b.size() ? b[i] : 0;
        r[i] = (av + p - bv) % p;
    }
    return trim(std::move(r));
}

PolyP mul(const PolyP& a, const PolyP& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    return trim(std::move(r));
}

static uint32_t inv_mod(uint32_t a, uint32_t p) {
    // p prime, a != 0
    uint32_t r = 1;
    uint64_t base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = uint32_t(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::pair<PolyP, PolyP> divmod(const PolyP& a, const PolyP& b, uint32_t p) {
    require(!b.empty(), Errc::DivisionByZero, "polynomial division by zero");
    PolyP rem = trim(a);
    if (rem.size() < b.size()) return {{}, std::move(rem)};
    PolyP quo(rem.size() - b.size() + 1, 0);
    const uint32_t lead_inv = inv_mod(b.back(), p);
    while (rem.size() >= b.size() && !rem.empty()) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        uint32_t c = uint32_t(uint64_t(rem.back()) * lead_inv % p);
        size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sube = uint64_t(c) * b[i] % p;
            rem[shift + i] = uint32_t((rem[shift + i] + p - sube) % p);
        }
        rem.pop_back();  // leading term cancelled exactly
    }
    return {trim(std::move(quo)), trim(std::move(rem))};
}

PolyP gcd(PolyP a, PolyP b, uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        PolyP r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        uint32_t s = inv_mod(a.back(), p);
        for (auto& c : a) c = uint32_t(uint64_t(c) * s % p);
    }
    return a;
}

PolyP x_powmod(uint64_t e, const PolyP& f, uint32_t p) {
    PolyP result{1};
    PolyP base{0, 1};
    base = divmod(base, f, p).second;
    while (e) {
        if (e & 1) result = divmod(mul(result, base, p), f, p).second;
        base = divmod(mul(base, base, p), f, p).second;
        e >>= 1;
    }
    return result;
}

bool is_irreducible(const PolyP& f, uint32_t p) {
    if (f.size() < 2) return false;  // constants are not irreducible
    const uint32_t deg = uint32_t(f.size() - 1);
    if (deg == 1) return true;
    // x^(p^deg) == x mod f
    uint64_t pk = 1;
    for (uint32_t i = 0; i < deg; ++i) pk *= p;
    PolyP xq = x_powmod(pk, f, p);
    if (trim(sub(xq, PolyP{0, 1}, p)) != PolyP{}) return false;
    // gcd(x^(p^(deg/t)) - x, f) == 1 for every prime t | deg
    for (uint64_t t : prime_factors(deg)) {
        uint64_t pe = 1;
        for (uint32_t i = 0; i < deg / t; ++i) pe *= p;
        PolyP g = gcd(sub(x_powmod(pe, f, p), PolyP{0, 1}, p), f, p);
        if (g != PolyP{1}) return false;
    }
    return true;
}

}  // namespace modp

const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::UnsupportedSize: return "UnsupportedSize";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::NotASubfield: return "NotASubfield";
        case Errc::EmptySequence: return "EmptySequence";
        case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::InvalidModulus: return "InvalidModulus";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::InternalInvariant: return "InternalInvariant";
    }
    return "UnknownError";
}

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// FieldParams text form
// ---------------------------------------------------------------------------

FieldParams FieldParams::parse(const std::string& spec) {
    FieldParams fp;
    fp.modulus.clear();
    fp.alpha.clear();
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    tokens.push_back(cur);

    std::string key;
    bool saw_p = false, saw_s = false, saw_m = false;
    auto to_u32 = [](const std::string& t) -> uint32_t {
        require(!t.empty() && t.find_first_not_of("0123456789") == std::string::npos,
                Errc::InvalidParameter, "bad integer '" + t + "' in field spec");
        return uint32_t(std::stoul(t));
    };
    for (const auto& tok : tokens) {
        std::string value = tok;
        auto eq = tok.find('=');
        if (eq != std::string::npos) {
            key = tok.substr(0, eq);
            value = tok.substr(eq + 1);
        }
        if (key == "p") { fp.p = to_u32(value); saw_p = true; }
        else if (key == "s") { fp.s = to_u32(value); saw_s = true; }
        else if (key == "m") { fp.m = to_u32(value); saw_m = true; }
        else if (key == "mod") fp.modulus.push_back(to_u32(value));
        else if (key == "alpha") fp.alpha.push_back(to_u32(value));
        else raise(Errc::InvalidParameter, "unknown field-spec key '" + key + "'");
    }
    require(saw_p && saw_s && saw_m, Errc::InvalidParameter, "field spec needs p=, s=, m=");
    require(!fp.modulus.empty(), Errc::InvalidParameter, "field spec needs mod=");
    if (fp.alpha.empty()) fp.alpha = {0, 1};  // default alpha = x
    return fp;
}

std::string FieldParams::to_spec() const {
    std::ostringstream os;
    os << "p=" << p << ",s=" << s << ",m=" << m << ",mod=";
    for (size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
    os << ",alpha=";
    for (size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    return os.str();
}

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

static std::atomic<uint32_t> g_next_fid{1};

uint32_t Field::digit(uint32_t rep, uint32_t j) const {
    return uint32_t((rep / ppow_[j]) % params_.p);
}

static uint64_t mod_exponent(int64_t t, uint64_t n) {
    if (t >= 0) return uint64_t(t) % n;
    uint64_t mag = uint64_t(-(t + 1)) + 1;  // |t| without overflow
    uint64_t red = mag % n;
    return red == 0 ? 0 : n - red;
}

FieldPtr Field::create(const FieldParams& params, TableMode table) {
    require(is_prime(params.p), Errc::InvalidParameter, "p must be prime");
    require(params.s >= 1 && params.m >= 1, Errc::InvalidParameter, "need s >= 1 and m >= 1");

    auto f = std::shared_ptr<Field>(new Field());
    f->params_ = params;
    f->k_ = params.s * params.m;
    const uint32_t p = params.p;
    const uint32_t k = f->k_;

    uint64_t q = 1, r = 1;
    for (uint32_t i = 0; i < params.s; ++i) q *= p;
    for (uint32_t i = 0; i < k; ++i) {
        r *= p;
        require(r <= kSizeCap, Errc::UnsupportedSize, "p^k exceeds 2^32");
    }
    f->q_ = q;
    f->r_ = r;
    f->n_ = r - 1;

    // modulus: monic degree k over GF(p)
    const auto& mod = params.modulus;
    require(mod.size() == size_t(k) + 1, Errc::InvalidModulus, "modulus degree must be s*m");
    require(mod.back() == 1, Errc::InvalidModulus, "modulus must be monic");
    for (uint32_t c : mod) require(c < p, Errc::InvalidModulus, "modulus coefficient out of range");
    require(modp::is_irreducible(mod, p), Errc::NotIrreducible, "modulus is reducible over GF(p)");

    f->ppow_.resize(k + 1);
    f->ppow_[0] = 1;
    for (uint32_t j = 1; j <= k; ++j) f->ppow_[j] = f->ppow_[j - 1] * uint64_t(p);
    f->fid_ = g_next_fid.fetch_add(1);

    // alpha: reduce the given coordinates (allow shorter vectors, pad zeros)
    require(params.alpha.size() <= k + 1, Errc::InvalidParameter, "alpha vector too long");
    std::vector<uint32_t> acoef(params.alpha);
    for (uint32_t c : acoef) require(c < p, Errc::InvalidParameter, "alpha coefficient out of range");
    acoef.resize(k + 1, 0);
    if (acoef[k] != 0) {  // degree-k coordinate: reduce by modulus once
        uint32_t lead = acoef[k];
        for (uint32_t j = 0; j < k; ++j)
            acoef[j] = uint32_t((acoef[j] + uint64_t(p - lead) * mod[j]) % p);
        acoef[k] = 0;
    }
    uint32_t arep = 0;
    for (uint32_t j = 0; j < k; ++j) arep += uint32_t(acoef[j] * f->ppow_[j]);
    require(arep != 0, Errc::InvalidParameter, "alpha must be nonzero");
    f->alpha_ = {arep, f->fid_};

    const bool want_table = (table == TableMode::Require) ||
                            (table == TableMode::Auto && r <= kTableCap);
    if (table == TableMode::Require && r > kTableCap)
        raise(Errc::UnsupportedSize, "discrete-log table demanded but p^k > 2^20");

    if (want_table) {
        f->exp_.assign(size_t(f->n_), 0);
        f->log_.assign(size_t(r), 0);
        std::vector<uint32_t> cur(k, 0), nxt(k, 0), adig(k, 0);
        cur[0] = 1;
        for (uint32_t j = 0; j < k; ++j) adig[j] = acoef[j];
        const bool alpha_is_x = (k > 1 && arep == p);
        for (uint64_t t = 0; t < f->n_; ++t) {
            uint32_t rep = 0;
            for (uint32_t j = 0; j < k; ++j) rep += uint32_t(cur[j] * f->ppow_[j]);
            if (rep == 1 && t > 0)
                raise(Errc::NotPrimitive, "alpha order divides " + std::to_string(t));
            f->exp_[size_t(t)] = rep;
            f->log_[rep] = uint32_t(t);
            if (alpha_is_x) {
                uint32_t lead = cur[k - 1];
                for (uint32_t j = k; j-- > 1;) cur[j] = cur[j - 1];
                cur[0] = 0;
                if (lead)
                    for (uint32_t j = 0; j < k; ++j)
                        cur[j] = uint32_t((cur[j] + uint64_t(p - lead) * mod[j]) % p);
            } else {
                // schoolbook cur * alpha, reduced by the monic modulus
                std::vector<uint32_t> prod(2 * k - 1, 0);
                for (uint32_t i = 0; i < k; ++i) {
                    if (!cur[i]) continue;
                    for (uint32_t j = 0; j < k; ++j)
                        prod[i + j] = uint32_t((prod[i + j] + uint64_t(cur[i]) * adig[j]) % p);
                }
                for (uint32_t d = 2 * k - 1; d-- > k;) {
                    uint32_t lead = prod[d];
                    if (!lead) continue;
                    prod[d] = 0;
                    for (uint32_t j = 0; j <= k; ++j)
                        prod[d - k + j] = uint32_t((prod[d - k + j] + uint64_t(p - lead) * mod[j]) % p);
                }
                std::copy(prod.begin(), prod.begin() + k, nxt.begin());
                cur.swap(nxt);
            }
        }
        // closing the cycle: alpha^n must come back to 1
        uint32_t wrap = 0;
        for (uint32_t j = 0; j < k; ++j) wrap += uint32_t(cur[j] * f->ppow_[j]);
        require(wrap == 1, Errc::InternalInvariant, "alpha^n != 1 after table build");
    } else {
        // verify alpha order without a table
        for (uint64_t ell : prime_factors(f->n_))
            if (f->raw_pow(arep, f->n_ / ell) == 1)
                raise(Errc::NotPrimitive, "alpha order divides n/" + std::to_string(ell));
        require(f->raw_pow(arep, f->n_) == 1, Errc::InternalInvariant, "alpha^n != 1");
    }

    // enumerate GF(q) inside GF(p^k): zero plus powers of alpha^(n/(q-1))
    f->subfield_.push_back(f->zero());
    FieldElem beta = f->alpha_pow(int64_t(f->n_ / (q - 1)));
    FieldElem cur = f->one();
    for (uint64_t j = 0; j + 1 < q; ++j) {
        f->subfield_.push_back(cur);
        cur = f->mul(cur, beta);
    }
    require(cur == f->one(), Errc::InternalInvariant, "subfield enumeration did not close");
    return f;
}

FieldPtr Field::preset(const std::string& name) {
    FieldParams fp;
    if (name == "ex1") {
        fp = {3, 1, 2, {2, 2, 1}, {0, 1}};
    } else if (name == "ex2") {
        fp = {3, 1, 3, {1, 2, 0, 1}, {0, 1}};
    } else if (name == "ex3") {
        fp = {2, 1, 5, {1, 0, 1, 0, 0, 1}, {0, 1}};
    } else if (name == "ex4") {
        fp = {2, 1, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}, {0, 1}};
    } else {
        raise(Errc::InvalidParameter, "unknown preset '" + name + "'");
    }
    return create(fp);
}

FieldPtr Field::auto_field(uint32_t p, uint32_t s, uint32_t m, TableMode table) {
    require(is_prime(p), Errc::InvalidParameter, "p must be prime");
    require(s >= 1 && m >= 1, Errc::InvalidParameter, "need s >= 1 and m >= 1");
    const uint32_t k = s * m;
    uint64_t count = 1;
    for (uint32_t i = 0; i < k; ++i) {
        count *= p;
        require(count <= kSizeCap, Errc::UnsupportedSize, "p^k exceeds 2^32");
    }
    for (uint64_t lower = 0; lower < count; ++lower) {
        modp::PolyP f(k + 1, 0);
        uint64_t v = lower;
        for (uint32_t j = 0; j < k; ++j) {
            f[j] = uint32_t(v % p);
            v /= p;
        }
        f[k] = 1;
        if (f[0] == 0) continue;  // x | f, so x cannot generate the group
        if (!modp::is_irreducible(f, p)) continue;
        FieldParams fp{p, s, m, f, {0, 1}};
        try {
            return create(fp, table);
        } catch (const Error& e) {
            if (e.code() != Errc::NotPrimitive) throw;
        }
    }
    raise(Errc::InternalInvariant, "no irreducible polynomial with primitive x found");
}

std::string Field::label() const {
    std::ostringstream os;
    os << "GF(" << params_.p;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Element arithmetic
// ---------------------------------------------------------------------------

FieldElem Field::from_coeffs(const std::vector<uint32_t>& coeffs) const {
    require(coeffs.size() <= k_, Errc::InvalidParameter, "coefficient vector longer than k");
    uint32_t rep = 0;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        require(coeffs[j] < params_.p, Errc::InvalidParameter, "coefficient out of range");
        rep += uint32_t(coeffs[j] * ppow_[j]);
    }
    return {rep, fid_};
}

std::vector<uint32_t> Field::coeffs(FieldElem a) const {
    check(a);
    std::vector<uint32_t> out(k_);
    for (uint32_t j = 0; j < k_; ++j) out[j] = digit(a.rep, j);
    return out;
}

FieldElem Field::from_int(uint32_t c) const {
    require(c < params_.p, Errc::InvalidParameter, "integer not in [0, p)");
    return {c, fid_};
}

uint32_t Field::to_int(FieldElem a) const {
    check(a);
    require(a.rep < params_.p, Errc::InvalidParameter, "element not in the prime subfield");
    return a.rep;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (params_.p == 2) return {a.rep ^ b.rep, fid_};
    uint32_t rep = 0;
    for (uint32_t j = 0; j < k_; ++j)
        rep += uint32_t((digit(a.rep, j) + digit(b.rep, j)) % params_.p * ppow_[j]);
    return {rep, fid_};
}

FieldElem Field::neg(FieldElem a) const {
    check(a);
    if (params_.p == 2) return a;
    uint32_t rep = 0;
    for (uint32_t j = 0; j < k_; ++j)
        rep += uint32_t(uint64_t((params_.p - digit(a.rep, j)) % params_.p) * ppow_[j]);
    return {rep, fid_};
}

uint32_t Field::raw_mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const uint32_t p = params_.p;
    std::vector<uint32_t> prod(2 * k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t ai = digit(a, i);
        if (!ai) continue;
        for (uint32_t j = 0; j < k_; ++j)
            prod[i + j] = uint32_t((prod[i + j] + uint64_t(ai) * digit(b, j)) % p);
    }
    for (uint32_t d = 2 * k_ - 1; d-- > k_;) {
        uint32_t lead = prod[d];
        if (!lead) continue;
        prod[d] = 0;
        for (uint32_t j = 0; j <= k_; ++j)
            prod[d - k_ + j] = uint32_t((prod[d - k_ + j] + uint64_t(p - lead) * params_.modulus[j]) % p);
    }
    uint32_t rep = 0;
    for (uint32_t j = 0; j < k_; ++j) rep += uint32_t(prod[j] * ppow_[j]);
    return rep;
}

uint32_t Field::raw_pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    e %= n_;
    uint32_t result = 1, base = a;
    while (e) {
        if (e & 1) result = raw_mul(result, base);
        base = raw_mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a.rep == 0 || b.rep == 0) return zero();
    if (has_table()) {
        uint64_t t = log_[a.rep] + uint64_t(log_[b.rep]);
        if (t >= n_) t -= n_;
        return {exp_[size_t(t)], fid_};
    }
    return {raw_mul(a.rep, b.rep), fid_};
}

FieldElem Field::inv(FieldElem a) const {
    check(a);
    require(a.rep != 0, Errc::DivisionByZero, "inverse of zero");
    if (has_table()) {
        uint64_t t = (n_ - log_[a.rep]) % n_;
        return {exp_[size_t(t)], fid_};
    }
    return {raw_pow(a.rep, n_ - 1), fid_};  // a^(r-2) = a^(n-1)
}

FieldElem Field::pow(FieldElem a, int64_t t) const {
    check(a);
    if (a.rep == 0) {
        if (t == 0) return one();
        require(t > 0, Errc::DivisionByZero, "negative power of zero");
        return zero();
    }
    uint64_t e = mod_exponent(t, n_);
    if (has_table()) {
        uint64_t lg = uint64_t((unsigned __int128)(log_[a.rep]) * e % n_);
        return {exp_[size_t(lg)], fid_};
    }
    return {raw_pow(a.rep, e), fid_};
}

uint64_t Field::dlog(FieldElem a) const {
    check(a);
    require(a.rep != 0, Errc::DivisionByZero, "discrete log of zero");
    if (has_table()) return log_[a.rep];
    // table-free fallback: linear sweep (documented O(n))
    uint32_t cur = 1;
    for (uint64_t t = 0; t < n_; ++t) {
        if (cur == a.rep) return t;
        cur = raw_mul(cur, alpha_.rep);
    }
    raise(Errc::InternalInvariant, "dlog sweep failed");
}

FieldElem Field::alpha_pow(int64_t t) const {
    uint64_t e = mod_exponent(t, n_);
    if (has_table()) return {exp_[size_t(e)], fid_};
    return {raw_pow(alpha_.rep, e), fid_};
}

FieldElem Field::trace_to_subfield(FieldElem a, uint64_t q_sub) const {
    check(a);
    uint32_t s_sub = 0;
    uint64_t v = q_sub;
    while (v > 1 && v % params_.p == 0) {
        v /= params_.p;
        ++s_sub;
    }
    require(v == 1 && s_sub >= 1, Errc::NotASubfield, "q is not a power of p");
    require(k_ % s_sub == 0, Errc::NotASubfield, "GF(q) is not a subfield");
    const uint32_t terms = k_ / s_sub;
    FieldElem acc = a, cur = a;
    for (uint32_t j = 1; j < terms; ++j) {
        cur = pow(cur, int64_t(q_sub));
        acc = add(acc, cur);
    }
    require(pow(acc, int64_t(q_sub)) == acc, Errc::InternalInvariant, "trace left the subfield");
    return acc;
}

bool Field::in_subfield(FieldElem a, uint64_t q_sub) const {
    check(a);
    return pow(a, int64_t(q_sub)) == a;
}

}  // namespace apncodes
