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

#include "apncodes/report.hpp"

#include <json.hpp>
#include <sstream>

#include "apncodes/cyclotomic.hpp"

namespace apncodes {

const char* family_name(Family f) noexcept {
    return f == Family::InverseApn ? "inverse-apn" : "dobbertin";
}

static constexpr uint64_t kBmOracleCap = 65536;
static constexpr uint64_t kDualBuildCap = 4096;

Report build_report(const FieldPtr& field, Family family, uint32_t dob_i,
                    DistanceStrategy strategy, uint64_t w_max) {
    Report r;
    r.family = family;
    r.field_spec = field->params().to_spec();
    r.p = field->p();
    r.q = field->q();
    r.m = field->m();
    r.n = field->n();

    Poly closed(field);
    if (family == Family::Dobbertin) {
        require(field->p() == 2 && field->s() == 1 && field->m() % 5 == 0, Errc::FieldMismatch,
                "dobbertin family needs GF(2^(5i))");
        if (dob_i == 0) dob_i = field->m() / 5;
        require(field->m() == 5 * dob_i, Errc::FieldMismatch, "field degree must be 5i");
        r.dob_i = dob_i;
        r.e = dobbertin_exponent(dob_i);
        CoeffProfile pr = dobbertin_support(dob_i);
        r.reduced_support = pr.reduced_support;
        closed = minimal_poly_dobbertin(field, dob_i);
    } else {
        require(dob_i == 0, Errc::InvalidParameter, "--i only applies to the dobbertin family");
        r.e = r.n - 1;  // q^m - 2
        CoeffProfile pr = inverse_apn_support(field->q(), field->m(), field->p());
        r.reduced_support = pr.reduced_support;
        closed = minimal_poly_inverse_apn(field);
    }
    r.span = closed.degree();
    r.minpoly = closed.to_string();
    r.minpoly_coeffs = closed.coeffs();

    if (r.n <= kBmOracleCap) {
        Sequence seq = gen_sequence(field, r.e);
        auto [bm_poly, bm_span] = berlekamp_massey(seq);
        r.bm_match = (bm_poly == closed) && (bm_span == r.span);
        if (r.n <= kGcdFormulaCap) {
            auto [gcd_poly, gcd_span] = minimal_poly_gcd_formula(seq);
            r.gcd_match = (gcd_poly == closed) && (gcd_span == r.span);
        }
    }
    r.status = r.all_oracles_ok() ? "verified" : "unchecked";
    if ((r.bm_match && !*r.bm_match) || (r.gcd_match && !*r.gcd_match)) r.status = "mismatch";

    if (r.n <= CyclicCode::kConstructionCap) {
        CyclicCode code = CyclicCode::from_generator(closed, r.n, field);
        r.has_code = true;
        r.code_n = code.n();
        r.code_k = code.k();
        r.dist = code.min_distance(strategy, w_max);
        r.bch = code.bch_bound();
        if (r.n <= 4096) r.ht = code.hartmann_tzeng_bound();
        CosetTable tab = CosetTable::build(field->q(), r.n);
        for (uint64_t z : code.zero_exponents())
            if (tab.leader_of(z) == z) r.defining_leaders.push_back(z);
        r.dual_n = r.n;
        r.dual_k = r.n - r.code_k;
        if (r.n <= kDualBuildCap) {
            CyclicCode dual = code.dual();
            uint64_t qkd = 1;
            for (uint64_t j = 0; j < dual.k() && qkd <= CyclicCode::kExhaustiveCap; ++j)
                qkd *= field->q();
            if (qkd <= CyclicCode::kExhaustiveCap || dual.n() <= 128) {
                DistanceInfo dd = dual.min_distance(DistanceStrategy::Auto);
                if (dd.is_exact()) r.dual_d = *dd.exact;
            }
        }
    } else {
        r.dual_n = r.n;
        r.dual_k = r.n - uint64_t(r.span);
    }
    r.preset = "custom";
    return r;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

static std::string dist_string(const DistanceInfo& d) {
    if (d.is_exact()) return std::to_string(*d.exact);
    return "[" + std::to_string(d.lower) + "," + std::to_string(d.upper) + "]";
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "family: " << family_name(r.family);
    if (!r.preset.empty() && r.preset != "custom") os << " (preset " << r.preset << ")";
    os << "\n";
    os << "field: " << r.field_spec << "\n";
    os << "params: p=" << r.p << " q=" << r.q << " m=" << r.m << " n=" << r.n << " e=" << r.e;
    if (r.family == Family::Dobbertin) os << " i=" << r.dob_i;
    os << "\n";
    os << "span: " << r.span << "\n";
    os << "minpoly: " << r.minpoly << "\n";
    os << "reduced-support:";
    for (uint64_t v : r.reduced_support) os << " " << v;
    os << "\n";
    if (r.has_code) {
        os << "code: [" << r.code_n << "," << r.code_k << "," << dist_string(r.dist) << "]\n";
        os << "bounds: bch=" << r.bch << " ht=" << (r.ht ? std::to_string(*r.ht) : "n/a") << "\n";
        os << "defining-leaders:";
        for (uint64_t v : r.defining_leaders) os << " " << v;
        os << "\n";
    }
    os << "dual: [" << r.dual_n << "," << r.dual_k;
    if (r.dual_d) os << "," << *r.dual_d;
    os << "]\n";
    os << "oracles: bm=" << (r.bm_match ? (*r.bm_match ? "match" : "MISMATCH") : "skipped")
       << " gcd=" << (r.gcd_match ? (*r.gcd_match ? "match" : "MISMATCH") : "skipped") << "\n";
    os << "status: " << r.status << "\n";
    return os.str();
}

static nlohmann::ordered_json coeff_array(const Report& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (FieldElem c : r.minpoly_coeffs) {
        if (c.rep < r.p) arr.push_back(c.rep);
        else arr.push_back("rep:" + std::to_string(c.rep));
    }
    return arr;
}

static nlohmann::ordered_json report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["preset"] = r.preset;
    j["family"] = family_name(r.family);
    j["field"] = r.field_spec;
    nlohmann::ordered_json params;
    params["p"] = r.p;
    params["q"] = r.q;
    params["m"] = r.m;
    params["n"] = r.n;
    params["e"] = r.e;
    j["params"] = params;
    if (r.family == Family::Dobbertin) j["params"]["i"] = r.dob_i;
    j["span"] = r.span;
    j["minpoly"] = r.minpoly;
    j["minpoly_coeffs"] = coeff_array(r);
    j["reduced_support"] = r.reduced_support;
    if (r.has_code) {
        nlohmann::ordered_json c;
        c["n"] = r.code_n;
        c["k"] = r.code_k;
        if (r.dist.is_exact()) c["d_exact"] = *r.dist.exact;
        c["d_lower"] = r.dist.lower;
        c["d_upper"] = r.dist.upper;
        c["generator"] = coeff_array(r);
        c["defining_leaders"] = r.defining_leaders;
        nlohmann::ordered_json dual;
        dual["n"] = r.dual_n;
        dual["k"] = r.dual_k;
        if (r.dual_d) dual["d_exact"] = *r.dual_d;
        c["dual"] = dual;
        j["code"] = c;
        nlohmann::ordered_json bounds;
        bounds["bch"] = r.bch;
        if (r.ht) bounds["ht"] = *r.ht;
        j["bounds"] = bounds;
    } else {
        nlohmann::ordered_json dual;
        dual["n"] = r.dual_n;
        dual["k"] = r.dual_k;
        j["dual"] = dual;
    }
    j["oracles"] = nlohmann::ordered_json::object();
    if (r.bm_match) j["oracles"]["bm"] = *r.bm_match;
    if (r.gcd_match) j["oracles"]["gcd"] = *r.gcd_match;
    j["status"] = r.status;
    return j;
}

std::string report_json(const Report& r) { return report_to_json(r).dump(2); }

// ---------------------------------------------------------------------------
// Embedded goldens and verification
// ---------------------------------------------------------------------------

const std::vector<GoldenExample>& default_goldens() {
    static const std::vector<GoldenExample> g = {
        {"ex1", Family::InverseApn, 0, "x^6+2x^5+2x^4+2x^2+x+1", 8, 2, 6, 6, 2},
        {"ex2", Family::InverseApn, 0,
         "x^18+2x^16+2x^15+x^14+x^12+x^11+x^10+x^9+x^8+x^7+x^6+x^4+2x^3+2x^2+1", 26, 8, 18, 10, 4},
        {"ex3", Family::Dobbertin, 1, "x^16+x^14+x^13+x^10+x^9+x^8+x^7+x^6+x^5+x^2+x+1", 31, 15,
         16, 8, std::nullopt},
        {"ex4", Family::Dobbertin, 2, "", 1023, 863, 160, std::nullopt, std::nullopt},
    };
    return g;
}

VerifyResult verify_paper() { return verify_paper(default_goldens()); }

VerifyResult verify_paper(const std::vector<GoldenExample>& goldens) {
    VerifyResult out;
    for (const auto& gold : goldens) {
        FieldPtr field = Field::preset(gold.preset);
        Report r = build_report(field, gold.family, gold.dob_i);
        r.preset = gold.preset;
        auto fail = [&](const std::string& what) {
            out.failures.push_back(gold.preset + ": " + what);
        };
        if (!gold.generator.empty()) {
            Poly expected = Poly::parse(field, gold.generator);
            Poly actual(field, r.minpoly_coeffs);
            if (!(expected == actual)) {
                uint64_t hi = uint64_t(std::max(expected.degree(), actual.degree()));
                for (uint64_t idx = 0; idx <= hi; ++idx) {
                    if (!(expected.coeff(idx) == actual.coeff(idx))) {
                        fail("generator differs first at coefficient " + std::to_string(idx) +
                             " (expected " + std::to_string(expected.coeff(idx).rep) + ", got " +
                             std::to_string(actual.coeff(idx).rep) + ")");
                        break;
                    }
                }
            }
        }
        if (r.code_n != gold.n || r.code_k != gold.k)
            fail("code is [" + std::to_string(r.code_n) + "," + std::to_string(r.code_k) +
                 "], expected [" + std::to_string(gold.n) + "," + std::to_string(gold.k) + "]");
        if (r.dual_k != gold.dual_k)
            fail("dual dimension " + std::to_string(r.dual_k) + ", expected " +
                 std::to_string(gold.dual_k));
        if (gold.d && (!r.dist.is_exact() || *r.dist.exact != *gold.d))
            fail("distance " + dist_string(r.dist) + ", expected " + std::to_string(*gold.d));
        if (gold.dual_d && (!r.dual_d || *r.dual_d != *gold.dual_d))
            fail("dual distance " + (r.dual_d ? std::to_string(*r.dual_d) : "n/a") +
                 ", expected " + std::to_string(*gold.dual_d));
        if (r.status != "verified") fail("oracle status " + r.status);
        out.reports.push_back(std::move(r));
    }
    return out;
}

std::string verify_text(const VerifyResult& v) {
    std::ostringstream os;
    for (const auto& r : v.reports) {
        os << r.preset << ": [" << r.code_n << "," << r.code_k << ","
           << dist_string(r.dist) << "] dual [" << r.dual_n << "," << r.dual_k;
        if (r.dual_d) os << "," << *r.dual_d;
        os << "] span " << r.span << " status " << r.status << "\n";
    }
    for (const auto& f : v.failures) os << "FAIL " << f << "\n";
    os << (v.ok() ? "all examples verified" : "verification failed") << "\n";
    return os.str();
}

std::string verify_json(const VerifyResult& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : v.reports) arr.push_back(report_to_json(r));
    nlohmann::ordered_json j;
    j["reports"] = arr;
    j["failures"] = v.failures;
    j["ok"] = v.ok();
    return j.dump(2);
}

int exit_code_for(Errc c) noexcept {
    switch (c) {
        case Errc::UnsupportedSize: return 3;
        case Errc::InternalInvariant: return 4;
        default: return 2;
    }
}

}  // namespace apncodes
