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

#ifndef APNCODES_REPORT_HPP
#define APNCODES_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "apncodes/apnseq.hpp"
#include "apncodes/code.hpp"

namespace apncodes {

enum class Family { InverseApn, Dobbertin };

const char* family_name(Family f) noexcept;

/// Everything one end-to-end run produces: the sequence parameters, span,
/// minimal polynomial, the cyclic code it generates, distance knowledge,
/// bounds, the dual, and which independent routes agreed with the closed
/// form.  `status` is "verified" only when every oracle that ran agreed.
struct Report {
    std::string preset;  // preset name or "custom"
    Family family = Family::InverseApn;
    std::string field_spec;
    uint32_t p = 0;
    uint64_t q = 0;
    uint32_t m = 0;
    uint64_t n = 0;
    uint64_t e = 0;
    uint32_t dob_i = 0;  // Dobbertin block parameter; 0 for inverse family

    int64_t span = 0;
    std::string minpoly;
    std::vector<FieldElem> minpoly_coeffs;
    std::vector<uint64_t> reduced_support;

    bool has_code = false;
    uint64_t code_n = 0, code_k = 0;
    DistanceInfo dist;
    uint64_t bch = 0;
    std::optional<uint64_t> ht;
    std::vector<uint64_t> defining_leaders;

    uint64_t dual_n = 0, dual_k = 0;
    std::optional<uint64_t> dual_d;

    std::optional<bool> bm_match;
    std::optional<bool> gcd_match;
    std::string status;  // "verified" or "unchecked"

    bool all_oracles_ok() const {
        return bm_match.value_or(true) && gcd_match.value_or(true) &&
               (bm_match.has_value() || gcd_match.has_value());
    }
};

Report build_report(const FieldPtr& field, Family family, uint32_t dob_i = 0,
                    DistanceStrategy strategy = DistanceStrategy::Auto, uint64_t w_max = 0);

std::string report_text(const Report& r);
std::string report_json(const Report& r);  // serialized ordered JSON

/// Embedded golden values for the four built-in parameterizations.
struct GoldenExample {
    std::string preset;
    Family family;
    uint32_t dob_i;
    std::string generator;  // empty: do not compare coefficients
    uint64_t n, k, dual_k;
    std::optional<uint64_t> d;
    std::optional<uint64_t> dual_d;
};

const std::vector<GoldenExample>& default_goldens();

struct VerifyResult {
    std::vector<Report> reports;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Runs the four built-in parameter sets end to end and checks them against
/// the embedded goldens: generator polynomials coefficient-exact where a
/// golden string is present, [n, k, dual k] and gated distances everywhere.
VerifyResult verify_paper();
VerifyResult verify_paper(const std::vector<GoldenExample>& goldens);

std::string verify_text(const VerifyResult& v);
std::string verify_json(const VerifyResult& v);

/// Exit-code taxonomy shared by the CLI: 2 parameter errors, 3 size caps,
/// 4 internal invariant violations.
int exit_code_for(Errc c) noexcept;

}  // namespace apncodes

#endif
