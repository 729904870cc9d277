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

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "apncodes/cyclotomic.hpp"
#include "apncodes/report.hpp"

using namespace apncodes;
using nlohmann::ordered_json;

namespace {

struct FieldChoice {
    std::string preset;
    std::string spec;
    uint32_t p = 0, s = 1, m = 0;
    bool auto_field = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "built-in field ex1|ex2|ex3|ex4");
        cmd->add_option("--field", spec, "explicit field spec p=..,s=..,m=..,mod=..,alpha=..");
        cmd->add_option("--p", p, "characteristic (with --auto-field)");
        cmd->add_option("--s", s, "ground-field degree, q = p^s (default 1)");
        cmd->add_option("--m", m, "extension degree over GF(q)");
        cmd->add_flag("--auto-field", auto_field, "derive the modulus deterministically");
    }

    FieldPtr resolve() const {
        if (!preset.empty()) return Field::preset(preset);
        if (!spec.empty()) return Field::create(FieldParams::parse(spec));
        if (auto_field || (p && m)) {
            require(p != 0 && m != 0, Errc::InvalidParameter, "need --p and --m");
            return Field::auto_field(p, s, m);
        }
        raise(Errc::InvalidParameter, "select a field via --preset, --field, or --p/--m");
    }

    bool any() const { return !preset.empty() || !spec.empty() || p || m; }
};

DistanceStrategy parse_strategy(const std::string& text, uint64_t& w_max) {
    if (text.empty() || text == "auto") return DistanceStrategy::Auto;
    if (text == "exhaustive") return DistanceStrategy::Exhaustive;
    if (text.rfind("lw:", 0) == 0) {
        w_max = std::stoull(text.substr(3));
        return DistanceStrategy::LowWeight;
    }
    raise(Errc::InvalidParameter, "distance strategy must be auto, exhaustive, or lw:W");
}

Family parse_family(const std::string& text) {
    if (text == "inverse-apn") return Family::InverseApn;
    if (text == "dobbertin") return Family::Dobbertin;
    raise(Errc::InvalidParameter, "family must be inverse-apn or dobbertin");
}

ordered_json poly_coeff_json(const Poly& poly, uint32_t p) {
    ordered_json arr = ordered_json::array();
    for (FieldElem c : poly.coeffs()) {
        if (c.rep < p) arr.push_back(c.rep);
        else arr.push_back("rep:" + std::to_string(c.rep));
    }
    return arr;
}

void emit_profile(const CoeffProfile& pr, bool json) {
    if (json) {
        ordered_json j;
        j["e"] = pr.e;
        j["n"] = pr.n;
        j["support_size"] = pr.support.size();
        j["reduced_support"] = pr.reduced_support;
        j["support"] = pr.support;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "e=" << pr.e << " n=" << pr.n << " support-size=" << pr.support.size()
                  << "\nreduced-support:";
        for (uint64_t v : pr.reduced_support) std::cout << " " << v;
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes from power-function trace sequences over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool json = false;
    uint32_t threads = 1;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--threads", threads, "worker threads for brute-force sweeps")
        ->check(CLI::Range(1u, 64u));

    // verify-paper
    auto* vp = app.add_subcommand("verify-paper",
                                  "run the four built-in parameter sets against embedded goldens");

    // report
    auto* rp = app.add_subcommand("report", "full end-to-end report for one parameter set");
    FieldChoice rp_field;
    rp_field.add_options(rp);
    std::string rp_family = "inverse-apn", rp_distance = "auto";
    uint32_t rp_i = 0;
    rp->add_option("--family", rp_family, "inverse-apn or dobbertin");
    rp->add_option("--i", rp_i, "dobbertin block parameter (field defaults to GF(2^(5i)))");
    rp->add_option("--distance", rp_distance, "auto | exhaustive | lw:W");

    // coset
    auto* cs = app.add_subcommand("coset", "q-cyclotomic cosets modulo n");
    uint64_t cs_q = 0, cs_n = 0;
    int64_t cs_leader = -1;
    cs->add_option("--q", cs_q, "multiplier")->required();
    cs->add_option("--n", cs_n, "modulus")->required();
    cs->add_option("--leader", cs_leader, "emit only the coset containing this value");

    // seq
    auto* sq = app.add_subcommand("seq", "the trace sequence s_t = Tr((1+alpha^t)^e)");
    FieldChoice sq_field;
    sq_field.add_options(sq);
    uint64_t sq_e = 0;
    std::string sq_emit = "span";
    sq->add_option("--e", sq_e, "exponent")->required();
    sq->add_option("--emit", sq_emit, "values | span | minpoly | du");

    // rsets
    auto* rs = app.add_subcommand("rsets", "rotation-class representatives for m = 5i");
    uint32_t rs_i = 0;
    rs->add_option("--i", rs_i, "block parameter")->required();

    // dobbertin
    auto* db = app.add_subcommand("dobbertin", "exponent 2^{4i}+2^{3i}+2^{2i}+2^i-1 machinery");
    FieldChoice db_field;
    db_field.add_options(db);
    uint32_t db_i = 0;
    std::string db_emit = "support";
    db->add_option("--i", db_i, "block parameter")->required();
    db->add_option("--emit", db_emit, "rsets | support | minpoly | span");

    // inverse-apn
    auto* ia = app.add_subcommand("inverse-apn", "exponent q^m-2 machinery");
    FieldChoice ia_field;
    ia_field.add_options(ia);
    std::string ia_emit = "support";
    ia->add_option("--emit", ia_emit, "support | minpoly");

    // code
    auto* cd = app.add_subcommand("code", "cyclic code generated by the minimal polynomial");
    FieldChoice cd_field;
    cd_field.add_options(cd);
    std::string cd_from = "inverse-apn", cd_distance = "auto";
    uint32_t cd_i = 0;
    cd->add_option("--from", cd_from, "inverse-apn or dobbertin");
    cd->add_option("--i", cd_i, "dobbertin block parameter");
    cd->add_option("--distance", cd_distance, "auto | exhaustive | lw:W");

    try {
        app.parse(argc, argv);

        if (*vp) {
            VerifyResult v = verify_paper();
            std::cout << (json ? verify_json(v) : verify_text(v));
            return v.ok() ? 0 : 1;
        }
        if (*rp) {
            Family family = parse_family(rp_family);
            FieldPtr field;
            if (rp_field.any()) field = rp_field.resolve();
            else if (family == Family::Dobbertin && rp_i)
                field = Field::auto_field(2, 1, 5 * rp_i);
            else raise(Errc::InvalidParameter, "select a field (or --i for dobbertin)");
            uint64_t w_max = 0;
            DistanceStrategy strategy = parse_strategy(rp_distance, w_max);
            Report r = build_report(field, family, rp_i, strategy, w_max);
            if (!rp_field.preset.empty()) r.preset = rp_field.preset;
            std::cout << (json ? report_json(r) + "\n" : report_text(r));
            return 0;
        }
        if (*cs) {
            if (cs_leader >= 0) {
                auto orbit = coset(uint64_t(cs_leader), cs_q, cs_n);
                if (json) {
                    ordered_json j;
                    j["q"] = cs_q;
                    j["n"] = cs_n;
                    j["coset"] = orbit;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "coset(" << cs_leader << "):";
                    for (uint64_t v : orbit) std::cout << " " << v;
                    std::cout << "\n";
                }
            } else {
                CosetTable tab = CosetTable::build(cs_q, cs_n);
                if (json) {
                    ordered_json arr = ordered_json::array();
                    for (uint64_t lead : tab.leaders()) {
                        ordered_json entry;
                        entry["leader"] = lead;
                        entry["size"] = tab.size_of(lead);
                        arr.push_back(entry);
                    }
                    ordered_json j;
                    j["q"] = cs_q;
                    j["n"] = cs_n;
                    j["cosets"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (uint64_t lead : tab.leaders()) {
                        std::cout << lead << " (size " << tab.size_of(lead) << "):";
                        for (uint64_t v : tab.members(lead)) std::cout << " " << v;
                        std::cout << "\n";
                    }
                }
            }
            return 0;
        }
        if (*sq) {
            FieldPtr field = sq_field.resolve();
            Sequence seq = gen_sequence(field, sq_e);
            if (sq_emit == "values") {
                if (json) {
                    ordered_json arr = ordered_json::array();
                    for (FieldElem v : seq.values) arr.push_back(v.rep);
                    ordered_json j;
                    j["e"] = sq_e;
                    j["n"] = field->n();
                    j["values"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    for (size_t t = 0; t < seq.values.size(); ++t)
                        std::cout << (t ? " " : "") << seq.values[t].rep;
                    std::cout << "\n";
                }
            } else if (sq_emit == "span" || sq_emit == "minpoly") {
                auto [poly, span] = berlekamp_massey(seq);
                if (json) {
                    ordered_json j;
                    j["e"] = sq_e;
                    j["n"] = field->n();
                    j["span"] = span;
                    if (sq_emit == "minpoly") {
                        j["minpoly"] = poly.to_string();
                        j["minpoly_coeffs"] = poly_coeff_json(poly, field->p());
                    }
                    if (field->n() <= 65536) {
                        CoeffProfile pr =
                            coeff_profile(sq_e, field->q(), field->m(), field->p());
                        j["reduced_support"] = pr.reduced_support;
                    }
                    std::cout << j.dump(2) << "\n";
                } else if (sq_emit == "span") {
                    std::cout << span << "\n";
                } else {
                    std::cout << poly.to_string() << "\n";
                }
            } else if (sq_emit == "du") {
                uint32_t du = differential_uniformity(field, sq_e, threads);
                if (json) {
                    ordered_json j;
                    j["e"] = sq_e;
                    j["differential_uniformity"] = du;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << du << "\n";
                }
            } else {
                raise(Errc::InvalidParameter, "--emit must be values, span, minpoly, or du");
            }
            return 0;
        }
        if (*rs || (*db && db_emit == "rsets")) {
            uint32_t i = *rs ? rs_i : db_i;
            RSets r = build_r_sets(i);
            if (json) {
                ordered_json j;
                j["i"] = r.i;
                j["m"] = r.m;
                j["low_runs"] = r.low_runs;
                j["mixed"] = r.mixed;
                j["w4"] = r.w4;
                j["w3"] = r.w3;
                j["w2"] = r.w2;
                j["w1"] = r.w1;
                j["w0"] = r.w0;
                j["total"] = r.all.size();
                std::cout << j.dump(2) << "\n";
            } else {
                auto line = [&](const char* name, const std::vector<uint64_t>& v) {
                    std::cout << name << " (" << v.size() << "):";
                    for (uint64_t x : v) std::cout << " " << x;
                    std::cout << "\n";
                };
                std::cout << "i=" << r.i << " m=" << r.m << " total=" << r.all.size() << "\n";
                line("low-runs", r.low_runs);
                line("mixed", r.mixed);
                line("w4", r.w4);
                line("w3", r.w3);
                line("w2", r.w2);
                line("w1", r.w1);
                line("w0", r.w0);
            }
            return 0;
        }
        if (*db) {
            if (db_emit == "span") {
                if (json) {
                    ordered_json j;
                    j["i"] = db_i;
                    j["n"] = (uint64_t(1) << (5 * db_i)) - 1;
                    j["span"] = dobbertin_span(db_i);
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << dobbertin_span(db_i) << "\n";
                }
            } else if (db_emit == "support") {
                emit_profile(dobbertin_support(db_i), json);
            } else if (db_emit == "minpoly") {
                FieldPtr field =
                    db_field.any() ? db_field.resolve() : Field::auto_field(2, 1, 5 * db_i);
                Poly M = minimal_poly_dobbertin(field, db_i);
                if (json) {
                    ordered_json j;
                    j["i"] = db_i;
                    j["e"] = dobbertin_exponent(db_i);
                    j["n"] = field->n();
                    j["span"] = M.degree();
                    j["minpoly"] = M.to_string();
                    j["minpoly_coeffs"] = poly_coeff_json(M, 2);
                    j["reduced_support"] = dobbertin_support(db_i).reduced_support;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << M.to_string() << "\n";
                }
            } else {
                raise(Errc::InvalidParameter, "--emit must be rsets, support, minpoly, or span");
            }
            return 0;
        }
        if (*ia) {
            FieldPtr field = ia_field.resolve();
            if (ia_emit == "support") {
                emit_profile(inverse_apn_support(field->q(), field->m(), field->p()), json);
            } else if (ia_emit == "minpoly") {
                Poly M = minimal_poly_inverse_apn(field);
                if (json) {
                    ordered_json j;
                    j["e"] = field->n() - 1;
                    j["n"] = field->n();
                    j["span"] = M.degree();
                    j["minpoly"] = M.to_string();
                    j["minpoly_coeffs"] = poly_coeff_json(M, field->p());
                    j["reduced_support"] =
                        inverse_apn_support(field->q(), field->m(), field->p()).reduced_support;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << M.to_string() << "\n";
                }
            } else {
                raise(Errc::InvalidParameter, "--emit must be support or minpoly");
            }
            return 0;
        }
        if (*cd) {
            Family family = parse_family(cd_from);
            FieldPtr field;
            if (cd_field.any()) field = cd_field.resolve();
            else if (family == Family::Dobbertin && cd_i)
                field = Field::auto_field(2, 1, 5 * cd_i);
            else raise(Errc::InvalidParameter, "select a field (or --i for dobbertin)");
            uint64_t w_max = 0;
            DistanceStrategy strategy = parse_strategy(cd_distance, w_max);
            Report r = build_report(field, family, cd_i, strategy, w_max);
            require(r.has_code, Errc::UnsupportedSize, "length exceeds the construction cap");
            if (json) {
                ordered_json j;
                j["n"] = r.code_n;
                j["k"] = r.code_k;
                if (r.dist.is_exact()) j["d_exact"] = *r.dist.exact;
                j["d_lower"] = r.dist.lower;
                j["d_upper"] = r.dist.upper;
                ordered_json gen = ordered_json::array();
                for (FieldElem c : r.minpoly_coeffs)
                    c.rep < r.p ? gen.push_back(c.rep)
                                : gen.push_back("rep:" + std::to_string(c.rep));
                j["generator"] = gen;
                ordered_json dual;
                dual["n"] = r.dual_n;
                dual["k"] = r.dual_k;
                j["dual"] = dual;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "[" << r.code_n << "," << r.code_k << ","
                          << (r.dist.is_exact() ? std::to_string(*r.dist.exact)
                                                : "[" + std::to_string(r.dist.lower) + "," +
                                                      std::to_string(r.dist.upper) + "]")
                          << "]\n";
                std::cout << "generator: " << r.minpoly << "\n";
                std::cout << "defining-leaders:";
                for (uint64_t v : r.defining_leaders) std::cout << " " << v;
                std::cout << "\nbounds: bch=" << r.bch
                          << " ht=" << (r.ht ? std::to_string(*r.ht) : "n/a") << "\n";
                std::cout << "dual: [" << r.dual_n << "," << r.dual_k << "]\n";
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
