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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apncodes/cyclotomic.hpp"
#include "apncodes/report.hpp"

namespace py = pybind11;
using namespace apncodes;

namespace {

// elements cross the boundary as their packed integer representation
std::vector<uint32_t> reps_of(const std::vector<FieldElem>& v) {
    std::vector<uint32_t> out;
    out.reserve(v.size());
    for (FieldElem e : v) out.push_back(e.rep);
    return out;
}

std::vector<FieldElem> elems_of(const FieldPtr& f, const std::vector<uint32_t>& reps) {
    std::vector<FieldElem> out;
    out.reserve(reps.size());
    for (uint32_t r : reps) {
        require(r < f->order(), Errc::InvalidParameter, "element representation out of range");
        out.push_back(FieldElem{r, f->id()});
    }
    return out;
}

py::dict profile_dict(const CoeffProfile& pr) {
    py::dict d;
    d["e"] = pr.e;
    d["n"] = pr.n;
    d["support"] = pr.support;
    d["reduced_support"] = pr.reduced_support;
    d["support_size"] = pr.support.size();
    return d;
}

py::dict distance_dict(const DistanceInfo& di) {
    py::dict d;
    d["exact"] = di.exact ? py::object(py::cast(*di.exact)) : py::none();
    d["lower"] = di.lower;
    d["upper"] = di.upper;
    return d;
}

DistanceStrategy strategy_from(const std::string& name) {
    if (name == "auto") return DistanceStrategy::Auto;
    if (name == "exhaustive") return DistanceStrategy::Exhaustive;
    if (name == "low-weight") return DistanceStrategy::LowWeight;
    raise(Errc::InvalidParameter, "strategy must be auto, exhaustive, or low-weight");
}

}  // namespace

PYBIND11_MODULE(apncodes, mod) {
    mod.doc() = "cyclic codes from power-function trace sequences over finite fields";

    py::register_exception<Error>(mod, "ApncodesError");

    py::class_<Field, std::shared_ptr<Field>>(mod, "Field")
        .def_static(
            "preset",
            [](const std::string& name) { return std::const_pointer_cast<Field>(Field::preset(name)); },
            py::arg("name"), "built-in parameterizations ex1..ex4")
        .def_static(
            "create",
            [](uint32_t p, uint32_t s, uint32_t m, const std::vector<uint32_t>& modulus,
               const std::vector<uint32_t>& alpha) {
                return std::const_pointer_cast<Field>(
                    Field::create(FieldParams{p, s, m, modulus, alpha}));
            },
            py::arg("p"), py::arg("s"), py::arg("m"), py::arg("modulus"),
            py::arg("alpha") = std::vector<uint32_t>{0, 1})
        .def_static("parse", [](const std::string& spec) {
            return std::const_pointer_cast<Field>(Field::create(FieldParams::parse(spec)));
        })
        .def_static("auto", [](uint32_t p, uint32_t s, uint32_t m) {
            return std::const_pointer_cast<Field>(Field::auto_field(p, s, m));
        }, py::arg("p"), py::arg("s"), py::arg("m"))
        .def_property_readonly("p", &Field::p)
        .def_property_readonly("s", &Field::s)
        .def_property_readonly("m", &Field::m)
        .def_property_readonly("k", &Field::k)
        .def_property_readonly("q", &Field::q)
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("n", &Field::n)
        .def_property_readonly("modulus",
                               [](const Field& f) { return f.params().modulus; })
        .def("spec", [](const Field& f) { return f.params().to_spec(); })
        .def("add", [](const Field& f, uint32_t a, uint32_t b) {
            return f.add({a, f.id()}, {b, f.id()}).rep;
        })
        .def("sub", [](const Field& f, uint32_t a, uint32_t b) {
            return f.sub({a, f.id()}, {b, f.id()}).rep;
        })
        .def("mul", [](const Field& f, uint32_t a, uint32_t b) {
            return f.mul({a, f.id()}, {b, f.id()}).rep;
        })
        .def("inv", [](const Field& f, uint32_t a) { return f.inv({a, f.id()}).rep; })
        .def("pow", [](const Field& f, uint32_t a, int64_t t) {
            return f.pow({a, f.id()}, t).rep;
        })
        .def("dlog", [](const Field& f, uint32_t a) { return f.dlog({a, f.id()}); })
        .def("alpha_pow", [](const Field& f, int64_t t) { return f.alpha_pow(t).rep; })
        .def("trace", [](const Field& f, uint32_t a) { return f.trace({a, f.id()}).rep; })
        .def("__repr__", [](const Field& f) { return "<Field " + f.label() + ">"; });

    py::class_<Poly>(mod, "Poly")
        .def_static("parse", &Poly::parse, py::arg("field"), py::arg("text"))
        .def_property_readonly("degree", &Poly::degree)
        .def_property_readonly("coeffs", [](const Poly& p) { return reps_of(p.coeffs()); })
        .def("__str__", &Poly::to_string)
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__repr__", [](const Poly& p) { return "<Poly " + p.to_string() + ">"; });

    mod.def("lucas_binom", &lucas_binom, py::arg("N"), py::arg("M"), py::arg("p"));
    mod.def("coset", &coset, py::arg("j"), py::arg("q"), py::arg("n"));

    mod.def("gen_sequence", [](const FieldPtr& f, uint64_t e) {
        return reps_of(gen_sequence(f, e).values);
    }, py::arg("field"), py::arg("e"), "one period of Tr((1 + alpha^t)^e)");

    mod.def("berlekamp_massey", [](const FieldPtr& f, const std::vector<uint32_t>& values) {
        auto [poly, span] = berlekamp_massey(f, elems_of(f, values));
        return py::make_tuple(poly, span);
    }, py::arg("field"), py::arg("values"));

    mod.def("minimal_poly_gcd", [](const FieldPtr& f, const std::vector<uint32_t>& values) {
        auto [poly, span] = sequence_minimal_poly_gcd(f, elems_of(f, values));
        return py::make_tuple(poly, span);
    }, py::arg("field"), py::arg("values"));

    mod.def("inverse_apn_support", [](uint64_t q, uint32_t m, uint32_t p) {
        return profile_dict(inverse_apn_support(q, m, p));
    }, py::arg("q"), py::arg("m"), py::arg("p"));
    mod.def("inverse_apn_minpoly", &minimal_poly_inverse_apn, py::arg("field"));

    mod.def("dobbertin_exponent", &dobbertin_exponent, py::arg("i"));
    mod.def("dobbertin_span", &dobbertin_span, py::arg("i"));
    mod.def("dobbertin_support", [](uint32_t i) { return profile_dict(dobbertin_support(i)); },
            py::arg("i"));
    mod.def("dobbertin_minpoly", &minimal_poly_dobbertin, py::arg("field"), py::arg("i"));

    mod.def("build_r_sets", [](uint32_t i) {
        RSets r = build_r_sets(i);
        py::dict d;
        d["i"] = r.i;
        d["m"] = r.m;
        d["low_runs"] = r.low_runs;
        d["mixed"] = r.mixed;
        d["w4"] = r.w4;
        d["w3"] = r.w3;
        d["w2"] = r.w2;
        d["w1"] = r.w1;
        d["w0"] = r.w0;
        d["all"] = r.all;
        return d;
    }, py::arg("i"));

    mod.def("is_covered", &is_covered, py::arg("x"), py::arg("y"), py::arg("m"));
    mod.def("cover_count", &cover_count, py::arg("x"), py::arg("e"), py::arg("m"));
    mod.def("differential_uniformity", &differential_uniformity, py::arg("field"), py::arg("e"),
            py::arg("threads") = 1);

    py::class_<CyclicCode>(mod, "CyclicCode")
        .def_static("from_generator", &CyclicCode::from_generator, py::arg("generator"),
                    py::arg("n"), py::arg("field"))
        .def_property_readonly("n", &CyclicCode::n)
        .def_property_readonly("k", &CyclicCode::k)
        .def_property_readonly("generator", &CyclicCode::generator)
        .def_property_readonly("check_poly", &CyclicCode::check_poly)
        .def_property_readonly("zero_exponents", &CyclicCode::zero_exponents)
        .def("encode", [](const CyclicCode& c, const std::vector<uint32_t>& msg) {
            return reps_of(c.encode(elems_of(c.field(), msg)));
        }, py::arg("message"))
        .def("min_distance", [](const CyclicCode& c, const std::string& strategy, uint64_t w_max) {
            return distance_dict(c.min_distance(strategy_from(strategy), w_max));
        }, py::arg("strategy") = "auto", py::arg("w_max") = 0)
        .def("bch_bound", &CyclicCode::bch_bound)
        .def("hartmann_tzeng_bound", &CyclicCode::hartmann_tzeng_bound)
        .def("dual", &CyclicCode::dual)
        .def("weight_distribution", [](const CyclicCode& c) {
            py::dict d;
            for (auto [w, count] : c.weight_distribution()) d[py::cast(w)] = count;
            return d;
        })
        .def("__repr__", [](const CyclicCode& c) {
            return "<CyclicCode [" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]>";
        });

    mod.def("report", [](const FieldPtr& f, const std::string& family, uint32_t i) {
        Report r = build_report(f, family == "dobbertin" ? Family::Dobbertin : Family::InverseApn,
                                i);
        return py::module_::import("json").attr("loads")(report_json(r));
    }, py::arg("field"), py::arg("family") = "inverse-apn", py::arg("i") = 0);

    mod.def("verify_paper", []() {
        VerifyResult v = verify_paper();
        return py::module_::import("json").attr("loads")(verify_json(v));
    }, "run the built-in parameter sets against the embedded goldens");
}
