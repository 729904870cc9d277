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

#include <doctest.h>

#include <random>

#include "apncodes/apnseq.hpp"
#include "apncodes/cyclotomic.hpp"
#include "apncodes/polyring.hpp"

using namespace apncodes;

TEST_CASE("basic ring identities over GF(3)") {
    auto f = Field::preset("ex1");
    Poly a = Poly::parse(f, "x^2+2");  // x^2 - 1
    Poly b = Poly::parse(f, "x+2");    // x - 1
    CHECK(Poly::gcd(a, b).to_string() == "x+2");

    CHECK((Poly::parse(f, "x+1") * Poly::parse(f, "x+2")).to_string() == "x^2+2");
    auto [q, r] = Poly::parse(f, "x^3").divmod(Poly::parse(f, "x"));
    CHECK(q.to_string() == "x^2");
    CHECK(r.is_zero());
    CHECK_THROWS_AS(static_cast<void>(a.divmod(Poly::zero(f))), Error);
    CHECK(Poly::gcd(Poly::zero(f), Poly::zero(f)).is_zero());
}

TEST_CASE("reciprocal") {
    auto f3 = Field::preset("ex1");
    CHECK(Poly::parse(f3, "x+1").reciprocal().to_string() == "x+1");  // x - 2 over GF(3)
    auto f2 = Field::preset("ex3");
    Poly sr = Poly::parse(f2, "x^2+x+1");
    CHECK(sr.reciprocal() == sr);
    CHECK_THROWS_AS(static_cast<void>(Poly::zero(f2).reciprocal()), Error);

    // involution on nonzero constant term
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint32_t> c(1 + rng() % 9);
        for (auto& v : c) v = rng() % 3;
        c[0] = 1 + rng() % 2;
        Poly a = Poly::from_ints(f3, c).monic();
        CHECK(a.reciprocal().reciprocal() == a);
    }
}

TEST_CASE("minimal polynomial of a field element") {
    auto f9 = Field::preset("ex1");
    CHECK(minimal_poly_of_element(f9, f9->one()).to_string() == "x+2");  // x - 1
    CHECK(minimal_poly_of_element(f9, f9->alpha()).to_string() == "x^2+2x+2");
    auto f32 = Field::preset("ex3");
    CHECK(minimal_poly_of_element(f32, f32->alpha()).to_string() == "x^5+x^2+1");
    CHECK_THROWS_AS(static_cast<void>(minimal_poly_of_element(f9, f9->zero())), Error);
}

TEST_CASE("every minimal polynomial divides x^n - 1 and has coset-size degree") {
    for (auto f : {Field::preset("ex1"), Field::preset("ex3"), Field::auto_field(2, 1, 9)}) {
        CosetTable tab = CosetTable::build(f->q(), f->n());
        Poly xn1 = Poly::x_pow_minus_one(f, f->n());
        for (uint64_t i = 0; i < f->n(); ++i) {
            Poly m = minimal_poly_of_element(f, f->alpha_pow(int64_t(i)));
            CHECK(uint64_t(m.degree()) == tab.size_of(tab.leader_of(i)));
            CHECK((xn1 % m).is_zero());
        }
    }
}

TEST_CASE("gcd-route minimal polynomial on degenerate sequences") {
    auto f = Field::preset("ex1");
    std::vector<FieldElem> zeros(8, f->zero());
    auto [mz, lz] = sequence_minimal_poly_gcd(f, zeros);
    CHECK(mz.is_one());
    CHECK(lz == 0);

    std::vector<FieldElem> ones(8, f->one());
    auto [mo, lo] = sequence_minimal_poly_gcd(f, ones);
    CHECK(lo == 1);
    CHECK(mo.to_string() == "x+2");  // monic representative of x - 1

    CHECK_THROWS_AS(static_cast<void>(sequence_minimal_poly_gcd(f, {})), Error);
}

TEST_CASE("gcd route agrees with the LFSR route on random periodic sequences") {
    // 200 random sequences spread over GF(2) and GF(3) fields with
    // n in {7, 8, 15, 26, 31}
    std::mt19937 rng(20260810);
    auto fields = {Field::auto_field(2, 1, 3), Field::preset("ex1"), Field::auto_field(2, 1, 4),
                   Field::preset("ex2"), Field::preset("ex3")};
    for (const auto& f : fields) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<FieldElem> seq(size_t(f->n()));
            for (auto& v : seq) v = f->from_int(uint32_t(rng() % f->p()));
            auto [mg, lg] = sequence_minimal_poly_gcd(f, seq);
            auto [mb, lb] = berlekamp_massey(f, seq);
            CHECK(lg == lb);
            CHECK(mg == mb);
        }
    }
}

TEST_CASE("polynomial text round-trips and accepts loose spacing") {
    auto f = Field::preset("ex1");
    Poly g = Poly::parse(f, "x^6 + 2*x^5 + 2x^4 + 2x^2 + x + 1");
    CHECK(g.to_string() == "x^6+2x^5+2x^4+2x^2+x+1");
    CHECK(Poly::parse(f, g.to_string()) == g);
    CHECK(Poly::parse(f, "0").is_zero());
    CHECK_THROWS_AS(static_cast<void>(Poly::parse(f, "4x")), Error);  // coefficient >= p

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint32_t> c(1 + rng() % 12);
        for (auto& v : c) v = rng() % 3;
        Poly a = Poly::from_ints(f, c);
        CHECK(Poly::parse(f, a.to_string()) == a);
    }
}

TEST_CASE("text form over a non-prime ground field uses generator powers") {
    auto f = Field::auto_field(3, 2, 2);  // GF(81) over GF(9)
    FieldElem beta = f->alpha_pow(int64_t(f->n() / (f->q() - 1)));  // generates GF(9)*
    Poly a(f, {beta, f->one()});
    Poly b = Poly::parse(f, a.to_string());
    CHECK(a == b);
}

TEST_CASE("cross-field operations are rejected") {
    auto f = Field::preset("ex1");
    auto g = Field::preset("ex2");
    CHECK_THROWS_WITH_AS(static_cast<void>(Poly::one(f) + Poly::one(g)),
                         doctest::Contains("FieldMismatch"), Error);
}
