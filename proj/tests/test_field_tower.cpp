/*
   Copyright 2026 The trcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <random>

#include "doctest.h"

#include "test_support.hpp"
#include "trcert/conj.hpp"
#include "trcert/embedding.hpp"
#include "trcert/error.hpp"
#include "trcert/tower.hpp"

using namespace trcert;
using support::lin;
using support::num;
using support::P;
using support::R;

namespace {

FieldTower zeta_tower(unsigned long n) { return FieldTower::make_base(cyclotomic(n)); }

bool box_near(const ComplexBox& b, double re, double tol) {
    return b.is_real() && b.re.lo.get_d() > re - tol && b.re.hi.get_d() < re + tol;
}

// Real value seen through a complex embedding.
bool box_near_real(const ComplexBox& b, double re, double tol) {
    return b.im.contains(trcert::Rat(0)) && b.re.lo.get_d() > re - tol && b.re.hi.get_d() < re + tol;
}

}  // namespace

TEST_CASE("tower construction and degrees") {
    CHECK(FieldTower::make_base(P({0, 1})).degree() == 1);
    CHECK(FieldTower::make_base(P({-2, 0, 1})).degree() == 2);
    CHECK(zeta_tower(15).degree() == 8);
    CHECK_THROWS_AS(FieldTower::make_base(P({1, 2})), PreconditionFailed);

    FieldTower q2 = support::sqrt_tower({2});
    AlgNum d = lin(q2, 3, 2);
    AlgNum delta = d * d + d;
    CHECK(delta == lin(q2, 20, 14));
    FieldTower k = q2.adjoin_sqrt(delta);
    CHECK(k.degree() == 4);
    CHECK(k.sqrt_generator(2) * k.sqrt_generator(2) == delta.lift(k));
    CHECK(q2.is_prefix_of(k));
}

TEST_CASE("element arithmetic") {
    FieldTower q2 = support::sqrt_tower({2});
    CHECK(lin(q2, 3, 2) * lin(q2, 3, -2) == num(q2, 1));
    FieldTower q6 = support::sqrt_tower({6});
    CHECK(lin(q6, 5, 2).inverse() == lin(q6, 5, -2));
    CHECK_THROWS_AS(num(q6, 0).inverse(), DivisionByZero);

    // Prefix coercion.
    FieldTower q2i = q2.adjoin_sqrt(num(q2, -1));
    AlgNum i = q2i.sqrt_generator(2);
    AlgNum mixed = lin(q2, 1, 1) + i;
    CHECK(mixed.tower().degree() == 4);
    CHECK(mixed - i == lin(q2, 1, 1).lift(q2i));

    FieldTower q3 = support::sqrt_tower({3});
    CHECK_THROWS_AS(lin(q2, 0, 1) + lin(q3, 0, 1), IncompatibleTowers);
}

TEST_CASE("reducible towers surface lazily") {
    FieldTower bad = support::sqrt_tower({4});
    AlgNum s = bad.sqrt_generator(1);
    try {
        (s - R(2)).inverse();
        FAIL("expected ReducibleTower");
    } catch (const ReducibleTower& e) {
        CHECK(e.step() == 1);
    }
    FieldTower bad_base = FieldTower::make_base(P({-1, 0, 1}));
    CHECK_THROWS_AS((bad_base.generator() - R(1)).inverse(), ReducibleTower);
}

TEST_CASE("minimal polynomials") {
    FieldTower q2 = support::sqrt_tower({2});
    CHECK(min_poly(q2.sqrt_generator(1)) == P({-2, 0, 1}));
    CHECK(min_poly(lin(q2, 3, 2)) == P({1, -6, 1}));
    CHECK(min_poly(num(q2, 5)) == P({-5, 1}));
    FieldTower z5 = zeta_tower(5);
    AlgNum z = z5.generator();
    CHECK(min_poly(z + z.inverse()) == P({-1, 1, 1}));
    CHECK(min_poly(z) == cyclotomic(5));
    FieldTower q23 = support::sqrt_tower({2, 3});
    AlgNum a = q23.sqrt_generator(1) + q23.sqrt_generator(2);
    CHECK(min_poly(a) == P({1, 0, -10, 0, 1}));
    CHECK(norm(lin(q2, 3, 2)) == 1);
    CHECK(trace(lin(q2, 3, 2)) == 6);
}

TEST_CASE("signatures") {
    CHECK(signature(support::sqrt_tower({2})) == Signature{2, 0});
    CHECK(signature(support::sqrt_tower({-1})) == Signature{0, 1});
    CHECK(signature(support::sqrt_tower({2, -1})) == Signature{0, 2});
    CHECK(signature(zeta_tower(5)) == Signature{0, 2});
    CHECK(signature(FieldTower::make_base(P({-2, 0, 0, 1}))) == Signature{1, 1});
    FieldTower q2 = support::sqrt_tower({2});
    // 1 - sqrt2 is negative at one embedding only.
    CHECK(signature(q2.adjoin_sqrt(lin(q2, 1, 1))) == Signature{2, 1});
}

TEST_CASE("embedding enclosures") {
    FieldTower q2 = support::sqrt_tower({2});
    auto e = embed(q2.sqrt_generator(1), R(1, 100));
    REQUIRE(e.boxes.size() == 2);
    CHECK(box_near(e.boxes[0], 1.41421, 0.01));
    CHECK(box_near(e.boxes[1], -1.41421, 0.01));

    FieldTower z5 = zeta_tower(5);
    AlgNum g = z5.generator();
    auto f = embed(g + g.inverse(), R(1, 100));
    REQUIRE(f.boxes.size() == 4);
    int near_phi = 0, near_minus = 0;
    for (const auto& b : f.boxes) {
        CHECK(b.re.width() <= R(1, 100));
        if (box_near_real(b, 0.618034, 0.01)) ++near_phi;
        if (box_near_real(b, -1.618034, 0.01)) ++near_minus;
    }
    CHECK(near_phi == 2);
    CHECK(near_minus == 2);

    auto h = embed(lin(q2, 3, 2), R(1, 1000000));
    CHECK(box_near(h.boxes[0], 5.828427, 1e-6));
    CHECK(box_near(h.boxes[1], 0.171572, 1e-6));
    CHECK(h.boxes[0].re.width() <= R(1, 1000000));

    FieldTower qi = support::sqrt_tower({-1});
    auto ib = embed(qi.sqrt_generator(1), R(1, 1000));
    REQUIRE(ib.boxes.size() == 2);
    CHECK_FALSE(ib.boxes[0].is_real());
    CHECK(ib.boxes[0].im.contains(R(1)));
    CHECK(ib.boxes[1].im.contains(R(-1)));
}

TEST_CASE("complex conjugation on CM towers") {
    FieldTower t = support::sqrt_tower({2, -1});
    AlgNum i = t.sqrt_generator(2);
    AlgNum r2 = t.sqrt_generator(1);
    CHECK(conj(i) == -i);
    CHECK(conj(r2) == r2);
    AlgNum x = i * r2 * R(2) + R(1);
    CHECK(conj(x) == -(i * r2 * R(2)) + R(1));
    CHECK(cm_kind(t) == CMKind::top_step);
    CHECK_THROWS_AS(conj(support::sqrt_tower({2}).sqrt_generator(1)), NotCMTower);
    CHECK_THROWS_AS(conj(support::sqrt_tower({-1, 2}).sqrt_generator(1)), NotCMTower);

    FieldTower z5 = zeta_tower(5);
    AlgNum z = z5.generator();
    CHECK(cm_kind(z5) == CMKind::cyclotomic);
    CHECK(conj(z) == z.inverse());
    CHECK(conj(conj(z + z * z * R(3))) == z + z * z * R(3));

    FieldTower qm3 = FieldTower::make_base(P({1, 1, 1}));
    AlgNum w = qm3.generator();
    CHECK(cm_kind(qm3) == CMKind::imaginary_quadratic);
    CHECK(conj(w) == w * w);
}

TEST_CASE("square roots inside towers") {
    FieldTower q2 = support::sqrt_tower({2});
    auto r = try_sqrt(lin(q2, 3, 2));
    REQUIRE(r);
    CHECK(*r * *r == lin(q2, 3, 2));
    CHECK_FALSE(try_sqrt(lin(q2, 1, 1)));
    CHECK_FALSE(try_sqrt(num(q2, 3)));
    auto r6 = try_sqrt(num(q2, 8));
    REQUIRE(r6);
    CHECK(*r6 * *r6 == num(q2, 8));

    FieldTower q23 = support::sqrt_tower({2, 3});
    AlgNum a = q23.sqrt_generator(1) + q23.sqrt_generator(2);
    auto ra = try_sqrt(a * a);
    REQUIRE(ra);
    CHECK(*ra * *ra == a * a);
    CHECK_FALSE(try_sqrt(a));

    FieldTower z5 = zeta_tower(5);
    AlgNum z = z5.generator();
    auto rz = try_sqrt(z * z);
    REQUIRE(rz);
    CHECK(*rz * *rz == z * z);
    CHECK_FALSE(try_sqrt(z + R(2)));

    FieldTower qm3 = FieldTower::make_base(P({1, 1, 1}));
    auto rw = try_sqrt(num(qm3, -3));
    REQUIRE(rw);
    CHECK(*rw * *rw == num(qm3, -3));
}

TEST_CASE("random field axioms") {
    std::mt19937_64 rng(test_seed());
    FieldTower t = support::sqrt_tower({2, 3, -1});
    for (int it = 0; it < 20; ++it) {
        AlgNum a = support::random_element(rng, t, 5);
        AlgNum b = support::random_element(rng, t, 5);
        AlgNum c = support::random_element(rng, t, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == num(t, 1));
    }
}
