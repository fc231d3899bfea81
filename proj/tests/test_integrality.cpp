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

#include "doctest.h"

#include "test_support.hpp"
#include "trcert/antisymmetric.hpp"
#include "trcert/conj.hpp"
#include "trcert/error.hpp"
#include "trcert/integrality.hpp"
#include "trcert/positivity.hpp"

using namespace trcert;
using support::lin;
using support::num;
using support::P;
using support::R;

TEST_CASE("algebraic integers") {
    FieldTower q2 = support::sqrt_tower({2});
    CHECK(is_algebraic_integer(q2.sqrt_generator(1)));
    CHECK_FALSE(is_algebraic_integer(num(q2, 1) * R(1, 2)));
    FieldTower q5 = support::sqrt_tower({5});
    AlgNum golden = lin(q5, 1, 1) * R(1, 2);
    CHECK(min_poly(golden) == P({-1, -1, 1}));
    CHECK(is_algebraic_integer(golden));
    CHECK_FALSE(is_algebraic_integer(q5.sqrt_generator(1) * R(1, 2)));
}

TEST_CASE("residue witnesses") {
    FieldTower q2 = support::sqrt_tower({2});
    CHECK_FALSE(r_m_membership(q2.sqrt_generator(1), 2));
    auto w = r_m_membership(lin(q2, 1, 2), 2);
    REQUIRE(w);
    CHECK(*w == ResidueWitness{2, 1});
    FieldTower qi = support::sqrt_tower({-1});
    CHECK_FALSE(r_m_membership(qi.sqrt_generator(1), 2));
    CHECK_FALSE(r_m_membership(qi.sqrt_generator(1), 3));
    CHECK(r_m_membership(num(q2, 7), 3)->j == 1);
    CHECK(r_m_membership(q2.sqrt_generator(1), 1)->j == 0);
    CHECK_THROWS_AS(r_m_membership(num(q2, 1), 0), PreconditionFailed);
    // (1 + sqrt5)/2 = 1 + 2 * (sqrt5 - 1)/4, and (sqrt5 - 1)/4 is not integral.
    FieldTower q5 = support::sqrt_tower({5});
    CHECK_FALSE(r_m_membership(lin(q5, 1, 1) * R(1, 2), 2));
    CHECK(r_m_membership(lin(q5, 3, 2), 2)->j == 1);
}

TEST_CASE("unit evidence") {
    FieldTower q2 = support::sqrt_tower({2});
    auto e = is_unit(lin(q2, 3, 2));
    REQUIRE(e);
    CHECK(e->inverse == lin(q2, 3, -2));
    CHECK(e->inverse_coeffs == std::vector<Int>{6, -1});
    CHECK(e->constant == 1);
    CHECK_FALSE(is_unit(num(q2, 2)));
    CHECK_FALSE(is_unit(num(q2, 1) * R(1, 2)));
    FieldTower q6 = support::sqrt_tower({6});
    auto f = is_unit(lin(q6, 5, 2));
    REQUIRE(f);
    CHECK(f->inverse == lin(q6, 5, -2));
    CHECK(f->inverse_coeffs == std::vector<Int>{10, -1});
    auto g = is_unit(lin(q2, 1, 1));
    REQUIRE(g);
    CHECK(g->constant == -1);
    CHECK(g->inverse == lin(q2, -1, 1));
}

TEST_CASE("roots of unity") {
    FieldTower qi = support::sqrt_tower({-1});
    auto a = is_root_of_unity(num(qi, -1));
    CHECK(a.is_root_of_unity);
    CHECK(a.order == 2);
    auto b = is_root_of_unity(qi.sqrt_generator(1));
    CHECK(b.is_root_of_unity);
    CHECK(b.order == 4);
    CHECK(is_root_of_unity(num(qi, 1)).order == 1);
    FieldTower q2 = support::sqrt_tower({2});
    CHECK_FALSE(is_root_of_unity(lin(q2, 3, 2)).is_root_of_unity);
    FieldTower z15 = FieldTower::make_base(cyclotomic(15));
    AlgNum z = z15.generator();
    CHECK(is_root_of_unity(z).order == 15);
    CHECK(is_root_of_unity(-z).order == 30);
    CHECK(is_root_of_unity(z.pow(5)).order == 3);
    CHECK_FALSE(is_root_of_unity(z + R(1)).is_root_of_unity);
}

TEST_CASE("conjugate ratios") {
    FieldTower t = support::sqrt_tower({2, -1});
    auto [r1, rep1] = conj_ratio(lin(t, 3, 2, 1));
    CHECK(r1 == num(t, 1));
    CHECK(rep1.order == 1);
    FieldTower qi = support::sqrt_tower({-1});
    auto [r2, rep2] = conj_ratio(qi.sqrt_generator(1));
    CHECK(r2 == num(qi, -1));
    CHECK(rep2.order == 2);
    CHECK_THROWS_AS(conj_ratio(lin(qi, 1, 1)), NotAUnit);
    CHECK_THROWS_AS(conj_ratio(lin(support::sqrt_tower({2}), 3, 2)), NotCMTower);
}

TEST_CASE("probing roots of unity") {
    FieldTower qi = support::sqrt_tower({-1});
    auto p = probe_mu_trivial(qi, 2, {4});
    CHECK(p.pass);
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0].roots_checked == 2);
    CHECK(probe_mu_trivial(qi, 3, {4}).pass);

    FieldTower z5 = FieldTower::make_base(cyclotomic(5));
    auto q = probe_mu_trivial(z5, 2, {5});
    CHECK(q.pass);
    CHECK(q.entries[0].roots_checked == 4);
    CHECK(probe_mu_trivial(z5, 2, {10}).pass);

    // No cube root of unity in Q(i).
    CHECK_FALSE(probe_mu_trivial(qi, 2, {3}).pass);
    // Order 2 is the trivial case and is skipped.
    CHECK(probe_mu_trivial(qi, 2, {2}).entries[0].roots_checked == 0);
}

TEST_CASE("unit samples") {
    FieldTower q2 = support::sqrt_tower({2});
    auto s = sample_units({lin(q2, 1, 1)}, 3);
    for (const auto& u : s) CHECK(is_unit(u));
    CHECK(s.size() == 14);  // +-(1+sqrt2)^k, -3 <= k <= 3
}

TEST_CASE("zeta15 CM presentation") {
    FieldTower cm = zeta15_cm_tower();
    CHECK(cm.degree() == 8);
    CHECK(cm_kind(cm) == CMKind::top_step);
    AlgNum z = zeta15_in(cm);
    CHECK(min_poly(z) == cyclotomic(15));
    CHECK(conj(z) == z.inverse());
}

TEST_CASE("anti-symmetric units in Q(zeta15)") {
    AntisymmetricSearchConfig plain;
    auto none = search_antisymmetric_units(plain);
    CHECK(none.examined == 2UL * 15 * 78125);
    CHECK(none.filtered == 0);
    CHECK_FALSE(none.found());

    AntisymmetricSearchConfig ext;
    ext.base_exponent_bound = 1;
    auto hit = search_antisymmetric_units(ext);
    CHECK(hit.found());
    REQUIRE_FALSE(hit.verified.empty());
    for (const auto& v : hit.verified) {
        CHECK(v.unit);
        CHECK(v.residue_one);
        CHECK(v.antisymmetric);
    }

    // Second route: (1 - zeta)/(1 + zeta) in Q(zeta15) with base Phi_15.
    FieldTower z15 = FieldTower::make_base(cyclotomic(15));
    AlgNum z = z15.generator();
    AlgNum u = (num(z15, 1) - z) / (num(z15, 1) + z);
    CHECK(is_unit(u));
    CHECK(r_m_membership(u, 2)->j == 1);
    CHECK(conj(u) == -u);
    CHECK_FALSE(is_totally_real(u));
    CHECK(min_poly(u) == min_poly(hit.verified.front().u));
}
