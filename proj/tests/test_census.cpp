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

#include <cstdlib>
#include <set>

#include "doctest.h"

#include "oracles.hpp"
#include "test_support.hpp"
#include "trcert/census.hpp"
#include "trcert/error.hpp"
#include "trcert/integrality.hpp"
#include "trcert/positivity.hpp"

using namespace trcert;
using support::P;
using support::R;

namespace {

std::set<RatPoly> entry_set(const CensusTable& t) {
    std::set<RatPoly> s;
    for (const auto& e : t.entries) s.insert(e.poly);
    return s;
}

std::set<RatPoly> oracle_set(const std::vector<std::vector<mpq_class>>& v) {
    std::set<RatPoly> s;
    for (const auto& c : v) s.insert(RatPoly(c));
    return s;
}

}  // namespace

TEST_CASE("kronecker entries") {
    CHECK(kronecker_entry(3).poly == P({-1, 1}));
    CHECK(kronecker_entry(4).poly == P({-2, 1}));
    CHECK(kronecker_entry(6).poly == P({-3, 1}));
    CHECK(kronecker_entry(5).poly == P({1, -3, 1}));
    CHECK(kronecker_entry(12).poly == P({1, -4, 1}));
    CHECK(kronecker_entry(8).poly == P({2, -4, 1}));
    CHECK(kronecker_entry(10).poly == P({5, -5, 1}));
    CHECK_THROWS_AS(kronecker_entry(2), PreconditionFailed);
    CHECK_THROWS_AS(kronecker_entry(1), PreconditionFailed);
}

TEST_CASE("kronecker entries match tower minimal polynomials") {
    // Independent route: Krylov minimal polynomial inside Q(zeta_n).
    for (unsigned long n = 3; n <= 30; ++n) {
        FieldTower z = FieldTower::make_base(cyclotomic(n));
        AlgNum g = z.generator();
        AlgNum kappa = g + g.inverse() + Rat(2);
        auto e = kronecker_entry(n);
        CHECK(e.poly == min_poly(kappa));
        CHECK(2 * e.degree == static_cast<int>(euler_phi(n)));
        CHECK(totally_in(kappa, IntervalSpec::open(R(0), R(4))));
        CHECK(is_algebraic_integer(kappa));
    }
}

TEST_CASE("small censuses") {
    auto t1 = census(1, R(7, 2));
    CHECK(entry_set(t1) == std::set<RatPoly>{P({-1, 1}), P({-2, 1}), P({-3, 1})});
    CHECK(t1.element_count == 3);

    auto t2 = census(2, R(4));
    std::set<RatPoly> want{P({-1, 1}), P({-2, 1}), P({-3, 1}), P({1, -3, 1}), P({2, -4, 1}), P({5, -5, 1}), P({1, -4, 1})};
    CHECK(entry_set(t2) == want);
    CHECK(t2.counts == std::vector<std::size_t>{3, 4});
    CHECK(t2.element_count == 11);

    auto t3 = census(2, R(3));
    auto s3 = entry_set(t3);
    CHECK(s3.size() < want.size());
    CHECK(s3.count(P({1, -3, 1})) == 1);
    CHECK(s3.count(P({1, -4, 1})) == 0);
    // Entries are sorted by degree, then coefficients.
    for (std::size_t i = 1; i < t2.entries.size(); ++i) CHECK(t2.entries[i - 1].poly < t2.entries[i].poly);
}

TEST_CASE("degree-2 census against the quadratic formula") {
    for (auto [p, q] : {std::pair{39L, 10L}, std::pair{3L, 1L}, std::pair{4L, 1L}, std::pair{5L, 2L}, std::pair{9L, 2L}}) {
        Rat t(p, q);
        t.canonicalize();
        CHECK(entry_set(census(2, t)) == oracle_set(oracle::census_d2_naive(p, q)));
    }
}

TEST_CASE("degree-3 census against the Hermite brute force") {
    for (auto [p, q] : {std::pair{4L, 1L}, std::pair{7L, 2L}, std::pair{39L, 10L}}) {
        Rat t(p, q);
        t.canonicalize();
        CHECK(entry_set(census(3, t)) == oracle_set(oracle::census_brute(3, p, q)));
    }
}

TEST_CASE("kronecker completeness") {
    for (int d : {1, 2, 3}) {
        auto rep = kronecker_completeness(d);
        CHECK(rep.pass);
        CHECK(rep.census_only.empty());
        CHECK(rep.kronecker_only.empty());
    }
    auto r2 = kronecker_completeness(2);
    CHECK(r2.orders == std::vector<unsigned long>{3, 4, 5, 6, 8, 10, 12});
    auto r3 = kronecker_completeness(3);
    CHECK(r3.census_size == 11);
}

TEST_CASE("profiles") {
    auto rows = jr_profile(1, {R(1, 2), R(3, 2), R(5, 2), R(9, 2)});
    std::vector<std::size_t> counts;
    for (const auto& r : rows) counts.push_back(r.count);
    CHECK(counts == std::vector<std::size_t>{0, 1, 2, 4});
    auto two = jr_profile(2, {R(7, 2), R(4)});
    CHECK(two[1].count > two[0].count);
    auto same = jr_profile(2, {R(4), R(4)});
    CHECK(same[0].count == same[1].count);
}

TEST_CASE("resource guard and threading") {
    CensusOptions tight;
    tight.cell_budget = 100;
    try {
        census(3, R(4), tight);
        FAIL("expected ResourceGuard");
    } catch (const ResourceGuard& g) {
        CHECK(g.needed() == doctest::Approx(census_cells(3, R(4))));
        CHECK(g.budget() == 100);
    }
    CHECK(census_cells(4, R(39, 10)) == doctest::Approx(15.0 * 91 * 237 * 231 + 11.0 * 45 * 59 + 7 * 15 + 3));

    ::setenv("TRCERT_CELL_BUDGET", "50", 1);
    CHECK(CensusOptions::default_cell_budget() == 50);
    ::unsetenv("TRCERT_CELL_BUDGET");
    CHECK(CensusOptions::default_cell_budget() == 1e8);

    CensusOptions par;
    par.threads = 3;
    auto a = census(3, R(4));
    auto b = census(3, R(4), par);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].poly == b.entries[i].poly);

    CHECK_THROWS_AS(census(0, R(4)), PreconditionFailed);
    CHECK_THROWS_AS(census(2, R(0)), PreconditionFailed);
}
