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

#include "trcert/constructions.hpp"

#include <functional>
#include <map>
#include <utility>

#include "trcert/conj.hpp"
#include "trcert/embedding.hpp"
#include "trcert/error.hpp"
#include "trcert/integrality.hpp"
#include "trcert/positivity.hpp"

namespace trcert {

bool VerifyReport::pass() const {
    for (const auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::first_failure() const {
    for (const auto& c : clauses)
        if (!c.pass) return c.name;
    return {};
}

void VerifyReport::add(std::string name, bool ok, std::string detail) {
    clauses.push_back({std::move(name), ok, std::move(detail)});
}

void VerifyReport::merge(const std::string& prefix, const VerifyReport& other) {
    for (const auto& c : other.clauses) clauses.push_back({prefix + ": " + c.name, c.pass, c.detail});
}

namespace {

const IntervalSpec kForbidden = IntervalSpec::open(Rat(-2), Rat(0));

// r with r^2 = delta, inside t when possible and otherwise by a new step.
std::pair<FieldTower, AlgNum> sqrt_or_adjoin(const AlgNum& delta) {
    const FieldTower& t = delta.tower();
    if (delta.is_zero()) return {t, AlgNum(t, Rat(0))};
    if (auto r = try_sqrt(delta)) return {t, *r};
    FieldTower next = t.adjoin_sqrt(delta);
    return {next, next.sqrt_generator(next.height())};
}

void require_integral_real(const AlgNum& x, const char* what) {
    if (!is_algebraic_integer(x)) throw NotAlgebraicInteger(std::string(what) + " is not an algebraic integer: " + x.str());
    if (!is_totally_real(x)) throw NotTotallyReal(std::string(what) + " is not totally real: " + x.str());
}

UnitPairCert unit_pair_core(const AlgNum& d) {
    auto [t, r] = sqrt_or_adjoin(d * d + d);
    AlgNum dd = d.lift(t);
    AlgNum one(t, Rat(1));
    AlgNum u = (dd + r) * Rat(2) + Rat(1);
    AlgNum u2 = (dd - r) * Rat(2) + Rat(1);
    if (u * u2 != one) throw InternalContradiction("unit pair product is not 1 for d = " + d.str());
    if (u.inverse() != u2) throw InternalContradiction("unit pair inverse mismatch for d = " + d.str());
    if (!is_algebraic_integer(u)) throw InternalContradiction("unit pair witness left the integers for d = " + d.str());
    return {t, dd, r, u, dd * Rat(4) + Rat(2)};
}

// Runs one clause, turning library errors into a failed clause.
void check(VerifyReport& rep, const std::string& name, const std::function<bool()>& f) {
    try {
        rep.add(name, f());
    } catch (const Error& e) {
        rep.add(name, false, e.what());
    }
}

bool residue_one_mod_two(const AlgNum& x) {
    auto w = r_m_membership(x, 2);
    return w && w->j == 1;
}

AlgNum sum_squares(const FieldTower& t, const std::vector<AlgNum>& y, std::size_t from, std::size_t to) {
    AlgNum s(t, Rat(0));
    for (std::size_t i = from; i < to; ++i) {
        AlgNum v = y[i].lift(t);
        s += v * v;
    }
    return s;
}

}  // namespace

UnitPairCert build_unit_pair(const AlgNum& d) {
    require_integral_real(d, "d");
    if (!is_totally_nonnegative(d * d + d))
        throw NotTotallyNonnegative("d^2 + d is not totally nonnegative for d = " + d.str());
    return unit_pair_core(d);
}

Sum32Cert build_sum32(const AlgNum& d) {
    require_integral_real(d, "d");
    if (!totally_avoids(d, kForbidden))
        throw ConjugateInForbiddenInterval("a conjugate of d lies in (-2, 0): " + d.str());

    std::optional<UnitPairCert> p1, p2;
    if (is_totally_nonnegative(d * d - d)) {
        // e = d, f = d - 1
        p1 = build_unit_pair(d);
        p2 = build_unit_pair(d.lift(p1->tower) - Rat(1));
    } else {
        // Some conjugate of d lies in (0, 1). Use e = d + 1 and f with
        // f^2 + f = d^2 + d + 2, so that (e - f)(e + f + 1) = 2d.
        auto [t, s] = sqrt_or_adjoin(d * d * Rat(4) + d * Rat(4) + Rat(9));
        AlgNum f = (s - Rat(1)) * Rat(1, 2);
        p1 = build_unit_pair(d.lift(t) + Rat(1));
        p2 = build_unit_pair(f.lift(p1->tower));
    }
    const FieldTower& k1 = p2->tower;
    AlgNum dd = d.lift(k1);
    AlgNum u = p1->u.lift(k1);
    AlgNum v = p2->u;
    AlgNum lhs = dd * Rat(32);
    AlgNum rhs = u * u + (u * u).inverse() - v * v - (v * v).inverse();
    if (lhs != rhs) throw InternalContradiction("32d identity failed for d = " + d.str());
    return {k1, dd, u, v};
}

XWitnessCert build_x_witness(const AlgNum& alpha) {
    require_integral_real(alpha, "alpha");
    AlgNum d1 = (alpha + Rat(1)) * (alpha + Rat(1));
    AlgNum d2 = (alpha - Rat(1)) * (alpha - Rat(1));
    if (alpha * Rat(4) != d1 - d2) throw InternalContradiction("4 alpha identity failed");
    return {alpha, d1, d2, build_sum32(d1), build_sum32(d2)};
}

VerifyReport verify_unit_pair(const UnitPairCert& c) {
    VerifyReport rep;
    const FieldTower& t = c.tower;
    AlgNum d(t, Rat(0)), r = d, u = d, a = d;
    try {
        d = c.d.lift(t);
        r = c.r.lift(t);
        u = c.u.lift(t);
        a = c.a.lift(t);
        rep.add("elements lie in tower", true);
    } catch (const Error& e) {
        rep.add("elements lie in tower", false, e.what());
        return rep;
    }
    AlgNum one(t, Rat(1));
    check(rep, "d algebraic integer", [&] { return is_algebraic_integer(d); });
    check(rep, "d totally real", [&] { return is_totally_real(d); });
    check(rep, "d^2 + d totally nonnegative", [&] { return is_totally_nonnegative(d * d + d); });
    check(rep, "r^2 = d^2 + d", [&] { return r * r == d * d + d; });
    check(rep, "u = 2(d + r) + 1", [&] { return u == (d + r) * Rat(2) + Rat(1); });
    check(rep, "u is a unit", [&] { return is_unit(u).has_value(); });
    check(rep, "u residue witness (m=2, j=1)", [&] { return residue_one_mod_two(u); });
    check(rep, "u (2(d - r) + 1) = 1", [&] { return u * ((d - r) * Rat(2) + Rat(1)) == one; });
    check(rep, "a = 2(2d + 1)", [&] { return a == d * Rat(4) + Rat(2); });
    check(rep, "u + 1/u = a", [&] { return u + u.inverse() == a; });
    check(rep, "u^2 + 1/u^2 + 2 = a^2", [&] { return u * u + (u * u).inverse() + Rat(2) == a * a; });
    return rep;
}

VerifyReport verify_sum32(const Sum32Cert& c) {
    VerifyReport rep;
    const FieldTower& t = c.tower;
    AlgNum d(t, Rat(0)), u = d, v = d;
    try {
        d = c.d.lift(t);
        u = c.u.lift(t);
        v = c.v.lift(t);
        rep.add("elements lie in tower", true);
    } catch (const Error& e) {
        rep.add("elements lie in tower", false, e.what());
        return rep;
    }
    check(rep, "d algebraic integer", [&] { return is_algebraic_integer(d); });
    check(rep, "d totally real", [&] { return is_totally_real(d); });
    check(rep, "d avoids (-2, 0)", [&] { return totally_avoids(d, kForbidden); });
    check(rep, "u is a unit", [&] { return is_unit(u).has_value(); });
    check(rep, "v is a unit", [&] { return is_unit(v).has_value(); });
    check(rep, "u residue witness (m=2, j=1)", [&] { return residue_one_mod_two(u); });
    check(rep, "v residue witness (m=2, j=1)", [&] { return residue_one_mod_two(v); });
    check(rep, "u totally real", [&] { return is_totally_real(u); });
    check(rep, "v totally real", [&] { return is_totally_real(v); });
    check(rep, "32d identity", [&] {
        return d * Rat(32) == u * u + (u * u).inverse() - v * v - (v * v).inverse();
    });
    return rep;
}

VerifyReport verify_x_witness(const XWitnessCert& c) {
    VerifyReport rep;
    rep.merge("c1", verify_sum32(c.c1));
    rep.merge("c2", verify_sum32(c.c2));
    const AlgNum& a = c.alpha;
    check(rep, "alpha algebraic integer", [&] { return is_algebraic_integer(a); });
    check(rep, "alpha totally real", [&] { return is_totally_real(a); });
    check(rep, "d1 = (alpha + 1)^2", [&] { return c.d1 == (a + Rat(1)) * (a + Rat(1)); });
    check(rep, "d2 = (alpha - 1)^2", [&] { return c.d2 == (a - Rat(1)) * (a - Rat(1)); });
    check(rep, "c1 certifies d1", [&] { return c.c1.d == c.d1; });
    check(rep, "c2 certifies d2", [&] { return c.c2.d == c.d2; });
    check(rep, "4 alpha = d1 - d2", [&] { return a * Rat(4) == c.d1 - c.d2; });

    const std::pair<const char*, const Sum32Cert*> subs[] = {{"c1", &c.c1}, {"c2", &c.c2}};
    for (const auto& [name, sub] : subs) {
        std::string p = name;
        std::optional<FieldTower> l;
        check(rep, p + " CM extension K1(sqrt(-1))", [&] {
            l = sub->tower.adjoin_sqrt(AlgNum(sub->tower, Rat(-1)));
            return cm_kind(*l) == CMKind::top_step;
        });
        for (const auto& [uname, unit] : {std::pair{"u", &sub->u}, std::pair{"v", &sub->v}}) {
            std::string q = p + " " + uname;
            check(rep, q + "^2 fixed by conjugation", [&] {
                if (!l) return false;
                AlgNum w = unit->lift(*l);
                return conj(w * w) == w * w;
            });
            check(rep, q + " in R_2 of the CM extension", [&] {
                if (!l) return false;
                return residue_one_mod_two(unit->lift(*l));
            });
        }
    }
    return rep;
}

VerifyReport verify_four_squares(const FourSquaresCert& c) {
    VerifyReport rep;
    rep.add("nine witnesses", c.y.size() == 9);
    if (c.y.size() != 9) return rep;
    FieldTower t = c.x.tower();
    try {
        for (const auto& y : c.y) t = common_tower(t, y.tower());
        rep.add("elements lie in tower", true);
    } catch (const Error& e) {
        rep.add("elements lie in tower", false, e.what());
        return rep;
    }
    rep.add("b > 0", c.b > 0);
    AlgNum x = c.x.lift(t);
    AlgNum y0 = c.y[0].lift(t);
    AlgNum y0sq = y0 * y0;
    AlgNum bxy = x * y0sq * Rat(c.b);
    check(rep, "y totally real", [&] {
        for (const auto& y : c.y)
            if (!is_totally_real(y)) return false;
        return true;
    });
    check(rep, "b x y0^2 != 0", [&] { return !bxy.is_zero(); });
    check(rep, "b x y0^2 != a y0^2", [&] { return bxy != y0sq * Rat(c.a); });
    check(rep, "x y0^2 = y1^2 + y2^2 + y3^2 + y4^2", [&] { return x * y0sq == sum_squares(t, c.y, 1, 5); });
    check(rep, "(a - b x) y0^2 = y5^2 + y6^2 + y7^2 + y8^2",
          [&] { return y0sq * Rat(c.a) - bxy == sum_squares(t, c.y, 5, 9); });
    return rep;
}

std::optional<std::array<AlgNum, 4>> four_squares_in_box(const AlgNum& target, long bound) {
    const FieldTower& t = target.tower();
    if (!is_totally_real_tower(t)) throw PreconditionFailed("four-squares search needs a totally real tower");
    if (bound < 0) throw PreconditionFailed("height bound must be nonnegative");
    std::size_t n = t.degree();
    double cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= double(2 * bound + 1);
    if (cells > 1e7) throw ResourceGuard(cells, 1e7);

    // Trace is linear; precompute it on the basis.
    std::vector<Rat> basis_trace(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = 1;
        basis_trace[i] = trace(AlgNum(t, e));
    }
    auto tr = [&](const AlgNum& z) {
        Rat s = 0;
        for (std::size_t i = 0; i < n; ++i) s += z.coeffs()[i] * basis_trace[i];
        return s;
    };
    Rat limit = tr(target);
    if (limit < 0) return std::nullopt;

    // Sign-canonical box elements (first nonzero coordinate positive).
    struct Cand {
        AlgNum y, sq;
        Rat tr;
    };
    std::vector<Cand> cands;
    std::vector<long> v(n, -bound);
    for (bool more = true; more;) {
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead == n || v[lead] > 0) {
            std::vector<Rat> c(v.begin(), v.end());
            AlgNum y(t, c);
            AlgNum sq = y * y;
            Rat s = tr(sq);
            if (s <= limit) cands.push_back({y, sq, s});
        }
        more = false;
        for (std::size_t i = n; i-- > 0;) {
            if (v[i] < bound) {
                ++v[i];
                more = true;
                break;
            }
            v[i] = -bound;
        }
    }
    // Zero first so that short representations win.
    std::stable_partition(cands.begin(), cands.end(), [](const Cand& c) { return c.y.is_zero(); });

    double pairs = double(cands.size()) * double(cands.size() + 1) / 2;
    if (pairs > 5e7) throw ResourceGuard(pairs, 5e7);
    std::map<std::vector<Rat>, std::pair<std::size_t, std::size_t>> sums;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i; j < cands.size(); ++j) {
            if (cands[i].tr + cands[j].tr > limit) continue;
            sums.emplace((cands[i].sq + cands[j].sq).coeffs(), std::pair{i, j});
        }
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i; j < cands.size(); ++j) {
            if (cands[i].tr + cands[j].tr > limit) continue;
            AlgNum rest = target - cands[i].sq - cands[j].sq;
            auto it = sums.find(rest.coeffs());
            if (it == sums.end()) continue;
            auto [k, l] = it->second;
            return std::array<AlgNum, 4>{cands[i].y, cands[j].y, cands[k].y, cands[l].y};
        }
    return std::nullopt;
}

std::optional<FourSquaresCert> search_four_squares(const AlgNum& x, const Int& a, const Int& b, long bound) {
    if (b <= 0) throw PreconditionFailed("b must be positive");
    const FieldTower& t = x.tower();
    if (!is_totally_real_tower(t)) throw PreconditionFailed("four-squares search needs a totally real tower");
    if (!is_algebraic_integer(x)) throw PreconditionFailed("x is not an algebraic integer: " + x.str());
    Rat ratio(a, b);
    ratio.canonicalize();
    if (!totally_in(x, IntervalSpec::open(Rat(0), ratio)))
        throw PreconditionFailed("x is not totally inside (0, " + to_string(ratio) + ")");
    for (long y0 = 1; y0 <= bound; ++y0) {
        Rat sq(y0 * y0);
        auto first = four_squares_in_box(x * sq, bound);
        if (!first) continue;
        auto second = four_squares_in_box((AlgNum(t, Rat(a)) - x * Rat(b)) * sq, bound);
        if (!second) continue;
        FourSquaresCert c{x, a, b, {AlgNum(t, Rat(y0))}};
        for (const auto& y : *first) c.y.push_back(y);
        for (const auto& y : *second) c.y.push_back(y);
        if (!verify_four_squares(c).pass()) throw InternalContradiction("found four-squares certificate fails verification");
        return c;
    }
    return std::nullopt;
}

}  // namespace trcert
