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

#include "trcert/integrality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trcert/conj.hpp"
#include "trcert/error.hpp"

namespace trcert {

bool is_algebraic_integer(const AlgNum& a) { return min_poly(a).has_integer_coeffs(); }

std::optional<ResidueWitness> r_m_membership(const AlgNum& a, long m) {
    if (m < 1) throw PreconditionFailed("r_m_membership: m must be >= 1");
    Rat inv_m(1, m);
    for (long j = 0; j < m; ++j) {
        AlgNum w = (a - Rat(j)) * inv_m;
        if (is_algebraic_integer(w)) return ResidueWitness{m, j};
    }
    return std::nullopt;
}

std::optional<UnitEvidence> is_unit(const AlgNum& a) {
    RatPoly mp = min_poly(a);
    if (!mp.has_integer_coeffs()) return std::nullopt;
    const Rat& c0 = mp.coeff(0);
    if (c0 != 1 && c0 != -1) return std::nullopt;
    int n = mp.degree();
    // u (u^{n-1} + c_{n-1} u^{n-2} + ... + c_1) = -c_0
    std::vector<Int> inv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inv[i] = Int(-c0 * mp.coeff(i + 1));
    AlgNum value(a.tower(), Rat(0));
    AlgNum pw(a.tower(), Rat(1));
    for (int i = 0; i < n; ++i) {
        value += pw * Rat(inv[i]);
        pw *= a;
    }
    if (a * value != AlgNum(a.tower(), Rat(1)))
        throw InternalContradiction("unit inverse check failed for " + a.str());
    return UnitEvidence{mp, Int(c0), std::move(inv), std::move(value)};
}

RootOfUnityReport is_root_of_unity(const AlgNum& a) {
    RatPoly mp = min_poly(a);
    if (!mp.has_integer_coeffs()) return {};
    const Rat& c0 = mp.coeff(0);
    if (c0 != 1 && c0 != -1) return {};
    for (unsigned long n : inverse_phi(static_cast<unsigned long>(mp.degree())))
        if (cyclotomic(n) == mp) return {true, n};
    return {};
}

std::pair<AlgNum, RootOfUnityReport> conj_ratio(const AlgNum& u) {
    if (!is_unit(u)) throw NotAUnit("conj_ratio: not a unit: " + u.str());
    AlgNum ratio = u / conj(u);
    RootOfUnityReport rep = is_root_of_unity(ratio);
    if (!rep.is_root_of_unity)
        throw InternalContradiction("u/conj(u) is not a root of unity for u = " + u.str());
    return {ratio, rep};
}

std::vector<AlgNum> primitive_roots_in(const FieldTower& t, unsigned long n,
                                       const std::vector<AlgNum>& extra) {
    std::vector<AlgNum> gens;
    gens.push_back(t.generator());
    for (std::size_t k = 1; k <= t.height(); ++k) gens.push_back(t.sqrt_generator(k));
    for (const auto& e : extra) gens.push_back(e.lift(t));

    std::set<std::vector<Rat>> seen;
    std::vector<AlgNum> out;
    for (const auto& g0 : gens) {
        for (const AlgNum& g : {g0, -g0}) {
            RootOfUnityReport rep = is_root_of_unity(g);
            if (!rep.is_root_of_unity || rep.order % n != 0) continue;
            AlgNum z = g.pow(static_cast<long>(rep.order / n));
            for (unsigned long j = 1; j < n; ++j) {
                if (std::gcd(j, n) != 1) continue;
                AlgNum r = z.pow(static_cast<long>(j));
                if (seen.insert(r.coeffs()).second) out.push_back(r);
            }
        }
    }
    return out;
}

ProbeReport probe_mu_trivial(const FieldTower& t, long m, const std::vector<unsigned long>& orders,
                             const std::vector<AlgNum>& extra) {
    if (m < 2) throw PreconditionFailed("probe_mu_trivial: m must be >= 2");
    ProbeReport rep;
    rep.m = m;
    for (unsigned long n : orders) {
        ProbeEntry e;
        e.order = n;
        if (n > 2) {
            auto roots = primitive_roots_in(t, n, extra);
            if (roots.empty()) e.violations.push_back("no primitive root of order " + std::to_string(n) + " in tower");
            for (const auto& z : roots) {
                ++e.roots_checked;
                if (auto w = r_m_membership(z, m))
                    e.violations.push_back(z.str() + " has residue " + std::to_string(w->j));
            }
        }
        if (!e.violations.empty()) rep.pass = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

std::vector<AlgNum> sample_units(const std::vector<AlgNum>& generators, std::size_t max_len) {
    if (generators.empty()) return {};
    const FieldTower& t = generators.front().tower();
    std::vector<AlgNum> letters;
    for (const auto& g : generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    std::set<std::vector<Rat>> seen;
    std::vector<AlgNum> out;
    auto add = [&](const AlgNum& x) {
        if (seen.insert(x.coeffs()).second) out.push_back(x);
    };
    std::vector<AlgNum> layer{AlgNum(t, Rat(1))};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<AlgNum> next;
        for (const auto& w : layer)
            for (const auto& l : letters) next.push_back(w * l);
        for (const auto& w : next) {
            add(w);
            add(-w);
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace trcert
