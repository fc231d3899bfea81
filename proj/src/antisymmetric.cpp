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

#include "trcert/antisymmetric.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstdint>

#include "trcert/census.hpp"
#include "trcert/conj.hpp"
#include "trcert/error.hpp"
#include "trcert/integrality.hpp"

namespace trcert {

bool AntisymmetricSearchResult::found() const {
    for (const auto& v : verified)
        if (v.unit && v.residue_one && v.antisymmetric) return true;
    return false;
}

const std::vector<int>& zeta15_unit_bases() {
    static const std::vector<int> bases{2, 4, 7, 8, 11, 13, 14};
    return bases;
}

FieldTower zeta15_cm_tower() {
    // kappa = c + 2
    RatPoly mc = kronecker_entry(15).poly.shift(Rat(2));
    FieldTower real = FieldTower::make_base(mc);
    AlgNum c = real.generator();
    return real.adjoin_sqrt(c * c - Rat(4));
}

AlgNum zeta15_in(const FieldTower& cm) {
    AlgNum c = cm.subtower(0).generator().lift(cm);
    return (c + cm.sqrt_generator(1)) * Rat(1, 2);
}

AlgNum evaluate_word(const CyclotomicUnitWord& w, const FieldTower& cm) {
    AlgNum z = zeta15_in(cm);
    AlgNum one(cm, Rat(1));
    AlgNum u = z.pow(w.a) * Rat(w.sign);
    if (w.e1 != 0) u *= (one - z).pow(w.e1);
    const auto& bases = zeta15_unit_bases();
    for (std::size_t i = 0; i < bases.size() && i < w.e.size(); ++i) {
        if (w.e[i] == 0) continue;
        AlgNum cb(cm, Rat(0));
        AlgNum p = one;
        for (int k = 0; k < bases[i]; ++k) {
            cb += p;
            p *= z;
        }
        u *= cb.pow(w.e[i]);
    }
    return u;
}

VerifiedUnit verify_antisymmetric(const CyclotomicUnitWord& w, const FieldTower& cm) {
    AlgNum u = evaluate_word(w, cm);
    VerifiedUnit v{w, u};
    v.unit = is_unit(u).has_value();
    auto r = r_m_membership(u, 2);
    v.residue_one = r && r->j == 1;
    v.antisymmetric = conj(u) == -u;
    return v;
}

namespace {

// F2[x] / (Phi_15 mod 2) as bit masks.
constexpr unsigned kModulus = 0b110111011;  // x^8 + x^7 + x^5 + x^4 + x^3 + x + 1

unsigned gf_mul(unsigned a, unsigned b) {
    unsigned r = 0;
    for (int i = 0; i < 8; ++i)
        if (b >> i & 1) r ^= a << i;
    for (int i = 15; i >= 8; --i)
        if (r >> i & 1) r ^= kModulus << (i - 8);
    return r;
}

struct Residues {
    std::array<std::array<std::uint8_t, 256>, 256> mul{};
    std::array<std::uint8_t, 256> inv{};

    Residues() {
        for (unsigned a = 0; a < 256; ++a)
            for (unsigned b = 0; b < 256; ++b) mul[a][b] = static_cast<std::uint8_t>(gf_mul(a, b));
        for (unsigned a = 0; a < 256; ++a)
            for (unsigned b = 0; b < 256; ++b)
                if (mul[a][b] == 1) inv[a] = static_cast<std::uint8_t>(b);
    }

    std::uint8_t pow(std::uint8_t x, int e) const {
        std::uint8_t base = e < 0 ? inv[x] : x;
        std::uint8_t r = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) r = mul[r][base];
        return r;
    }
};

int mod15(int v) { return ((v % 15) + 15) % 15; }

}  // namespace

AntisymmetricSearchResult search_antisymmetric_units(const AntisymmetricSearchConfig& cfg) {
    if (cfg.exponent_bound < 0 || cfg.base_exponent_bound < 0)
        throw PreconditionFailed("exponent bounds must be nonnegative");
    static const Residues gf;
    const auto& bases = zeta15_unit_bases();
    const std::size_t nb = bases.size();
    const int eb = cfg.exponent_bound;
    const int e1b = cfg.base_exponent_bound;

    // Mod-2 images; zeta maps to x, 1 - zeta to 1 + x.
    const std::uint8_t zeta = 0b10;
    const std::uint8_t one_minus = 0b11;
    std::vector<std::uint8_t> cb(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        unsigned s = 0, p = 1;
        for (int k = 0; k < bases[i]; ++k) {
            s ^= p;
            p = gf.mul[p][zeta];
        }
        cb[i] = static_cast<std::uint8_t>(s);
    }

    // conj(zeta^a)/zeta^a = zeta^{-2a}; conj(c_b)/c_b = zeta^{1-b};
    // conj(1 - zeta)/(1 - zeta) = -zeta^{-1}. The ratio is -1 exactly when
    // e_1 is odd and the zeta exponent vanishes mod 15.
    AntisymmetricSearchResult res;
    FieldTower cm = zeta15_cm_tower();
    std::vector<int> e(nb, -eb);
    std::vector<CyclotomicUnitWord> hits;
    auto step = [&] {
        for (std::size_t i = nb; i-- > 0;) {
            if (e[i] < eb) {
                ++e[i];
                return true;
            }
            e[i] = -eb;
        }
        return false;
    };
    do {
        std::uint8_t img = 1;
        int char_exp = 0;
        for (std::size_t i = 0; i < nb; ++i) {
            img = gf.mul[img][gf.pow(cb[i], e[i])];
            char_exp += (1 - bases[i]) * e[i];
        }
        for (int e1 = -e1b; e1 <= e1b; ++e1) {
            std::uint8_t img1 = gf.mul[img][gf.pow(one_minus, e1)];
            for (int a = 0; a < 15; ++a) {
                std::uint8_t full = gf.mul[img1][gf.pow(zeta, a)];
                for (int sign : {1, -1}) {
                    ++res.examined;
                    if (full != 1) continue;
                    bool odd = (e1 % 2) != 0;
                    if (!odd || mod15(char_exp - 2 * a - e1) != 0) continue;
                    ++res.filtered;
                    hits.push_back({sign, a, e1, e});
                }
            }
        }
    } while (step());

    // Lightest words first; stable keeps enumeration order among ties.
    auto weight = [](const CyclotomicUnitWord& w) {
        int s = std::abs(w.e1);
        for (int x : w.e) s += std::abs(x);
        return s;
    };
    std::stable_sort(hits.begin(), hits.end(),
                     [&](const CyclotomicUnitWord& x, const CyclotomicUnitWord& y) { return weight(x) < weight(y); });
    for (std::size_t i = 0; i < hits.size() && i < cfg.verify_limit; ++i)
        res.verified.push_back(verify_antisymmetric(hits[i], cm));
    return res;
}

}  // namespace trcert
