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

#ifndef TRCERT_ANTISYMMETRIC_HPP
#define TRCERT_ANTISYMMETRIC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "trcert/tower.hpp"

namespace trcert {

/// Units +-zeta^a (1 - zeta)^{e_1} prod_b ((1 - zeta^b)/(1 - zeta))^{e_b}
/// in Q(zeta_15), b running over 2, 4, 7, 8, 11, 13, 14.
struct CyclotomicUnitWord {
    int sign = 1;
    int a = 0;
    int e1 = 0;
    std::vector<int> e;  // one exponent per b
};

struct AntisymmetricSearchConfig {
    int exponent_bound = 2;       // |e_b| <= bound
    int base_exponent_bound = 0;  // |e_1| <= bound; 0 keeps the plain family
    std::size_t verify_limit = 4; // exact checks on at most this many hits
};

struct VerifiedUnit {
    CyclotomicUnitWord word;
    AlgNum u;
    bool unit = false;
    bool residue_one = false;  // u = 1 mod 2
    bool antisymmetric = false;  // conj(u) = -u
};

struct AntisymmetricSearchResult {
    std::size_t examined = 0;
    std::size_t filtered = 0;  // passed the mod-2 and conjugation filters
    std::vector<VerifiedUnit> verified;

    bool found() const;
};

const std::vector<int>& zeta15_unit_bases();

// Q(c)(sqrt(c^2 - 4)) with c = zeta + zeta^-1; zeta = (c + s) / 2.
FieldTower zeta15_cm_tower();
AlgNum zeta15_in(const FieldTower& cm);

AlgNum evaluate_word(const CyclotomicUnitWord& w, const FieldTower& cm);
VerifiedUnit verify_antisymmetric(const CyclotomicUnitWord& w, const FieldTower& cm);

AntisymmetricSearchResult search_antisymmetric_units(const AntisymmetricSearchConfig& cfg);

}  // namespace trcert

#endif
