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

#ifndef TRCERT_INTEGRALITY_HPP
#define TRCERT_INTEGRALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trcert/tower.hpp"

namespace trcert {

/// (x - j) / m is an algebraic integer.
struct ResidueWitness {
    long m = 1;
    long j = 0;
    friend bool operator==(const ResidueWitness&, const ResidueWitness&) = default;
};

struct UnitEvidence {
    RatPoly min_poly;
    Int constant;  // +1 or -1
    // inverse = sum inverse_coeffs[i] * u^i
    std::vector<Int> inverse_coeffs;
    AlgNum inverse;
};

struct RootOfUnityReport {
    bool is_root_of_unity = false;
    unsigned long order = 0;
};

bool is_algebraic_integer(const AlgNum& a);
std::optional<ResidueWitness> r_m_membership(const AlgNum& a, long m);
std::optional<UnitEvidence> is_unit(const AlgNum& a);
RootOfUnityReport is_root_of_unity(const AlgNum& a);

// u / conj(u); throws NotAUnit, NotCMTower, or InternalContradiction when
// the ratio is not a root of unity.
std::pair<AlgNum, RootOfUnityReport> conj_ratio(const AlgNum& u);

struct ProbeEntry {
    unsigned long order = 0;
    std::size_t roots_checked = 0;
    std::vector<std::string> violations;  // roots found inside R_m
};

struct ProbeReport {
    long m = 2;
    std::vector<ProbeEntry> entries;
    bool pass = true;
};

// Primitive n-th roots found among +-generators of T and their powers.
std::vector<AlgNum> primitive_roots_in(const FieldTower& t, unsigned long n,
                                       const std::vector<AlgNum>& extra = {});

// Checks no primitive n-th root (n > 2) of unity in T lies in R_m. An order
// with no root available in T is reported as a violation.
ProbeReport probe_mu_trivial(const FieldTower& t, long m, const std::vector<unsigned long>& orders,
                             const std::vector<AlgNum>& extra = {});

// Words of length <= max_len in the generators, with negations and inverses.
std::vector<AlgNum> sample_units(const std::vector<AlgNum>& generators, std::size_t max_len = 3);

}  // namespace trcert

#endif
