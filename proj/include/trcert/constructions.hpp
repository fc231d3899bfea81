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

#ifndef TRCERT_CONSTRUCTIONS_HPP
#define TRCERT_CONSTRUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trcert/tower.hpp"

namespace trcert {

/// u = 2(d + r) + 1 with r^2 = d^2 + d, so that u + 1/u = a = 2(2d + 1).
struct UnitPairCert {
    FieldTower tower;  // K1; d lives in a prefix of it
    AlgNum d, r, u, a;
};

/// 32d = u^2 + u^-2 - v^2 - v^-2 with u, v units congruent to 1 mod 2.
struct Sum32Cert {
    FieldTower tower;
    AlgNum d, u, v;
};

/// 4 alpha = d1 - d2 with d1 = (alpha + 1)^2, d2 = (alpha - 1)^2.
struct XWitnessCert {
    AlgNum alpha, d1, d2;
    Sum32Cert c1, c2;
};

/// x y0^2 = y1^2 + ... + y4^2 and (a - b x) y0^2 = y5^2 + ... + y8^2.
struct FourSquaresCert {
    AlgNum x;
    Int a, b;
    std::vector<AlgNum> y;  // y0 .. y8
};

struct Clause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Clause> clauses;

    bool pass() const;
    // Name of the first failing clause, empty when everything passed.
    std::string first_failure() const;
    void add(std::string name, bool ok, std::string detail = {});
    // Appends another report's clauses under a prefix.
    void merge(const std::string& prefix, const VerifyReport& other);
};

UnitPairCert build_unit_pair(const AlgNum& d);
Sum32Cert build_sum32(const AlgNum& d);
XWitnessCert build_x_witness(const AlgNum& alpha);

VerifyReport verify_unit_pair(const UnitPairCert& c);
VerifyReport verify_sum32(const Sum32Cert& c);
// Includes the CM clause: each unit's square is fixed by conjugation in
// K1(sqrt(-1)).
VerifyReport verify_x_witness(const XWitnessCert& c);
VerifyReport verify_four_squares(const FourSquaresCert& c);

// Bounded search over y0 in [1, bound] and y_i with integer coordinates of
// absolute value <= bound. Requires a totally real tower.
std::optional<FourSquaresCert> search_four_squares(const AlgNum& x, const Int& a, const Int& b, long bound);

// Four totally real squares summing to target, taken from the integer box of
// the given height; the result is the lexicographically least by box index.
std::optional<std::array<AlgNum, 4>> four_squares_in_box(const AlgNum& target, long bound);

}  // namespace trcert

#endif
