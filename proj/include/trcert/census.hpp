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

#ifndef TRCERT_CENSUS_HPP
#define TRCERT_CENSUS_HPP

#include <cstddef>
#include <vector>

#include "trcert/poly.hpp"

namespace trcert {

/// Minimal polynomial of zeta_n + zeta_n^-1 + 2.
struct KroneckerEntry {
    unsigned long n = 0;
    RatPoly poly;
    int degree = 0;
};

// n >= 3; n <= 2 would put the value on the boundary of (0, 4).
KroneckerEntry kronecker_entry(unsigned long n);

struct CensusEntry {
    RatPoly poly;
    int degree = 0;
};

struct CensusTable {
    int max_degree = 0;
    Rat t;
    std::vector<CensusEntry> entries;  // by degree, then coefficients
    std::vector<std::size_t> counts;   // counts[k - 1] = entries of degree k
    std::size_t element_count = 0;     // sum of degrees
    double cells = 0;                  // size of the coefficient box
};

struct CensusOptions {
    double cell_budget = default_cell_budget();
    unsigned threads = 1;

    // TRCERT_CELL_BUDGET when set, else 1e8.
    static double default_cell_budget();
};

// Number of coefficient-box cells census(D, t) would scan.
double census_cells(int max_degree, const Rat& t);

CensusTable census(int max_degree, const Rat& t, const CensusOptions& opts = {});

struct CompletenessReport {
    int max_degree = 0;
    std::vector<unsigned long> orders;    // n used on the Kronecker side
    std::vector<RatPoly> census_only;     // found by census, not a Kronecker entry
    std::vector<RatPoly> kronecker_only;  // Kronecker entries census missed
    std::size_t census_size = 0;
    std::size_t kronecker_size = 0;
    bool pass = false;
};

CompletenessReport kronecker_completeness(int max_degree, const CensusOptions& opts = {});

struct ProfileRow {
    Rat t;
    std::size_t count = 0;
};

std::vector<ProfileRow> jr_profile(int max_degree, const std::vector<Rat>& ts, const CensusOptions& opts = {});

}  // namespace trcert

#endif
