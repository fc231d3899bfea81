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

#ifndef TRCERT_POSITIVITY_HPP
#define TRCERT_POSITIVITY_HPP

#include <cstddef>
#include <optional>

#include "trcert/poly.hpp"
#include "trcert/tower.hpp"

namespace trcert {

/// Real interval with optional infinite ends; an absent bound is -inf / +inf.
struct IntervalSpec {
    std::optional<Rat> lo, hi;
    bool lo_open = true;
    bool hi_open = true;

    static IntervalSpec open(const Rat& lo, const Rat& hi) { return {lo, hi, true, true}; }
    static IntervalSpec closed(const Rat& lo, const Rat& hi) { return {lo, hi, false, false}; }
    static IntervalSpec below(const Rat& hi) { return {std::nullopt, hi, true, true}; }
    static IntervalSpec above(const Rat& lo) { return {lo, std::nullopt, true, true}; }
    static IntervalSpec at_least(const Rat& lo) { return {lo, std::nullopt, false, true}; }

    bool contains(const Rat& x) const;
};

// Distinct real roots of a squarefree polynomial inside the interval.
std::size_t count_roots_in(const RatPoly& squarefree, const IntervalSpec& interval);

bool is_totally_real(const AlgNum& a);
bool totally_in(const AlgNum& a, const IntervalSpec& interval);
// Requires a totally real; throws NotTotallyReal otherwise.
bool totally_avoids(const AlgNum& a, const IntervalSpec& interval);
bool is_totally_nonnegative(const AlgNum& a);
bool is_totally_positive(const AlgNum& a);

}  // namespace trcert

#endif
