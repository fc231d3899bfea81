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

#include "trcert/positivity.hpp"

#include "trcert/error.hpp"

namespace trcert {

bool IntervalSpec::contains(const Rat& x) const {
    if (lo && (lo_open ? !(x > *lo) : !(x >= *lo))) return false;
    if (hi && (hi_open ? !(x < *hi) : !(x <= *hi))) return false;
    return true;
}

std::size_t count_roots_in(const RatPoly& p, const IntervalSpec& interval) {
    if (p.degree() <= 0) return 0;
    // Every root lies strictly inside (-B, B).
    Rat bound = cauchy_bound(p);
    Rat lo = interval.lo ? *interval.lo : Rat(-bound);
    Rat hi = interval.hi ? *interval.hi : bound;
    if (lo > hi) return 0;
    if (lo == hi) return (interval.contains(lo) && p(lo) == 0) ? 1 : 0;
    SturmChain chain(p);
    std::size_t n = chain.count(lo, hi);  // (lo, hi]
    if (interval.lo && !interval.lo_open && p(lo) == 0) ++n;
    if (interval.hi && interval.hi_open && p(hi) == 0) --n;
    return n;
}

namespace {

// Minimal polynomial together with the "totally real" verdict.
bool real_roots_only(const RatPoly& m) { return count_real_roots(m) == static_cast<std::size_t>(m.degree()); }

}  // namespace

bool is_totally_real(const AlgNum& a) { return real_roots_only(min_poly(a)); }

bool totally_in(const AlgNum& a, const IntervalSpec& interval) {
    RatPoly m = min_poly(a);
    std::size_t d = static_cast<std::size_t>(m.degree());
    return count_roots_in(m, interval) == d;
}

bool totally_avoids(const AlgNum& a, const IntervalSpec& interval) {
    RatPoly m = min_poly(a);
    if (!real_roots_only(m)) throw NotTotallyReal("element is not totally real: " + a.str());
    return count_roots_in(m, interval) == 0;
}

bool is_totally_nonnegative(const AlgNum& a) { return totally_in(a, IntervalSpec::at_least(Rat(0))); }

bool is_totally_positive(const AlgNum& a) { return totally_in(a, IntervalSpec::above(Rat(0))); }

}  // namespace trcert
