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

#ifndef TRCERT_RATIONAL_HPP
#define TRCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trcert {

using Int = mpz_class;

// GMP keeps mpq values canonical (reduced, positive denominator, 0 == 0/1)
// as long as every constructor that takes a separate numerator and
// denominator goes through make_rat.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// "num/den" with den >= 1; also accepts a bare integer on input.
std::string to_string(const Rat& r);
Rat parse_rat(std::string_view text);

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

bool is_integer(const Rat& r);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor(const Rat& r);
Int ceil(const Rat& r);

// Exact square root of a rational when it is a perfect square.
bool rat_sqrt(const Rat& r, Rat& root);

// Bounds for sqrt(r), r >= 0, on the dyadic grid 2^-bits.
Rat sqrt_lower(const Rat& r, unsigned bits);
Rat sqrt_upper(const Rat& r, unsigned bits);

// Outward rounding onto the dyadic grid 2^-bits.
Rat round_down(const Rat& r, unsigned bits);
Rat round_up(const Rat& r, unsigned bits);

Int binomial(unsigned n, unsigned k);

}  // namespace trcert

#endif
