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

#ifndef TRCERT_EMBEDDING_HPP
#define TRCERT_EMBEDDING_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "trcert/poly.hpp"
#include "trcert/tower.hpp"

namespace trcert {

struct Interval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool is_zero() const { return lo == 0 && hi == 0; }
    Rat mid() const { return (lo + hi) / 2; }
};

/// Rectangular enclosure in C. Images under real embeddings carry an
/// imaginary part that is exactly [0, 0].
struct ComplexBox {
    Interval re, im;

    bool is_real() const { return im.is_zero(); }
    Rat width() const { return re.width() > im.width() ? re.width() : im.width(); }
};

struct EmbeddingEnclosure {
    Rat width;
    std::vector<ComplexBox> boxes;  // one per embedding of the tower
};

struct Signature {
    std::size_t r = 0;  // real embeddings
    std::size_t s = 0;  // pairs of complex embeddings

    friend bool operator==(const Signature&, const Signature&) = default;
};

// Embeddings are ordered: real base roots ascending, then complex base roots
// (each followed by its conjugate); every step splits an embedding into the
// "+" and "-" square roots, in that order.
EmbeddingEnclosure embed(const AlgNum& a, const Rat& width);

Signature signature(const FieldTower& t);
bool is_totally_real_tower(const FieldTower& t);

// Unverified floating-point root approximations (Durand-Kerner).
std::vector<std::complex<long double>> approximate_roots(const RatPoly& p);

// Candidate square root of an element of Q[x]/(base), recognised from
// floating-point embeddings. The caller must verify the result.
std::optional<std::vector<Rat>> numeric_sqrt_guess(const RatPoly& base, const std::vector<Rat>& a);

}  // namespace trcert

#endif
