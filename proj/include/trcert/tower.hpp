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

#ifndef TRCERT_TOWER_HPP
#define TRCERT_TOWER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trcert/poly.hpp"
#include "trcert/rational.hpp"

namespace trcert {

class AlgNum;

namespace detail {
struct TowerNode;
}

/// A number field presented as Q[x]/(base) followed by a chain of
/// quadratic steps, each adjoining a square root of an element of the
/// tower below it. Towers are immutable and share their prefixes.
class FieldTower {
public:
    // Base field Q[x]/(f); f must be monic of degree >= 1. Irreducibility is
    // the caller's claim, checked lazily on inversion.
    static FieldTower make_base(const RatPoly& f);
    static FieldTower rationals() { return make_base(RatPoly::x()); }

    // Tower with a new generator s, s^2 = delta.
    FieldTower adjoin_sqrt(const AlgNum& delta) const;

    std::size_t height() const;
    std::size_t degree() const;
    std::size_t base_degree() const;
    const RatPoly& base_poly() const;

    // Prefix of this tower with the given number of steps.
    FieldTower subtower(std::size_t height) const;
    // delta of step k (1-based), living in subtower(k - 1).
    AlgNum step_delta(std::size_t k) const;

    // Class of x in the base field, lifted into this tower.
    AlgNum generator() const;
    // The square root adjoined at step k (1-based), lifted into this tower.
    AlgNum sqrt_generator(std::size_t k) const;

    bool is_prefix_of(const FieldTower& other) const;
    friend bool operator==(const FieldTower& a, const FieldTower& b);
    friend bool operator!=(const FieldTower& a, const FieldTower& b) { return !(a == b); }

    std::string describe() const;

    const detail::TowerNode& node() const { return *node_; }

private:
    explicit FieldTower(std::shared_ptr<const detail::TowerNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const detail::TowerNode> node_;
};

namespace detail {
struct TowerNode {
    std::shared_ptr<const TowerNode> parent;
    RatPoly base;
    std::vector<Rat> delta;  // flat coefficients in the parent tower
    std::size_t height = 0;
    std::size_t degree = 0;
};
}  // namespace detail

/// An element of a tower. Coefficients are stored flat: an element of a
/// tower of height h is the concatenation [lo | hi] of two elements of height
/// h - 1 (value lo + hi * s_h), bottoming out in the base power basis.
class AlgNum {
public:
    AlgNum(FieldTower tower, const Rat& value);
    AlgNum(FieldTower tower, std::vector<Rat> flat);

    const FieldTower& tower() const noexcept { return tower_; }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Value when is_rational().
    Rat rational_value() const;

    // Same value in a tower that has this element's tower as a prefix.
    AlgNum lift(const FieldTower& to) const;
    // Same value in subtower(h), when the coefficients above h vanish.
    std::optional<AlgNum> descend(std::size_t h) const;

    AlgNum operator-() const;
    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator+(const AlgNum& a, const Rat& b);
    friend AlgNum operator-(const AlgNum& a, const Rat& b);
    friend AlgNum operator*(const AlgNum& a, const Rat& b);
    friend AlgNum operator*(const Rat& b, const AlgNum& a) { return a * b; }
    AlgNum& operator+=(const AlgNum& o) { return *this = *this + o; }
    AlgNum& operator-=(const AlgNum& o) { return *this = *this - o; }
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }

    // Throws DivisionByZero for 0 and ReducibleTower for a zero divisor.
    AlgNum inverse() const;
    AlgNum pow(long e) const;

    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }
    // Lexicographic on (tower, flat coefficients); used for deterministic
    // ordering only.
    friend bool operator<(const AlgNum& a, const AlgNum& b) { return a.c_ < b.c_; }

    std::string str() const;

private:
    FieldTower tower_;
    std::vector<Rat> c_;
};

// Brings two elements into the common tower (the taller of two prefix-related
// towers); throws IncompatibleTowers otherwise.
FieldTower common_tower(const FieldTower& a, const FieldTower& b);

/// Minimal polynomial over Q by the Krylov sequence 1, a, a^2, ...
RatPoly min_poly(const AlgNum& a);

// Trace over Q of the whole tower (absolute trace).
Rat trace(const AlgNum& a);
Rat norm(const AlgNum& a);

// Square root inside the tower when one exists. Exact for towers over a
// base of degree <= 2; over larger bases a numerical guess is verified
// exactly, so a miss is possible but a wrong answer is not.
std::optional<AlgNum> try_sqrt(const AlgNum& a);

}  // namespace trcert

#endif
