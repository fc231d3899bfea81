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

#ifndef TRCERT_POLY_HPP
#define TRCERT_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "trcert/rational.hpp"

namespace trcert {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1; no other value
/// ever stores a trailing zero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<Rat> coeffs) : RatPoly(std::vector<Rat>(coeffs)) {}

    static RatPoly constant(const Rat& c);
    static RatPoly x();
    static RatPoly monomial(const Rat& c, std::size_t k);
    static RatPoly from_ints(std::initializer_list<long> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const Rat& lead() const { return coeffs_.back(); }

    Rat operator()(const Rat& at) const;
    int sign_at(const Rat& at) const { return sgn((*this)(at)); }

    RatPoly derivative() const;
    RatPoly monic() const;
    bool is_monic() const { return !is_zero() && lead() == 1; }
    bool has_integer_coeffs() const;

    // p(x + c)
    RatPoly shift(const Rat& c) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
    friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }
    // Degree first, then coefficients from the top down.
    friend bool operator<(const RatPoly& a, const RatPoly& b);

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Quotient and remainder; throws ZeroPolynomial when dividing by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);

// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct Bezout {
    RatPoly g, s, t;
};
Bezout ext_gcd(const RatPoly& a, const RatPoly& b);

Rat resultant(const RatPoly& p, const RatPoly& q);
RatPoly squarefree_part(const RatPoly& p);
bool is_squarefree(const RatPoly& p);

/// Canonical Sturm sequence p, p', -rem(p, p'), ... of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& p);

    const std::vector<RatPoly>& polys() const noexcept { return polys_; }
    int variations(const Rat& at) const;
    // Distinct roots in the half-open interval (lo, hi].
    std::size_t count(const Rat& lo, const Rat& hi) const;

private:
    std::vector<RatPoly> polys_;
};

std::size_t sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi);
Rat cauchy_bound(const RatPoly& p);
std::size_t count_real_roots(const RatPoly& p);

// Disjoint isolating intervals (lo, hi] for the real roots, ascending, each
// of width at most `width`.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p, const Rat& width);

RatPoly cyclotomic(unsigned long n);
unsigned long euler_phi(unsigned long n);
// All n >= 1 with phi(n) == value.
std::vector<unsigned long> inverse_phi(unsigned long value);

// Polynomial in y through the given points, exact Lagrange interpolation.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace trcert

#endif
