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

#include "trcert/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "trcert/error.hpp"

namespace trcert {

namespace {

constexpr unsigned kStartBits = 24;
constexpr unsigned kMaxBits = 1u << 13;

// Interval arithmetic with outward rounding onto a dyadic grid.
struct Arith {
    unsigned grid;

    Interval point(const Rat& x) const { return {x, x}; }
    Interval add(const Interval& a, const Interval& b) const { return {a.lo + b.lo, a.hi + b.hi}; }
    Interval sub(const Interval& a, const Interval& b) const { return {a.lo - b.hi, a.hi - b.lo}; }
    Interval mul(const Interval& a, const Interval& b) const {
        if (a.is_zero() || b.is_zero()) return {Rat(0), Rat(0)};
        Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rat lo = *std::min_element(p, p + 4), hi = *std::max_element(p, p + 4);
        return {round_down(lo, grid), round_up(hi, grid)};
    }

    ComplexBox cadd(const ComplexBox& a, const ComplexBox& b) const { return {add(a.re, b.re), add(a.im, b.im)}; }
    ComplexBox cmul(const ComplexBox& a, const ComplexBox& b) const {
        if (a.is_real() && b.is_real()) return {mul(a.re, b.re), {Rat(0), Rat(0)}};
        return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
    }
};

struct Cx {
    Rat re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Rat abs2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx operator/(const Cx& a, const Cx& b) {
    Rat d = abs2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Cx round_cx(const Cx& a, unsigned bits) { return {round_down(a.re, bits), round_down(a.im, bits)}; }

Cx eval_cx(const RatPoly& p, const Cx& z) {
    Cx acc{Rat(0), Rat(0)};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + Cx{*it, Rat(0)};
    return acc;
}

Rat from_ld(long double x, unsigned bits) {
    Rat r;
    mpq_set_d(r.get_mpq_t(), static_cast<double>(x));
    return round_down(r, bits);
}

struct GenBoxes {
    ComplexBox base;
    std::vector<ComplexBox> roots;
    bool real = true;
};

// Certified boxes for the non-real base roots: Weierstrass corrections W_i
// put every root inside some disc |z - z_i| <= n |W_i| (Gershgorin on the
// Weierstrass matrix), and a disc disjoint from all others holds exactly one.
std::optional<std::vector<ComplexBox>> complex_base_roots(const RatPoly& f, unsigned bits,
                                                        const std::vector<std::pair<Rat, Rat>>& real_roots) {
    std::size_t n = static_cast<std::size_t>(f.degree());
    std::size_t nreal = real_roots.size();
    if (nreal == n) return std::vector<ComplexBox>{};
    unsigned grid = bits + 16;
    auto approx = approximate_roots(f);
    std::sort(approx.begin(), approx.end(),
              [](const auto& a, const auto& b) { return std::abs(a.imag()) > std::abs(b.imag()); });
    std::vector<Cx> upper;
    for (std::size_t i = 0; i < n - nreal; ++i)
        if (approx[i].imag() > 0) upper.push_back({from_ld(approx[i].real(), grid), from_ld(approx[i].imag(), grid)});
    if (upper.size() * 2 != n - nreal) return std::nullopt;

    RatPoly df = f.derivative();
    Rat tol = make_rat(Int(1), Int(1) << (2 * (bits + 4)));
    for (auto& z : upper) {
        for (int it = 0; it < 200; ++it) {
            Cx step = eval_cx(f, z) / eval_cx(df, z);
            z = round_cx(z - step, grid);
            if (abs2(step) < tol) break;
        }
    }
    std::sort(upper.begin(), upper.end(), [](const Cx& a, const Cx& b) { return a.re < b.re; });

    std::vector<Cx> centers;
    for (const auto& [lo, hi] : real_roots) centers.push_back({(lo + hi) / 2, Rat(0)});
    for (const auto& z : upper) {
        centers.push_back(z);
        centers.push_back({z.re, -z.im});
    }
    std::vector<Rat> radius(n);
    for (std::size_t i = 0; i < n; ++i) {
        Cx denom{Rat(1), Rat(0)};
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom = denom * (centers[i] - centers[j]);
        if (abs2(denom) == 0) return std::nullopt;
        Cx w = eval_cx(f, centers[i]) / denom;
        radius[i] = sqrt_upper(abs2(w) * static_cast<unsigned long>(n * n), grid);
        if (radius[i] == 0) radius[i] = make_rat(Int(1), Int(1) << grid);
    }
    auto disjoint = [&](std::size_t i, std::size_t j) {
        return abs(centers[i].re - centers[j].re) > radius[i] + radius[j] ||
               abs(centers[i].im - centers[j].im) > radius[i] + radius[j];
    };
    std::vector<ComplexBox> out;
    for (std::size_t i = nreal; i < n; ++i) {
        if (abs(centers[i].im) <= radius[i]) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !disjoint(i, j)) return std::nullopt;
        if (radius[i] > make_rat(Int(1), Int(1) << bits)) return std::nullopt;
        out.push_back({{centers[i].re - radius[i], centers[i].re + radius[i]},
                       {centers[i].im - radius[i], centers[i].im + radius[i]}});
    }
    return out;
}

// Both square roots of everything in the box, or nothing when the precision
// is insufficient to separate them.
std::optional<std::pair<ComplexBox, ComplexBox>> box_sqrt(const ComplexBox& w, unsigned grid) {
    if (w.is_real()) {
        if (w.re.lo > 0) {
            Interval r{sqrt_lower(w.re.lo, grid), sqrt_upper(w.re.hi, grid)};
            return std::make_pair(ComplexBox{r, {Rat(0), Rat(0)}}, ComplexBox{{-r.hi, -r.lo}, {Rat(0), Rat(0)}});
        }
        if (w.re.hi < 0) {
            Interval r{sqrt_lower(-w.re.hi, grid), sqrt_upper(-w.re.lo, grid)};
            return std::make_pair(ComplexBox{{Rat(0), Rat(0)}, r}, ComplexBox{{Rat(0), Rat(0)}, {-r.hi, -r.lo}});
        }
        return std::nullopt;
    }
    // Rouche: with |w - r^2| <= M on the box and rho = 2M/|r| < |r|, the
    // disc |z - r| <= rho holds exactly one root of z^2 - w.
    Cx c{w.re.mid(), w.im.mid()};
    Rat m = sqrt_lower(abs2(c), grid);
    Cx r{sqrt_lower((m + c.re) / 2, grid), sqrt_lower((m - c.re) / 2, grid)};
    if (c.im < 0) r.im = -r.im;
    Cx err = c - r * r;
    Rat half_diag2 = (w.re.width() * w.re.width() + w.im.width() * w.im.width()) / 4;
    Rat bound = sqrt_upper(abs2(err), grid) + sqrt_upper(half_diag2, grid);
    Rat rabs = sqrt_lower(abs2(r), grid);
    if (rabs == 0) return std::nullopt;
    Rat rho = round_up(2 * bound / rabs, grid);
    if (rho == 0) rho = make_rat(Int(1), Int(1) << grid);
    if (!(rho < rabs)) return std::nullopt;
    ComplexBox plus{{r.re - rho, r.re + rho}, {r.im - rho, r.im + rho}};
    ComplexBox minus{{-r.re - rho, -r.re + rho}, {-r.im - rho, -r.im + rho}};
    return std::make_pair(plus, minus);
}

ComplexBox eval_at(const Arith& ar, const GenBoxes& g, const FieldTower& t, std::size_t level, const Rat* c) {
    std::size_t n0 = t.base_degree();
    if (level == 0) {
        ComplexBox acc{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
        for (std::size_t i = n0; i-- > 0;) {
            acc = ar.cmul(acc, g.base);
            acc = ar.cadd(acc, {ar.point(c[i]), {Rat(0), Rat(0)}});
        }
        return acc;
    }
    std::size_t half = n0 << (level - 1);
    ComplexBox lo = eval_at(ar, g, t, level - 1, c);
    bool hi_zero = std::all_of(c + half, c + 2 * half, [](const Rat& x) { return x == 0; });
    if (hi_zero) return lo;
    ComplexBox hi = eval_at(ar, g, t, level - 1, c + half);
    return ar.cadd(lo, ar.cmul(hi, g.roots[level - 1]));
}

std::optional<std::vector<GenBoxes>> generator_boxes(const FieldTower& t, unsigned bits, bool real_only) {
    const RatPoly& f = t.base_poly();
    Rat w = make_rat(Int(1), Int(1) << bits);
    auto real_roots = isolate_real_roots(f, w);
    std::vector<GenBoxes> gens;
    for (const auto& [lo, hi] : real_roots) gens.push_back({{{lo, hi}, {Rat(0), Rat(0)}}, {}, true});
    if (!real_only) {
        auto cplx = complex_base_roots(f, bits, real_roots);
        if (!cplx) return std::nullopt;
        for (const auto& b : *cplx) gens.push_back({b, {}, false});
    }
    Arith ar{bits + 16};
    for (std::size_t k = 1; k <= t.height(); ++k) {
        AlgNum delta = t.step_delta(k);
        std::vector<GenBoxes> next;
        for (const auto& g : gens) {
            ComplexBox d = eval_at(ar, g, t, k - 1, delta.coeffs().data());
            bool real_d = g.real;
            if (real_only && real_d && d.re.hi < 0) continue;
            auto roots = box_sqrt(d, ar.grid);
            if (!roots) return std::nullopt;
            for (const ComplexBox& r : {roots->first, roots->second}) {
                GenBoxes e = g;
                e.roots.push_back(r);
                e.real = real_d && r.is_real();
                if (real_only && !e.real) continue;
                next.push_back(std::move(e));
            }
        }
        gens = std::move(next);
    }
    return gens;
}

}  // namespace

EmbeddingEnclosure embed(const AlgNum& a, const Rat& width) {
    if (width <= 0) throw PreconditionFailed("enclosure width must be positive");
    const FieldTower& t = a.tower();
    for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
        auto gens = generator_boxes(t, bits, false);
        if (!gens) continue;
        Arith ar{bits + 16};
        EmbeddingEnclosure out{width, {}};
        bool ok = true;
        for (const auto& g : *gens) {
            ComplexBox b = eval_at(ar, g, t, t.height(), a.coeffs().data());
            if (b.width() > width) {
                ok = false;
                break;
            }
            out.boxes.push_back(std::move(b));
        }
        if (ok) return out;
    }
    throw ReducibleTower(t.height(), "embeddings could not be separated; the tower is likely reducible");
}

Signature signature(const FieldTower& t) {
    std::size_t r0 = count_real_roots(t.base_poly());
    if (t.height() == 0) return {r0, (t.degree() - r0) / 2};
    if (r0 == 0) return {0, t.degree() / 2};
    for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
        auto gens = generator_boxes(t, bits, true);
        if (!gens) continue;
        return {gens->size(), (t.degree() - gens->size()) / 2};
    }
    throw ReducibleTower(t.height(), "a step radicand vanishes under a real embedding");
}

bool is_totally_real_tower(const FieldTower& t) { return signature(t).r == t.degree(); }

std::vector<std::complex<long double>> approximate_roots(const RatPoly& p) {
    using C = std::complex<long double>;
    std::size_t n = static_cast<std::size_t>(p.degree());
    std::vector<C> coef(n + 1);
    for (std::size_t i = 0; i <= n; ++i) coef[i] = static_cast<long double>(p.coeff(i).get_d() / p.lead().get_d());
    auto eval = [&](C z) {
        C acc = 0;
        for (std::size_t i = n + 1; i-- > 0;) acc = acc * z + coef[i];
        return acc;
    };
    long double bound = static_cast<long double>(cauchy_bound(p.monic()).get_d());
    std::vector<C> z(n);
    C seed(0.4L, 0.9L);
    C acc(1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        acc *= seed;
        z[i] = acc * (bound / 2);
    }
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (std::size_t i = 0; i < n; ++i) {
            C denom = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0) denom = 1e-30L;
            C step = eval(z[i]) / denom;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-17L * std::max<long double>(1, bound)) break;
    }
    return z;
}

namespace {

bool recognize(long double x, Rat& out) {
    // Continued fraction with a denominator cap.
    long double v = x;
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int i = 0; i < 40; ++i) {
        long double a = std::floor(v);
        Int ai(static_cast<double>(a));
        Int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > Int("100000000")) return false;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        long double approx = static_cast<long double>(h1.get_d()) / static_cast<long double>(k1.get_d());
        if (std::abs(approx - x) < 1e-12L * std::max<long double>(1, std::abs(x))) {
            out = make_rat(h1, k1);
            return true;
        }
        long double frac = v - a;
        if (frac == 0) break;
        v = 1 / frac;
    }
    return false;
}

}  // namespace

std::optional<std::vector<Rat>> numeric_sqrt_guess(const RatPoly& base, const std::vector<Rat>& a) {
    using C = std::complex<long double>;
    std::size_t n = static_cast<std::size_t>(base.degree());
    auto roots = approximate_roots(base);
    std::vector<std::size_t> free_idx;  // real roots and upper half-plane representatives
    std::vector<long> partner(n, -1);
    const long double eps = 1e-12L;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(roots[i].imag()) < eps) {
            roots[i] = roots[i].real();
            free_idx.push_back(i);
        } else if (roots[i].imag() > 0) {
            free_idx.push_back(i);
            long best = -1;
            long double d = 1e30L;
            for (std::size_t j = 0; j < n; ++j) {
                long double dj = std::abs(roots[j] - std::conj(roots[i]));
                if (j != i && dj < d) {
                    d = dj;
                    best = static_cast<long>(j);
                }
            }
            partner[i] = best;
        }
    }
    if (free_idx.size() > 20) return std::nullopt;
    std::vector<C> img(n);
    for (std::size_t i = 0; i < n; ++i) {
        C acc = 0;
        for (std::size_t j = a.size(); j-- > 0;) acc = acc * roots[i] + static_cast<long double>(a[j].get_d());
        img[i] = std::sqrt(acc);
        if (std::abs(roots[i].imag()) == 0 && acc.real() < -eps) return std::nullopt;
    }
    std::size_t patterns = std::size_t(1) << (free_idx.size() - 1);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        std::vector<C> target(n);
        for (std::size_t f = 0; f < free_idx.size(); ++f) {
            std::size_t i = free_idx[f];
            C v = ((mask >> f) & 1) ? -img[i] : img[i];
            target[i] = v;
            if (partner[i] >= 0) target[static_cast<std::size_t>(partner[i])] = std::conj(v);
        }
        // Solve the Vandermonde system for power-basis coefficients.
        std::vector<std::vector<C>> m(n, std::vector<C>(n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            C pw = 1;
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = pw;
                pw *= roots[i];
            }
            m[i][n] = target[i];
        }
        bool singular = false;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n; ++r)
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            if (std::abs(m[piv][col]) < 1e-30L) {
                singular = true;
                break;
            }
            std::swap(m[piv], m[col]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                C factor = m[r][col] / m[col][col];
                for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
            }
        }
        if (singular) continue;
        std::vector<Rat> guess(n);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            C ci = m[i][n] / m[i][i];
            if (std::abs(ci.imag()) > 1e-6L * std::max<long double>(1, std::abs(ci))) ok = false;
            else ok = recognize(ci.real(), guess[i]);
        }
        if (!ok) continue;
        // Exact check in Q[x]/(base).
        RatPoly g(guess);
        RatPoly sq = (g * g) % base;
        std::vector<Rat> want(a);
        want.resize(n);
        std::vector<Rat> have = sq.coeffs();
        have.resize(n);
        if (have == want) return guess;
    }
    return std::nullopt;
}

}  // namespace trcert
