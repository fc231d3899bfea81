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

#include "trcert/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "trcert/error.hpp"

namespace trcert {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }
RatPoly RatPoly::x() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatPoly(std::move(v));
}

Rat RatPoly::operator()(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    RatPoly out = *this;
    Rat inv = 1 / lead();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

bool RatPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return is_integer(c); });
}

RatPoly RatPoly::shift(const Rat& c) const {
    // Horner in the ring Q[x] evaluated at (x + c).
    RatPoly acc;
    RatPoly lin{c, Rat(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= lin;
        acc += RatPoly::constant(*it);
    }
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator<(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        if (!unit || i == 0) {
            os << mag.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rat> rem = a.coeffs();
    std::vector<Rat> quot(a.degree() - b.degree() + 1);
    const auto& bc = b.coeffs();
    Rat inv_lead = 1 / b.lead();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] * inv_lead;
        quot[i - b.degree()] = q;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * bc[j];
    }
    rem.resize(b.degree());
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }
RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Bezout ext_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {RatPoly{}, RatPoly{}, RatPoly{}};
    Rat inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

using IntPoly = std::vector<Int>;  // lowest degree first, no trailing zeros

int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators: p = P / den with P integral.
IntPoly clear_denominators(const RatPoly& p, Int& den) {
    den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
    return out;
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void divide_exact(IntPoly& p, const Int& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// lead(b)^(deg a - deg b + 1) * a mod b, in Z[x].
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    int db = deg(b);
    const Int& lb = b.back();
    int e = deg(a) - db + 1;
    while (deg(a) >= db) {
        Int la = a.back();
        int shift = deg(a) - db;
        for (auto& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        trim(a);
        --e;
    }
    if (e > 0) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

Int ipow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Subresultant PRS (Collins/Brown) over Z.
Int int_resultant(IntPoly a, IntPoly b) {
    int s = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -s;
    }
    if (deg(b) == 0) return ipow(b[0], static_cast<unsigned long>(deg(a)));
    Int ca = content(a), cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    Int t = ipow(ca, static_cast<unsigned long>(deg(b))) * ipow(cb, static_cast<unsigned long>(deg(a)));
    Int g = 1, h = 1;
    while (true) {
        int delta = deg(a) - deg(b);
        if ((deg(a) % 2 == 1) && (deg(b) % 2 == 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        if (r.empty()) return 0;
        a = std::move(b);
        Int divisor = g * ipow(h, static_cast<unsigned long>(delta));
        divide_exact(r, divisor);
        b = std::move(r);
        g = a.back();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            Int num = ipow(g, static_cast<unsigned long>(delta));
            Int den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (deg(b) == 0) break;
    }
    // h = h^(1 - deg a) * lead(b)^deg a
    int da = deg(a);
    Int lb = b.back();
    if (da == 1) {
        h = lb;
    } else {
        Int num = ipow(lb, static_cast<unsigned long>(da));
        Int den = ipow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return s * t * h;
}

}  // namespace

Rat resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
    Int dp, dq;
    IntPoly ip = clear_denominators(p, dp);
    IntPoly iq = clear_denominators(q, dq);
    Int r = int_resultant(ip, iq);
    // Res(P/dp, Q/dq) = Res(P, Q) / (dp^deg q * dq^deg p)
    Int scale = ipow(dp, static_cast<unsigned long>(q.degree())) * ipow(dq, static_cast<unsigned long>(p.degree()));
    return make_rat(r, scale);
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
    if (p.degree() == 0) return RatPoly::constant(1);
    return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const RatPoly& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() <= 0;
}

SturmChain::SturmChain(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
    polys_.push_back(p);
    if (p.degree() == 0) return;
    polys_.push_back(p.derivative());
    while (true) {
        const RatPoly& a = polys_[polys_.size() - 2];
        const RatPoly& b = polys_.back();
        RatPoly r = a % b;
        if (r.is_zero()) break;
        polys_.push_back(-r);
    }
    if (polys_.back().degree() > 0)
        throw NotSquarefree("Sturm chain requires a squarefree polynomial: " + p.str());
}

int SturmChain::variations(const Rat& at) const {
    int count = 0;
    int prev = 0;
    for (const auto& q : polys_) {
        int s = q.sign_at(at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

std::size_t SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw PreconditionFailed("Sturm count needs lo < hi");
    return static_cast<std::size_t>(variations(lo) - variations(hi));
}

std::size_t sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi) {
    return SturmChain(p).count(lo, hi);
}

Rat cauchy_bound(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("root bound of the zero polynomial");
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p.coeffs()[i])));
    return 1 + m / abs(p.lead());
}

std::size_t count_real_roots(const RatPoly& p) {
    if (p.degree() <= 0) {
        if (p.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
        return 0;
    }
    Rat b = cauchy_bound(p);
    return sturm_count(p, -b, b);
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const RatPoly& p, const Rat& width) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() <= 0) return out;
    SturmChain chain(p);
    Rat b = cauchy_bound(p);
    // Work list of (lo, hi] intervals with their root counts.
    std::vector<std::pair<Rat, Rat>> stack{{-b, b}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        std::size_t n = chain.count(lo, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo <= width) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RatPoly cyclotomic(unsigned long n) {
    if (n == 0) throw PreconditionFailed("cyclotomic polynomial needs n >= 1");
    std::map<unsigned long, RatPoly> memo;
    // Divisors in increasing order so every proper divisor is ready first.
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    for (unsigned long d : divs) {
        RatPoly p = RatPoly::monomial(Rat(1), d) - RatPoly::constant(1);
        for (const auto& [e, phi_e] : memo) {
            if (d % e == 0 && e < d) {
                auto [q, r] = divmod(p, phi_e);
                if (!r.is_zero()) throw InternalContradiction("cyclotomic division left a remainder");
                p = std::move(q);
            }
        }
        memo.emplace(d, std::move(p));
    }
    return memo.at(n);
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long> inverse_phi(unsigned long value) {
    // phi(n) >= sqrt(n / 2), so n <= 2 * value^2.
    std::vector<unsigned long> out;
    if (value == 0) return out;
    unsigned long limit = 2 * value * value + 2;
    for (unsigned long n = 1; n <= limit; ++n)
        if (euler_phi(n) == value) out.push_back(n);
    return out;
}

RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw PreconditionFailed("interpolation needs matching point lists");
    RatPoly out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(1);
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= RatPoly{-xs[j], Rat(1)};
            denom *= xs[i] - xs[j];
        }
        out += basis * (ys[i] / denom);
    }
    return out;
}

}  // namespace trcert
