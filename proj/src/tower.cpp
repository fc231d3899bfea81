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

#include "trcert/tower.hpp"

#include <algorithm>
#include <sstream>

#include "trcert/embedding.hpp"
#include "trcert/error.hpp"

namespace trcert {

using detail::TowerNode;

namespace {

using Vec = std::vector<Rat>;

struct Levels {
    std::vector<const TowerNode*> at;  // at[k] has height k

    explicit Levels(const TowerNode& top) {
        at.resize(top.height + 1);
        const TowerNode* n = &top;
        while (n) {
            at[n->height] = n;
            n = n->parent.get();
        }
    }
    const RatPoly& base() const { return at[0]->base; }
    std::size_t n0() const { return at[0]->degree; }
    std::size_t size(std::size_t k) const { return n0() << k; }
};

bool all_zero(const Rat* a, std::size_t n) {
    return std::all_of(a, a + n, [](const Rat& c) { return c == 0; });
}

void add_into(Rat* out, const Rat* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i];
}

void mul(const Levels& lv, std::size_t k, const Rat* a, const Rat* b, Rat* out);

void mul_base(const Levels& lv, const Rat* a, const Rat* b, Rat* out) {
    std::size_t n = lv.n0();
    const auto& f = lv.base().coeffs();
    Vec prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    for (std::size_t i = 2 * n - 1; i-- > n;) {
        if (prod[i] == 0) continue;
        Rat c = prod[i];
        for (std::size_t j = 0; j < n; ++j) prod[i - n + j] -= c * f[j];
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = prod[i];
}

void mul(const Levels& lv, std::size_t k, const Rat* a, const Rat* b, Rat* out) {
    if (k == 0) {
        mul_base(lv, a, b, out);
        return;
    }
    std::size_t half = lv.size(k - 1);
    const Rat* a0 = a;
    const Rat* a1 = a + half;
    const Rat* b0 = b;
    const Rat* b1 = b + half;
    bool a1z = all_zero(a1, half), b1z = all_zero(b1, half);
    Vec t0(half);
    mul(lv, k - 1, a0, b0, t0.data());
    if (a1z && b1z) {
        std::copy(t0.begin(), t0.end(), out);
        std::fill(out + half, out + 2 * half, Rat(0));
        return;
    }
    Vec hi(half);
    if (a1z) {
        mul(lv, k - 1, a0, b1, hi.data());
        std::copy(t0.begin(), t0.end(), out);
        std::copy(hi.begin(), hi.end(), out + half);
        return;
    }
    if (b1z) {
        mul(lv, k - 1, a1, b0, hi.data());
        std::copy(t0.begin(), t0.end(), out);
        std::copy(hi.begin(), hi.end(), out + half);
        return;
    }
    Vec t1(half), sa(a0, a0 + half), sb(b0, b0 + half), t2(half), t1d(half);
    mul(lv, k - 1, a1, b1, t1.data());
    add_into(sa.data(), a1, half);
    add_into(sb.data(), b1, half);
    mul(lv, k - 1, sa.data(), sb.data(), t2.data());
    mul(lv, k - 1, t1.data(), lv.at[k]->delta.data(), t1d.data());
    for (std::size_t i = 0; i < half; ++i) {
        out[i] = t0[i] + t1d[i];
        out[half + i] = t2[i] - t0[i] - t1[i];
    }
}

Vec inverse(const Levels& lv, std::size_t k, const Rat* a) {
    if (k == 0) {
        std::size_t n = lv.n0();
        RatPoly p(Vec(a, a + n));
        Bezout e = ext_gcd(p, lv.base());
        if (e.g.degree() > 0)
            throw ReducibleTower(0, "base polynomial " + lv.base().str() + " shares the factor " + e.g.str() +
                                        " with an element being inverted");
        Vec out(n);
        RatPoly s = e.s % lv.base();
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) out[i] = s.coeffs()[i];
        return out;
    }
    std::size_t half = lv.size(k - 1);
    const Rat* a0 = a;
    const Rat* a1 = a + half;
    Vec sq0(half), sq1(half), sq1d(half), nrm(half);
    mul(lv, k - 1, a0, a0, sq0.data());
    mul(lv, k - 1, a1, a1, sq1.data());
    mul(lv, k - 1, sq1.data(), lv.at[k]->delta.data(), sq1d.data());
    for (std::size_t i = 0; i < half; ++i) nrm[i] = sq0[i] - sq1d[i];
    if (all_zero(nrm.data(), half))
        throw ReducibleTower(k, "step " + std::to_string(k) + " adjoins the square root of a square");
    Vec inv = inverse(lv, k - 1, nrm.data());
    Vec out(2 * half);
    mul(lv, k - 1, a0, inv.data(), out.data());
    mul(lv, k - 1, a1, inv.data(), out.data() + half);
    for (std::size_t i = half; i < 2 * half; ++i) out[i] = -out[i];
    return out;
}

std::string term_name(std::size_t index, std::size_t n0) {
    std::string s;
    std::size_t p = index % n0;
    std::size_t bits = index / n0;
    if (p >= 1) s += "x";
    if (p >= 2) s += "^" + std::to_string(p);
    for (std::size_t k = 1; bits; ++k, bits >>= 1) {
        if (bits & 1) {
            if (!s.empty()) s += "*";
            s += "s" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace

FieldTower FieldTower::make_base(const RatPoly& f) {
    if (f.degree() < 1) throw PreconditionFailed("base polynomial must have degree >= 1");
    if (!f.is_monic()) throw PreconditionFailed("base polynomial must be monic: " + f.str());
    auto node = std::make_shared<TowerNode>();
    node->base = f;
    node->height = 0;
    node->degree = static_cast<std::size_t>(f.degree());
    return FieldTower(std::move(node));
}

FieldTower FieldTower::adjoin_sqrt(const AlgNum& delta) const {
    AlgNum d = delta.lift(*this);
    if (d.is_zero()) throw PreconditionFailed("cannot adjoin the square root of zero");
    auto node = std::make_shared<TowerNode>();
    node->parent = node_;
    node->base = node_->base;
    node->delta = d.coeffs();
    node->height = node_->height + 1;
    node->degree = node_->degree * 2;
    return FieldTower(std::move(node));
}

std::size_t FieldTower::height() const { return node_->height; }
std::size_t FieldTower::degree() const { return node_->degree; }
std::size_t FieldTower::base_degree() const { return node_->base.degree(); }
const RatPoly& FieldTower::base_poly() const { return node_->base; }

FieldTower FieldTower::subtower(std::size_t h) const {
    if (h > height()) throw PreconditionFailed("subtower height exceeds tower height");
    std::shared_ptr<const TowerNode> n = node_;
    while (n->height > h) n = n->parent;
    return FieldTower(n);
}

AlgNum FieldTower::step_delta(std::size_t k) const {
    if (k == 0 || k > height()) throw PreconditionFailed("step index out of range");
    FieldTower below = subtower(k - 1);
    return AlgNum(below, subtower(k).node_->delta);
}

AlgNum FieldTower::generator() const {
    Vec c(degree());
    if (base_degree() == 1)
        c[0] = -base_poly().coeff(0);
    else
        c[1] = 1;
    return AlgNum(*this, std::move(c));
}

AlgNum FieldTower::sqrt_generator(std::size_t k) const {
    if (k == 0 || k > height()) throw PreconditionFailed("step index out of range");
    FieldTower t = subtower(k);
    Vec c(t.degree());
    c[t.degree() / 2] = 1;
    return AlgNum(t, std::move(c)).lift(*this);
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
    if (height() > other.height()) return false;
    return subtower(height()) == other.subtower(height());
}

bool operator==(const FieldTower& a, const FieldTower& b) {
    const TowerNode* x = a.node_.get();
    const TowerNode* y = b.node_.get();
    while (x && y) {
        if (x == y) return true;
        if (x->height != y->height || x->delta != y->delta || x->base != y->base) return false;
        x = x->parent.get();
        y = y->parent.get();
    }
    return x == nullptr && y == nullptr;
}

std::string FieldTower::describe() const {
    std::ostringstream os;
    os << "Q[x]/(" << base_poly().str() << ")";
    for (std::size_t k = 1; k <= height(); ++k) os << "(s" << k << " = sqrt(" << step_delta(k).str() << "))";
    return os.str();
}

FieldTower common_tower(const FieldTower& a, const FieldTower& b) {
    if (a.height() >= b.height()) {
        if (b.is_prefix_of(a)) return a;
    } else if (a.is_prefix_of(b)) {
        return b;
    }
    throw IncompatibleTowers("elements live in unrelated towers: " + a.describe() + " vs " + b.describe());
}

AlgNum::AlgNum(FieldTower tower, const Rat& value) : tower_(std::move(tower)), c_(tower_.degree()) {
    c_[0] = value;
}

AlgNum::AlgNum(FieldTower tower, std::vector<Rat> flat) : tower_(std::move(tower)), c_(std::move(flat)) {
    if (c_.size() > tower_.degree()) throw PreconditionFailed("too many coefficients for the tower");
    c_.resize(tower_.degree());
}

bool AlgNum::is_zero() const { return all_zero(c_.data(), c_.size()); }

bool AlgNum::is_rational() const { return all_zero(c_.data() + 1, c_.size() - 1); }

Rat AlgNum::rational_value() const {
    if (!is_rational()) throw PreconditionFailed("element is not rational: " + str());
    return c_[0];
}

AlgNum AlgNum::lift(const FieldTower& to) const {
    if (!tower_.is_prefix_of(to))
        throw IncompatibleTowers("cannot lift from " + tower_.describe() + " into " + to.describe());
    Vec c = c_;
    c.resize(to.degree());
    return AlgNum(to, std::move(c));
}

std::optional<AlgNum> AlgNum::descend(std::size_t h) const {
    FieldTower t = tower_.subtower(h);
    if (!all_zero(c_.data() + t.degree(), c_.size() - t.degree())) return std::nullopt;
    return AlgNum(t, Vec(c_.begin(), c_.begin() + static_cast<long>(t.degree())));
}

AlgNum AlgNum::operator-() const {
    Vec c = c_;
    for (auto& x : c) x = -x;
    return AlgNum(tower_, std::move(c));
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    FieldTower t = common_tower(a.tower_, b.tower_);
    Vec c = a.c_;
    c.resize(t.degree());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return AlgNum(t, std::move(c));
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    FieldTower t = common_tower(a.tower_, b.tower_);
    Vec x = a.c_, y = b.c_;
    x.resize(t.degree());
    y.resize(t.degree());
    Levels lv(t.node());
    Vec out(t.degree());
    mul(lv, t.height(), x.data(), y.data(), out.data());
    return AlgNum(t, std::move(out));
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

AlgNum operator+(const AlgNum& a, const Rat& b) {
    Vec c = a.c_;
    c[0] += b;
    return AlgNum(a.tower_, std::move(c));
}

AlgNum operator-(const AlgNum& a, const Rat& b) { return a + Rat(-b); }

AlgNum operator*(const AlgNum& a, const Rat& b) {
    Vec c = a.c_;
    for (auto& x : c) x *= b;
    return AlgNum(a.tower_, std::move(c));
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Levels lv(tower_.node());
    return AlgNum(tower_, trcert::inverse(lv, tower_.height(), c_.data()));
}

AlgNum AlgNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgNum result(tower_, Rat(1));
    AlgNum base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const AlgNum& a, const AlgNum& b) {
    FieldTower t = common_tower(a.tower_, b.tower_);
    std::size_t n = t.degree();
    for (std::size_t i = 0; i < n; ++i) {
        Rat x = i < a.c_.size() ? a.c_[i] : Rat(0);
        Rat y = i < b.c_.size() ? b.c_[i] : Rat(0);
        if (x != y) return false;
    }
    return true;
}

std::string AlgNum::str() const {
    std::ostringstream os;
    std::size_t n0 = tower_.base_degree();
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        std::string name = term_name(i, n0);
        Rat mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (name.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << name;
        else
            os << mag.get_str() << "*" << name;
    }
    return first ? "0" : os.str();
}

RatPoly min_poly(const AlgNum& a) {
    std::size_t n = a.tower().degree();
    struct Row {
        Vec v;
        std::size_t pivot;
        Vec comb;  // v = sum comb[i] * a^i
    };
    std::vector<Row> rows;
    AlgNum power(a.tower(), Rat(1));
    for (std::size_t k = 0; k <= n; ++k) {
        Vec v = power.coeffs();
        Vec comb(k + 1);
        comb[k] = 1;
        for (const auto& row : rows) {
            if (v[row.pivot] == 0) continue;
            Rat f = v[row.pivot] / row.v[row.pivot];
            for (std::size_t i = 0; i < n; ++i)
                if (row.v[i] != 0) v[i] -= f * row.v[i];
            for (std::size_t i = 0; i < row.comb.size(); ++i) comb[i] -= f * row.comb[i];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rat& c) { return c != 0; });
        if (nz == v.end()) return RatPoly(std::move(comb));
        std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
        rows.push_back({std::move(v), pivot, std::move(comb)});
        power = power * a;
    }
    throw InternalContradiction("Krylov sequence exceeded the tower degree");
}

Rat trace(const AlgNum& a) {
    RatPoly m = min_poly(a);
    std::size_t d = static_cast<std::size_t>(m.degree());
    return -m.coeff(d - 1) * static_cast<unsigned long>(a.tower().degree() / d);
}

Rat norm(const AlgNum& a) {
    RatPoly m = min_poly(a);
    std::size_t d = static_cast<std::size_t>(m.degree());
    Rat c = (d % 2 == 0) ? m.coeff(0) : Rat(-m.coeff(0));
    Rat out(1);
    for (std::size_t i = 0; i < a.tower().degree() / d; ++i) out *= c;
    return out;
}

namespace {

std::optional<Vec> sqrt_at(const Levels& lv, std::size_t k, const Vec& a);

// Square root of lo + hi * r with r^2 = d, all of lo, hi, d at level k.
// Returns (x, y) with (x + y r)^2 = lo + hi r.
std::optional<std::pair<Vec, Vec>> sqrt_quadratic(const Levels& lv, std::size_t k, const Vec& lo, const Vec& hi,
                                                   const Vec& d) {
    std::size_t n = lo.size();
    auto times = [&](const Vec& x, const Vec& y) {
        Vec out(n);
        mul(lv, k, x.data(), y.data(), out.data());
        return out;
    };
    auto zero = [](const Vec& v) { return all_zero(v.data(), v.size()); };
    if (zero(hi)) {
        if (auto x = sqrt_at(lv, k, lo)) return std::make_pair(*x, Vec(n));
        // lo = y^2 d  <=>  lo * d = (y d)^2
        if (auto yd = sqrt_at(lv, k, times(lo, d))) return std::make_pair(Vec(n), times(*yd, inverse(lv, k, d.data())));
        return std::nullopt;
    }
    Vec lo2 = times(lo, lo), hi2d = times(times(hi, hi), d), nrm(n);
    for (std::size_t i = 0; i < n; ++i) nrm[i] = lo2[i] - hi2d[i];
    auto root = sqrt_at(lv, k, nrm);
    if (!root) return std::nullopt;
    for (int sg : {1, -1}) {
        Vec half(n);
        for (std::size_t i = 0; i < n; ++i) half[i] = (lo[i] + sg * (*root)[i]) / 2;
        auto x = sqrt_at(lv, k, half);
        if (!x || zero(*x)) continue;
        Vec inv2x = inverse(lv, k, x->data());
        for (auto& c : inv2x) c /= 2;
        Vec y = times(hi, inv2x);
        Vec x2 = times(*x, *x), y2d = times(times(y, y), d), xy = times(*x, y);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = (x2[i] + y2d[i] == lo[i]) && (2 * xy[i] == hi[i]);
        if (ok) return std::make_pair(*x, y);
    }
    return std::nullopt;
}

std::optional<Vec> sqrt_base(const Levels& lv, const Vec& a) {
    std::size_t n = lv.n0();
    if (n == 1) {
        Rat r;
        if (rat_sqrt(a[0], r)) return Vec{r};
        return std::nullopt;
    }
    if (n == 2) {
        // x^2 + p x + q: phi = 2x + p has phi^2 = p^2 - 4q.
        Rat p = lv.base().coeff(1), q = lv.base().coeff(0);
        FieldTower q_field = FieldTower::rationals();
        Levels rat_levels(q_field.node());
        Vec lo{a[0] - a[1] * p / 2}, hi{a[1] / 2}, d{p * p - 4 * q};
        auto r = sqrt_quadratic(rat_levels, 0, lo, hi, d);
        if (!r) return std::nullopt;
        // x + y phi = (x + y p) + 2y * theta
        const Rat& x = r->first[0];
        const Rat& y = r->second[0];
        return Vec{x + y * p, 2 * y};
    }
    return numeric_sqrt_guess(lv.base(), a);
}

std::optional<Vec> sqrt_at(const Levels& lv, std::size_t k, const Vec& a) {
    if (all_zero(a.data(), a.size())) return a;
    if (k == 0) return sqrt_base(lv, a);
    std::size_t half = lv.size(k - 1);
    Vec lo(a.begin(), a.begin() + static_cast<long>(half));
    Vec hi(a.begin() + static_cast<long>(half), a.end());
    auto r = sqrt_quadratic(lv, k - 1, lo, hi, lv.at[k]->delta);
    if (!r) return std::nullopt;
    Vec out = r->first;
    out.insert(out.end(), r->second.begin(), r->second.end());
    return out;
}

}  // namespace

std::optional<AlgNum> try_sqrt(const AlgNum& a) {
    Levels lv(a.tower().node());
    auto r = sqrt_at(lv, a.tower().height(), a.coeffs());
    if (!r) return std::nullopt;
    AlgNum root(a.tower(), std::move(*r));
    if (root * root != a) throw InternalContradiction("square root check failed for " + a.str());
    return root;
}

}  // namespace trcert
