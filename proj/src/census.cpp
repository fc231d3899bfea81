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

#include "trcert/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "trcert/error.hpp"
#include "trcert/positivity.hpp"

namespace trcert {

KroneckerEntry kronecker_entry(unsigned long n) {
    if (n <= 2) throw PreconditionFailed("kronecker_entry needs n >= 3");
    RatPoly phi = cyclotomic(n);
    int deg = phi.degree();
    // Res_x(Phi_n(x), x^2 - (y - 2) x + 1) has degree phi(n) in y.
    std::vector<Rat> ys, vals;
    for (int i = 0; i <= deg; ++i) {
        Rat y(i);
        ys.push_back(y);
        vals.push_back(resultant(phi, RatPoly({Rat(1), 2 - y, Rat(1)})));
    }
    RatPoly p = squarefree_part(interpolate(ys, vals));
    KroneckerEntry e{n, p, p.degree()};
    if (2 * e.degree != deg || !p.has_integer_coeffs() ||
        count_roots_in(p, IntervalSpec::open(Rat(0), Rat(4))) != static_cast<std::size_t>(e.degree))
        throw InternalContradiction("kronecker entry check failed for n = " + std::to_string(n));
    return e;
}

double CensusOptions::default_cell_budget() {
    if (const char* env = std::getenv("TRCERT_CELL_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e8;
}

namespace {

// Largest integer strictly below C(k, j) t^j, for j = 1..k.
std::vector<long> coefficient_limits(int k, const Rat& t) {
    std::vector<long> lim(k + 1, 0);
    Rat tj = 1;
    for (int j = 1; j <= k; ++j) {
        tj *= t;
        Rat b = Rat(binomial(k, j)) * tj;
        Int c = ceil(b) - 1;
        lim[j] = c.get_si();
    }
    return lim;
}

struct Search {
    int k;
    Rat t;
    IntervalSpec inside;
    std::vector<long> lim;
    std::vector<Int> fact;
    std::vector<long> e;
    std::vector<RatPoly> found;

    Search(int k_, const Rat& t_) : k(k_), t(t_), inside(IntervalSpec::open(Rat(0), t_)), lim(coefficient_limits(k_, t_)), e(k_ + 1, 0) {
        fact.resize(k + 1);
        fact[0] = 1;
        for (int i = 1; i <= k; ++i) fact[i] = fact[i - 1] * i;
        e[0] = 1;
    }

    // (k - j)-th derivative of p, which involves e_0..e_j only.
    RatPoly derivative_at(int j) const {
        std::vector<Rat> c(j + 1);
        for (int i = 0; i <= j; ++i) {
            Rat v = Rat(fact[k - i] / fact[j - i]) * e[i];
            c[j - i] = (i % 2) ? Rat(-v) : v;
        }
        return RatPoly(std::move(c));
    }

    // By Rolle, j distinct roots in (0, t) are necessary.
    bool feasible(int j) const {
        RatPoly q = derivative_at(j);
        if (!is_squarefree(q)) return false;
        return count_roots_in(q, inside) == static_cast<std::size_t>(j);
    }

    void descend(int j) {
        if (j > k) {
            found.push_back(derivative_at(k));
            return;
        }
        for (long v = 1; v <= lim[j]; ++v) {
            e[j] = v;
            if (feasible(j)) descend(j + 1);
        }
    }

    void run_first(long e1) {
        e[1] = e1;
        if (feasible(1)) descend(2);
    }
};

}  // namespace

double census_cells(int max_degree, const Rat& t) {
    double total = 0;
    for (int k = 1; k <= max_degree; ++k) {
        auto lim = coefficient_limits(k, t);
        double cells = 1;
        for (int j = 1; j <= k; ++j) cells *= double(std::max(0L, lim[j]));
        total += cells;
    }
    return total;
}

CensusTable census(int max_degree, const Rat& t, const CensusOptions& opts) {
    if (max_degree < 1) throw PreconditionFailed("census degree must be >= 1");
    if (t <= 0) throw PreconditionFailed("census bound t must be positive");
    CensusTable table;
    table.max_degree = max_degree;
    table.t = t;
    table.cells = census_cells(max_degree, t);
    if (table.cells > opts.cell_budget) throw ResourceGuard(table.cells, opts.cell_budget);
    table.counts.assign(max_degree, 0);

    std::vector<RatPoly> kept;
    for (int k = 1; k <= max_degree; ++k) {
        long top = coefficient_limits(k, t)[1];
        unsigned nthreads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max(1L, top))));
        std::vector<std::vector<RatPoly>> parts(nthreads);
        auto work = [&](unsigned w) {
            Search s(k, t);
            for (long e1 = 1 + w; e1 <= top; e1 += nthreads) s.run_first(e1);
            parts[w] = std::move(s.found);
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }
        std::vector<RatPoly> cands;
        for (auto& p : parts) cands.insert(cands.end(), p.begin(), p.end());
        std::sort(cands.begin(), cands.end());

        std::vector<RatPoly> fresh;
        for (const auto& p : cands) {
            if (p(t) == 0 || p(Rat(0)) == 0 || !is_squarefree(p)) continue;
            if (sturm_count(p, Rat(0), t) != static_cast<std::size_t>(k)) continue;
            bool shared = false;
            for (const auto& q : kept)
                if (resultant(p, q) == 0) {
                    shared = true;
                    break;
                }
            if (!shared) fresh.push_back(p);
        }
        for (const auto& p : fresh) {
            kept.push_back(p);
            table.entries.push_back({p, k});
            ++table.counts[k - 1];
            table.element_count += static_cast<std::size_t>(k);
        }
    }
    return table;
}

CompletenessReport kronecker_completeness(int max_degree, const CensusOptions& opts) {
    CompletenessReport rep;
    rep.max_degree = max_degree;
    CensusTable table = census(max_degree, Rat(4), opts);
    std::set<RatPoly> lhs, rhs;
    for (const auto& e : table.entries) lhs.insert(e.poly);
    for (unsigned long v = 1; v <= 2UL * static_cast<unsigned long>(max_degree); ++v)
        for (unsigned long n : inverse_phi(v))
            if (n >= 3) rep.orders.push_back(n);
    std::sort(rep.orders.begin(), rep.orders.end());
    for (unsigned long n : rep.orders) rhs.insert(kronecker_entry(n).poly);
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(rep.census_only));
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(rep.kronecker_only));
    rep.census_size = lhs.size();
    rep.kronecker_size = rhs.size();
    rep.pass = rep.census_only.empty() && rep.kronecker_only.empty();
    return rep;
}

std::vector<ProfileRow> jr_profile(int max_degree, const std::vector<Rat>& ts, const CensusOptions& opts) {
    std::vector<ProfileRow> rows;
    for (const auto& t : ts) rows.push_back({t, census(max_degree, t, opts).element_count});
    return rows;
}

}  // namespace trcert
