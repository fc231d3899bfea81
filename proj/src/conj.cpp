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

#include "trcert/conj.hpp"

#include "trcert/embedding.hpp"
#include "trcert/error.hpp"
#include "trcert/positivity.hpp"

namespace trcert {

namespace {

unsigned long cyclotomic_order(const RatPoly& f) {
    if (f.degree() < 2) return 0;
    for (unsigned long n : inverse_phi(static_cast<unsigned long>(f.degree())))
        if (n >= 3 && cyclotomic(n) == f) return n;
    return 0;
}

}  // namespace

CMKind cm_kind(const FieldTower& t) {
    if (t.height() == 0) {
        const RatPoly& f = t.base_poly();
        if (f.degree() == 2) {
            Rat disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
            return disc < 0 ? CMKind::imaginary_quadratic : CMKind::none;
        }
        return cyclotomic_order(f) ? CMKind::cyclotomic : CMKind::none;
    }
    FieldTower below = t.subtower(t.height() - 1);
    if (!is_totally_real_tower(below)) return CMKind::none;
    AlgNum delta = t.step_delta(t.height());
    if (!totally_in(delta, IntervalSpec::below(Rat(0)))) return CMKind::none;
    return CMKind::top_step;
}

AlgNum conj(const AlgNum& a) {
    const FieldTower& t = a.tower();
    switch (cm_kind(t)) {
        case CMKind::top_step: {
            std::vector<Rat> c = a.coeffs();
            for (std::size_t i = c.size() / 2; i < c.size(); ++i) c[i] = -c[i];
            return AlgNum(t, std::move(c));
        }
        case CMKind::imaginary_quadratic: {
            // x -> -p - x for x^2 + p x + q
            const Rat& p = t.base_poly().coeff(1);
            const auto& c = a.coeffs();
            return AlgNum(t, std::vector<Rat>{c[0] - c[1] * p, -c[1]});
        }
        case CMKind::cyclotomic: {
            // x -> x^{-1}
            AlgNum inv = t.generator().inverse();
            AlgNum acc(t, Rat(0));
            AlgNum pw(t, Rat(1));
            for (const auto& c : a.coeffs()) {
                acc += pw * c;
                pw *= inv;
            }
            return acc;
        }
        case CMKind::none:
            break;
    }
    throw NotCMTower("tower is not a recognised CM field: " + t.describe());
}

}  // namespace trcert
