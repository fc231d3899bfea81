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

#ifndef TRCERT_TESTS_SUPPORT_HPP
#define TRCERT_TESTS_SUPPORT_HPP

#include <random>

#include "trcert/poly.hpp"
#include "trcert/tower.hpp"

unsigned long test_seed();

namespace support {

inline trcert::Rat R(long n, long d = 1) { return trcert::make_rat(trcert::Int(n), trcert::Int(d)); }

inline trcert::RatPoly P(std::initializer_list<long> c) { return trcert::RatPoly::from_ints(c); }

inline trcert::FieldTower Q() { return trcert::FieldTower::rationals(); }

// Q(sqrt(d1), sqrt(d2), ...) as steps over Q.
inline trcert::FieldTower sqrt_tower(std::initializer_list<long> radicands) {
    trcert::FieldTower t = Q();
    for (long d : radicands) t = t.adjoin_sqrt(trcert::AlgNum(t, R(d)));
    return t;
}

inline trcert::AlgNum num(const trcert::FieldTower& t, long v) { return trcert::AlgNum(t, R(v)); }

// a + b * s_k
inline trcert::AlgNum lin(const trcert::FieldTower& t, long a, long b, std::size_t k = 1) {
    return t.sqrt_generator(k) * R(b) + R(a);
}

inline trcert::RatPoly random_poly(std::mt19937_64& rng, int max_degree, long height) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> c(-height, height);
    int d = deg(rng);
    std::vector<trcert::Rat> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(c(rng));
    if (v.back() == 0) v.back() = 1;
    return trcert::RatPoly(v);
}

inline trcert::AlgNum random_element(std::mt19937_64& rng, const trcert::FieldTower& t, long height) {
    std::uniform_int_distribution<long> c(-height, height);
    std::vector<trcert::Rat> v(t.degree());
    for (auto& x : v) x = c(rng);
    return trcert::AlgNum(t, v);
}

}  // namespace support

#endif
