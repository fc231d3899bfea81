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

#include "trcert/rational.hpp"

#include "trcert/error.hpp"

namespace trcert {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Int parse_int(std::string_view s) {
    std::string text(s);
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("bad integer literal '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9') throw ParseError("bad integer literal '" + text + "'");
    if (text[0] == '+') text.erase(0, 1);
    return Int(text, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
Int ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

bool rat_sqrt(const Rat& r, Rat& root) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(r.get_den().get_mpz_t()))
        return false;
    root = make_rat(sqrt(r.get_num()), sqrt(r.get_den()));
    return true;
}

Rat sqrt_lower(const Rat& r, unsigned bits) {
    if (r <= 0) return Rat(0);
    // floor(sqrt(floor(r * 4^bits))) / 2^bits
    Int scaled = floor_div(r.get_num() << (2 * bits), r.get_den());
    return make_rat(sqrt(scaled), Int(1) << bits);
}

Rat sqrt_upper(const Rat& r, unsigned bits) {
    if (r <= 0) return Rat(0);
    Int scaled = ceil_div(r.get_num() << (2 * bits), r.get_den());
    Int s = sqrt(scaled);
    if (s * s < scaled) s += 1;
    return make_rat(s, Int(1) << bits);
}

Rat round_down(const Rat& r, unsigned bits) {
    return make_rat(floor_div(r.get_num() << bits, r.get_den()), Int(1) << bits);
}

Rat round_up(const Rat& r, unsigned bits) {
    return make_rat(ceil_div(r.get_num() << bits, r.get_den()), Int(1) << bits);
}

Int binomial(unsigned n, unsigned k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace trcert
