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

#include "trcert/literal.hpp"

#include <cctype>

#include "trcert/error.hpp"
#include "trcert/integrality.hpp"
#include "trcert/serialize.hpp"

namespace trcert {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        // U+221A SQUARE ROOT
        if (s.compare(i, 3, "\xE2\x88\x9A") == 0) {
            out += "sqrt";
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
            out += s[i];
        }
    }
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

// A square root of the rational n inside t.
AlgNum sqrt_of(const Rat& n, const FieldTower& t) {
    for (std::size_t k = 1; k <= t.height(); ++k) {
        AlgNum d = t.step_delta(k);
        if (d.is_rational() && d.rational_value() == n) return t.sqrt_generator(k);
    }
    if (auto r = try_sqrt(AlgNum(t, n))) return *r;
    throw ParseError("sqrt(" + to_string(n) + ") is not in the tower " + t.describe());
}

class Parser {
public:
    Parser(std::string s, const FieldTower& t) : s_(std::move(s)), t_(t) {}

    AlgNum parse() {
        AlgNum v = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    std::string s_;
    const FieldTower& t_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("element literal: " + what + " at position " + std::to_string(pos_));
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    std::string digits() {
        std::size_t b = pos_;
        while (at_digit()) ++pos_;
        if (b == pos_) fail("expected digits");
        return s_.substr(b, pos_ - b);
    }

    AlgNum expr() {
        AlgNum v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    AlgNum term() {
        AlgNum v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                AlgNum d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    AlgNum unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    AlgNum power() {
        AlgNum b = atom();
        if (!eat('^')) return b;
        bool neg = eat('-');
        bool paren = !neg && eat('(');
        if (paren) neg = eat('-');
        long e = std::stol(digits());
        if (paren && !eat(')')) fail("expected ')'");
        if (neg && b.is_zero()) fail("zero to a negative power");
        return b.pow(neg ? -e : e);
    }

    AlgNum atom() {
        if (eat('(')) {
            AlgNum v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (at_digit()) return AlgNum(t_, Rat(Int(digits())));
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string name = s_.substr(b, pos_ - b);
        if (name.empty()) fail("expected a number, generator or '('");
        if (name == "x") return t_.generator();
        if (name == "i") return sqrt_of(Rat(-1), t_);
        if (name == "s") {
            std::size_t k = std::stoul(digits());
            if (k < 1 || k > t_.height()) fail("no square-root step s" + std::to_string(k));
            return t_.sqrt_generator(k);
        }
        if (name == "sqrt") {
            if (eat('(')) {
                bool neg = eat('-');
                Int n(digits());
                if (!eat(')')) fail("expected ')'");
                return sqrt_of(Rat(neg ? Int(-n) : n), t_);
            }
            return sqrt_of(Rat(Int(digits())), t_);
        }
        if (name == "zeta") {
            unsigned long n = std::stoul(digits());
            if (n == 0) fail("zeta0 is undefined");
            if (n <= 2) return AlgNum(t_, Rat(n == 1 ? 1 : -1));
            auto roots = primitive_roots_in(t_, n);
            if (roots.empty()) fail("no primitive " + std::to_string(n) + "-th root of unity in the tower");
            // Prefer the base generator's own power when the base is cyclotomic.
            return roots.front();
        }
        fail("unknown generator \"" + name + "\"");
    }
};

}  // namespace

FieldTower parse_tower(const std::string& text) {
    std::string s = strip(text);
    if (!s.empty() && s.front() == '{') return tower_from_json(parse_json_text(s));
    if (s == "Q") return FieldTower::rationals();
    if (s.size() < 4 || s.compare(0, 2, "Q(") != 0 || s.back() != ')')
        throw ParseError("tower must be Q, Q(gen,...) or tower JSON: " + text);
    std::string inner = s.substr(2, s.size() - 3);
    std::vector<std::string> gens;
    for (std::size_t b = 0;;) {
        std::size_t c = inner.find(',', b);
        gens.push_back(inner.substr(b, c == std::string::npos ? std::string::npos : c - b));
        if (c == std::string::npos) break;
        b = c + 1;
    }
    FieldTower t = FieldTower::rationals();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string& name = gens[g];
        auto number_after = [&](std::size_t off) -> Int {
            std::string rest = name.substr(off);
            if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
            if (rest.empty() || rest.find_first_not_of("-0123456789") != std::string::npos)
                throw ParseError("bad generator \"" + name + "\"");
            return Int(rest);
        };
        if (name.rfind("zeta", 0) == 0) {
            if (g != 0) throw ParseError("zetaN must be the first generator");
            Int n = number_after(4);
            if (n < 3) throw ParseError("zetaN needs N >= 3");
            t = FieldTower::make_base(cyclotomic(n.get_ui()));
        } else if (name == "i") {
            t = t.adjoin_sqrt(AlgNum(t, Rat(-1)));
        } else if (name.rfind("sqrt", 0) == 0) {
            Int n = number_after(4);
            if (n == 0) throw ParseError("sqrt0 is not a field generator");
            t = t.adjoin_sqrt(AlgNum(t, Rat(n)));
        } else {
            throw ParseError("unknown generator \"" + name + "\"");
        }
    }
    return t;
}

AlgNum parse_element(const std::string& text, const FieldTower& t) {
    std::string s = strip(text);
    if (s.empty()) throw ParseError("empty element literal");
    if (s.front() == '[' || s.front() == '"') return element_from_json(t, parse_json_text(s));
    return Parser(s, t).parse();
}

}  // namespace trcert
