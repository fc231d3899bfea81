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

#include "trcert/serialize.hpp"

#include "trcert/error.hpp"

namespace trcert {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

Int int_from_json(const Json& j) {
    Rat r = rat_from_json(j);
    if (!is_integer(r)) bad("expected an integer, got " + to_string(r));
    return r.get_num();
}

Json element_tree(const FieldTower& t, const std::vector<Rat>& c, std::size_t off, std::size_t h) {
    if (h == 0) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < t.base_degree(); ++i) arr.push_back(to_json(c[off + i]));
        return arr;
    }
    std::size_t half = t.subtower(h - 1).degree();
    return Json::array({element_tree(t, c, off, h - 1), element_tree(t, c, off + half, h - 1)});
}

void element_leaves(const FieldTower& t, const Json& j, std::size_t h, std::vector<Rat>& out) {
    if (!j.is_array()) bad("element must be a nested array");
    if (h == 0) {
        if (j.size() != t.base_degree()) bad("base coefficient list has the wrong length");
        for (const auto& x : j) out.push_back(rat_from_json(x));
        return;
    }
    if (j.size() != 2) bad("element level must be a pair [lo, hi]");
    element_leaves(t, j[0], h - 1, out);
    element_leaves(t, j[1], h - 1, out);
}

Json sum32_json(const Sum32Cert& c) {
    return Json{{"d", to_json(c.d.lift(c.tower))}, {"u", to_json(c.u.lift(c.tower))}, {"v", to_json(c.v.lift(c.tower))}};
}

Sum32Cert sum32_from(const FieldTower& t, const Json& p) {
    return {t, element_from_json(t, field(p, "d")), element_from_json(t, field(p, "u")), element_from_json(t, field(p, "v"))};
}

}  // namespace

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(j.dump()));
    bad("expected a rational \"num/den\", got " + j.dump());
}

Json to_json(const RatPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

RatPoly poly_from_json(const Json& j) {
    if (!j.is_array()) bad("polynomial must be an array of coefficients");
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from_json(x));
    return RatPoly(std::move(c));
}

Json to_json(const FieldTower& t) {
    Json steps = Json::array();
    for (std::size_t k = 1; k <= t.height(); ++k) steps.push_back(to_json(t.step_delta(k)));
    return Json{{"base", to_json(t.base_poly())}, {"steps", steps}};
}

FieldTower tower_from_json(const Json& j) {
    RatPoly base = poly_from_json(field(j, "base"));
    FieldTower t = [&] {
        try {
            return FieldTower::make_base(base);
        } catch (const PreconditionFailed& e) {
            bad(std::string("bad tower base: ") + e.what());
        }
    }();
    if (j.contains("steps")) {
        const Json& steps = j.at("steps");
        if (!steps.is_array()) bad("tower steps must be an array");
        for (const auto& s : steps) {
            AlgNum delta = element_from_json(t, s);
            if (delta.is_zero()) bad("tower step radicand is zero");
            t = t.adjoin_sqrt(delta);
        }
    }
    return t;
}

Json to_json(const AlgNum& a) { return element_tree(a.tower(), a.coeffs(), 0, a.tower().height()); }

AlgNum element_from_json(const FieldTower& t, const Json& j) {
    if (j.is_string() || j.is_number_integer()) return AlgNum(t, rat_from_json(j));
    std::vector<Rat> c;
    element_leaves(t, j, t.height(), c);
    return AlgNum(t, std::move(c));
}

Json to_json(const IntervalSpec& i) {
    return Json{{"lo", i.lo ? to_json(*i.lo) : Json("-inf")},
                {"hi", i.hi ? to_json(*i.hi) : Json("+inf")},
                {"lo_open", i.lo_open},
                {"hi_open", i.hi_open}};
}

IntervalSpec interval_from_json(const Json& j) {
    IntervalSpec s;
    const Json& lo = field(j, "lo");
    const Json& hi = field(j, "hi");
    if (!(lo.is_string() && lo.get<std::string>() == "-inf")) s.lo = rat_from_json(lo);
    if (!(hi.is_string() && (hi.get<std::string>() == "+inf" || hi.get<std::string>() == "inf"))) s.hi = rat_from_json(hi);
    if (j.contains("lo_open")) s.lo_open = j.at("lo_open").get<bool>();
    if (j.contains("hi_open")) s.hi_open = j.at("hi_open").get<bool>();
    if (s.lo && s.hi && *s.lo > *s.hi) bad("interval has lo > hi");
    return s;
}

std::string certificate_kind(const Certificate& c) {
    static const char* names[] = {"unit_pair", "sum32", "x_witness", "four_squares"};
    return names[c.index()];
}

FieldTower certificate_tower(const Certificate& c) {
    struct V {
        FieldTower operator()(const UnitPairCert& x) const { return x.tower; }
        FieldTower operator()(const Sum32Cert& x) const { return x.tower; }
        FieldTower operator()(const XWitnessCert& x) const { return x.alpha.tower(); }
        FieldTower operator()(const FourSquaresCert& x) const {
            FieldTower t = x.x.tower();
            for (const auto& y : x.y) t = common_tower(t, y.tower());
            return t;
        }
    };
    return std::visit(V{}, c);
}

Json payload_to_json(const Certificate& c) {
    FieldTower t = certificate_tower(c);
    struct V {
        const FieldTower& t;
        Json operator()(const UnitPairCert& x) const {
            return Json{{"d", to_json(x.d.lift(t))}, {"r", to_json(x.r.lift(t))}, {"u", to_json(x.u.lift(t))}, {"a", to_json(x.a.lift(t))}};
        }
        Json operator()(const Sum32Cert& x) const { return sum32_json(x); }
        Json operator()(const XWitnessCert& x) const {
            Json c1 = sum32_json(x.c1), c2 = sum32_json(x.c2);
            Json s1{{"tower", to_json(x.c1.tower)}}, s2{{"tower", to_json(x.c2.tower)}};
            s1.update(c1);
            s2.update(c2);
            return Json{{"alpha", to_json(x.alpha.lift(t))}, {"d1", to_json(x.d1.lift(t))}, {"d2", to_json(x.d2.lift(t))}, {"c1", s1}, {"c2", s2}};
        }
        Json operator()(const FourSquaresCert& x) const {
            Json ys = Json::array();
            for (const auto& y : x.y) ys.push_back(to_json(y.lift(t)));
            return Json{{"x", to_json(x.x.lift(t))}, {"a", x.a.get_str()}, {"b", x.b.get_str()}, {"y", ys}};
        }
    };
    return std::visit(V{t}, c);
}

Certificate certificate_from_json(const std::string& kind, const FieldTower& t, const Json& p) {
    if (kind == "unit_pair")
        return UnitPairCert{t, element_from_json(t, field(p, "d")), element_from_json(t, field(p, "r")),
                            element_from_json(t, field(p, "u")), element_from_json(t, field(p, "a"))};
    if (kind == "sum32") return sum32_from(t, p);
    if (kind == "x_witness") {
        const Json& c1 = field(p, "c1");
        const Json& c2 = field(p, "c2");
        return XWitnessCert{element_from_json(t, field(p, "alpha")), element_from_json(t, field(p, "d1")),
                            element_from_json(t, field(p, "d2")), sum32_from(tower_from_json(field(c1, "tower")), c1),
                            sum32_from(tower_from_json(field(c2, "tower")), c2)};
    }
    if (kind == "four_squares") {
        FourSquaresCert c{element_from_json(t, field(p, "x")), int_from_json(field(p, "a")), int_from_json(field(p, "b")), {}};
        const Json& ys = field(p, "y");
        if (!ys.is_array()) bad("four_squares y must be an array");
        for (const auto& y : ys) c.y.push_back(element_from_json(t, y));
        return c;
    }
    bad("unknown certificate kind \"" + kind + "\"");
}

VerifyReport verify_certificate(const Certificate& c) {
    struct V {
        VerifyReport operator()(const UnitPairCert& x) const { return verify_unit_pair(x); }
        VerifyReport operator()(const Sum32Cert& x) const { return verify_sum32(x); }
        VerifyReport operator()(const XWitnessCert& x) const { return verify_x_witness(x); }
        VerifyReport operator()(const FourSquaresCert& x) const { return verify_four_squares(x); }
    };
    return std::visit(V{}, c);
}

std::string builder_version() { return "trcert 0.1.0"; }

Envelope make_envelope(Certificate c, const std::string& timestamp) {
    Json prov{{"builder", builder_version()}};
    if (!timestamp.empty()) prov["timestamp"] = timestamp;
    std::string kind = certificate_kind(c);
    return {kind, std::move(c), prov, Json{{"state", "unverified"}}};
}

Json to_json(const Envelope& e) {
    return Json{{"schema", kSchemaVersion},
                {"kind", e.kind},
                {"tower", to_json(certificate_tower(e.cert))},
                {"payload", payload_to_json(e.cert)},
                {"provenance", e.provenance},
                {"status", e.status}};
}

Envelope envelope_from_json(const Json& j) {
    if (!j.is_object()) bad("envelope must be a JSON object");
    const Json& schema = field(j, "schema");
    if (!schema.is_string() || schema.get<std::string>() != kSchemaVersion) bad("unsupported schema version");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    FieldTower t = tower_from_json(field(j, "tower"));
    Envelope e{kind.get<std::string>(), certificate_from_json(kind.get<std::string>(), t, field(j, "payload")),
               j.value("provenance", Json::object()), j.value("status", Json{{"state", "unverified"}})};
    return e;
}

Json status_json(const VerifyReport& r) {
    if (r.pass()) return Json{{"state", "pass"}};
    return Json{{"state", "fail"}, {"clause", r.first_failure()}};
}

Json to_json(const VerifyReport& r) {
    Json cl = Json::array();
    for (const auto& c : r.clauses) {
        Json x{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) x["detail"] = c.detail;
        cl.push_back(x);
    }
    Json out{{"pass", r.pass()}};
    if (!r.pass()) out["first_failure"] = r.first_failure();
    out["clauses"] = cl;
    return out;
}

Json to_json(const CensusTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) entries.push_back(Json{{"degree", e.degree}, {"poly", to_json(e.poly)}});
    return Json{{"degree", t.max_degree}, {"t", to_json(t.t)}, {"cells", t.cells}, {"counts", t.counts},
                {"element_count", t.element_count}, {"entries", entries}};
}

Json to_json(const KroneckerEntry& k) {
    return Json{{"n", k.n}, {"degree", k.degree}, {"poly", to_json(k.poly)}};
}

Json to_json(const CompletenessReport& r) {
    Json a = Json::array(), b = Json::array();
    for (const auto& p : r.census_only) a.push_back(to_json(p));
    for (const auto& p : r.kronecker_only) b.push_back(to_json(p));
    return Json{{"degree", r.max_degree}, {"pass", r.pass}, {"orders", r.orders}, {"census_size", r.census_size},
                {"kronecker_size", r.kronecker_size}, {"census_only", a}, {"kronecker_only", b}};
}

Json to_json(const ProbeReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"order", e.order}, {"roots_checked", e.roots_checked}, {"violations", e.violations}});
    return Json{{"m", r.m}, {"pass", r.pass}, {"entries", entries}};
}

Json to_json(const ResidueWitness& w) { return Json{{"m", w.m}, {"j", w.j}}; }

Json to_json(const UnitEvidence& u) {
    Json inv = Json::array();
    for (const auto& c : u.inverse_coeffs) inv.push_back(c.get_str());
    return Json{{"min_poly", to_json(u.min_poly)}, {"constant", u.constant.get_str()}, {"inverse_coeffs", inv},
                {"inverse", to_json(u.inverse)}};
}

}  // namespace trcert
