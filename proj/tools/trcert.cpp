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

// trcert: build, verify and tabulate certificates from the command line.
//
// Exit codes: 0 ok, 1 verification failed (or nothing found), 2 precondition
// failure, 3 I/O or parse error, 4 resource guard, 5 internal error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "trcert/census.hpp"
#include "trcert/constructions.hpp"
#include "trcert/error.hpp"
#include "trcert/integrality.hpp"
#include "trcert/literal.hpp"
#include "trcert/serialize.hpp"

using namespace trcert;

namespace {

constexpr int kOk = 0, kFail = 1, kPrecondition = 2, kParse = 3, kGuard = 4, kInternal = 5;

const char* kGrammar = R"(Towers:   Q | Q(sqrt2) | Q(sqrt2,i) | Q(sqrt-3) | Q(zeta5) | Q(zeta5,sqrt2) | tower JSON
          zetaN must come first and makes the base Phi_N; other generators are square-root steps.
Elements: integers, x, s1 s2 ..., sqrtN, sqrt(-N), i, zetaN, + - * / ^ and parentheses,
          or nested-array JSON such as [["3/1"],["2/1"]] for 3 + 2*sqrt2.)";

struct Globals {
    bool json = false;
    bool reproducible = false;
    unsigned long seed = 20240917;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string now_utc() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void emit_error(const std::string& kind, const std::string& message) {
    std::cout << Json{{"error", kind}, {"message", message}}.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

Rat parse_ratio(const std::string& s) {
    Rat r = parse_rat(s);
    return r;
}

// "3..12" or "7"
std::pair<unsigned long, unsigned long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            unsigned long n = std::stoul(s);
            return {n, n};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("bad range \"" + s + "\"");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_report(const VerifyReport& r, const Globals& g) {
    if (g.json) {
        std::cout << to_json(r).dump(2) << "\n";
        return;
    }
    for (const auto& c : r.clauses) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (r.pass() ? "verified" : "failed at: " + r.first_failure()) << "\n";
}

struct ConstructArgs {
    std::string kind, tower = "Q", d, alpha, x, t = "4", out;
    long bound = 8;
};

int cmd_construct(const ConstructArgs& a, const Globals& g) {
    FieldTower tower = parse_tower(a.tower);
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw ParseError(std::string("construct ") + a.kind + " needs " + flag);
        return parse_element(v, tower);
    };
    std::optional<Certificate> cert;
    if (a.kind == "unit-pair") {
        cert = build_unit_pair(need(a.d, "--d"));
    } else if (a.kind == "sum32") {
        cert = build_sum32(need(a.d, "--d"));
    } else if (a.kind == "x-witness") {
        cert = build_x_witness(need(a.alpha, "--alpha"));
    } else if (a.kind == "four-squares") {
        AlgNum x = need(a.x, "--x");
        Rat t = parse_ratio(a.t);
        auto c = search_four_squares(x, t.get_num(), t.get_den(), a.bound);
        if (!c) {
            emit_error("NotFound", "no certificate with height <= " + std::to_string(a.bound) +
                                       " (absence is not a disproof)");
            return kFail;
        }
        cert = *c;
    } else {
        throw ParseError("unknown construction \"" + a.kind + "\"");
    }
    Envelope e = make_envelope(*cert, g.reproducible ? "" : now_utc());
    write_output(a.out, to_json(e).dump(2) + "\n");
    return kOk;
}

int cmd_verify(const std::string& path, bool update, const Globals& g) {
    std::string text = read_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    Envelope e = envelope_from_json(j);
    VerifyReport r = verify_certificate(e.cert);
    print_report(r, g);
    if (update) {
        j["status"] = status_json(r);
        write_output(path, j.dump(2) + "\n");
    }
    return r.pass() ? kOk : kFail;
}

int cmd_census(int degree, const std::string& t, unsigned threads, double budget, const Globals& g) {
    CensusOptions opts;
    opts.threads = threads;
    if (budget > 0) opts.cell_budget = budget;
    CensusTable table = census(degree, parse_ratio(t), opts);
    if (g.json) {
        std::cout << to_json(table).dump(2) << "\n";
        return kOk;
    }
    std::cout << "census D=" << degree << " t=" << to_string(table.t) << "\n";
    for (const auto& e : table.entries) std::cout << "  " << e.degree << "  " << e.poly.str() << "\n";
    for (std::size_t k = 0; k < table.counts.size(); ++k)
        std::cout << "degree " << (k + 1) << ": " << table.counts[k] << "\n";
    std::cout << "entries: " << table.entries.size() << "\nelements: " << table.element_count << "\n";
    return kOk;
}

int cmd_kronecker(const std::string& range, int completeness, const Globals& g) {
    if (completeness > 0) {
        CompletenessReport r = kronecker_completeness(completeness);
        if (g.json) {
            std::cout << to_json(r).dump(2) << "\n";
        } else {
            std::cout << "completeness D=" << completeness << ": " << (r.pass ? "pass" : "FAIL") << " (census "
                      << r.census_size << ", kronecker " << r.kronecker_size << ")\n";
            for (const auto& p : r.census_only) std::cout << "  census only: " << p.str() << "\n";
            for (const auto& p : r.kronecker_only) std::cout << "  kronecker only: " << p.str() << "\n";
        }
        return r.pass ? kOk : kFail;
    }
    auto [lo, hi] = parse_range(range);
    if (lo > hi) throw ParseError("empty range \"" + range + "\"");
    Json arr = Json::array();
    for (unsigned long n = lo; n <= hi; ++n) {
        KroneckerEntry e = kronecker_entry(n);
        if (g.json)
            arr.push_back(to_json(e));
        else
            std::cout << "n=" << n << "  degree " << e.degree << "  " << e.poly.str() << "\n";
    }
    if (g.json) std::cout << arr.dump(2) << "\n";
    return kOk;
}

int cmd_probe(const std::string& tower, long m, const std::string& orders, const Globals& g) {
    FieldTower t = parse_tower(tower);
    std::vector<unsigned long> ns;
    for (const auto& s : split_commas(orders)) {
        try {
            ns.push_back(std::stoul(s));
        } catch (const std::exception&) {
            throw ParseError("bad order \"" + s + "\"");
        }
    }
    ProbeReport r = probe_mu_trivial(t, m, ns);
    if (g.json) {
        std::cout << to_json(r).dump(2) << "\n";
    } else {
        for (const auto& e : r.entries) {
            std::cout << "order " << e.order << ": " << e.roots_checked << " roots checked, "
                      << (e.violations.empty() ? "none in R_" + std::to_string(m) : "VIOLATION") << "\n";
            for (const auto& v : e.violations) std::cout << "  " << v << "\n";
        }
        std::cout << (r.pass ? "pass" : "fail") << "\n";
    }
    return r.pass ? kOk : kFail;
}

int cmd_profile(int degree, const std::string& ts, const std::string& out, const Globals& g) {
    std::vector<Rat> values;
    for (const auto& s : split_commas(ts)) values.push_back(parse_ratio(s));
    if (values.empty()) throw ParseError("profile needs at least one t");
    auto rows = jr_profile(degree, values);
    std::ostringstream os;
    if (g.json) {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(Json{{"t", to_string(r.t)}, {"count", r.count}});
        os << arr.dump(2) << "\n";
    } else {
        os << "t,count\n";
        for (const auto& r : rows) os << to_string(r.t) << "," << r.count << "\n";
    }
    write_output(out, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificates for totally real units, four-squares witnesses and Kronecker censuses.\n\n" +
                 std::string(kGrammar)};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--reproducible", g.reproducible, "Omit the provenance timestamp");
    app.add_option("--seed", g.seed, "Seed for randomised work")->capture_default_str();

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a certificate envelope");
    construct->add_option("kind", ca.kind, "unit-pair | sum32 | x-witness | four-squares")->required();
    construct->add_option("--tower", ca.tower, "Ambient tower")->capture_default_str();
    construct->add_option("--d", ca.d, "d for unit-pair and sum32");
    construct->add_option("--alpha", ca.alpha, "alpha for x-witness");
    construct->add_option("--x", ca.x, "x for four-squares");
    construct->add_option("--t", ca.t, "Bound a/b for four-squares")->capture_default_str();
    construct->add_option("--bound", ca.bound, "Height bound for four-squares")->capture_default_str();
    construct->add_option("-o,--out", ca.out, "Output path (default stdout)");

    std::string vpath;
    bool update = false;
    auto* verify = app.add_subcommand("verify", "Verify a certificate envelope");
    verify->add_option("path", vpath, "Envelope file")->required();
    verify->add_flag("--update", update, "Rewrite the envelope with the verification status");

    int degree = 2;
    std::string t = "4";
    unsigned threads = 1;
    double budget = 0;
    auto* census_cmd = app.add_subcommand("census", "Totally real integers with conjugates in (0, t)");
    census_cmd->add_option("--degree", degree, "Maximum degree D")->capture_default_str();
    census_cmd->add_option("--t", t, "Bound t as a/b")->capture_default_str();
    census_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    census_cmd->add_option("--budget", budget, "Cell budget (default TRCERT_CELL_BUDGET or 1e8)");

    std::string range = "3..12";
    int completeness = 0;
    auto* kron = app.add_subcommand("kronecker", "Minimal polynomials of zeta_n + zeta_n^-1 + 2");
    kron->add_option("--n", range, "n or a..b")->capture_default_str();
    kron->add_option("--completeness", completeness, "Compare census(D, 4) with the family for this D");

    std::string ptower = "Q(i)", orders = "4";
    long m = 2;
    auto* probe = app.add_subcommand("probe-mu", "Check that nontrivial roots of unity avoid R_m");
    probe->add_option("--tower", ptower, "Tower containing the roots of unity")->capture_default_str();
    probe->add_option("--m", m, "Modulus m >= 2")->capture_default_str();
    probe->add_option("--orders", orders, "Comma-separated orders")->capture_default_str();

    int pdegree = 1;
    std::string ts = "1/2,3/2,5/2,9/2", pout;
    auto* profile = app.add_subcommand("profile", "CSV of (t, element count)");
    profile->add_option("--degree", pdegree, "Maximum degree D")->capture_default_str();
    profile->add_option("--ts", ts, "Comma-separated values of t")->capture_default_str();
    profile->add_option("-o,--out", pout, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*construct) return cmd_construct(ca, g);
        if (*verify) return cmd_verify(vpath, update, g);
        if (*census_cmd) return cmd_census(degree, t, threads, budget, g);
        if (*kron) return cmd_kronecker(range, completeness, g);
        if (*probe) return cmd_probe(ptower, m, orders, g);
        if (*profile) return cmd_profile(pdegree, ts, pout, g);
    } catch (const IoError& e) {
        emit_error("IOError", e.what());
        return kParse;
    } catch (const ParseError& e) {
        emit_error(e.kind(), e.what());
        return kParse;
    } catch (const ResourceGuard& e) {
        std::ostringstream os;
        os << std::setprecision(12) << e.needed();
        std::cout << Json{{"error", e.kind()}, {"message", e.what()}, {"needed", os.str()}}.dump(2) << "\n";
        return kGuard;
    } catch (const InternalContradiction& e) {
        emit_error(e.kind(), e.what());
        return kInternal;
    } catch (const Error& e) {
        emit_error(e.kind(), e.what());
        return kPrecondition;
    } catch (const nlohmann::json::exception& e) {
        emit_error("ParseError", e.what());
        return kParse;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return kInternal;
    }
    return kInternal;
}
