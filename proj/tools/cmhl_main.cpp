// Copyright (c) 2026 The cmhl authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cmhl/heights.hpp"
#include "cmhl/special.hpp"
#include "cmhl/torsion.hpp"
#include "verify_suites.hpp"

using json = nlohmann::ordered_json;
using namespace cmhl;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitVerifyFail = 3;

struct GlobalOpts {
    long prec = 256;
    std::string format = "text"; // text | json | csv
    std::string cache_dir;
};

json complex_json(const BigComplex& z) {
    return json{{"re", to_decimal_string(z.re)}, {"im", to_decimal_string(z.im)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::uint64_t> parse_u64_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    return out;
}

BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(std::stol(s));
    return BigRat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
}

std::vector<BigRat> parse_rational_list(const std::string& s) {
    std::vector<BigRat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_rational(item));
    return out;
}

// "a", "a+bi", "a-bi" with rational a, b
BigComplex parse_complex(const std::string& s, const PrecisionContext& ctx) {
    std::string t = s;
    if (!t.empty() && t.back() == 'i') {
        t.pop_back();
        size_t split = t.find_last_of("+-");
        if (split == std::string::npos || split == 0)
            return BigComplex(BigReal::of(0, ctx),
                              BigReal::of(parse_rational(t.empty() ? "1" : t), ctx));
        std::string re = t.substr(0, split);
        std::string im = t.substr(split); // keeps the sign
        if (im == "+" || im == "-") im += "1";
        return BigComplex(BigReal::of(parse_rational(re), ctx),
                          BigReal::of(parse_rational(im), ctx));
    }
    return BigComplex(BigReal::of(parse_rational(t), ctx), BigReal::of(0, ctx));
}

// --- tiny expression parser for the relation command ---------------------
// vocabulary: rational literals, logP, sin(2pi/N), sin(J*2pi/N), +, -, *
struct ExprParser {
    std::string src;
    size_t pos = 0;
    const PrecisionContext& ctx;

    explicit ExprParser(std::string s, const PrecisionContext& c)
        : src(std::move(s)), ctx(c) {}

    void skip_ws() {
        while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (src.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) throw DomainError("expected integer in expression: " + src);
        return std::stol(src.substr(start, pos - start));
    }

    BigReal atom() {
        skip_ws();
        if (eat("log")) {
            long p = integer();
            if (p < 2) throw DomainError("log argument must be >= 2");
            return log(BigReal::of(p, ctx));
        }
        if (eat("sin(")) {
            long j = 1;
            skip_ws();
            if (!eat("2pi")) {
                j = integer();
                if (!eat("*2pi")) throw DomainError("expected J*2pi in sin()");
            }
            if (!eat("/")) throw DomainError("expected / in sin()");
            long n = integer();
            if (!eat(")")) throw DomainError("expected ) in sin()");
            if (n < 1) throw DomainError("sin denominator must be >= 1");
            return sin(mul_2si(const_pi(ctx), 1) * BigReal::ratio(j, n, ctx));
        }
        // rational literal p or p/q
        long num = integer();
        if (eat("/")) {
            long den = integer();
            return BigReal::ratio(num, den, ctx);
        }
        return BigReal::of(num, ctx);
    }

    BigReal term() {
        BigReal v = atom();
        while (true) {
            skip_ws();
            if (eat("*"))
                v *= atom();
            else
                break;
        }
        return v;
    }

    BigReal expr() {
        skip_ws();
        bool neg = false;
        if (eat("-"))
            neg = true;
        else
            eat("+");
        BigReal v = term();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            if (eat("+"))
                v += term();
            else if (eat("-"))
                v -= term();
            else
                break;
        }
        skip_ws();
        if (pos != src.size())
            throw DomainError("trailing characters in expression: " + src.substr(pos));
        return v;
    }
};

std::shared_ptr<const UnitGroup> load_unit_group(std::uint64_t n,
                                                 const std::string& cache_dir) {
    if (cache_dir.empty()) return UnitGroup::make(n);
    std::string path = cache_dir + "/cmhl_dlog_v1_n" + std::to_string(n) + ".json";
    {
        std::ifstream in(path);
        if (in) {
            std::string blob((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            auto g = UnitGroup::from_cache_json(blob);
            if (g) return g;
        }
    }
    auto g = UnitGroup::make(n);
    std::ofstream out(path);
    if (out) out << g->to_cache_json();
    return g;
}

// ---------------------------------------------------------------------

int cmd_characters(const GlobalOpts& g, std::uint64_t n, bool odd_only,
                   bool even_only) {
    PrecisionContext ctx(g.prec);
    auto group = load_unit_group(n, g.cache_dir);
    CharFilter filter = odd_only ? CharFilter::Odd
                                 : (even_only ? CharFilter::Even : CharFilter::All);
    auto chars = characters(group, filter);

    if (g.format == "json") {
        json rows = json::array();
        for (const auto& chi : chars)
            rows.push_back({{"character_index", chi.index()},
                            {"exponents", chi.exponents()},
                            {"odd", chi.is_odd()},
                            {"conductor", chi.conductor()},
                            {"primitive", chi.is_primitive()}});
        emit(json{{"schema_version", kSchemaVersion},
                  {"command", "characters"},
                  {"modulus", n},
                  {"precision_bits", g.prec},
                  {"characters", rows}});
    } else if (g.format == "csv") {
        std::cout << "character_index,exponents,odd,conductor,primitive\n";
        for (const auto& chi : chars) {
            std::cout << chi.index() << ",\"";
            for (size_t i = 0; i < chi.exponents().size(); ++i)
                std::cout << (i ? ";" : "") << chi.exponents()[i];
            std::cout << "\"," << (chi.is_odd() ? 1 : 0) << "," << chi.conductor()
                      << "," << (chi.is_primitive() ? 1 : 0) << "\n";
        }
    } else {
        std::cout << "characters mod " << n << " (" << chars.size() << ")\n";
        for (const auto& chi : chars) {
            std::cout << "  #" << chi.index() << "  exp=[";
            for (size_t i = 0; i < chi.exponents().size(); ++i)
                std::cout << (i ? "," : "") << chi.exponents()[i];
            std::cout << "]  " << (chi.is_odd() ? "odd " : "even")
                      << "  conductor=" << chi.conductor()
                      << (chi.is_primitive() ? " (primitive)" : "") << "\n";
        }
    }
    return kExitOk;
}

int cmd_lfun(const GlobalOpts& g, std::uint64_t n, std::uint64_t char_index,
             const std::string& s_str, bool derivative) {
    PrecisionContext ctx(g.prec);
    auto group = load_unit_group(n, g.cache_dir);
    auto all = characters(group, CharFilter::All);
    const DirichletCharacter* chi = nullptr;
    for (const auto& c : all)
        if (c.index() == char_index) chi = &c;
    if (!chi) throw DomainError("no character with that index mod " + std::to_string(n));

    BigComplex value = BigComplex::of(0, ctx);
    if (derivative) {
        value = l_derivative_at_0(*chi, ctx);
    } else {
        BigReal s = BigReal::parse(s_str, ctx);
        value = dirichlet_l(*chi, BigComplex(s, BigReal::of(0, ctx)), ctx);
    }

    if (g.format == "json") {
        emit(json{{"schema_version", kSchemaVersion},
                  {"command", "lfun"},
                  {"modulus", n},
                  {"character_index", char_index},
                  {"derivative", derivative},
                  {"s", derivative ? "0" : s_str},
                  {"precision_bits", g.prec},
                  {"value", complex_json(value)}});
    } else if (g.format == "csv") {
        std::cout << "modulus,character_index,derivative,s,value_re,value_im\n"
                  << n << "," << char_index << "," << (derivative ? 1 : 0) << ","
                  << (derivative ? "0" : s_str) << "," << to_decimal_string(value.re)
                  << "," << to_decimal_string(value.im) << "\n";
    } else {
        std::cout << (derivative ? "L'(chi, 0) = " : "L(chi, s) = ")
                  << to_decimal_string(value.re) << " + "
                  << to_decimal_string(value.im) << " i\n";
    }
    return kExitOk;
}

int cmd_height(const GlobalOpts& g, std::uint64_t n,
               const std::vector<std::uint64_t>& type_members,
               const std::vector<std::uint64_t>& subgroup) {
    PrecisionContext ctx(g.prec);
    auto group = load_unit_group(n, g.cache_dir);

    CMType type_full = [&] {
        if (subgroup.empty())
            return validate_type(GroupCtx::full(group), type_members);
        SubfieldDescriptor desc = SubfieldDescriptor::make(n, subgroup);
        auto t = validate_type(desc.quotient, type_members);
        return lift_type(desc, t);
    }();

    HeightReport rep = height_character_route(type_full, ctx);
    BigReal h_sys = height_system_route(type_full, ctx);
    Calibration cal = compare_routes(type_full, ctx);

    if (g.format == "json") {
        json per = json::array();
        for (const auto& e : rep.per_character)
            per.push_back({{"character_index", e.character_index},
                           {"conductor", e.conductor},
                           {"pairing", to_decimal_string(e.pairing_value)},
                           {"l_ratio", complex_json(e.l_ratio)},
                           {"contribution", complex_json(e.contribution)}});
        json coeffs = json::object();
        for (const auto& [label, c] : cal.coeffs) coeffs[label] = c.to_string();
        json out{{"schema_version", kSchemaVersion},
                 {"command", "height"},
                 {"modulus", n},
                 {"type", type_full.members},
                 {"precision_bits", g.prec},
                 {"h_character", to_decimal_string(rep.h_character)},
                 {"h_system", to_decimal_string(h_sys)},
                 {"calibration_c", cal.c.to_string()},
                 {"residual_coefficients", coeffs},
                 {"per_character", per}};
        if (!subgroup.empty()) {
            out["subgroup"] = subgroup;
            out["quotient_type"] = type_members;
        }
        emit(out);
    } else if (g.format == "csv") {
        std::cout << "key,value\n"
                  << "modulus," << n << "\n"
                  << "h_character," << to_decimal_string(rep.h_character) << "\n"
                  << "h_system," << to_decimal_string(h_sys) << "\n"
                  << "calibration_c," << cal.c.to_string() << "\n";
        for (const auto& [label, c] : cal.coeffs)
            if (!c.is_zero()) std::cout << "residual:" << label << "," << c.to_string() << "\n";
        for (const auto& e : rep.per_character)
            std::cout << "character:" << e.character_index << ":pairing,"
                      << to_decimal_string(e.pairing_value) << "\n";
    } else {
        std::cout << "h_character   = " << to_decimal_string(rep.h_character) << "\n"
                  << "h_system      = " << to_decimal_string(h_sys) << "\n"
                  << "calibration c = " << cal.c.to_string()
                  << "  (c*h_system - h_character in the log span)\n";
        for (const auto& [label, c] : cal.coeffs)
            if (!c.is_zero())
                std::cout << "  residual " << label << " -> " << c.to_string() << "\n";
        for (const auto& e : rep.per_character)
            std::cout << "  chi#" << e.character_index << " conductor " << e.conductor
                      << " pairing " << to_decimal_string(e.pairing_value) << "\n";
    }
    return kExitOk;
}

int cmd_torsion(const GlobalOpts& g, const std::string& nu_list,
                const std::string& angle_list, const std::string& ltr,
                bool theorem_sign) {
    PrecisionContext ctx(g.prec);
    auto nus = parse_rational_list(nu_list);
    auto angles = parse_rational_list(angle_list);
    if (nus.size() != angles.size())
        throw DomainError("--nu and --angle must have the same length");
    TorsionInstance inst;
    inst.trace_h0 = parse_complex(ltr, ctx);
    for (size_t i = 0; i < nus.size(); ++i)
        inst.eigenpairs.push_back({nus[i], angles[i]});

    BigComplex t = torsion_closed_form(inst, ctx, theorem_sign);
    bool oracle_ok = true;
    for (const auto& ep : inst.eigenpairs) oracle_ok = oracle_ok && ep.nu.sgn() > 0;
    BigComplex oracle = BigComplex::of(0, ctx);
    if (oracle_ok) oracle = torsion_spectral_oracle(inst, ctx);

    if (g.format == "json") {
        json out{{"schema_version", kSchemaVersion},
                 {"command", "torsion"},
                 {"theorem_sign", theorem_sign},
                 {"precision_bits", g.prec},
                 {"torsion", complex_json(t)}};
        if (oracle_ok) out["spectral_oracle"] = complex_json(oracle);
        emit(out);
    } else if (g.format == "csv") {
        std::cout << "key,value\n"
                  << "torsion_re," << to_decimal_string(t.re) << "\n"
                  << "torsion_im," << to_decimal_string(t.im) << "\n";
        if (oracle_ok) {
            std::cout << "oracle_re," << to_decimal_string(oracle.re) << "\n"
                      << "oracle_im," << to_decimal_string(oracle.im) << "\n";
        }
    } else {
        std::cout << "torsion = " << to_decimal_string(t.re) << " + "
                  << to_decimal_string(t.im) << " i\n";
        if (oracle_ok)
            std::cout << "oracle  = " << to_decimal_string(oracle.re) << " + "
                      << to_decimal_string(oracle.im) << " i\n";
    }
    return kExitOk;
}

int cmd_relation(const GlobalOpts& g, const std::string& target,
                 const std::vector<std::string>& basis) {
    PrecisionContext ctx(g.prec);
    std::vector<BigReal> values;
    values.push_back(ExprParser(target, ctx).expr());
    for (const auto& b : basis) values.push_back(ExprParser(b, ctx).expr());
    PslqResult r = pslq(values, ctx);

    if (g.format == "json") {
        json out{{"schema_version", kSchemaVersion},
                 {"command", "relation"},
                 {"precision_bits", g.prec},
                 {"found", r.found},
                 {"iterations", r.iterations}};
        if (r.found) {
            json coeffs = json::array();
            for (const auto& c : r.coeffs) coeffs.push_back(c.to_string());
            out["coefficients"] = coeffs;
            out["dot"] = to_decimal_string(r.dot);
        } else {
            out["exclusion_bound"] = to_decimal_string(r.exclusion_bound);
        }
        emit(out);
    } else {
        if (r.found) {
            std::cout << "relation found:";
            for (const auto& c : r.coeffs) std::cout << " " << c.to_string();
            std::cout << "\n|sum| = " << to_decimal_string(r.dot) << "\n";
        } else {
            std::cout << "NONE (no relation with norm below "
                      << to_decimal_string(r.exclusion_bound) << ")\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite,
               const std::vector<std::uint64_t>& moduli, int trials,
               std::uint64_t seed) {
    verify::SuiteParams params;
    params.prec = g.prec;
    params.seed = seed;
    params.trials = trials;
    params.moduli = moduli;

    std::vector<verify::SuiteReport> reports;
    if (suite == "all") {
        for (const auto& name : verify::suite_names())
            reports.push_back(verify::run_suite(name, params));
    } else {
        reports.push_back(verify::run_suite(suite, params));
    }

    bool ok = true;
    if (g.format == "json") {
        json out{{"schema_version", kSchemaVersion},
                 {"command", "verify"},
                 {"precision_bits", g.prec},
                 {"seed", seed}};
        json suites = json::array();
        for (const auto& rep : reports) {
            json cases = json::array();
            for (const auto& c : rep.cases) {
                cases.push_back({{"name", c.name},
                                 {"pass", c.pass},
                                 {"detail", c.detail}});
                ok = ok && c.pass;
            }
            suites.push_back({{"suite", rep.suite}, {"cases", cases}});
        }
        out["suites"] = suites;
        out["pass"] = ok;
        emit(out);
    } else {
        for (const auto& rep : reports) {
            std::cout << "suite " << rep.suite << " (seed " << rep.seed << ")\n";
            for (const auto& c : rep.cases) {
                std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
                std::cout << "\n";
                ok = ok && c.pass;
            }
        }
        std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    }
    return ok ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision Faltings heights of CM abelian varieties: "
                 "character formula, fixed-point linear system, and the "
                 "analytic identities connecting them"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("CMHL_PREC")) g.prec = std::atol(env);
    if (const char* env = std::getenv("CMHL_CACHE_DIR")) g.cache_dir = env;
    app.add_option("--prec", g.prec, "working precision in bits (env CMHL_PREC)");
    app.add_option("--format", g.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    bool json_flag = false;
    app.add_flag("--json", json_flag, "shorthand for --format json");
    app.add_option("--cache-dir", g.cache_dir,
                   "discrete-log cache directory (env CMHL_CACHE_DIR)");

    // characters
    auto* c_chars = app.add_subcommand("characters", "enumerate Dirichlet characters");
    std::uint64_t n_chars = 0;
    bool odd_only = false, even_only = false;
    c_chars->add_option("--modulus", n_chars, "modulus n >= 3")->required();
    c_chars->add_flag("--odd", odd_only, "odd characters only");
    c_chars->add_flag("--even", even_only, "even characters only");

    // lfun
    auto* c_lfun = app.add_subcommand("lfun", "Dirichlet L-values");
    std::uint64_t n_lfun = 0, idx_lfun = 0;
    std::string s_lfun = "0";
    bool deriv = false;
    c_lfun->add_option("--modulus", n_lfun, "modulus")->required();
    c_lfun->add_option("--char", idx_lfun, "character index")->required();
    c_lfun->add_option("--s", s_lfun, "evaluation point (decimal)");
    c_lfun->add_flag("--derivative", deriv, "L'(chi, 0) instead of L(chi, s)");

    // height
    auto* c_height = app.add_subcommand("height", "Faltings height, both routes");
    std::uint64_t n_height = 0;
    std::string type_str, subgroup_str;
    c_height->add_option("--modulus", n_height, "cyclotomic modulus")->required();
    c_height->add_option("--type", type_str, "CM type members, e.g. 1,2")->required();
    c_height->add_option("--subgroup", subgroup_str,
                         "subgroup generators cutting out a CM subfield");

    // torsion
    auto* c_torsion = app.add_subcommand("torsion", "equivariant analytic torsion");
    std::string nu_str, angle_str, ltr_str = "1";
    bool theorem_sign = false;
    c_torsion->add_option("--nu", nu_str, "curvature eigenvalues, e.g. 1,1/3")
        ->required();
    c_torsion->add_option("--angle", angle_str, "angles as turns, e.g. 1/2,1/4")
        ->required();
    c_torsion->add_option("--ltr", ltr_str, "trace of g on H^0, e.g. 1+0i");
    c_torsion->add_flag("--theorem-sign", theorem_sign,
                        "use the sign printed in the source theorem");

    // relation
    auto* c_rel = app.add_subcommand("relation", "integer relation detection");
    std::string target_str;
    std::string basis_str;
    c_rel->add_option("--target", target_str, "target expression")->required();
    c_rel->add_option("--basis", basis_str,
                      "comma-separated basis expressions, e.g. log2,sin(2pi/5)*log5")
        ->required();

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a bundled verification suite");
    std::string suite;
    std::string verify_moduli_str;
    int trials = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> valid_suites = verify::suite_names();
    valid_suites.push_back("all");
    c_verify->add_option("suite", suite, "suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(valid_suites));
    c_verify->add_option("--modulus", verify_moduli_str,
                         "restrict to comma-separated moduli");
    c_verify->add_option("--trials", trials, "trial count override");
    c_verify->add_option("--seed", seed, "RNG seed (recorded in output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomain;
    }

    if (json_flag) g.format = "json";

    try {
        if (g.prec < 128) throw DomainError("--prec must be at least 128");
        if (*c_chars) return cmd_characters(g, n_chars, odd_only, even_only);
        if (*c_lfun) return cmd_lfun(g, n_lfun, idx_lfun, s_lfun, deriv);
        if (*c_height)
            return cmd_height(g, n_height, parse_u64_list(type_str),
                              subgroup_str.empty() ? std::vector<std::uint64_t>{}
                                                   : parse_u64_list(subgroup_str));
        if (*c_torsion) return cmd_torsion(g, nu_str, angle_str, ltr_str, theorem_sign);
        if (*c_rel) {
            std::vector<std::string> basis;
            std::stringstream ss(basis_str);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) basis.push_back(item);
            return cmd_relation(g, target_str, basis);
        }
        if (*c_verify)
            return cmd_verify(g, suite,
                              verify_moduli_str.empty()
                                  ? std::vector<std::uint64_t>{}
                                  : parse_u64_list(verify_moduli_str),
                              trials, seed);
    } catch (const cmhl::Error& e) {
        if (g.format == "json") {
            emit(json{{"schema_version", kSchemaVersion},
                      {"error", {{"kind", e.kind()}, {"message", e.what()}}}});
        } else {
            std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
        }
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}
