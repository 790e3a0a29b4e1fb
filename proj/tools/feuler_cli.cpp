// feuler: exact and p-adic computations around higher-order Frobenius-Euler
// numbers. Subcommands: table, check, padic, kummer, zeta.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "feuler/kummer.hpp"
#include "feuler/zeta.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace feuler;

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void emit_text(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_file);
    if (!os) throw invalid_input("cannot open output file: " + out_file);
    os << text;
}

void emit_json(const json& j, const std::string& out_file) {
    emit_text(j.dump(2) + "\n", out_file);
}

struct CaseResult {
    std::string name;
    bool pass;
    json detail = json::object();
};

json report(const std::string& command, const std::string& suite, const std::vector<CaseResult>& cases) {
    json jcases = json::array();
    int failed = 0;
    for (const auto& c : cases) {
        json jc = c.detail;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jcases.push_back(jc);
        if (!c.pass) ++failed;
    }
    json out{{"schema", 1}, {"command", command}, {"cases", jcases},
             {"total", cases.size()}, {"failed", failed}, {"pass", failed == 0}};
    if (!suite.empty()) out["suite"] = suite;
    return out;
}

std::string render_cases_text(const std::vector<CaseResult>& cases) {
    std::string out;
    for (const auto& c : cases) out += (c.pass ? "[PASS] " : "[FAIL] ") + c.name + "\n";
    int failed = 0;
    for (const auto& c : cases) failed += c.pass ? 0 : 1;
    out += failed == 0 ? "all " + std::to_string(cases.size()) + " cases passed\n"
                       : std::to_string(failed) + " of " + std::to_string(cases.size()) + " cases FAILED\n";
    return out;
}

// --- table subcommand with on-disk cache, one JSON file per (n, r) ----------

std::string cache_directory(const std::string& flag_value) {
    if (const char* env = std::getenv("FEULER_CACHE")) return env;
    if (!flag_value.empty()) return flag_value;
    return ".feuler-cache";
}

std::string table_key(int n, int r) {
    return "H(" + std::to_string(n) + "," + std::to_string(r) + ")";
}

URational cached_h(const fs::path& dir, int n, int r) {
    const std::string key = table_key(n, r);
    const fs::path file = dir / ("h_" + std::to_string(n) + "_" + std::to_string(r) + ".json");
    if (fs::exists(file)) {
        try {
            std::ifstream is(file);
            json j = json::parse(is);
            URational v = URational::parse(j.at(key).get<std::string>());
            return v;
        } catch (const std::exception& e) {
            std::cerr << "warning: cache file " << file.string() << " is corrupt (" << e.what()
                      << "); recomputing\n";
        }
    }
    URational v = fe_number_r(n, r);
    std::error_code ec;
    fs::create_directories(dir, ec);
    std::ofstream os(file);
    if (os) os << json{{key, v.to_string()}}.dump(2) << "\n";
    return v;
}

int cmd_table(int nmax, int r, const std::string& at, const std::string& format,
              const std::string& out_file, const std::string& cache_flag) {
    const fs::path dir = cache_directory(cache_flag);
    std::vector<std::pair<std::string, std::string>> rows;
    for (int n = 0; n <= nmax; ++n) {
        URational h = cached_h(dir, n, r);
        std::string value = at.empty() ? h.to_string() : h.eval_at(Rational::parse(at)).to_string();
        rows.emplace_back(table_key(n, r), value);
    }
    if (format == "json") {
        json entries = json::object();
        for (const auto& [k, v] : rows) entries[k] = v;
        json out{{"schema", 1}, {"command", "table"}, {"r", r}, {"nmax", nmax}, {"entries", entries}};
        if (!at.empty()) out["at"] = at;
        emit_json(out, out_file);
    } else if (format == "csv") {
        std::string text = "n,r,value\n";
        for (int n = 0; n <= nmax; ++n) text += std::to_string(n) + "," + std::to_string(r) + "," + rows[static_cast<std::size_t>(n)].second + "\n";
        emit_text(text, out_file);
    } else {
        std::string text;
        for (const auto& [k, v] : rows) text += k + " = " + v + "\n";
        emit_text(text, out_file);
    }
    return 0;
}

// --- check suites ------------------------------------------------------------

std::vector<CaseResult> suite_reflection(int nmax, int rmax, const std::vector<std::string>& xs) {
    std::vector<CaseResult> cases;
    for (int n = 0; n <= nmax; ++n)
        for (int r = 1; r <= rmax; ++r)
            for (const auto& xs_str : xs) {
                Rational x = Rational::parse(xs_str);
                cases.push_back({"reflection n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " x=" + xs_str,
                                 check_reflection(n, r, x)});
            }
    return cases;
}

std::vector<CaseResult> suite_distribution(int nmax, int rmax, const std::vector<long>& ps,
                                           const std::vector<std::string>& xs) {
    std::vector<CaseResult> cases;
    for (int n = 0; n <= nmax; ++n)
        for (int r = 1; r <= rmax; ++r)
            for (long p : ps)
                for (const auto& xs_str : xs)
                    cases.push_back({"distribution n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                         " p=" + std::to_string(p) + " x=" + xs_str,
                                     check_distribution(n, r, p, Rational::parse(xs_str))});
    return cases;
}

std::vector<CaseResult> suite_chi(int dmax, int nmax, int rmax) {
    std::vector<CaseResult> cases;
    for (int d = 1; d <= dmax; ++d) {
        DirichletGroup group(d);
        for (int i = 0; i < group.size(); ++i) {
            DirichletCharacter chi = group.character(i);
            for (int n = 0; n <= nmax; ++n)
                for (int r = 1; r <= rmax; ++r)
                    cases.push_back({"chi d=" + std::to_string(d) + " index=" + std::to_string(i) +
                                         " n=" + std::to_string(n) + " r=" + std::to_string(r),
                                     fe_gen_chi(n, r, chi) == fe_gen_chi_series(n, r, chi)});
        }
    }
    return cases;
}

std::vector<CaseResult> suite_weighted(int nmax) {
    std::vector<CaseResult> cases;
    const std::vector<std::vector<long>> weight_sets{{1}, {1, 2}, {1, 2, 3}};
    for (const auto& ws : weight_sets)
        for (int n = 0; n <= nmax; ++n) {
            URational series = fe_weighted_series(n, static_cast<int>(ws.size()), Rational(0), ws);
            URational umbral = fe_weighted_umbral(n, static_cast<int>(ws.size()), Rational(0), ws);
            std::string wname;
            for (long w : ws) wname += (wname.empty() ? "" : ",") + std::to_string(w);
            cases.push_back({"weighted routes n=" + std::to_string(n) + " k=(" + wname + ")",
                             series == umbral});
        }
    return cases;
}

std::vector<CaseResult> suite_zeta_shift(int terms) {
    std::vector<CaseResult> cases;
    TruncationPlan plan{terms};
    for (int r = 1; r <= 3; ++r)
        for (double u : {2.0, 3.0})
            for (double s : {2.0, 3.0})
                cases.push_back({"zeta-shift r=" + std::to_string(r) + " u=" + fmt17(u) + " s=" + fmt17(s),
                                 check_shift_identity(s, u, r, plan)});
    return cases;
}

std::vector<CaseResult> suite_moments(long p, long uval, int nmax) {
    std::vector<CaseResult> cases;
    for (int n = 0; n <= nmax; ++n) {
        int prev = -1;
        for (int N = 2; N <= 5; ++N) {
            const int prec = N + n + 4;
            PadicInt u(p, prec, BigInt(uval));
            UPoly g = UPoly::monomial(n, Rational(1));
            PadicInt level = euler_integral_poly({g, u, N});
            PadicInt closed = PadicInt::from_rational(moment_exact(n, Rational(uval)), p, prec);
            int agree = agree_digits(level, closed);
            bool pass = agree >= N - 2 && agree >= prev;
            prev = agree;
            cases.push_back({"moment n=" + std::to_string(n) + " N=" + std::to_string(N), pass,
                             json{{"agree_digits", agree}, {"required", N - 2}}});
        }
    }
    return cases;
}

std::vector<CaseResult> suite_witt(long p, long uval, int nmax, int rmax) {
    std::vector<CaseResult> cases;
    DirichletCharacter trivial = DirichletCharacter::principal(1);
    for (int n = 0; n <= nmax; ++n)
        for (int r = 1; r <= rmax; ++r) {
            int prev = -1;
            for (int N = 1; N <= 4; ++N) {
                PadicInt u(p, N + n + 4, BigInt(uval));
                WittResult w = witt_check(n, r, u, N, trivial);
                bool pass = w.agree_digits >= prev;
                if (n == 0) pass = pass && w.agree_digits >= u.precision();
                prev = w.agree_digits;
                cases.push_back({"witt n=" + std::to_string(n) + " r=" + std::to_string(r) +
                                     " N=" + std::to_string(N),
                                 pass, json{{"agree_digits", w.agree_digits}}});
            }
        }
    return cases;
}

std::vector<CaseResult> suite_zeta_coherence(long uval) {
    std::vector<CaseResult> cases;
    const int N = 3;
    for (long p : {3L, 5L})
        for (int r = 1; r <= 2; ++r)
            for (int k = 0; k <= 2; ++k) {
                PadicInt u(p, N + k + 4, BigInt(uval));
                PadicInt closed = padic_zeta_negk(k, r, u);
                PadicInt full = multi_moment(k, r, Rational(0), std::vector<long>(static_cast<std::size_t>(r), 1), u, N);
                PadicInt restricted = restricted_moment(k, r, u, N);
                int agree = agree_digits(closed, full - restricted);
                cases.push_back({"zeta-coherence p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                     " k=" + std::to_string(k),
                                 agree >= N - 2, json{{"agree_digits", agree}, {"required", N - 2}}});
            }
    return cases;
}

std::vector<CaseResult> kummer_cases(const KummerInstance& inst, bool allow_large) {
    long q = 1;
    for (int i = 0; i <= inst.level; ++i) q *= inst.p;
    if (q > 200 && !allow_large)
        throw invalid_input("p^{N+1} = " + std::to_string(q) +
                            " is a stress-mode size; rerun with --allow-large");
    std::vector<CaseResult> cases;
    inst.validate_basic();

    if (inst.n <= 8)
        cases.push_back({"sum_identity_exact n=" + std::to_string(inst.n),
                         check_sum_identity(inst, inst.n)});
    // identity evaluated at the given u (cheap even for large exponents)
    {
        Rational phi = phi_value(inst, inst.n);
        Rational sum(0);
        for (int l = 0; l <= inst.n; ++l) sum += t_value(inst, l, inst.n);
        cases.push_back({"sum_identity_at_u n=" + std::to_string(inst.n), phi == sum});
    }
    for (int which : {inst.n, inst.m}) {
        int v = phi_valuation(inst, which);
        cases.push_back({"integrality n=" + std::to_string(which), v >= 0, json{{"valuation", v}}});
    }
    cases.push_back({"congruence n=" + std::to_string(inst.n) + " m=" + std::to_string(inst.m),
                     check_congruence(inst)});
    for (int which : {inst.n, inst.m}) {
        std::vector<int> vs = t_valuations(inst, which);
        bool ok = true;
        json jvs = json::array();
        for (std::size_t l = 0; l < vs.size(); ++l) {
            jvs.push_back(vs[l]);
            if (l >= 1 && vs[l] < inst.level + 1) ok = false;
        }
        cases.push_back({"t_valuations n=" + std::to_string(which), ok, json{{"valuations", jvs}}});
    }
    {
        bool stable = true;
        int upto = std::min(inst.n, inst.m);
        for (int l = 0; l <= upto; ++l) {
            Rational diff = t_value(inst, l, inst.n) - t_value(inst, l, inst.m);
            if (valuation_or_cap(diff, inst.p) < inst.level + 1) stable = false;
        }
        cases.push_back({"t_stability", stable});
    }
    return cases;
}

json padic_json(const PadicInt& x) {
    json digits = json::array();
    for (long d : x.digits()) digits.push_back(d);
    return json{{"p", x.prime()}, {"precision", x.precision()}, {"residue", x.residue().get_str()},
                {"digits", digits}, {"value", x.to_string()}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and p-adic Frobenius-Euler computations"};
    app.require_subcommand(1);

    // ---- table
    auto* table = app.add_subcommand("table", "print H_n^{(r)} values (cached on disk)");
    int t_nmax = 0, t_r = 1;
    std::string t_at, t_format = "text", t_out, t_cache;
    table->add_option("--nmax", t_nmax, "largest n")->required();
    table->add_option("--r", t_r, "order r");
    table->add_option("--at", t_at, "evaluate at a rational u value");
    table->add_option("--format", t_format)->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--out", t_out, "write to file instead of stdout");
    table->add_option("--cache-dir", t_cache, "cache directory (FEULER_CACHE overrides)");

    // ---- check
    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string c_suite;
    check->add_option("suite", c_suite, "one of: reflection distribution chi weighted zeta-shift moments witt kummer zeta-coherence")
        ->required();
    int c_nmax = -1, c_rmax = -1, c_dmax = 4, c_N = 0, c_n = 3, c_m = 23, c_r = 1, c_terms = 60;
    long c_alpha = 0;
    std::vector<long> c_ps, c_k;
    std::vector<std::string> c_xs;
    std::string c_u = "2", c_format = "json", c_out;
    bool c_allow_large = false;
    check->add_option("--nmax", c_nmax);
    check->add_option("--rmax", c_rmax);
    check->add_option("--dmax", c_dmax);
    check->add_option("--p", c_ps, "prime(s)");
    check->add_option("--x", c_xs, "shift value(s), rationals");
    check->add_option("--u", c_u, "u value (rational integer)");
    check->add_option("--n", c_n);
    check->add_option("--m", c_m);
    check->add_option("--N", c_N, "Riemann/congruence level");
    check->add_option("--r", c_r);
    check->add_option("--k", c_k, "weight vector");
    check->add_option("--alpha", c_alpha);
    check->add_option("--M", c_terms, "terms per index for numeric zeta");
    check->add_flag("--allow-large", c_allow_large, "permit stress-mode sizes");
    check->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", c_out);

    // ---- padic
    auto* padic = app.add_subcommand("padic", "p-adic Euler integrals and moments");
    std::string p_op = "moment";
    long p_p = 5, p_u = 2;
    int p_n = 1, p_r = 1, p_N = 2, p_prec = 0;
    std::string p_w = "0", p_format = "json", p_out;
    std::vector<long> p_weights;
    padic->add_option("--op", p_op)->check(CLI::IsMember({"moment", "multi", "restricted", "zeta"}));
    padic->add_option("--p", p_p)->required();
    padic->add_option("--u", p_u, "u value (integer unit, u != 1 mod p)")->required();
    padic->add_option("--n", p_n, "moment exponent (or k for zeta)");
    padic->add_option("--r", p_r, "number of integration variables");
    padic->add_option("--N", p_N, "Riemann-sum level");
    padic->add_option("--w", p_w, "additive shift (rational)");
    padic->add_option("--weights", p_weights, "weights a_1..a_r");
    padic->add_option("--prec", p_prec, "working precision (default N+n+4)");
    padic->add_option("--format", p_format)->check(CLI::IsMember({"text", "json"}));
    padic->add_option("--out", p_out);

    // ---- kummer
    auto* kummer = app.add_subcommand("kummer", "Euler-factor decomposition and Kummer congruence report");
    KummerInstance k_inst;
    bool k_allow_large = false;
    std::string k_u = "2", k_format = "json", k_out;
    std::vector<long> k_k{1};
    kummer->add_option("--p", k_inst.p)->required();
    kummer->add_option("--r", k_inst.r);
    kummer->add_option("--k", k_k, "weight vector k_1..k_r");
    kummer->add_option("--alpha", k_inst.alpha);
    kummer->add_option("--n", k_inst.n)->required();
    kummer->add_option("--m", k_inst.m)->required();
    kummer->add_option("--N", k_inst.level);
    kummer->add_option("--u", k_u, "u value (rational integer unit)");
    kummer->add_flag("--allow-large", k_allow_large);
    kummer->add_option("--format", k_format)->check(CLI::IsMember({"text", "json"}));
    kummer->add_option("--out", k_out);

    // ---- zeta
    auto* zeta = app.add_subcommand("zeta", "numeric Euler / Euler-Barnes multiple zeta values");
    double z_s = 2.0, z_u = 2.0;
    int z_r = 1, z_M = 60;
    std::string z_x = "1", z_alpha, z_format = "json", z_out;
    std::vector<long> z_k;
    zeta->add_option("--s", z_s)->required();
    zeta->add_option("--u", z_u)->required();
    zeta->add_option("--r", z_r);
    zeta->add_option("--M", z_M, "terms per index");
    zeta->add_option("--x", z_x, "shift (rational), Euler form");
    zeta->add_option("--alpha", z_alpha, "shift (rational), Euler-Barnes form");
    zeta->add_option("--k", z_k, "Euler-Barnes weights k_1..k_r");
    zeta->add_option("--format", z_format)->check(CLI::IsMember({"text", "json"}));
    zeta->add_option("--out", z_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*table) return cmd_table(t_nmax, t_r, t_at, t_format, t_out, t_cache);

        if (*check) {
            std::vector<CaseResult> cases;
            if (c_suite == "reflection") {
                cases = suite_reflection(c_nmax < 0 ? 10 : c_nmax, c_rmax < 0 ? 3 : c_rmax,
                                         c_xs.empty() ? std::vector<std::string>{"0", "1/2", "1", "3"} : c_xs);
            } else if (c_suite == "distribution") {
                cases = suite_distribution(c_nmax < 0 ? 6 : c_nmax, c_rmax < 0 ? 2 : c_rmax,
                                           c_ps.empty() ? std::vector<long>{2, 3, 5} : c_ps,
                                           c_xs.empty() ? std::vector<std::string>{"0", "1", "1/2"} : c_xs);
            } else if (c_suite == "chi") {
                cases = suite_chi(c_dmax, c_nmax < 0 ? 5 : c_nmax, c_rmax < 0 ? 2 : c_rmax);
            } else if (c_suite == "weighted") {
                cases = suite_weighted(c_nmax < 0 ? 8 : c_nmax);
            } else if (c_suite == "zeta-shift") {
                cases = suite_zeta_shift(c_terms);
            } else if (c_suite == "moments") {
                cases = suite_moments(c_ps.empty() ? 5 : c_ps[0], std::stol(c_u), c_nmax < 0 ? 4 : c_nmax);
            } else if (c_suite == "witt") {
                cases = suite_witt(c_ps.empty() ? 5 : c_ps[0], std::stol(c_u), c_nmax < 0 ? 3 : c_nmax,
                                   c_rmax < 0 ? 2 : c_rmax);
            } else if (c_suite == "kummer") {
                KummerInstance inst;
                inst.p = c_ps.empty() ? 5 : c_ps[0];
                inst.r = c_r;
                inst.alpha = c_alpha;
                inst.kbar = c_k.empty() ? std::vector<long>(static_cast<std::size_t>(c_r), 1) : c_k;
                inst.u = Rational::parse(c_u);
                inst.level = c_N;
                inst.n = c_n;
                inst.m = c_m;
                cases = kummer_cases(inst, c_allow_large);
            } else if (c_suite == "zeta-coherence") {
                cases = suite_zeta_coherence(std::stol(c_u));
            } else {
                std::cerr << "unknown suite '" << c_suite << "'; see --help for the registry\n";
                return 2;
            }
            bool all = true;
            for (const auto& c : cases) all = all && c.pass;
            if (c_format == "text")
                emit_text(render_cases_text(cases), c_out);
            else
                emit_json(report("check", c_suite, cases), c_out);
            return all ? 0 : 1;
        }

        if (*padic) {
            const int prec = p_prec > 0 ? p_prec : p_N + p_n + 4;
            PadicInt u(p_p, prec, BigInt(p_u));
            PadicInt result(p_p, prec, BigInt(0));
            if (p_op == "moment") {
                result = euler_integral_poly({UPoly::monomial(p_n, Rational(1)), u, p_N});
            } else if (p_op == "multi") {
                std::vector<long> ws = p_weights.empty()
                                           ? std::vector<long>(static_cast<std::size_t>(p_r), 1)
                                           : p_weights;
                result = multi_moment(p_n, p_r, Rational::parse(p_w), ws, u, p_N);
            } else if (p_op == "restricted") {
                result = restricted_moment(p_n, p_r, u, p_N);
            } else {
                result = padic_zeta_negk(p_n, p_r, u);
            }
            json out = padic_json(result);
            out["schema"] = 1;
            out["command"] = "padic";
            out["op"] = p_op;
            if (p_format == "text")
                emit_text(result.to_string() + "\n", p_out);
            else
                emit_json(out, p_out);
            return 0;
        }

        if (*kummer) {
            k_inst.kbar = k_k;
            k_inst.u = Rational::parse(k_u);
            auto cases = kummer_cases(k_inst, k_allow_large);
            bool all = true;
            for (const auto& c : cases) all = all && c.pass;
            json instance{{"p", k_inst.p}, {"r", k_inst.r}, {"alpha", k_inst.alpha},
                          {"k", k_inst.kbar}, {"u", k_inst.u.to_string()},
                          {"N", k_inst.level}, {"n", k_inst.n}, {"m", k_inst.m}};
            json out = report("kummer", "", cases);
            out["instance"] = instance;
            out["phi_n"] = phi_value(k_inst, k_inst.n).to_string();
            out["phi_m"] = phi_value(k_inst, k_inst.m).to_string();
            if (k_format == "text")
                emit_text(render_cases_text(cases), k_out);
            else
                emit_json(out, k_out);
            return all ? 0 : 1;
        }

        if (*zeta) {
            TruncationPlan plan{z_M};
            ZetaValue v{};
            if (!z_alpha.empty() || !z_k.empty()) {
                std::vector<long> ks = z_k.empty() ? std::vector<long>(static_cast<std::size_t>(z_r), 1) : z_k;
                Rational alpha = z_alpha.empty() ? Rational(1) : Rational::parse(z_alpha);
                v = barnes_trunc(z_s, alpha, ks, z_u, z_r, plan);
            } else {
                v = mzeta_trunc(z_s, Rational::parse(z_x), z_u, z_r, plan);
            }
            if (z_format == "text") {
                emit_text("value = " + fmt17(v.value) + "\ntail_bound = " + fmt17(v.error) + "\n", z_out);
            } else {
                emit_json(json{{"schema", 1}, {"command", "zeta"}, {"value", fmt17(v.value)},
                               {"tail_bound", fmt17(v.error)}},
                          z_out);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
