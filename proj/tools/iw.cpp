#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "iw/distribution.hpp"
#include "iw/eisenstein.hpp"
#include "iw/suite/acceptance.hpp"
#include "iw/suite/io.hpp"

using namespace iw;
using io::json;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    long p = 3;
    std::string u;
    std::uint64_t seed = 1;
    std::string input = "-";
    std::string output;
    bool as_json = false;
};

json read_input(const Globals& g) {
    std::stringstream ss;
    if (g.input == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(g.input);
        if (!in) throw IoError("cannot read " + g.input);
        ss << in.rdbuf();
    }
    return io::parse(ss.str());
}

void print_text(std::ostream& os, const json& j, int indent) {
    std::string pad(indent, ' ');
    auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    auto flat = [](const json& x) {
        if (!x.is_array()) return false;
        for (auto& e : x)
            if (e.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !flat(v)) {
                os << pad << k << ":\n";
                print_text(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (flat(v) ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_structured() && !flat(v)) {
                os << pad << "-\n";
                print_text(os, v, indent + 2);
            } else {
                os << pad << "- " << (flat(v) ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

void emit(const Globals& g, const json& report) {
    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) throw IoError("cannot write " + g.output);
    }
    std::ostream& os = g.output.empty() ? std::cout : file;
    if (g.as_json)
        os << report.dump(2) << "\n";
    else
        print_text(os, report, 0);
}

std::vector<long> long_csv(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad integer list '" + s + "'");
        }
    }
    return out;
}

std::vector<Q> q_csv(const std::string& s) {
    std::vector<Q> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_q(tok));
    return out;
}

// "N" for the trivial character, "N:e1,e2,..." for generator exponents
DirichletCharacter character_arg(const std::string& s) {
    auto colon = s.find(':');
    auto N = long_csv(s.substr(0, colon));
    if (N.size() != 1 || N[0] < 1) throw ParseError("bad character '" + s + "'");
    if (colon == std::string::npos) return DirichletCharacter::trivial(N[0]);
    try {
        return DirichletCharacter::from_generators(N[0], long_csv(s.substr(colon + 1)));
    } catch (const InvalidCharacter& e) {
        throw ParseError(e.what());
    }
}

Q q_field(const json& j, const char* key, const std::string& override_value) {
    if (!override_value.empty()) return parse_q(override_value);
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return io::q_from_json(j[key]);
}

GammaQExpansion sample_family(std::uint64_t seed, long p, long top) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> C(-3, 3), J(-6, 6);
    GammaQExpansion G(p, top, 0);
    for (long n = 0; n <= top; ++n)
        for (int t = 0; t < 2; ++t)
            if (long c = C(rng)) G.coeffs[n][Q(1 + p * J(rng))] = {Cyclo(c)};
    return G;
}

// ---------------------------------------------------------------------------

json cmd_divide(const Globals& g, const std::string& gain) {
    json in = read_input(g);
    auto f = io::series_from_json(in.contains("f") ? in["f"] : json());
    auto gs = io::series_from_json(in.contains("g") ? in["g"] : json());
    Q r = q_field(in, "r", "");
    DivisionOptions opt;
    if (!gain.empty()) opt.gain = parse_q(gain);
    auto d = divide(gs, f, r, opt);
    return {{"r", io::to_json(r)},
            {"s", d.s},
            {"iterations", d.iterations},
            {"gamma", io::to_json(d.gamma)},
            {"certified", d.certified},
            {"quotient", io::to_json(d.quotient)},
            {"remainder", io::to_json(d.remainder)}};
}

json cmd_prepare(const Globals& g) {
    json in = read_input(g);
    auto f = io::series_from_json(in.contains("f") ? in["f"] : json());
    Q r = q_field(in, "r", "");
    auto pr = prepare(f, r);
    return {{"r", io::to_json(r)},
            {"roots", count_roots(f, r)},
            {"distinguished", io::to_json(pr.distinguished)},
            {"unit", io::to_json(pr.unit)}};
}

json cmd_newton(const Globals& g, long log_terms, const std::string& tmin, const std::string& tmax) {
    TruncSeries f;
    json in;
    if (log_terms > 0) {
        f = padic_log(g.p, log_terms);
    } else {
        in = read_input(g);
        f = io::series_from_json(in.contains("f") ? in["f"] : in);
    }
    Q lo = q_field(in, "t_min", tmin), hi = q_field(in, "t_max", tmax);
    auto nd = newton(f, lo, hi);
    return io::to_json(nd);
}

json cmd_omega(const Globals& g, const std::string& window, long level) {
    auto de = long_csv(window);
    if (de.size() != 2 || de[0] > de[1]) throw ParseError("window must be 'd,e' with d <= e");
    if (level < 0) throw ParseError("level must be non-negative");
    Q u = g.u.empty() ? default_u(g.p) : parse_q(g.u);
    QPoly om = omega(g.p, de[0], de[1], u, level);
    auto nd = newton(TruncSeries::polynomial(g.p, om), log_break(g.p, level + 1) / 2, log_break(g.p, 0));
    json table = json::array();
    for (long n = 0; n <= level; ++n) {
        auto cf = omega_valuation(g.p, de[0], de[1], level, n);
        table.push_back({{"n", n},
                         {"t", io::to_json(log_break(g.p, n))},
                         {"degree", cf.degree.get_str()},
                         {"value", io::to_json(cf.value)}});
    }
    return {{"p", g.p},
            {"window", de},
            {"u", io::to_json(u)},
            {"level", level},
            {"degree", static_cast<long>(om.size()) - 1},
            {"separable", separable(om)},
            {"poly", io::poly_to_json(om)},
            {"newton_table", table},
            {"newton", io::to_json(nd)}};
}

json cmd_reconstruct(const Globals& g) {
    auto s = io::system_from_json(read_input(g));
    bool ok = check_compatibility(s);
    json out = {{"compatible", ok}, {"integral", is_integral(s)}, {"denom_bound", io::to_json(s.denom_bound)}};
    if (!ok) return out;
    auto f = reconstruct(s);
    out["vH"] = io::to_json(vH(f, s.growth));
    out["series"] = io::to_json(f);
    return out;
}

json cmd_lift(const Globals& g, long n_override) {
    auto s = io::system_from_json(read_input(g));
    auto comps = extract_components(s);
    long n = n_override >= 0 ? n_override : minimal_slack(comps);
    auto lifted = lift_components(comps, n);
    return {{"n", n},
            {"c", c_constant(s.window).get_str()},
            {"denom_bound", io::to_json(lifted.denom_bound)},
            {"system", io::to_json(lifted)}};
}

json cmd_vanish(const Globals& g, long max_level) {
    json in = read_input(g);
    auto f = io::series_from_json(in.contains("f") ? in["f"] : json());
    auto h = io::growth_from_json(in.contains("growth") ? in["growth"] : json());
    std::vector<long> d(h.k(), 0);
    if (in.contains("d")) {
        d.clear();
        for (auto& x : in["d"]) {
            if (!x.is_number_integer()) throw ParseError("d must hold integers");
            d.push_back(x.get<long>());
        }
    }
    if (static_cast<int>(d.size()) != h.k()) throw ParseError("d and growth disagree on the number of variables");
    return {{"vanishes", vanishing_test(f, h, d, max_level)},
            {"depth", vanishing_depth(f, h, d, max_level)},
            {"max_level", max_level}};
}

json cmd_moments(const Globals& g) {
    auto s = io::system_from_json(read_input(g));
    auto mu = system_to_distribution(s);
    return {{"additive", check_additivity(mu)}, {"vhde", io::to_json(vhde(mu))}, {"table", io::to_json(mu)}};
}

json cmd_interp(const Globals& g, const std::string& weight, const std::string& level, const std::string& twist) {
    auto mu = io::distribution_from_json(read_input(g));
    std::vector<Specialization> ks;
    if (weight.empty() && level.empty() && twist.empty()) {
        ks = specializations(mu.window, mu.M);
    } else {
        Specialization k{long_csv(weight), long_csv(level), long_csv(twist)};
        std::size_t dim = mu.M.size();
        if (k.weight.size() != dim || k.level.size() != dim || k.twist.size() != dim)
            throw ParseError("weight, level and twist need one entry per variable");
        ks.push_back(k);
    }
    json rows = json::array();
    for (auto& k : ks)
        rows.push_back({{"weight", k.weight}, {"level", k.level}, {"twist", k.twist}, {"value", io::to_json(integrate(mu, k))}});
    return {{"values", rows}};
}

json cmd_convolve(const Globals& g) {
    json in = read_input(g);
    auto a = io::distribution_from_json(in.contains("a") ? in["a"] : json());
    auto b = io::distribution_from_json(in.contains("b") ? in["b"] : json());
    auto c = convolve(a, b);
    return {{"vhde", io::to_json(vhde(c))}, {"table", io::to_json(c)}};
}

json cmd_qexp(const std::string& kind, long k, long r, long N, long a, long b, const std::string& psi1,
              const std::string& psi2, long Qt) {
    if (kind == "F") return io::to_json(eisen_F_qexp(k, r, character_arg(psi1), character_arg(psi2), Qt));
    if (kind == "tilde") return io::to_json(eisen_tilde_qexp(k, N, r, a, b, Qt));
    throw ParseError("kind must be F or tilde");
}

json cmd_verify_interpolation(const Globals& g, const std::string& datum, std::array<long, 2> i, long m1, long t2, long m2,
                              long Qt, int& failures) {
    EisensteinDatum D;
    if (!datum.empty()) {
        Globals gi = g;
        gi.input = datum;
        D = io::datum_from_json(read_input(gi));
    } else {
        D.p = g.p;
        D.psi = DirichletCharacter::teichmuller(g.p);
        D.xi = DirichletCharacter::trivial(g.p);
        D.G = sample_family(g.seed, g.p, g.p * Qt + g.p - 1);
    }
    json rows = json::array();
    for (auto& phi1 : DirichletCharacter::all(zpow(Z(D.p), m1 + 1).get_si())) {
        auto s = interpolation_sides(D, i, phi1, m1, t2, m2, Qt);
        bool ok = s.lhs == s.rhs;
        failures += !ok;
        rows.push_back({{"phi1", io::to_json(phi1)}, {"equal", ok}, {"rhs_zero", s.rhs == QExpansion(Qt)}});
    }
    return {{"seed", g.seed}, {"weights", i}, {"m1", m1}, {"t2", t2}, {"m2", m2}, {"Q", Qt}, {"datum", io::to_json(D)},
            {"checks", rows}};
}

json cmd_verify_tilde(long N, long k, long r, long Qt, int& failures) {
    auto chars = DirichletCharacter::all(N);
    std::map<std::pair<long, long>, QExpansion> E;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            if (N == 1 || (gcd_l(a, N) == 1 && gcd_l(b, N) == 1)) E[{a, b}] = eisen_tilde_qexp(k, N, r, a, b, Qt);
    json rows = json::array();
    for (auto& p1 : chars)
        for (auto& p2 : chars) {
            QExpansion lhs(Qt);
            for (auto& [ab, e] : E) lhs = add(lhs, scale(e, p1(ab.first) * p2(ab.second)));
            bool ok = lhs == scale(eisen_F_qexp(k, r, p2, p1, Qt), Cyclo(2));
            failures += !ok;
            rows.push_back({{"psi1", io::to_json(p1)}, {"psi2", io::to_json(p2)}, {"equal", ok}});
        }
    return {{"N", N}, {"k", k}, {"r", r}, {"Q", Qt}, {"checks", rows}};
}

json cmd_constants(const Globals& g, const std::string& hs, const std::string& windows) {
    json rows = json::array();
    std::vector<std::pair<long, long>> ws;
    std::stringstream ss(windows);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto de = long_csv(tok);
        if (de.size() != 2 || de[0] > de[1]) throw ParseError("window must be 'd,e' with d <= e");
        ws.push_back({de[0], de[1]});
    }
    for (const Q& h : q_csv(hs)) {
        if (h < 0) throw ParseError("h must be non-negative");
        auto al = alpha_h(h, g.p);
        json row = {{"h", io::to_json(h)},
                    {"alpha_h", {{"lo", io::to_json(al.lo)}, {"hi", io::to_json(al.hi)}}},
                    {"beta_h", io::to_json(beta_h(h, g.p))},
                    {"beta", beta_window(h, g.p).get_str()}};
        json per = json::array();
        for (auto [d, e] : ws)
            per.push_back({{"window", {d, e}},
                           {"alpha", alpha_window(h, d, e, g.p).get_str()},
                           {"c", c_window(d, e, g.p).get_str()}});
        row["windows"] = per;
        rows.push_back(row);
    }
    return {{"p", g.p}, {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-adic power series, admissible distributions and Eisenstein identities"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--p", g.p, "prime")->envname("IW_PRIME")->capture_default_str();
    app.add_option("--u", g.u, "topological generator override (rational)");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("-i,--input", g.input, "JSON input file, '-' for stdin")->capture_default_str();
    app.add_option("-o,--output", g.output, "write the report here instead of stdout");
    app.add_flag("--json", g.as_json, "emit JSON");

    std::function<json()> action;
    int failures = 0;

    std::string gain;
    auto* divide_cmd = app.add_subcommand("divide", "Weierstrass division of g by f at radius r");
    divide_cmd->add_option("--gain", gain, "extra weighted precision for the quotient");
    divide_cmd->callback([&] { action = [&] { return cmd_divide(g, gain); }; });

    app.add_subcommand("prepare", "Weierstrass preparation of f at radius r")->callback([&] {
        action = [&] { return cmd_prepare(g); };
    });

    long log_terms = 0;
    std::string tmin, tmax;
    auto* newton_cmd = app.add_subcommand("newton", "Newton data of a series on [t_min, t_max]");
    newton_cmd->add_option("--log", log_terms, "use log(1+X) with this many terms");
    newton_cmd->add_option("--t-min", tmin);
    newton_cmd->add_option("--t-max", tmax);
    newton_cmd->callback([&] { action = [&] { return cmd_newton(g, log_terms, tmin, tmax); }; });

    std::string window;
    long level = 0;
    auto* omega_cmd = app.add_subcommand("omega", "Omega polynomial of a window and its Newton table");
    omega_cmd->add_option("--window", window, "d,e")->required();
    omega_cmd->add_option("--level", level)->required();
    omega_cmd->callback([&] { action = [&] { return cmd_omega(g, window, level); }; });

    app.add_subcommand("reconstruct", "series from a compatible system")->callback([&] {
        action = [&] { return cmd_reconstruct(g); };
    });

    long slack = -1;
    auto* lift_cmd = app.add_subcommand("lift", "lift the component systems of a window");
    lift_cmd->add_option("--n", slack, "slack; the minimal one by default");
    lift_cmd->callback([&] { action = [&] { return cmd_lift(g, slack); }; });

    long max_level = 4;
    auto* vanish_cmd = app.add_subcommand("vanish", "vanishing test against Omega multiples");
    vanish_cmd->add_option("--max-level", max_level)->capture_default_str();
    vanish_cmd->callback([&] { action = [&] { return cmd_vanish(g, max_level); }; });

    app.add_subcommand("moments", "moment table of a system")->callback([&] { action = [&] { return cmd_moments(g); }; });

    std::string weight, klevel, twist;
    auto* interp_cmd = app.add_subcommand("interp", "integrate specializations against a moment table");
    interp_cmd->add_option("--weight", weight);
    interp_cmd->add_option("--level", klevel);
    interp_cmd->add_option("--twist", twist);
    interp_cmd->callback([&] { action = [&] { return cmd_interp(g, weight, klevel, twist); }; });

    app.add_subcommand("convolve", "convolution of two moment tables")->callback([&] {
        action = [&] { return cmd_convolve(g); };
    });

    std::string kind = "F", psi1 = "1", psi2 = "1";
    long k = 2, r = 0, N = 1, a = 1, b = 1, Qt = 20;
    auto* eis = app.add_subcommand("eisenstein", "Eisenstein q-expansions");
    eis->require_subcommand(1);
    auto* qexp = eis->add_subcommand("qexp", "q-expansion of F or tilde E");
    qexp->add_option("--kind", kind, "F or tilde")->capture_default_str();
    qexp->add_option("--k", k)->capture_default_str();
    qexp->add_option("--r", r)->capture_default_str();
    qexp->add_option("--N", N)->capture_default_str();
    qexp->add_option("--a", a)->capture_default_str();
    qexp->add_option("--b", b)->capture_default_str();
    qexp->add_option("--psi1", psi1, "N or N:e1,e2,...")->capture_default_str();
    qexp->add_option("--psi2", psi2)->capture_default_str();
    qexp->add_option("--Q", Qt)->capture_default_str();
    qexp->callback([&] { action = [&] { return cmd_qexp(kind, k, r, N, a, b, psi1, psi2, Qt); }; });

    auto* verify = app.add_subcommand("verify", "check an identity on explicit data");
    verify->require_subcommand(1);
    std::string datum;
    std::array<long, 2> wi{1, 2};
    long m1 = 0, t2 = 0, m2 = 1, Qi = 10;
    auto* vi = verify->add_subcommand("interpolation", "interpolation identity for a two-variable family");
    vi->add_option("--datum", datum, "datum JSON; a sampled family otherwise");
    vi->add_option("--i1", wi[0])->capture_default_str();
    vi->add_option("--i2", wi[1])->capture_default_str();
    vi->add_option("--m1", m1)->capture_default_str();
    vi->add_option("--t2", t2)->capture_default_str();
    vi->add_option("--m2", m2)->capture_default_str();
    vi->add_option("--Q", Qi)->capture_default_str();
    vi->callback([&] { action = [&] { return cmd_verify_interpolation(g, datum, wi, m1, t2, m2, Qi, failures); }; });

    long tN = 3, tk = 3, tr = 0, tQ = 20;
    auto* vt = verify->add_subcommand("tilde-f", "character sums of tilde E against F");
    vt->add_option("--N", tN)->capture_default_str();
    vt->add_option("--k", tk)->capture_default_str();
    vt->add_option("--r", tr)->capture_default_str();
    vt->add_option("--Q", tQ)->capture_default_str();
    vt->callback([&] { action = [&] { return cmd_verify_tilde(tN, tk, tr, tQ, failures); }; });

    std::string hs = "0,1", ws = "0,2";
    auto* consts = app.add_subcommand("constants", "alpha, beta and c constants");
    consts->add_option("--growth", hs, "comma separated growth exponents h")->capture_default_str();
    consts->add_option("--windows", ws, "windows 'd,e;d,e'")->capture_default_str();
    consts->callback([&] { action = [&] { return cmd_constants(g, hs, ws); }; });

    std::vector<int> only;
    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    self->add_option("--only", only, "criterion ids");
    self->callback([&] {
        action = [&] {
            suite::SuiteConfig cfg{g.seed, only};
            json rows = json::array();
            for (auto& res : suite::run_suite(cfg, [&](const suite::CriterionResult& res) {
                     if (!g.as_json)
                         std::cerr << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << " " << res.name << "\n";
                 })) {
                failures += !res.pass;
                rows.push_back(io::to_json(res));
            }
            return json{{"p", g.p}, {"seed", g.seed}, {"criteria", rows}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (!is_prime(g.p)) throw ParseError("p = " + std::to_string(g.p) + " is not prime");
        emit(g, action());
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return failures ? 1 : 0;
}
