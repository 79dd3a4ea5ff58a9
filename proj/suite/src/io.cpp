#include "iw/suite/io.hpp"

namespace iw::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

long as_long(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

std::vector<long> long_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<long> out;
    for (auto& x : j) out.push_back(as_long(x, what));
    return out;
}

std::vector<Q> q_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Q> out;
    for (auto& x : j) out.push_back(q_from_json(x));
    return out;
}

json q_list_json(const std::vector<Q>& v) {
    json a = json::array();
    for (auto& x : v) a.push_back(to_json(x));
    return a;
}

json xpoly_json(const XPoly& c) {
    json poly = json::array();
    for (auto& x : c) poly.push_back(to_json(x));
    return poly;
}

XPoly xpoly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("poly must be an array");
    XPoly c;
    for (auto& x : j) c.push_back(cyclo_from_json(x));
    xpoly::trim(c);
    return c;
}

}  // namespace

json to_json(const Q& x) { return q_str(x); }

Q q_from_json(const json& j) {
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_q(j.get<std::string>());
    throw ParseError("rational must be a string or an integer");
}

json to_json(const Val& v) {
    if (v.is_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return to_json(v.value());
}

Val val_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Val::inf();
    if (j.is_string() && j.get<std::string>() == "-inf") return Val::neg_inf();
    return Val(q_from_json(j));
}

json to_json(const Cyclo& x) {
    if (x.is_rational()) return to_json(x.rational());
    return {{"conductor", x.conductor()}, {"coords", q_list_json(x.coords())}};
}

Cyclo cyclo_from_json(const json& j) {
    if (!j.is_object()) return Cyclo(q_from_json(j));
    long n = as_long(field(j, "conductor"), "conductor");
    if (n < 1) throw ParseError("conductor must be positive");
    return Cyclo(n, q_list(field(j, "coords"), "coords"));
}

json poly_to_json(const QPoly& a) { return q_list_json(a); }

QPoly poly_from_json(const json& j) { return q_list(j, "polynomial"); }

json to_json(const TruncSeries& f) {
    json c = json::array();
    for (auto& [n, v] : f.coeffs) c.push_back({{"n", n}, {"c", to_json(v)}});
    return {{"p", f.p},
            {"vars", f.vars},
            {"trunc", f.trunc},
            {"rho", q_list_json(f.rho)},
            {"prec", to_json(f.prec)},
            {"tail_floor", to_json(f.tail_floor)},
            {"coeffs", c}};
}

TruncSeries series_from_json(const json& j) {
    long p = as_long(field(j, "p"), "p");
    if (!is_prime(p)) throw ParseError("p must be prime");
    int vars = j.contains("vars") ? static_cast<int>(as_long(j["vars"], "vars")) : 1;
    if (vars < 1) throw ParseError("vars must be positive");
    TruncSeries f(p, vars);
    const json& cs = field(j, "coeffs");
    if (!cs.is_array()) throw ParseError("coeffs must be an array");
    Index top(vars, 0);
    for (auto& e : cs) {
        Index n = long_list(field(e, "n"), "n");
        if (static_cast<int>(n.size()) != vars) throw ParseError("index length differs from vars");
        for (int i = 0; i < vars; ++i) {
            if (n[i] < 0) throw ParseError("negative exponent");
            top[i] = std::max(top[i], n[i] + 1);
        }
        Q c = q_from_json(field(e, "c"));
        if (c != 0) f.coeffs[n] = c;
    }
    f.trunc = j.contains("trunc") ? long_list(j["trunc"], "trunc") : top;
    if (static_cast<int>(f.trunc.size()) != vars) throw ParseError("trunc length differs from vars");
    for (auto& [n, c] : f.coeffs)
        if (!f.in_box(n)) throw ParseError("coefficient outside the truncation box");
    f.rho = j.contains("rho") ? q_list(j["rho"], "rho") : std::vector<Q>(vars, Q(0));
    if (static_cast<int>(f.rho.size()) != vars) throw ParseError("rho length differs from vars");
    if (j.contains("prec")) f.prec = val_from_json(j["prec"]);
    if (j.contains("tail_floor")) f.tail_floor = val_from_json(j["tail_floor"]);
    return f;
}

json to_json(const Window& w) { return {{"p", w.p}, {"d", w.d}, {"e", w.e}, {"u", q_list_json(w.u)}}; }

Window window_from_json(const json& j) {
    long p = as_long(field(j, "p"), "p");
    auto d = long_list(field(j, "d"), "d");
    auto e = long_list(field(j, "e"), "e");
    try {
        if (j.contains("u")) return Window(p, d, e, q_list(j["u"], "u"));
        return Window(p, d, e);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("window: ") + ex.what());
    }
}

json to_json(const GrowthClass& h) { return q_list_json(h.h); }

GrowthClass growth_from_json(const json& j) { return GrowthClass(q_list(j, "growth")); }

json to_json(const WindowSystem& s) {
    json lv = json::array();
    for (auto& [m, f] : s.levels) lv.push_back({{"m", m}, {"remainder", to_json(f)}});
    return {{"window", to_json(s.window)}, {"growth", to_json(s.growth)}, {"M", s.M}, {"levels", lv}};
}

WindowSystem system_from_json(const json& j) {
    WindowSystem s;
    s.window = window_from_json(field(j, "window"));
    s.growth = growth_from_json(field(j, "growth"));
    if (s.growth.k() != s.window.k()) throw ParseError("window and growth disagree on the number of variables");
    const json& lv = field(j, "levels");
    if (!lv.is_array()) throw ParseError("levels must be an array");
    std::size_t k = s.window.k();
    Level top(k, 0);
    for (auto& e : lv) {
        Level m = long_list(field(e, "m"), "m");
        if (m.size() != k) throw ParseError("level length differs from the window");
        for (std::size_t i = 0; i < k; ++i) top[i] = std::max(top[i], m[i]);
        s.levels[m] = series_from_json(field(e, "remainder"));
    }
    s.M = j.contains("M") ? long_list(j["M"], "M") : top;
    if (s.M.size() != k) throw ParseError("M length differs from the window");
    for (auto& [m, f] : s.levels)
        for (std::size_t i = 0; i < k; ++i)
            if (m[i] < 0 || m[i] > s.M[i]) throw ParseError("level outside [0, M]");
    s.refresh_bound();
    return s;
}

json to_json(const Distribution& mu) {
    json mo = json::array();
    for (auto& [key, v] : mu.raw) mo.push_back({{"m", key.m}, {"coset", key.a}, {"i", key.j}, {"value", to_json(v)}});
    return {{"window", to_json(mu.window)}, {"growth", to_json(mu.growth)}, {"level", mu.M}, {"entries", mo}};
}

Distribution distribution_from_json(const json& j) {
    Distribution mu;
    mu.window = window_from_json(field(j, "window"));
    mu.growth = growth_from_json(field(j, "growth"));
    mu.M = long_list(field(j, "level"), "level");
    if (mu.growth.k() != mu.window.k() || static_cast<int>(mu.M.size()) != mu.window.k())
        throw ParseError("window, growth and M disagree on the number of variables");
    const json& mo = field(j, "entries");
    if (!mo.is_array()) throw ParseError("entries must be an array");
    for (auto& e : mo) {
        MomentKey key{long_list(field(e, "m"), "m"), long_list(field(e, "coset"), "coset"), long_list(field(e, "i"), "i")};
        if (key.m.size() != mu.M.size() || key.a.size() != mu.M.size() || key.j.size() != mu.M.size())
            throw ParseError("entry index length differs from level");
        mu.raw[key] = q_from_json(field(e, "value"));
    }
    return mu;
}

json to_json(const QExpansion& h) {
    json cs = json::array();
    for (long n = 0; n <= h.Q; ++n) {
        if (h.coeffs[n].empty()) continue;
        json poly = json::array();
        for (auto& c : h.coeffs[n]) poly.push_back(to_json(c));
        cs.push_back({{"n", n}, {"poly", poly}});
    }
    return {{"Q", h.Q}, {"order", h.order}, {"coeffs", cs}};
}

QExpansion qexp_from_json(const json& j) {
    long Qt = as_long(field(j, "Q"), "Q");
    if (Qt < 0) throw ParseError("Q must be non-negative");
    QExpansion h(Qt, j.contains("order") ? as_long(j["order"], "order") : 0);
    const json& cs = field(j, "coeffs");
    if (!cs.is_array()) throw ParseError("coeffs must be an array");
    for (auto& e : cs) {
        long n = as_long(field(e, "n"), "n");
        if (n < 0 || n > Qt) throw ParseError("coefficient index outside [0, Q]");
        h.coeffs[n] = xpoly_from_json(field(e, "poly"));
    }
    return h;
}

json to_json(const DirichletCharacter& chi) {
    return {{"modulus", chi.modulus()}, {"order", chi.order()}, {"table", chi.table()}};
}

DirichletCharacter character_from_json(const json& j) {
    long N = as_long(field(j, "modulus"), "modulus");
    if (N < 1) throw ParseError("modulus must be positive");
    try {
        if (j.contains("generators")) return DirichletCharacter::from_generators(N, long_list(j["generators"], "generators"));
        return DirichletCharacter::from_table(N, as_long(field(j, "order"), "order"), long_list(field(j, "table"), "table"));
    } catch (const InvalidCharacter& e) {
        throw ParseError(e.what());
    }
}

json to_json(const GammaQExpansion& h) {
    json cs = json::array();
    for (long n = 0; n <= h.Q; ++n) {
        if (h.coeffs[n].empty()) continue;
        json pts = json::array();
        for (auto& [x, c] : h.coeffs[n]) pts.push_back({{"x", to_json(x)}, {"poly", xpoly_json(c)}});
        cs.push_back({{"n", n}, {"points", pts}});
    }
    return {{"p", h.p}, {"Q", h.Q}, {"order", h.order}, {"coeffs", cs}};
}

GammaQExpansion family_from_json(const json& j) {
    long p = as_long(field(j, "p"), "p");
    if (!is_prime(p)) throw ParseError("p must be prime");
    long Qt = as_long(field(j, "Q"), "Q");
    if (Qt < 0) throw ParseError("Q must be non-negative");
    GammaQExpansion h(p, Qt, j.contains("order") ? as_long(j["order"], "order") : 0);
    const json& cs = field(j, "coeffs");
    if (!cs.is_array()) throw ParseError("coeffs must be an array");
    for (auto& e : cs) {
        long n = as_long(field(e, "n"), "n");
        if (n < 0 || n > Qt) throw ParseError("coefficient index outside [0, Q]");
        const json& pts = field(e, "points");
        if (!pts.is_array()) throw ParseError("points must be an array");
        for (auto& pt : pts) {
            Q x = q_from_json(field(pt, "x"));
            if (ordp(x, p) != Val(0)) throw ParseError("family points must be p-adic units");
            auto c = xpoly_from_json(field(pt, "poly"));
            if (!c.empty()) h.coeffs[n][x] = c;
        }
    }
    return h;
}

json to_json(const EisensteinDatum& D) {
    return {{"p", D.p},           {"k", D.k},   {"M", D.M},           {"psi", to_json(D.psi)},
            {"m_psi", D.m_psi}, {"xi", to_json(D.xi)}, {"G", to_json(D.G)}};
}

EisensteinDatum datum_from_json(const json& j) {
    EisensteinDatum D;
    D.p = as_long(field(j, "p"), "p");
    if (!is_prime(D.p)) throw ParseError("p must be prime");
    D.k = as_long(field(j, "k"), "k");
    D.M = as_long(field(j, "M"), "M");
    if (D.M < 1 || D.M % D.p == 0) throw ParseError("M must be positive and prime to p");
    D.psi = character_from_json(field(j, "psi"));
    D.m_psi = j.contains("m_psi") ? as_long(j["m_psi"], "m_psi") : 0;
    D.xi = character_from_json(field(j, "xi"));
    D.G = family_from_json(field(j, "G"));
    if (D.G.p != D.p) throw ParseError("family prime differs from the datum prime");
    return D;
}

json to_json(const ValuationReport& v) {
    return {{"retained_min", to_json(v.retained_min)},
            {"tail_bound", to_json(v.tail_bound)},
            {"lower", to_json(v.lower())},
            {"exact", v.exact}};
}

json to_json(const NewtonData& nd) {
    json segs = json::array();
    for (std::size_t i = 0; i < nd.break_points.size(); ++i)
        segs.push_back({{"t", to_json(nd.break_points[i])},
                        {"degree", nd.degree_at(nd.break_points[i])},
                        {"value", to_json(nd.segment_values[i])}});
    json degs = json::array();
    for (long d : nd.segment_degrees) degs.push_back(d);
    return {{"t_min", to_json(nd.t_min)}, {"t_max", to_json(nd.t_max)}, {"breaks", segs}, {"segment_degrees", degs}};
}

json to_json(const suite::CriterionResult& r) {
    return {{"id", r.id},
            {"name", r.name},
            {"status", r.pass ? "pass" : "fail"},
            {"checks", r.checks},
            {"failures", r.failures},
            {"witnesses", r.witnesses},
            {"seconds", r.seconds}};
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace iw::io
