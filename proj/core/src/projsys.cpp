#include "iw/projsys.hpp"

#include <mutex>
#include <tuple>

namespace iw {

const TruncSeries& WindowSystem::at(const Level& m) const {
    auto it = levels.find(m);
    if (it == levels.end()) throw InsufficientLevels("level not stored");
    return it->second;
}

void WindowSystem::refresh_bound() {
    denom_bound = Val::inf();
    std::vector<Q> zero(window.k(), Q(0));
    for (auto& [m, s] : levels) {
        Q hm = 0;
        for (int i = 0; i < window.k(); ++i) hm += growth.h[i] * Q(m[i]);
        denom_bound = vmin(denom_bound, vr(s, zero).lower() + Val(hm));
    }
}

void for_each_level(const Level& M, const std::function<void(const Level&)>& fn) {
    Level m(M.size(), 0);
    while (true) {
        fn(m);
        std::size_t i = 0;
        while (i < M.size() && ++m[i] > M[i]) m[i++] = 0;
        if (i == M.size()) break;
    }
}

void for_each_exponent(const std::vector<long>& d, const std::vector<long>& e,
                       const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> i = d;
    while (true) {
        fn(i);
        std::size_t t = 0;
        while (t < d.size() && ++i[t] > e[t]) i[t] = d[t], ++t;
        if (t == d.size()) break;
    }
}

namespace {

std::vector<TruncSeries> omega_divisors(const Window& w, const Level& m) {
    return omega_poly(w, m).series();
}

void check_width(const Window& w, const GrowthClass& h) {
    for (int i = 0; i < w.k(); ++i)
        if (Z(w.e[i] - w.d[i]) < floor_q(h.h[i])) throw WindowTooNarrow("e - d < floor(h)");
}

}  // namespace

TruncSeries reduce_mod_omega(const TruncSeries& f, const Window& w, const Level& m) {
    if (f.vars != w.k()) throw IncompatibleShapes("series and window sizes differ");
    std::vector<Q> r(w.k(), Q(0));
    return multi_divide(f, omega_divisors(w, m), r).remainder;
}

WindowSystem system_from_series(const TruncSeries& f, const GrowthClass& h, const Window& w, const Level& M) {
    if (h.k() != w.k() || static_cast<int>(M.size()) != w.k()) throw IncompatibleShapes("size mismatch");
    WindowSystem s;
    s.window = w;
    s.growth = h;
    s.M = M;
    for_each_level(M, [&](const Level& m) { s.levels[m] = reduce_mod_omega(f, w, m); });
    s.refresh_bound();
    return s;
}

bool check_compatibility(const WindowSystem& s) {
    bool ok = true;
    for_each_level(s.M, [&](const Level& m) {
        if (!ok) return;
        for (int i = 0; i < s.window.k(); ++i) {
            if (m[i] == 0) continue;
            Level lo = m;
            --lo[i];
            TruncSeries diff = sub(s.at(m), s.at(lo));
            if (!divisibility_test(diff, omega_divisors(s.window, lo), std::vector<Q>(s.window.k(), Q(0)))) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

bool is_integral(const WindowSystem& s) { return s.denom_bound >= Val(0); }

WindowSystem scale(const WindowSystem& s, const Q& c) {
    WindowSystem out = s;
    for (auto& [m, r] : out.levels) r = scale(r, c);
    out.refresh_bound();
    return out;
}

TruncSeries reconstruct(const WindowSystem& s) {
    check_width(s.window, s.growth);
    if (s.levels.empty()) throw InsufficientLevels("empty system");
    return s.at(s.M);
}

long vanishing_depth(const TruncSeries& f, const GrowthClass& h, const std::vector<long>& d, long maxlevel) {
    int k = f.vars;
    std::vector<long> e(k);
    for (int i = 0; i < k; ++i) e[i] = d[i] + floor_q(h.h[i]).get_si();
    Window w(f.p, d, e);
    for (long m = 0; m <= maxlevel; ++m) {
        // the diagonal level dominates every level with max component m
        Level lv(k, m);
        TruncSeries r = reduce_mod_omega(f, w, lv);
        bool zero = true;
        for (auto& [n, c] : r.coeffs) {
            (void)n;
            if (r.prec.is_inf() || ordp(c, f.p) < r.prec) zero = false;
        }
        if (!zero) return m;
    }
    return -1;
}

bool vanishing_test(const TruncSeries& f, const GrowthClass& h, const std::vector<long>& d, long maxlevel) {
    return vanishing_depth(f, h, d, maxlevel) < 0;
}

WindowSystem project_window(const WindowSystem& s, const std::vector<long>& b, const std::vector<long>& c) {
    WindowSystem out;
    out.window = s.window.sub(b, c);
    out.growth = s.growth;
    out.M = s.M;
    for (auto& [m, r] : s.levels) out.levels[m] = reduce_mod_omega(r, out.window, m);
    out.refresh_bound();
    return out;
}

ComponentFamily extract_components(const WindowSystem& s) {
    ComponentFamily c;
    c.window = s.window;
    c.growth = s.growth;
    c.M = s.M;
    for_each_exponent(s.window.d, s.window.e, [&](const std::vector<long>& i) { c.comps[i] = project_window(s, i, i); });
    return c;
}

TruncSeries theta(const ComponentFamily& c, const std::vector<long>& j, const Level& m) {
    const Window& w = c.window;
    int k = w.k();
    TruncSeries acc = TruncSeries::constant(w.p, k, Q(0));
    for_each_exponent(w.d, j, [&](const std::vector<long>& i) {
        Z coef = 1;
        int sign = 1;
        for (int t = 0; t < k; ++t) {
            coef *= binom(j[t] - w.d[t], i[t] - w.d[t]);
            if ((j[t] - i[t]) % 2) sign = -sign;
        }
        acc = add(acc, scale(c.comps.at(i).at(m), Q(coef * sign)));
    });
    return acc;
}

namespace {

// v_0(theta_j at m) + <m, h - (j - d)>
Val theta_margin(const ComponentFamily& c, const std::vector<long>& j, const Level& m) {
    const Window& w = c.window;
    TruncSeries th = theta(c, j, m);
    Q shift = 0;
    for (int t = 0; t < w.k(); ++t) shift += Q(m[t]) * (c.growth.h[t] - Q(j[t] - w.d[t]));
    return vr(th, std::vector<Q>(w.k(), Q(0))).lower() + Val(shift);
}

std::string level_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// E_i with E_i = 1 mod Omega^{[i]} and 0 mod Omega^{[j]} for j != i, reduced mod Omega^{[d,e]}
const std::vector<QPoly>& idempotents(long p, long d, long e, const Q& u, long m) {
    static std::mutex mu;
    static std::map<std::tuple<long, long, long, std::string, long>, std::vector<QPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, d, e, u.get_str(), m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QPoly full = omega(p, d, e, u, m);
    std::vector<QPoly> out;
    for (long i = d; i <= e; ++i) {
        QPoly oi = omega(p, i, i, u, m);
        QPoly rest, r;
        poly::divmod(full, oi, rest, r);
        QPoly inv = poly::inv_mod(rest, oi);
        out.push_back(poly::rem(poly::mul(rest, inv), full));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

TruncSeries crt_combine(const Window& w, const Level& m, const std::map<std::vector<long>, TruncSeries>& parts) {
    int k = w.k();
    TruncSeries acc = TruncSeries::constant(w.p, k, Q(0));
    for_each_exponent(w.d, w.e, [&](const std::vector<long>& i) {
        auto it = parts.find(i);
        if (it == parts.end()) throw IncompatibleSystem("missing component " + level_str(i));
        TruncSeries term = it->second;
        for (int t = 0; t < k; ++t) {
            const QPoly& e = idempotents(w.p, w.d[t], w.e[t], w.u[t], m[t])[i[t] - w.d[t]];
            std::map<Index, Q> mono;
            for (std::size_t a = 0; a < e.size(); ++a) {
                if (e[a] == 0) continue;
                Index idx(k, 0);
                idx[t] = static_cast<long>(a);
                mono[idx] = e[a];
            }
            term = mul(term, TruncSeries::polynomial(w.p, k, mono));
        }
        acc = add(acc, term);
    });
    return reduce_mod_omega(acc, w, m);
}

long minimal_slack(const ComponentFamily& c) {
    Val worst = Val::inf();
    for_each_level(c.M, [&](const Level& m) {
        for_each_exponent(c.window.d, c.window.e,
                          [&](const std::vector<long>& j) { worst = vmin(worst, theta_margin(c, j, m)); });
    });
    if (worst.is_inf() || worst >= Val(0)) return 0;
    Z n = -floor_q(worst.value());
    return n.get_si();
}

WindowSystem lift_components(const ComponentFamily& c, long n) {
    const Window& w = c.window;
    for_each_level(c.M, [&](const Level& m) {
        for_each_exponent(w.d, w.e, [&](const std::vector<long>& j) {
            if (theta_margin(c, j, m) < Val(-n))
                throw HypothesisFailed(level_str(m), level_str(j), "theta bound violated at level " + level_str(m) +
                                                                       ", j = " + level_str(j));
        });
    });
    WindowSystem out;
    out.window = w;
    out.growth = c.growth;
    out.M = c.M;
    for_each_level(c.M, [&](const Level& m) {
        std::map<std::vector<long>, TruncSeries> parts;
        for (auto& [i, comp] : c.comps) parts.emplace(i, comp.at(m));
        out.levels[m] = crt_combine(w, m, parts);
    });
    out.refresh_bound();
    // projections reproduce the inputs
    for (auto& [i, comp] : c.comps) {
        for (auto& [m, r] : comp.levels) {
            TruncSeries back = reduce_mod_omega(out.levels[m], w.component(i), m);
            TruncSeries diff = sub(back, r);
            if (!diff.coeffs.empty()) throw IncompatibleSystem("lift does not reproduce a component");
        }
    }
    return out;
}

}  // namespace iw
