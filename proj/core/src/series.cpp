#include "iw/series.hpp"

#include <algorithm>
#include <climits>

namespace iw {

namespace {

Q dot(const std::vector<Q>& r, const Index& n) {
    Q s = 0;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i]) s += r[i] * Q(n[i]);
    return s;
}

void check_vars(const TruncSeries& f, std::size_t k) {
    if (static_cast<std::size_t>(f.vars) != k) throw IncompatibleShapes("variable count mismatch");
}

std::vector<Q> vmax_rho(const std::vector<Q>& a, const std::vector<Q>& b) {
    std::vector<Q> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

}  // namespace

TruncSeries::TruncSeries(long p_, int vars_) : p(p_), vars(vars_), trunc(vars_, 0), rho(vars_, Q(0)) {
    Prime check(p_);
    (void)check;
}

TruncSeries TruncSeries::polynomial(long p, const QPoly& c) {
    TruncSeries f(p, 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) f.coeffs[{static_cast<long>(i)}] = c[i];
    f.trunc[0] = static_cast<long>(c.size());
    return f;
}

TruncSeries TruncSeries::polynomial(long p, int vars, const std::map<Index, Q>& c) {
    TruncSeries f(p, vars);
    for (auto& [n, v] : c) {
        if (static_cast<int>(n.size()) != vars) throw Error("index length mismatch");
        if (v == 0) continue;
        f.coeffs[n] = v;
        for (int i = 0; i < vars; ++i) f.trunc[i] = std::max(f.trunc[i], n[i] + 1);
    }
    return f;
}

TruncSeries TruncSeries::constant(long p, int vars, const Q& c) {
    return polynomial(p, vars, {{Index(vars, 0), c}});
}

TruncSeries TruncSeries::monomial(long p, const Index& n, const Q& c) {
    return polynomial(p, static_cast<int>(n.size()), {{n, c}});
}

bool TruncSeries::in_box(const Index& n) const {
    for (int i = 0; i < vars; ++i)
        if (n[i] >= trunc[i]) return false;
    return true;
}

Q TruncSeries::coeff(const Index& n) const {
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Q(0) : it->second;
}

void TruncSeries::set(const Index& n, const Q& c) {
    if (c == 0)
        coeffs.erase(n);
    else
        coeffs[n] = c;
    if (exact())
        for (int i = 0; i < vars; ++i) trunc[i] = std::max(trunc[i], n[i] + 1);
}

long TruncSeries::degree(int var) const {
    long d = -1;
    for (auto& [n, c] : coeffs) d = std::max(d, n[var]);
    return d;
}

QPoly TruncSeries::dense() const {
    if (vars != 1) throw Error("dense() needs one variable");
    long len = trunc[0];
    for (auto& [n, c] : coeffs) len = std::max(len, n[0] + 1);
    QPoly r(len);
    for (auto& [n, c] : coeffs) r[n[0]] = c;
    return r;
}

// ---------------------------------------------------------------------------

ValuationReport vr(const TruncSeries& f, const std::vector<Q>& r) {
    check_vars(f, r.size());
    ValuationReport rep;
    for (auto& [n, c] : f.coeffs) {
        Val v = ordp(c, f.p) + Val(dot(r, n));
        if (v < rep.retained_min) {
            rep.retained_min = v;
            rep.argmin = n;
        }
    }
    std::vector<Q> delta(r.size());
    bool neg = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
        delta[i] = r[i] - f.rho[i];
        if (delta[i] < 0) neg = true;
    }
    if (!f.prec.is_inf()) {
        Q m = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (delta[i] < 0 && f.trunc[i] > 0) m += delta[i] * Q(f.trunc[i] - 1);
        rep.prec_part = f.prec + Val(m);
    }
    if (!f.tail_floor.is_inf()) {
        if (neg || f.tail_floor.is_neg_inf()) {
            rep.frontier_part = Val::neg_inf();
        } else {
            Q m;
            bool first = true;
            for (std::size_t i = 0; i < r.size(); ++i) {
                Q t = delta[i] * Q(f.trunc[i]);
                if (first || t < m) m = t;
                first = false;
            }
            rep.frontier_part = f.tail_floor + Val(m);
        }
    }
    rep.tail_bound = vmin(rep.prec_part, rep.frontier_part);
    if (rep.retained_min.is_inf())
        rep.exact = rep.tail_bound.is_inf();
    else
        rep.exact = rep.retained_min < rep.prec_part && rep.retained_min <= rep.frontier_part;
    return rep;
}

ValuationReport vr(const TruncSeries& f, const Q& r) { return vr(f, std::vector<Q>{r}); }

long dr(const TruncSeries& f, const Q& r) {
    check_vars(f, 1);
    auto rep = vr(f, r);
    if (rep.retained_min.is_inf()) throw ZeroSeries("d_r of zero");
    if (!rep.exact) throw InexactValuation("d_r not certified by retained coefficients");
    return rep.argmin[0];
}

TruncSeries truncate(const TruncSeries& f, const Index& box) {
    TruncSeries g = f;
    g.coeffs.clear();
    Val dropped = Val::inf();
    for (auto& [n, c] : f.coeffs) {
        bool in = true;
        for (int i = 0; i < f.vars; ++i)
            if (n[i] >= box[i]) in = false;
        if (in)
            g.coeffs[n] = c;
        else
            dropped = vmin(dropped, ordp(c, f.p) + Val(dot(f.rho, n)));
    }
    for (int i = 0; i < f.vars; ++i)
        g.trunc[i] = f.tail_floor.is_inf() ? box[i] : std::min(box[i], f.trunc[i]);
    bool shrunk = false;
    for (int i = 0; i < f.vars; ++i)
        if (g.trunc[i] < f.trunc[i]) shrunk = true;
    // indices leaving the box carried errors bounded by prec
    g.tail_floor = vmin(vmin(f.tail_floor, dropped), shrunk ? f.prec : Val::inf());
    return g;
}

TruncSeries with_rho(const TruncSeries& f, const std::vector<Q>& rho) {
    check_vars(f, rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] < f.rho[i] && !f.exact()) throw Error("cannot lower the weight of a bound");
    TruncSeries g = f;
    g.rho = rho;
    return g;
}

namespace {

// Bring f, g to a common weight and box.
void align(const TruncSeries& f, const TruncSeries& g, TruncSeries& fa, TruncSeries& ga) {
    if (f.vars != g.vars || f.p != g.p) throw IncompatibleShapes("incompatible series");
    auto rho = vmax_rho(f.rho, g.rho);
    fa = with_rho(f, rho);
    ga = with_rho(g, rho);
    if (f.exact() && g.exact()) return;
    Index box(f.vars);
    for (int i = 0; i < f.vars; ++i) {
        // without a tail the stored box may grow freely
        long b = LONG_MAX;
        if (!f.tail_floor.is_inf()) b = std::min(b, f.trunc[i]);
        if (!g.tail_floor.is_inf()) b = std::min(b, g.trunc[i]);
        if (b == LONG_MAX) b = std::max({f.trunc[i], g.trunc[i], f.degree(i) + 1, g.degree(i) + 1});
        box[i] = b;
    }
    fa = truncate(fa, box);
    ga = truncate(ga, box);
    fa.trunc = box;
    ga.trunc = box;
}

}  // namespace

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
    TruncSeries a, b;
    align(f, g, a, b);
    for (auto& [n, c] : b.coeffs) {
        Q s = a.coeff(n) + c;
        if (s == 0)
            a.coeffs.erase(n);
        else
            a.coeffs[n] = s;
    }
    if (a.exact() && b.exact())
        for (int i = 0; i < a.vars; ++i) a.trunc[i] = std::max(a.trunc[i], b.trunc[i]);
    a.prec = vmin(a.prec, b.prec);
    a.tail_floor = vmin(a.tail_floor, b.tail_floor);
    return a;
}

TruncSeries neg(const TruncSeries& f) { return scale(f, Q(-1)); }

TruncSeries sub(const TruncSeries& f, const TruncSeries& g) { return add(f, neg(g)); }

TruncSeries scale(const TruncSeries& f, const Q& c) {
    TruncSeries g = f;
    if (c == 0) {
        g.coeffs.clear();
        g.prec = g.tail_floor = Val::inf();
        return g;
    }
    for (auto& [n, v] : g.coeffs) v *= c;
    Val oc = ordp(c, f.p);
    g.prec = g.prec + oc;
    g.tail_floor = g.tail_floor + oc;
    return g;
}

TruncSeries mul(const TruncSeries& f, const TruncSeries& g) {
    if (f.vars != g.vars || f.p != g.p) throw IncompatibleShapes("incompatible series");
    auto rho = vmax_rho(f.rho, g.rho);
    TruncSeries fr = with_rho(f, rho), gr = with_rho(g, rho);
    TruncSeries out(f.p, f.vars);
    out.rho = rho;
    bool tailed = !f.tail_floor.is_inf() || !g.tail_floor.is_inf();
    Index box(f.vars);
    for (int i = 0; i < f.vars; ++i) {
        long b = LONG_MAX;
        if (!f.tail_floor.is_inf()) b = std::min(b, f.trunc[i]);
        if (!g.tail_floor.is_inf()) b = std::min(b, g.trunc[i]);
        if (!tailed) b = std::max<long>(0, f.trunc[i] + g.trunc[i] - 1);
        box[i] = b;
    }
    if (f.vars == 1) {
        QPoly a = f.dense(), b = g.dense();
        std::size_t n = tailed ? static_cast<std::size_t>(box[0]) : a.size() + b.size();
        QPoly c = poly::mul_trunc(a, b, n);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) out.coeffs[{static_cast<long>(i)}] = c[i];
    } else {
        Index n(f.vars);
        for (auto& [a, ca] : f.coeffs) {
            for (auto& [b, cb] : g.coeffs) {
                bool in = true;
                for (int i = 0; i < f.vars; ++i) {
                    n[i] = a[i] + b[i];
                    if (n[i] >= box[i]) in = false;
                }
                if (!in) continue;
                out.coeffs[n] += ca * cb;
            }
        }
        for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
            it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    }
    out.trunc = box;
    if (f.exact() && g.exact()) return out;
    Val Lf = vr(fr, rho).lower(), Lg = vr(gr, rho).lower();
    if (tailed) out.tail_floor = Lf + Lg;
    out.prec = vmin(Lf + g.prec, f.prec + Lg);
    return out;
}

TruncSeries shift(const TruncSeries& f, const std::vector<Q>& a) {
    check_vars(f, a.size());
    TruncSeries g = f;
    for (int i = 0; i < f.vars; ++i) {
        if (a[i] == 0) continue;
        if (!g.exact()) {
            Val oa = ordp(a[i], f.p);
            if (!g.tail_floor.is_inf()) {
                if (!(oa > Val(g.rho[i]))) throw ShiftOutOfDisk("ord(a) must exceed the tail weight");
                g.prec = vmin(g.prec, g.tail_floor + (oa - Val(g.rho[i])));
            }
        }
        std::map<Index, Q> out;
        for (auto& [n, c] : g.coeffs) {
            Index m = n;
            Q apow = 1;
            for (long k = n[i]; k >= 0; --k) {
                m[i] = k;
                out[m] += Q(binom(n[i], k)) * apow * c;
                apow *= a[i];
            }
        }
        g.coeffs.clear();
        for (auto& [n, c] : out)
            if (c != 0) g.coeffs[n] = c;
    }
    return g;
}

TruncSeries shift(const TruncSeries& f, const Q& a) { return shift(f, std::vector<Q>{a}); }

EvalResult eval(const TruncSeries& f, const std::vector<Cyclo>& b) {
    if (static_cast<std::size_t>(f.vars) != b.size()) throw IncompatibleShapes("point dimension mismatch");
    std::vector<std::vector<Cyclo>> pw(f.vars);
    for (int i = 0; i < f.vars; ++i) {
        long d = std::max<long>(f.degree(i), 0);
        pw[i].resize(d + 1);
        pw[i][0] = Cyclo(1);
        for (long k = 1; k <= d; ++k) pw[i][k] = pw[i][k - 1] * b[i];
    }
    EvalResult res;
    res.value = Cyclo(0);
    for (auto& [n, c] : f.coeffs) {
        Cyclo t(c);
        for (int i = 0; i < f.vars; ++i) t *= pw[i][n[i]];
        res.value += t;
    }
    res.error_bound = Val::inf();
    if (f.exact()) return res;
    std::vector<Val> delta(f.vars);
    for (int i = 0; i < f.vars; ++i) delta[i] = ordp(b[i], f.p) - Val(f.rho[i]);
    if (!f.prec.is_inf()) {
        Q m = 0;
        for (int i = 0; i < f.vars; ++i) {
            if (delta[i].is_inf() || f.trunc[i] <= 1) continue;
            if (delta[i] < Val(0)) m += delta[i].value() * Q(f.trunc[i] - 1);
        }
        res.error_bound = f.prec + Val(m);
    }
    if (!f.tail_floor.is_inf()) {
        Val t = Val::inf();
        bool diverge = false;
        for (int i = 0; i < f.vars; ++i) {
            if (delta[i].is_inf()) continue;
            if (!(delta[i] > Val(0))) diverge = true;
            else
                t = vmin(t, Val(Q(delta[i].value() * Q(f.trunc[i]))));
        }
        if (diverge) throw EvalOutOfDisk("point not inside the disk of convergence of the tail");
        Val tb = t.is_inf() ? f.tail_floor : f.tail_floor + t;
        res.error_bound = vmin(res.error_bound, tb);
    }
    return res;
}

// ---------------------------------------------------------------------------

NestedSeries nest(const TruncSeries& f) {
    if (f.vars < 2) throw Error("nest needs at least two variables");
    int k = f.vars;
    NestedSeries ns;
    ns.p = f.p;
    ns.rho = f.rho[k - 1];
    ns.tail_floor = f.tail_floor;
    long T = f.trunc[k - 1];
    for (auto& [n, c] : f.coeffs) T = std::max(T, n[k - 1] + 1);
    ns.trunc = f.exact() ? T : f.trunc[k - 1];
    TruncSeries proto(f.p, k - 1);
    proto.trunc.assign(f.trunc.begin(), f.trunc.end() - 1);
    proto.rho.assign(f.rho.begin(), f.rho.end() - 1);
    ns.coeffs.assign(ns.trunc, proto);
    for (long j = 0; j < ns.trunc; ++j) {
        Val shiftv = Val(Q(-ns.rho * Q(j)));
        ns.coeffs[j].prec = f.prec + shiftv;
        ns.coeffs[j].tail_floor = f.tail_floor + shiftv;
    }
    for (auto& [n, c] : f.coeffs) {
        Index inner(n.begin(), n.end() - 1);
        ns.coeffs[n[k - 1]].coeffs[inner] = c;
    }
    return ns;
}

TruncSeries unnest(const NestedSeries& ns) {
    if (ns.coeffs.empty()) throw Error("empty nested series");
    int k = ns.coeffs[0].vars + 1;
    TruncSeries f(ns.p, k);
    f.trunc.assign(ns.coeffs[0].trunc.begin(), ns.coeffs[0].trunc.end());
    f.trunc.push_back(ns.trunc);
    f.rho.assign(ns.coeffs[0].rho.begin(), ns.coeffs[0].rho.end());
    f.rho.push_back(ns.rho);
    f.tail_floor = ns.tail_floor;
    f.prec = Val::inf();
    for (long j = 0; j < static_cast<long>(ns.coeffs.size()); ++j) {
        const auto& c = ns.coeffs[j];
        Val back = Val(Q(ns.rho * Q(j)));
        f.prec = vmin(f.prec, c.prec + back);
        f.tail_floor = vmin(f.tail_floor, c.tail_floor + back);
        for (auto& [n, v] : c.coeffs) {
            Index m = n;
            m.push_back(j);
            f.coeffs[m] = v;
        }
    }
    return f;
}

ValuationReport vr_nested(const NestedSeries& ns, const std::vector<Q>& r) {
    std::vector<Q> inner(r.begin(), r.end() - 1);
    Q rk = r.back();
    ValuationReport rep;
    for (long j = 0; j < static_cast<long>(ns.coeffs.size()); ++j) {
        auto cr = vr(ns.coeffs[j], inner);
        Val add = Val(Q(rk * Q(j)));
        Val v = cr.retained_min + add;
        if (v < rep.retained_min) {
            rep.retained_min = v;
            rep.argmin = cr.argmin;
            rep.argmin.push_back(j);
        }
        rep.prec_part = vmin(rep.prec_part, cr.prec_part + add);
        rep.frontier_part = vmin(rep.frontier_part, cr.frontier_part + add);
    }
    if (!ns.tail_floor.is_inf()) {
        bool neg = rk < ns.rho || ns.tail_floor.is_neg_inf();
        if (!ns.coeffs.empty())
            for (std::size_t i = 0; i < inner.size(); ++i)
                if (inner[i] < ns.coeffs[0].rho[i]) neg = true;
        rep.frontier_part = vmin(rep.frontier_part,
                                 neg ? Val::neg_inf() : ns.tail_floor + Val(Q((rk - ns.rho) * Q(ns.trunc))));
    }
    rep.tail_bound = vmin(rep.prec_part, rep.frontier_part);
    if (rep.retained_min.is_inf())
        rep.exact = rep.tail_bound.is_inf();
    else
        rep.exact = rep.retained_min < rep.prec_part && rep.retained_min <= rep.frontier_part;
    return rep;
}

bool zero_test_small_disk(const TruncSeries& f, const std::vector<Q>& samples) {
    if (samples.empty()) throw Error("no sample points");
    std::vector<Cyclo> pt(f.vars);
    std::vector<std::size_t> idx(f.vars, 0);
    while (true) {
        for (int i = 0; i < f.vars; ++i) pt[i] = Cyclo(samples[idx[i]]);
        auto e = eval(f, pt);
        if (!e.value.is_zero()) {
            if (e.error_bound.is_inf() || ordp(e.value, f.p) < e.error_bound) return false;
        }
        int i = 0;
        while (i < f.vars && ++idx[i] == samples.size()) idx[i++] = 0;
        if (i == f.vars) break;
    }
    return true;
}

}  // namespace iw
