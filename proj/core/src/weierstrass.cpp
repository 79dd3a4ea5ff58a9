#include "iw/weierstrass.hpp"

#include <algorithm>
#include <map>

namespace iw {

namespace {

Val weighted_min(const QPoly& a, long p, const Q& r) {
    Val m = Val::inf();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) m = vmin(m, ordp(a[i], p) + Val(Q(r * Q(static_cast<long>(i)))));
    return m;
}

TruncSeries from_dense(long p, const QPoly& a, long len, const Q& r, const Val& prec, const Val& tail) {
    TruncSeries s(p, 1);
    for (std::size_t i = 0; i < a.size() && static_cast<long>(i) < len; ++i)
        if (a[i] != 0) s.coeffs[{static_cast<long>(i)}] = a[i];
    s.trunc[0] = len;
    s.rho[0] = r;
    s.prec = prec;
    s.tail_floor = tail;
    return s;
}

struct CoreDivision {
    QPoly q, t;
    long q_len = 0;
    Val q_prec = Val::inf(), q_tail = Val::inf(), t_prec = Val::inf();
    long iterations = 0;
    Q gamma = 0;
};

// Division of exact polynomials g by f with d_r(f) = s and v_r(f) = vf.
CoreDivision core_divide(const QPoly& g, const QPoly& f, long p, const Q& r, long s, const Q& vf,
                         const DivisionOptions& opt) {
    CoreDivision out;
    long D = poly::deg(f);
    long dg = poly::deg(g);
    if (dg < 0) {
        out.q_len = 1;
        return out;
    }
    if (D == s) {
        poly::divmod(g, f, out.q, out.t);
        out.q_len = static_cast<long>(out.q.size());
        return out;
    }
    QPoly F(f.begin() + s, f.begin() + D + 1);
    QPoly flow(f.begin(), f.begin() + s);
    poly::trim(flow);
    Val vlow = weighted_min(flow, p, r);
    Q V0 = weighted_min(g, p, r).value();
    long Lq = opt.q_len > 0 ? opt.q_len : dg + 1 + (D - s) + opt.extra_terms;
    Lq = std::max(Lq, s + 1);
    Q Pq = V0 - vf + opt.gain;
    long J = 1;
    bool round = false;
    if (!vlow.is_inf()) {
        out.gamma = vlow.value() - vf;
        Z j = ceil_q(opt.gain / out.gamma);
        if (j > opt.max_iterations) throw NonconvergentPrecision("too many iterations needed");
        J = std::max<long>(1, j.get_si());
        round = true;
    }
    Q F0inv = 1 / F[0];
    long DF = D - s;
    QPoly q;  // previous iterate
    for (long j = 1; j <= J; ++j) {
        long L = Lq + (J - j) * s;
        // h = g - flow * q, needed in degrees [s, L + s)
        QPoly h(L);
        for (long n = 0; n < L; ++n) {
            long m = n + s;
            Q v = m <= dg ? g[m] : Q(0);
            for (std::size_t i = 0; i < flow.size(); ++i) {
                long k = m - static_cast<long>(i);
                if (k >= 0 && k < static_cast<long>(q.size()) && flow[i] != 0 && q[k] != 0) v -= flow[i] * q[k];
            }
            h[n] = v;
        }
        QPoly y(L);
        for (long n = 0; n < L; ++n) {
            Q v = h[n];
            for (long i = 1; i <= std::min(n, DF); ++i)
                if (F[i] != 0 && y[n - i] != 0) v -= F[i] * y[n - i];
            v *= F0inv;
            if (round) v = round_padic(v, p, ceil_q(Pq - r * Q(n)));
            y[n] = v;
        }
        q = std::move(y);
    }
    out.iterations = J;
    out.q = q;
    out.q_len = Lq;
    out.t.assign(s, Q(0));
    for (long n = 0; n < s; ++n) {
        Q v = n <= dg ? g[n] : Q(0);
        for (long i = 0; i <= n && i <= D; ++i)
            if (f[i] != 0 && n - i < static_cast<long>(q.size())) v -= f[i] * q[n - i];
        out.t[n] = v;
    }
    poly::trim(out.t);
    out.q_tail = Val(Q(V0 - vf));
    if (round) {
        out.q_prec = Val(Pq);
        out.t_prec = Val(Q(vf + Pq));
    }
    return out;
}

}  // namespace

long leading_index(const TruncSeries& f, const Q& r) { return dr(f, r); }

DivisionResult divide(const TruncSeries& g, const TruncSeries& f, const Q& r, const DivisionOptions& opt) {
    if (g.vars != 1 || f.vars != 1) throw IncompatibleShapes("divide expects one-variable series");
    if (g.p != f.p) throw IncompatibleShapes("prime mismatch");
    long p = f.p;
    auto fr = vr(f, r);
    if (fr.retained_min.is_inf()) throw ZeroDivisor("division by zero series");
    if (!fr.exact) throw InexactValuation("v_r(f) is not certified");
    long s = fr.argmin[0];
    Q vf = fr.retained_min.value();
    QPoly fh = f.dense(), gh = g.dense();
    poly::trim(fh);
    poly::trim(gh);
    auto gr = vr(g, r);
    Val Bg = gr.tail_bound, Bf = fr.tail_bound;
    Val V0hat = gr.retained_min;

    CoreDivision cd = core_divide(gh, fh, p, r, s, vf, opt);

    Val dq = vmin(Bg - Val(vf), Bf + V0hat - Val(vf) - Val(vf));
    Val dt = vmin(Bg, Bf + V0hat - Val(vf));
    if (gh.empty()) {
        dq = Bg - Val(vf);
        dt = Bg;
    }
    Val qprec = vmin(cd.q_prec, dq), qtail = vmin(cd.q_tail, dq);
    Val tprec = vmin(cd.t_prec, dt);

    DivisionResult res;
    res.s = s;
    res.iterations = cd.iterations;
    res.gamma = cd.gamma;
    if (qprec.is_inf() && qtail.is_inf())
        res.quotient = TruncSeries::polynomial(p, cd.q);
    else
        res.quotient = from_dense(p, cd.q, cd.q_len, r, qprec, qtail);
    if (tprec.is_inf())
        res.remainder = TruncSeries::polynomial(p, cd.t);
    else
        res.remainder = from_dense(p, cd.t, std::max<long>(s, 1), r, tprec, Val::inf());
    res.certified = check_valuation_identity(g, f, res, r);
    return res;
}

bool check_valuation_identity(const TruncSeries& g, const TruncSeries& f, const DivisionResult& d,
                              const Q& r) {
    auto gr = vr(g, r);
    if (gr.retained_min.is_inf()) return gr.exact;
    if (!gr.exact) return false;
    auto fr = vr(f, r);
    if (!fr.exact) return false;
    Val Vg = gr.retained_min, vf = fr.retained_min;
    auto tr = vr(d.remainder, r);
    auto qr = vr(d.quotient, r);
    if (tr.exact && tr.retained_min == Vg) return qr.lower() + vf >= Vg;
    if (tr.lower() > Vg || (tr.exact && tr.retained_min > Vg))
        return qr.exact && qr.retained_min + vf == Vg;
    return false;
}

Preparation prepare(const TruncSeries& f, const Q& r, const DivisionOptions& opt) {
    long s = dr(f, r);
    TruncSeries xs = TruncSeries::monomial(f.p, {s}, Q(1));
    auto d = divide(xs, f, r, opt);
    // X^s = f q + t, so P = X^s - t = f q and f = P q^{-1}
    Q q0 = d.quotient.coeff(0);
    if (q0 == 0) throw InexactValuation("quotient constant term vanished");
    Preparation out;
    TruncSeries P = sub(xs, d.remainder);
    out.distinguished = scale(P, 1 / q0);
    // unit = q0 / q as a power series to the quotient's length
    QPoly qd = d.quotient.dense();
    long L = d.quotient.exact() ? std::max<long>(poly::deg(qd) + 1, 1) + 1 : d.quotient.trunc[0];
    if (d.quotient.exact()) {
        L = std::max<long>(L, f.exact() ? poly::deg(f.dense()) + 2 : f.trunc[0]);
    }
    QPoly u(L);
    for (long n = 0; n < L; ++n) {
        Q v = n == 0 ? Q(1) : Q(0);
        for (long i = 1; i <= n && i < static_cast<long>(qd.size()); ++i) v -= qd[i] * u[n - i] / q0;
        u[n] = v;
    }
    bool unit_exact = d.quotient.exact() && poly::deg(qd) == 0;
    if (unit_exact) {
        out.unit = TruncSeries::polynomial(f.p, QPoly{1});
    } else {
        // u = q0/q has v_r(u) = 0; its error inherits the quotient's relative precision
        Val qv = vr(d.quotient, r).retained_min;
        Val pr = d.quotient.prec.is_inf() ? Val::inf() : d.quotient.prec - qv;
        out.unit = from_dense(f.p, u, L, r, pr, Val(0));
    }
    return out;
}

long count_roots(const TruncSeries& f, const Q& r) { return dr(f, r); }

MultiDivisionResult multi_divide(const TruncSeries& g, const std::vector<TruncSeries>& f,
                                 const std::vector<Q>& r, const DivisionOptions& opt) {
    int k = g.vars;
    if (static_cast<int>(f.size()) != k || static_cast<int>(r.size()) != k)
        throw IncompatibleShapes("need one divisor and one exponent per variable");
    MultiDivisionResult res;
    TruncSeries cur = g;
    for (int i = 0; i < k; ++i) {
        const TruncSeries& fi = f[i];
        auto fr = vr(fi, r[i]);
        if (fr.retained_min.is_inf()) throw ZeroDivisor("division by zero series");
        if (!fr.exact) throw InexactValuation("v_r(f) is not certified");
        Q vf = fr.retained_min.value();
        long s = fr.argmin[0];
        long Df = poly::deg(fi.dense());
        auto other_weight = [&](const Index& o) {
            Q w = 0;
            for (int j = 0; j < k; ++j)
                if (j != i) w += cur.rho[j] * Q(o[j]);
            return w;
        };
        std::map<Index, QPoly> slices;
        for (auto& [n, c] : cur.coeffs) {
            Index o = n;
            o[i] = 0;
            auto& sl = slices[o];
            if (static_cast<long>(sl.size()) <= n[i]) sl.resize(n[i] + 1);
            sl[n[i]] = c;
        }
        DivisionOptions so = opt;
        if (so.q_len <= 0) so.q_len = std::max<long>(cur.degree(i), 0) + 1 + (Df - s) + opt.extra_terms;
        TruncSeries q(g.p, k), t(g.p, k);
        q.rho = cur.rho;
        q.rho[i] = std::max(r[i], cur.rho[i]);
        t.rho = q.rho;
        q.prec = q.tail_floor = t.prec = t.tail_floor = Val::inf();
        bool q_exact = true, t_exact = true;
        long q_len = 0;
        for (auto& [o, sl] : slices) {
            TruncSeries gs = TruncSeries::polynomial(g.p, sl);
            if (!cur.exact()) {
                Val w = Val(other_weight(o));
                gs.trunc[0] = cur.trunc[i];
                gs.rho[0] = cur.rho[i];
                gs.prec = cur.prec - w;
                gs.tail_floor = cur.tail_floor - w;
            }
            auto d = divide(gs, fi, r[i], so);
            Val w = Val(other_weight(o));
            if (!d.quotient.exact()) q_exact = false;
            if (!d.remainder.exact()) t_exact = false;
            q.prec = vmin(q.prec, d.quotient.prec + w);
            q.tail_floor = vmin(q.tail_floor, d.quotient.tail_floor + w);
            t.prec = vmin(t.prec, d.remainder.prec + w);
            q_len = std::max(q_len, d.quotient.trunc[0]);
            for (auto& [n, c] : d.quotient.coeffs) {
                Index m = o;
                m[i] = n[0];
                q.coeffs[m] = c;
            }
            for (auto& [n, c] : d.remainder.coeffs) {
                Index m = o;
                m[i] = n[0];
                t.coeffs[m] = c;
            }
        }
        if (!cur.exact()) {
            q.tail_floor = vmin(q.tail_floor, cur.tail_floor - Val(vf));
            t.tail_floor = vmin(t.tail_floor, cur.tail_floor);
            q_exact = t_exact = false;
        }
        q.trunc = cur.trunc;
        t.trunc = cur.trunc;
        for (int j = 0; j < k; ++j) {
            if (!cur.exact()) continue;
            q.trunc[j] = t.trunc[j] = std::max<long>(cur.degree(j) + 1, 1);
        }
        q.trunc[i] = std::max<long>(q_len, 1);
        t.trunc[i] = std::max<long>(s, 1);
        if (q_exact) {
            q.prec = q.tail_floor = Val::inf();
            for (int j = 0; j < k; ++j) q.trunc[j] = std::max<long>(q.degree(j) + 1, 1);
        }
        if (t_exact) {
            t.prec = t.tail_floor = Val::inf();
            for (int j = 0; j < k; ++j) t.trunc[j] = std::max<long>(t.degree(j) + 1, 1);
        }
        res.quotients.push_back(std::move(q));
        cur = std::move(t);
    }
    res.remainder = std::move(cur);
    return res;
}

bool divisibility_test(const TruncSeries& g, const std::vector<TruncSeries>& f, const std::vector<Q>& r) {
    auto d = multi_divide(g, f, r);
    const TruncSeries& t = d.remainder;
    for (auto& [n, c] : t.coeffs) {
        if (t.prec.is_inf()) return false;
        Q w = 0;
        for (int i = 0; i < t.vars; ++i) w += t.rho[i] * Q(n[i]);
        if (ordp(c, t.p) + Val(w) < t.prec) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

Q m_f(const TruncSeries& f, const Q& t) {
    auto rep = vr(f, t);
    if (rep.retained_min.is_inf()) throw ZeroSeries("m_f of zero");
    return rep.retained_min.value();
}

long n_f(const TruncSeries& f, const Q& t) {
    auto rep = vr(f, t);
    if (rep.retained_min.is_inf()) throw ZeroSeries("n_f of zero");
    return rep.argmin[0];
}

long NewtonData::degree_at(const Q& t) const {
    std::size_t k = 0;
    while (k < break_points.size() && break_points[k] <= t) ++k;
    return segment_degrees[k];
}

NewtonData newton(const TruncSeries& f, const Q& t_min, const Q& t_max) {
    if (f.vars != 1) throw IncompatibleShapes("newton expects one variable");
    if (f.coeffs.empty()) throw ZeroSeries("newton of zero");
    if (!(t_min < t_max)) throw Error("empty t-interval");
    // lower convex hull of (j, ord c_j)
    std::vector<std::pair<long, Q>> pts;
    for (auto& [n, c] : f.coeffs) pts.emplace_back(n[0], Q(ordp_checked(c, f.p)));
    std::vector<std::pair<long, Q>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // remove b if it lies on or above segment a -> pt
            Q lhs = (b.second - a.second) * Q(pt.first - a.first);
            Q rhs = (pt.second - a.second) * Q(b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    NewtonData nd;
    nd.t_min = t_min;
    nd.t_max = t_max;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        Q t = (hull[i].second - hull[i + 1].second) / Q(hull[i + 1].first - hull[i].first);
        if (t > t_min && t <= t_max) nd.break_points.push_back(t);
    }
    std::sort(nd.break_points.begin(), nd.break_points.end());
    std::vector<Q> checks{t_min, t_max};
    for (auto& b : nd.break_points) checks.push_back(b);
    for (auto& t : checks) {
        if (!vr(f, t).exact)
            throw InsufficientTruncation("tail may affect the Newton data at t = " + q_str(t));
    }
    Q first_hi = nd.break_points.empty() ? t_max : nd.break_points.front();
    nd.segment_degrees.push_back(n_f(f, (t_min + first_hi) / 2));
    for (auto& b : nd.break_points) {
        nd.segment_degrees.push_back(n_f(f, b));
        nd.segment_values.push_back(m_f(f, b));
    }
    return nd;
}

Q log_break(long p, long n) { return Q(1) / (Q(zpow(Z(p), n)) * Q(p - 1)); }

TruncSeries padic_log(long p, long terms) {
    if (terms < 1) throw Error("padic_log needs at least one term");
    TruncSeries f(p, 1);
    for (long k = 1; k <= terms; ++k) f.coeffs[{k}] = Q((k % 2) ? 1 : -1, k);
    f.trunc[0] = terms + 1;
    long K = 0;
    while (zpow(Z(p), K + 1) <= terms) ++K;
    Q rho = log_break(p, K);
    // coefficients beyond the box satisfy ord(1/k) >= -floor(log_p k)
    Q best;
    bool have = false;
    long j = K;
    while (zpow(Z(p), j + 1) <= terms + 1) ++j;
    for (; j <= K + 4; ++j) {
        Z left = std::max(zpow(Z(p), j), Z(terms + 1));
        if (left >= zpow(Z(p), j + 1)) continue;
        Q v = Q(-j) + rho * Q(left);
        if (!have || v < best) best = v;
        have = true;
    }
    f.rho[0] = rho;
    f.tail_floor = Val(best);
    return f;
}

}  // namespace iw
