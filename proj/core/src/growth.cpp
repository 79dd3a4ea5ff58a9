#include "iw/growth.hpp"

#include <mpfr.h>

#include <algorithm>

namespace iw {

GrowthClass::GrowthClass(std::vector<Q> v) : h(std::move(v)) {
    for (auto& x : h)
        if (x < 0) throw Error("growth exponents must be non-negative");
}

Q default_u(long p) { return p == 2 ? Q(5) : Q(1 + p); }

Window::Window(long p_, std::vector<long> d_, std::vector<long> e_) : p(p_), d(std::move(d_)), e(std::move(e_)) {
    u.assign(d.size(), default_u(p));
    *this = Window(p, d, e, u);
}

Window::Window(long p_, std::vector<long> d_, std::vector<long> e_, std::vector<Q> u_)
    : p(p_), d(std::move(d_)), e(std::move(e_)), u(std::move(u_)) {
    Prime check(p);
    (void)check;
    if (d.size() != e.size() || d.size() != u.size() || d.empty())
        throw IncompatibleShapes("window vectors differ in length");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (e[i] < d[i]) throw Error("window needs e >= d");
        Val o = ordp(Q(u[i] - 1), p);
        if (o < Val(p == 2 ? 2 : 1)) throw Error("u must be 1 modulo p, or modulo 4 for p = 2");
    }
}

Window Window::component(const std::vector<long>& i) const { return Window(p, i, i, u); }

Window Window::sub(const std::vector<long>& b, const std::vector<long>& c) const {
    for (int i = 0; i < k(); ++i)
        if (b[i] < d[i] || c[i] > e[i]) throw Error("subwindow not contained in window");
    return Window(p, b, c, u);
}

std::vector<TruncSeries> WindowPoly::series() const {
    std::vector<TruncSeries> out;
    for (auto& f : polys) out.push_back(TruncSeries::polynomial(window.p, f));
    return out;
}

long ell(long i, long p) {
    if (i < 0) throw Error("ell of a negative integer");
    long n = 0;
    __int128 pw = 1;
    while (pw <= i) {
        pw *= p;
        ++n;
    }
    return n;
}

long ell(const Z& i, long p) {
    if (i.fits_slong_p()) return ell(i.get_si(), p);
    long n = 0;
    Z pw = 1;
    while (pw <= i) {
        pw *= p;
        ++n;
    }
    return n;
}

ValuationReport vH(const TruncSeries& f, const GrowthClass& h) {
    if (h.k() != f.vars) throw IncompatibleShapes("growth class size");
    ValuationReport rep;
    auto weight = [&](const Index& n) {
        Q w = 0;
        for (int i = 0; i < f.vars; ++i)
            if (h.h[i] != 0) w += h.h[i] * Q(ell(n[i], f.p));
        return w;
    };
    for (auto& [n, c] : f.coeffs) {
        Val v = ordp(c, f.p) + Val(weight(n));
        if (v < rep.retained_min) {
            rep.retained_min = v;
            rep.argmin = n;
        }
    }
    if (!f.prec.is_inf()) {
        // ord(e_n) >= prec - <rho, n>
        Q worst = 0;
        for (int i = 0; i < f.vars; ++i) {
            Q m = 0;
            for (long n = 0; n < f.trunc[i]; ++n) m = std::min(m, Q(h.h[i] * Q(ell(n, f.p)) - f.rho[i] * Q(n)));
            worst += m;
        }
        rep.prec_part = f.prec + Val(worst);
    }
    if (!f.tail_floor.is_inf()) {
        bool lin = false;
        for (int i = 0; i < f.vars; ++i)
            if (f.rho[i] > 0) lin = true;
        if (lin || f.tail_floor.is_neg_inf()) {
            rep.frontier_part = Val::neg_inf();
        } else {
            Q m;
            for (int i = 0; i < f.vars; ++i) {
                Q t = h.h[i] * Q(ell(f.trunc[i], f.p));
                if (i == 0 || t < m) m = t;
            }
            rep.frontier_part = f.tail_floor + Val(m);
        }
    }
    rep.tail_bound = vmin(rep.prec_part, rep.frontier_part);
    rep.exact = rep.retained_min.is_inf() ? rep.tail_bound.is_inf()
                                          : (rep.retained_min < rep.prec_part && rep.retained_min <= rep.frontier_part);
    return rep;
}

ValuationReport vH_prime(const TruncSeries& f, const GrowthClass& h, long depth, long max_depth) {
    int k = f.vars;
    if (h.k() != k) throw IncompatibleShapes("growth class size");
    std::vector<Q> zero(k, Q(0));
    Val L0 = vr(f, zero).lower();
    Q hmin;
    for (int i = 0; i < k; ++i)
        if (i == 0 || h.h[i] < hmin) hmin = h.h[i];
    ValuationReport rep;
    auto scan = [&](long N) {
        ValuationReport r;
        Index n(k, 0);
        while (true) {
            std::vector<Q> t(k);
            Q hn = 0;
            for (int i = 0; i < k; ++i) {
                t[i] = log_break(f.p, n[i]);
                hn += h.h[i] * Q(n[i]);
            }
            auto vr_n = vr(f, t);
            Val v = vr_n.retained_min + Val(hn);
            if (v < r.retained_min) {
                r.retained_min = v;
                r.argmin = n;
            }
            r.prec_part = vmin(r.prec_part, vr_n.prec_part + Val(hn));
            r.frontier_part = vmin(r.frontier_part, vr_n.frontier_part + Val(hn));
            int i = 0;
            while (i < k && ++n[i] > N) n[i++] = 0;
            if (i == k) break;
        }
        // deeper levels: v_{t_n}(f) >= v_0(f) and some n_i > N
        r.frontier_part = vmin(r.frontier_part, L0 + Val(Q(hmin * Q(N + 1))));
        r.tail_bound = vmin(r.prec_part, r.frontier_part);
        r.exact = r.retained_min.is_inf() ? r.tail_bound.is_inf()
                                          : (r.retained_min < r.prec_part && r.retained_min <= r.frontier_part);
        return r;
    };
    if (depth >= 0) return scan(depth);
    for (long N = 0; N <= max_depth; ++N) {
        rep = scan(N);
        if (rep.exact) return rep;
        if (hmin == 0 && L0 < rep.retained_min) break;
    }
    if (!rep.exact) throw InsufficientTruncation("vH' not certified within the allowed depth");
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Mp {
    mpfr_t x;
    explicit Mp(long bits) { mpfr_init2(x, bits); }
    ~Mp() { mpfr_clear(x); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

Q to_q(const mpfr_t x) {
    Q r;
    mpfr_get_q(r.get_mpq_t(), x);
    return r;
}

}  // namespace

QInterval log_order_excess(const Q& h, long p, long bits) {
    if (h == 0) return {0, 0};
    if (h < 0) throw Error("negative growth exponent");
    Mp L(bits), a(bits), t(bits), hq(bits), x(bits);
    mpfr_set_q(hq.x, h.get_mpq_t(), MPFR_RNDN);
    mpfr_set_si(L.x, p, MPFR_RNDN);
    mpfr_log(L.x, L.x, MPFR_RNDN);                    // log p
    mpfr_mul_si(a.x, hq.x, p - 1, MPFR_RNDN);         // (p-1) h
    mpfr_div(a.x, L.x, a.x, MPFR_RNDN);               // log p / ((p-1) h)
    mpfr_log(a.x, a.x, MPFR_RNDN);
    mpfr_add_si(a.x, a.x, 1, MPFR_RNDN);              // 1 + log(...)
    mpfr_div(t.x, hq.x, L.x, MPFR_RNDN);              // h / log p
    mpfr_mul(t.x, t.x, a.x, MPFR_RNDN);
    mpfr_sub(x.x, hq.x, t.x, MPFR_RNDN);
    // a handful of correctly rounded steps: the accumulated error is far below 2^{-bits/2}
    Q centre = to_q(x.x);
    Q eps = Q(1) / Q(zpow(Z(2), bits / 2));
    Q lo = centre - eps, hi = centre + eps;
    if (hi <= 0) return {0, 0};
    return {std::max(lo, Q(0)), hi};
}

QInterval alpha_h(const Q& h, long p) {
    auto ex = log_order_excess(h, p);
    return {-ex.hi, -ex.lo};
}

Q beta_h(const Q& h, long p) {
    if (h == 0) return 0;
    Q v = Q(p, p - 1) - h;
    return v > 0 ? v : Q(0);
}

Z alpha_window(const Q& h, long d, long e, long p, bool strict) {
    if (h == 0) return 0;
    Q base = Q(e - d + 1, p - 1);
    for (long bits = 256; bits <= 4096; bits *= 2) {
        auto ex = log_order_excess(h, p, bits);
        Z lo = floor_q(base + ex.lo), hi = floor_q(base + ex.hi);
        if (lo == hi) return lo + 1;
        if (bits * 2 > 4096) {
            if (strict) throw IntervalUndecided("floor of the alpha constant");
            return hi + 1;
        }
    }
    return 0;
}

Z beta_window(const Q& h, long p) {
    if (h == 0) return 0;
    Q m = std::max(h, Q(p, p - 1));
    return -(floor_q(m) + 1);
}

Z c_window(long d, long e, long p) {
    if (d >= e) return 0;
    long n = e - d;
    return Z(ordp(factorial(n), p)) + 2 * n + floor_q(Q(n + 1, p - 1)) + 1;
}

ThresholdConstants alpha_beta_constants(const GrowthClass& h, const Window& w, bool strict) {
    if (h.k() != w.k()) throw IncompatibleShapes("growth class and window sizes differ");
    ThresholdConstants c{0, 0};
    for (int i = 0; i < w.k(); ++i) {
        c.alpha += alpha_window(h.h[i], w.d[i], w.e[i], w.p, strict);
        c.beta += beta_window(h.h[i], w.p);
    }
    return c;
}

Z c_constant(const Window& w) {
    Z c = 0;
    for (int i = 0; i < w.k(); ++i) c += c_window(w.d[i], w.e[i], w.p);
    return c;
}

QPoly omega(long p, long d, long e, const Q& u, long m) {
    Z pm = zpow(Z(p), m);
    if (!pm.fits_slong_p() || pm > 100000) throw Error("level too large for Omega");
    long P = pm.get_si();
    QPoly base = poly::one_plus_x_pow(P);
    QPoly out{1};
    for (long i = d; i <= e; ++i) {
        QPoly fac = base;
        fac[0] -= qpow(u, i * P);
        out = poly::mul(out, fac);
    }
    return out;
}

WindowPoly omega_poly(const Window& w, const std::vector<long>& m) {
    if (static_cast<int>(m.size()) != w.k()) throw IncompatibleShapes("level vector size");
    WindowPoly out;
    out.window = w;
    out.level = m;
    for (int i = 0; i < w.k(); ++i) {
        if (m[i] < 0) throw InvalidLevel("negative level");
        out.polys.push_back(omega(w.p, w.d[i], w.e[i], w.u[i], m[i]));
    }
    return out;
}

OmegaBreak omega_valuation(long p, long d, long e, long m, long n) {
    if (n < 0 || n > m) throw Error("need 0 <= n <= m");
    Z pn = zpow(Z(p), n);
    Q tn = log_break(p, n);
    return {Z(e - d + 1) * pn, Q(e - d + 1) * (Q(m - n) + tn * Q(pn))};
}

bool separable(const QPoly& f) { return poly::coprime(f, poly::deriv(f)); }

}  // namespace iw
