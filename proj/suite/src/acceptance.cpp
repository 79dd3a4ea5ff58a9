#include "iw/suite/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "iw/distribution.hpp"
#include "iw/eisenstein.hpp"
#include "iw/suite/oracles.hpp"

namespace iw::suite {

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

struct Checker {
    CriterionResult& r;
    void operator()(bool ok, const std::string& what) {
        ++r.checks;
        if (ok) return;
        ++r.failures;
        if (r.witnesses.size() < 6) r.witnesses.push_back(what);
    }
};

template <class... T>
std::string cat(const T&... xs) {
    std::ostringstream os;
    ((os << xs), ...);
    return os.str();
}

std::string qs(const Q& x) { return q_str(x); }

Q pow_p(long p, long e) { return qpow(Q(p), e); }

Z ceil_nonneg(const Val& v) {
    if (!v.finite()) return 0;
    Z c = ceil_q(v.value());
    return c;
}

long ipow(long b, long e) { return zpow(Z(b), e).get_si(); }

QPoly random_qpoly(Rng& rng, long p, long deg, int vlo, int vhi) {
    std::uniform_int_distribution<int> V(vlo, vhi), U(1, 30), S(0, 1);
    QPoly c(deg + 1);
    for (auto& x : c) {
        Z u = U(rng);
        while (u % p == 0) u += 1;
        x = Q(S(rng) ? u : Z(-u)) * pow_p(p, V(rng));
    }
    return c;
}

TruncSeries random_series(Rng& rng, long p, const std::vector<long>& deg, int vlo, int vhi) {
    std::uniform_int_distribution<int> V(vlo, vhi), C(-12, 12);
    std::map<Index, Q> c;
    Index n(deg.size(), 0);
    while (true) {
        int x = C(rng);
        if (x) c[n] = Q(x) * pow_p(p, V(rng));
        std::size_t i = 0;
        while (i < deg.size() && ++n[i] > deg[i]) n[i++] = 0;
        if (i == deg.size()) break;
    }
    if (deg.size() == 1) {
        QPoly d(deg[0] + 1);
        for (auto& [k, v] : c) d[k[0]] = v;
        return TruncSeries::polynomial(p, d);
    }
    return TruncSeries::polynomial(p, static_cast<int>(deg.size()), c);
}

bool same_mod_omega(const TruncSeries& a, const TruncSeries& b, const Window& w, const Level& m) {
    return reduce_mod_omega(sub(a, b), w, m).coeffs.empty();
}

// ---------------------------------------------------------------------------

void newton_of_log(Checker& check, Rng&) {
    // breaks t_lo..t_hi of log(1+X) from `terms` coefficients
    auto run = [&](long p, long terms, long lo, long hi) {
        std::string tag = cat("p=", p, " terms=", terms, " ");
        try {
            auto L = padic_log(p, terms);
            Q tmax = log_break(p, lo);
            Q tmin = (log_break(p, hi) + log_break(p, hi + 1)) / 2;
            auto nd = newton(L, tmin, tmax);
            std::size_t want = hi - lo + 1;
            check(nd.break_points.size() == want, tag + cat("break count ", nd.break_points.size()));
            if (nd.break_points.size() != want) return;
            for (long n = lo; n <= hi; ++n) {
                Q t = log_break(p, n);
                check(nd.break_points[hi - n] == t, tag + cat("t_", n, " = ", qs(nd.break_points[hi - n])));
                check(nd.degree_at(t) == ipow(p, n), tag + cat("degree at t_", n, " = ", nd.degree_at(t)));
                check(m_f(L, t) == Q(-n) + Q(1) / Q(p - 1), tag + cat("value at t_", n, " = ", qs(m_f(L, t))));
            }
        } catch (const InsufficientTruncation& e) {
            check(false, tag + e.what());
        }
    };
    auto t0 = Clock::now();
    run(3, 300, 0, 3);
    run(5, 300, 0, 3);  // t_3 needs the degree-p^4 coefficient
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    check(s < 1.0, cat("took ", s, " s"));
    run(5, 300, 0, 2);
    run(5, 626, 0, 3);
}

void omega_closed_forms(Checker& check, Rng&) {
    const long p = 3;
    Q u = default_u(p);
    for (auto [d, e] : std::vector<std::pair<long, long>>{{0, 0}, {0, 1}, {0, 2}, {-1, 1}})
        for (long m = 0; m <= 3; ++m) {
            QPoly om = omega(p, d, e, u, m);
            auto f = TruncSeries::polynomial(p, om);
            auto nd = newton(f, log_break(p, m + 1) / 2, log_break(p, 0));
            for (long n = 0; n <= m; ++n) {
                auto cf = omega_valuation(p, d, e, m, n);
                Q t = log_break(p, n);
                check(Z(nd.degree_at(t)) == cf.degree,
                      cat("[", d, ",", e, "] m=", m, " n=", n, " degree ", nd.degree_at(t), " vs ", cf.degree.get_str()));
                check(m_f(f, t) == cf.value,
                      cat("[", d, ",", e, "] m=", m, " n=", n, " value ", qs(m_f(f, t)), " vs ", qs(cf.value)));
            }
            check(separable(om), cat("[", d, ",", e, "] m=", m, " not separable"));
        }
}

void weierstrass_suite(Checker& check, Rng& rng) {
    std::uniform_int_distribution<int> Dg(0, 6), Df(1, 5);
    const Q radii[] = {Q(0), Q(1, 4), Q(1, 2), Q(1)};
    for (int it = 0; it < 200; ++it) {
        long p = it % 2 ? 5 : 3;
        Q r = radii[(it / 2) % 4];
        auto f = TruncSeries::polynomial(p, random_qpoly(rng, p, Df(rng), -3, 10));
        auto g = TruncSeries::polynomial(p, random_qpoly(rng, p, Dg(rng), -3, 10));
        std::string tag = cat("it=", it, " p=", p, " r=", qs(r));
        auto d = divide(g, f, r);
        check(d.remainder.degree(0) < d.s, tag + " remainder degree");
        // inside the box, g - f q - t is bounded by the certified errors of q and t
        auto res = sub(sub(g, mul(f, d.quotient)), d.remainder);
        Val bound = vmin(vr(f, r).retained_min + vr(d.quotient, r).prec_part, vr(d.remainder, r).prec_part);
        Val vg = vr(g, r).retained_min;
        check(vr(res, r).retained_min >= bound, tag + " identity");
        check(bound > vg, tag + " certificate not above v_r(g)");
        check(check_valuation_identity(g, f, d, r), tag + " valuation identity");
        // uniqueness: the exact f q~ + t~ divides back to (q~, t~)
        TruncSeries qt = TruncSeries::polynomial(p, 1, d.quotient.coeffs);
        TruncSeries tt = TruncSeries::polynomial(p, 1, d.remainder.coeffs);
        auto g2 = add(mul(f, qt), tt);
        auto d2 = divide(g2, f, r);
        auto dq = vr(sub(d2.quotient, qt), r);
        auto dt = vr(sub(d2.remainder, tt), r);
        Val vg2 = vr(g2, r).retained_min, vf = vr(f, r).retained_min;
        check(dq.retained_min >= vmin(dq.prec_part, Val(vg2 - vf)), tag + " quotient uniqueness");
        check(dt.retained_min >= vmin(dt.prec_part, vg2), tag + " remainder uniqueness");
    }
    std::uniform_int_distribution<int> D(0, 5), R(-2, 4);
    for (int it = 0; it < 100; ++it) {
        long p = it % 2 ? 5 : 3;
        auto f = TruncSeries::polynomial(p, random_qpoly(rng, p, D(rng), -3, 10));
        auto g = TruncSeries::polynomial(p, random_qpoly(rng, p, D(rng), -3, 10));
        Q r(R(rng), 4);
        check(leading_index(mul(f, g), r) == leading_index(f, r) + leading_index(g, r),
              cat("d_r additivity it=", it, " r=", qs(r)));
    }
}

struct WindowCase {
    Window w;
    GrowthClass h;
    Level M;
};

void reconstruction_thresholds(Checker& check, Rng& rng) {
    const long p = 3;
    std::vector<WindowCase> cases;
    for (Q h : {Q(0), Q(1), Q(3, 2)}) {
        long fl = floor_q(h).get_si();
        cases.push_back({Window(p, {0}, {fl}), GrowthClass({h}), {3}});
        cases.push_back({Window(p, {-1}, {fl}), GrowthClass({h}), {2}});
        cases.push_back({Window(p, {0, 0}, {fl, 0}), GrowthClass({h, Q(0)}), {2, 1}});
    }
    for (auto& c : cases)
        for (int it = 0; it < 3; ++it) {
            std::string tag = cat("h=", qs(c.h.h[0]), " k=", c.w.k(), " [", c.w.d[0], ",", c.w.e[0], "] it=", it);
            std::vector<long> deg;
            for (int i = 0; i < c.w.k(); ++i) deg.push_back(c.w.width(i) * ipow(p, c.M[i]) + 3);
            auto f = random_series(rng, p, deg, -2, 3);
            auto s = system_from_series(f, c.h, c.w, c.M);
            check(check_compatibility(s), tag + " compatibility");
            auto g = reconstruct(s);
            for (auto& [m, r] : s.levels) check(same_mod_omega(g, f, c.w, m), tag + " reconstruct o extract");

            auto K = alpha_beta_constants(c.h, c.w);
            Val vf = vH(f, c.h).retained_min;
            Z up = ceil_nonneg(Val(Q(K.alpha)) - vf);
            auto fa = scale(f, pow_p(p, up.get_si()));
            check(vH(fa, c.h).retained_min >= Val(Q(K.alpha)), tag + " alpha scaling");
            check(is_integral(system_from_series(fa, c.h, c.w, c.M)), tag + " vH >= alpha gives an integral system");

            Z lift = ceil_nonneg(Val(0) - s.denom_bound);
            auto si = scale(s, pow_p(p, lift.get_si()));
            check(is_integral(si), tag + " integral scaling");
            check(vH(reconstruct(si), c.h).retained_min >= Val(Q(K.beta)), tag + " integral system gives vH >= beta");
        }
}

void omega_vanishing(Checker& check, Rng& rng) {
    const long p = 3;
    GrowthClass h({Q(1)});
    std::vector<long> d{0};
    for (int it = 0; it < 50; ++it) {
        long m = it % 3;
        auto om = TruncSeries::polynomial(p, omega(p, 0, 1, default_u(p), m));
        auto g = random_series(rng, p, {8}, 0, 2);
        auto f = mul(om, g);
        check(vanishing_test(f, h, d, m), cat("it=", it, " m=", m, " passes through m"));
        check(vanishing_depth(f, h, d, m + 1) == m + 1, cat("it=", it, " m=", m, " fails at m+1"));
    }
    check(vanishing_depth(TruncSeries::polynomial(p, QPoly{Q(1)}), h, d, 3) == 0, "f = 1 fails at level 0");
}

void component_lifting(Checker& check, Rng& rng) {
    const long p = 3;
    Window w(p, {0}, {2});
    GrowthClass h({Q(1)});
    check(c_window(0, 2, p) == 6, "c^[0,2] at p = 3");
    check(c_constant(w) == 6, "c of the window [0,2]");
    for (int it = 0; it < 50; ++it) {
        std::string tag = cat("it=", it);
        auto f = random_series(rng, p, {30}, -1, 3);
        auto s0 = system_from_series(f, h, w, {2});
        auto s = scale(s0, pow_p(p, ceil_nonneg(Val(0) - s0.denom_bound).get_si()));
        auto comps = extract_components(s);
        long n = minimal_slack(comps);
        auto lifted = lift_components(comps, n);
        for (auto& [m, r] : s.levels) check(same_mod_omega(lifted.at(m), r, w, m), tag + " relift");
        check(lifted.denom_bound >= Val(Q(-(c_constant(w) + n))), tag + " denominator bound");
        if (it % 10 == 0) {
            ComponentFamily adv = comps;
            auto& c1 = adv.comps.at({1});
            for (auto& [m, r] : c1.levels) r = add(r, TruncSeries::constant(p, 1, pow_p(p, -12)));
            c1.refresh_bound();
            bool thrown = false;
            try {
                lift_components(adv, n);
            } catch (const HypothesisFailed&) {
                thrown = true;
            }
            check(thrown, tag + " adversarial components lifted");
        }
    }
}

void system_distribution(Checker& check, Rng& rng) {
    const long p = 3;
    std::vector<WindowCase> cases{
        {Window(p, {0}, {0}), GrowthClass({Q(0)}), {2}},
        {Window(p, {0}, {1}), GrowthClass({Q(1)}), {2}},
        {Window(p, {0}, {2}), GrowthClass({Q(1)}), {2}},
        {Window(p, {-1}, {1}), GrowthClass({Q(3, 2)}), {2}},
        {Window(p, {0, 0}, {1, 0}), GrowthClass({Q(1), Q(0)}), {2, 1}},
        {Window(p, {0, 1}, {0, 2}), GrowthClass({Q(0), Q(1)}), {1, 2}},
    };
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        auto& c = cases[ci];
        std::vector<long> deg;
        for (int i = 0; i < c.w.k(); ++i) deg.push_back(c.w.width(i) * ipow(p, c.M[i]) + 2);
        auto s = system_from_series(random_series(rng, p, deg, -1, 3), c.h, c.w, c.M);
        auto mu = system_to_distribution(s);
        check(check_additivity(mu), cat("case ", ci, " additivity"));
        for (auto& kappa : specializations(c.w, c.M))
            check(interpolate(s, kappa) == integrate(mu, kappa), cat("case ", ci, " interpolation"));
    }
    for (int it = 0; it < 30; ++it) {
        auto& c = cases[it % cases.size()];
        std::string tag = cat("integrality it=", it);
        std::vector<long> deg;
        for (int i = 0; i < c.w.k(); ++i) deg.push_back(c.w.width(i) * ipow(p, c.M[i]) + 2);
        auto s = system_from_series(random_series(rng, p, deg, -2, 3), c.h, c.w, c.M);
        auto si = scale(s, pow_p(p, ceil_nonneg(Val(0) - s.denom_bound).get_si()));
        check(vhde(system_to_distribution(si)).retained_min >= Val(0), tag + " integral system has vhde >= 0");
        auto mu = system_to_distribution(s);
        Q c0(c_constant(c.w));
        auto mc = scale(mu, pow_p(p, ceil_nonneg(Val(c0) - vhde(mu).retained_min).get_si()));
        check(vhde(mc).retained_min >= Val(c0), tag + " scaling");
        check(is_integral(distribution_to_system(mc)), tag + " vhde >= c gives an integral system");
    }
    for (int it = 0; it < 6; ++it) {
        Window w(p, {0}, {2});
        Q hv = it % 2 ? Q(1) : Q(3, 2);
        GrowthClass h({hv});
        auto s = system_from_series(random_series(rng, p, {3 * 9 + 2}, -1, 3), h, w, {2});
        auto mu = system_to_distribution(s);
        std::vector<long> b{it % 3 == 2 ? 0L : 1L}, e{2};
        std::string tag = cat("window it=", it, " [", b[0], ",2]");
        auto small = restrict_window(mu, b, e);
        auto big = extend_window(small, {0}, {2});
        check(check_additivity(big), tag + " extension is additive");
        auto back = restrict_window(big, b, e);
        check(back.raw == small.raw, tag + " restriction of the extension");
        check(vhde(back).retained_min == vhde(small).retained_min, tag + " vhde preserved");
    }
}

void measure_iwasawa(Checker& check, Rng& rng) {
    const long p = 3;
    struct Case {
        Window w;
        Level M;
    };
    std::vector<Case> cases{{Window(p, {0}, {1}), {3}}, {Window(p, {0, 0}, {1, 0}), {2, 1}}};
    std::uniform_int_distribution<int> C(-9, 9);
    for (auto& c : cases) {
        GrowthClass h(std::vector<Q>(c.w.k(), Q(0)));
        auto specs = specializations(c.w, c.M);
        for (int it = 0; it < 6; ++it) {
            std::vector<long> x;
            for (long m : c.M) x.push_back(std::uniform_int_distribution<long>(0, ipow(p, m) - 1)(rng));
            auto dirac = dirac_combination(c.w, h, c.M, {{x, Q(1)}});
            auto g = measure_to_iwasawa(dirac, c.M);
            check(g.coeffs.size() == 1 && g.coeffs.begin()->first == x, cat("Dirac at ", x[0], " group ring image"));
            check(iwasawa_to_measure(g, c.w).raw == dirac.raw, cat("Dirac at ", x[0], " round trip"));
        }
        for (int it = 0; it < 15; ++it) {
            GroupRingElement g{p, c.M, {}};
            for_each_coset(p, c.M, [&](const Coset& a) {
                int v = C(rng);
                if (v) g.coeffs[a] = Q(v) * pow_p(p, std::uniform_int_distribution<int>(0, 2)(rng));
            });
            auto mu = iwasawa_to_measure(g, c.w);
            check(measure_to_iwasawa(mu, c.M) == g, cat("random element it=", it, " round trip"));
            for (auto& kappa : specs) check(specialize(g, c.w, kappa) == integrate(mu, kappa), cat("kappa(h_mu) it=", it));
        }
    }
}

void eisenstein_layer(Checker& check, Rng& rng) {
    auto one = DirichletCharacter::trivial(1);
    for (long N : {1L, 3L, 4L, 5L, 7L, 8L, 9L, 12L})
        for (auto& psi : DirichletCharacter::all(N))
            for (long k = 1; k <= 6; ++k) {
                if (psi.parity() != (k % 2 ? -1 : 1)) continue;
                std::string tag = cat("N=", N, " k=", k, " psi order ", psi.order());
                auto F = eisen_F_qexp(k, 0, one, psi, 50);
                for (long n = 1; n <= 50; ++n) {
                    XPoly want{oracle::divisor_sum(n, k, psi)};
                    xpoly::trim(want);
                    check(F.coeffs[n] == want, cat(tag, " n=", n));
                }
                // (4 pi y)^{-1} = -X carries phi(N)/(2N) only for weight 2 and trivial psi of modulus 1
                XPoly c0{oracle::L_value(k, psi) / Cyclo(2)};
                if (k == 2 && N == 1) c0.push_back(Cyclo(Q(-1, 2)));
                xpoly::trim(c0);
                check(F.coeffs[0] == c0, tag + " constant term");
                check(dirichlet_L_nonpositive(k, psi) == oracle::L_value(k, psi), tag + " L value");
            }

    const long Qt = 30;
    for (long N : {1L, 3L, 9L}) {
        auto chars = DirichletCharacter::all(N);
        for (long k = 1; k <= 5; ++k)
            for (long r = 0; r < k; ++r) {
                std::map<std::pair<long, long>, QExpansion> E;
                for (long a = 0; a < N; ++a)
                    for (long b = 0; b < N; ++b)
                        if (N == 1 || (gcd_l(a, N) == 1 && gcd_l(b, N) == 1)) E[{a, b}] = eisen_tilde_qexp(k, N, r, a, b, Qt);
                for (auto& p1 : chars)
                    for (auto& p2 : chars) {
                        QExpansion lhs(Qt);
                        for (auto& [ab, e] : E) lhs = add(lhs, scale(e, p1(ab.first) * p2(ab.second)));
                        auto rhs = scale(eisen_F_qexp(k, r, p2, p1, Qt), Cyclo(2));
                        check(lhs == rhs, cat("tilde-F N=", N, " k=", k, " r=", r));
                        check(lhs.respects_order(), cat("order bound N=", N, " k=", k, " r=", r));
                    }
            }
    }

    std::uniform_int_distribution<int> C(-6, 6), Dg(0, 3), M(-3, 6);
    for (int it = 0; it < 100; ++it) {
        long deg = Dg(rng), Q = 40;
        QExpansion h(Q, deg);
        for (auto& c : h.coeffs) {
            c.resize(deg + 1);
            for (auto& x : c) x = Cyclo(C(rng)) + Cyclo(C(rng)) * Cyclo::zeta(3, 1);
            xpoly::trim(c);
        }
        long m = M(rng), p = it % 2 ? 3 : 5;
        check(iota(delta_m(h, m)) == d_op(iota(h)), cat("iota delta it=", it));
        check(iota(hecke_Tp(h, p)) == hecke_Tp(iota(h), p), cat("iota T_p it=", it));
    }
}

GammaQExpansion random_family(Rng& rng, long top) {
    std::uniform_int_distribution<int> C(-3, 3), J(-6, 6);
    GammaQExpansion G(3, top, 0);
    for (long n = 0; n <= top; ++n)
        for (int t = 0; t < 2; ++t) {
            long c = C(rng);
            if (c) G.coeffs[n][Q(1 + 3 * J(rng))] = {Cyclo(c)};
        }
    return G;
}

void interpolation_identities(Checker& check, Rng& rng) {
    const long p = 3, Qt = 30;
    std::vector<EisensteinDatum> data(3);
    data[0].psi = DirichletCharacter::teichmuller(3);
    data[0].xi = DirichletCharacter::trivial(3);
    data[1].psi = DirichletCharacter::trivial(3);
    data[1].xi = DirichletCharacter::teichmuller(3);
    data[2].psi = DirichletCharacter::from_generators(9, {1});
    data[2].m_psi = 1;
    data[2].xi = DirichletCharacter::trivial(3);
    const std::vector<WeightPair> weights{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 2}};
    auto mod3 = DirichletCharacter::all(3);
    auto mod9 = DirichletCharacter::all(9);
    long nonzero = 0, total = 0;
    for (int g = 0; g < 10; ++g) {
        EisensteinDatum D = data[g % 3];
        D.G = random_family(rng, p * Qt + p - 1);
        std::vector<std::pair<DirichletCharacter, long>> phis{{mod3[0], 0}, {mod3[1], 0}, {mod9[1 + g % 5], 1}};
        std::vector<std::pair<long, long>> finite{{0, 0}, {1 + g % 2, 1}};
        for (auto& i : weights)
            for (auto& [phi1, m1] : phis)
                for (auto [t2, m2] : finite) {
                    auto s = interpolation_sides(D, i, phi1, m1, t2, m2, Qt);
                    std::string tag = cat("G=", g, " i=(", i[0], ",", i[1], ") phi1 mod ", phi1.modulus(), " t2=", t2, " m2=", m2);
                    check(s.lhs == s.rhs, tag);
                    ++total;
                    if (!(s.rhs == QExpansion(Qt))) ++nonzero;
                }
        const auto& i = weights[g % weights.size()];
        check(distribution_property_check(D, i, 0, g % 2, 12), cat("distribution G=", g));
    }
    check(2 * nonzero >= total, cat("only ", nonzero, " of ", total, " interpolation checks were nonzero"));

    std::uniform_int_distribution<long> E(0, 4), Mx(0, 2), Lx(0, 3), Big(0, 200);
    for (int it = 0; it < 200; ++it) {
        long m1 = Mx(rng), L = Lx(rng), e = E(rng);
        long P1 = ipow(p, m1 + 1), PL = ipow(p, L + 1), depth = std::min(L, m1) + 1;
        auto unit = [&](long mod) {
            long x;
            do x = 1 + Big(rng) % (mod * 5); while (x % p == 0);
            return x;
        };
        long a1 = unit(P1), b = unit(P1);
        long t = b + P1 * Big(rng);
        long n1 = mod_l(a1 * b % P1 * b, P1) + P1 * Big(rng);
        // n2 = t s with n2 = -n1 mod p^{L+1}
        long s = mod_l(-n1 % PL * inv_mod_l(mod_l(t, PL), PL), PL) + PL * Big(rng);
        Q n2 = Q(t) * Q(s);
        Q chi1 = Q(a1) + Q(P1 * Big(rng));
        check(admissible_congruence_check(p, chi1, Q(t), n2, e, depth),
              cat("congruence it=", it, " m1=", m1, " L=", L, " e=", e));
    }
}

Cyclo random_cyclo(Rng& rng, bool nonzero) {
    std::uniform_int_distribution<int> C(-4, 4), F(0, 2);
    static const long fields[] = {1, 3, 4};
    while (true) {
        long n = fields[F(rng)];
        Cyclo x = Cyclo(C(rng)) + Cyclo(C(rng)) * Cyclo::zeta(n, 1);
        if (!nonzero || !x.is_zero()) return x;
    }
}

void euler_factor_copy(Checker& check, Rng& rng) {
    std::uniform_int_distribution<int> P(0, 2), S(-2, 3), O(0, 2), B(0, 1), Z(0, 3);
    static const long primes[] = {3, 5, 7};
    int special_branch = 0;
    for (int it = 0; it < 100; ++it) {
        EulerInputs in;
        in.p = primes[P(rng)];
        in.s = S(rng);
        in.alpha_f = random_cyclo(rng, true);
        in.alpha_f_prime = random_cyclo(rng, false);
        in.alpha_g = random_cyclo(rng, true);
        in.alpha_g_prime = random_cyclo(rng, false);
        in.beta_g = random_cyclo(rng, true);
        in.ord_c_phi = O(rng);
        in.ord_c_xiphi = O(rng);
        in.phi0_p = in.ord_c_phi > 0 && Z(rng) ? Cyclo(0) : random_cyclo(rng, false);
        in.xiphi0_p = Z(rng) ? Cyclo(0) : random_cyclo(rng, false);
        in.special = it % 3 == 0 || B(rng);
        if (in.special && in.ord_c_phi == 0) ++special_branch;
        check(euler_factor(in).value() == oracle::euler_factor(in), cat("random inputs it=", it));
    }
    check(special_branch >= 10 && special_branch <= 90, cat("branch coverage ", special_branch));

    EulerInputs ram;
    ram.alpha_f = Cyclo(2);
    ram.alpha_f_prime = Cyclo(3);
    ram.alpha_g = Cyclo(5);
    ram.alpha_g_prime = Cyclo(7);
    ram.beta_g = Cyclo(11);
    ram.ord_c_phi = 1;
    ram.ord_c_xiphi = 1;
    auto E = euler_factor(ram);
    check(E.E2 == Cyclo(1) && E.E3 == Cyclo(1), "ramified characters give E2 = E3 = 1");
    check(E.E1 == Cyclo(Q(1, 30)) * Cyclo(Q(1, 66)), "ramified E1 is the pure power");  // s = 0, p = 3
}

using Body = void (*)(Checker&, Rng&);

const std::vector<std::pair<std::string, Body>>& table() {
    static const std::vector<std::pair<std::string, Body>> t{
        {"Newton data of log(1+X)", newton_of_log},
        {"Omega closed forms", omega_closed_forms},
        {"Weierstrass division suite", weierstrass_suite},
        {"system reconstruction and integrality thresholds", reconstruction_thresholds},
        {"vanishing test on Omega multiples", omega_vanishing},
        {"component lifting", component_lifting},
        {"system and distribution correspondence", system_distribution},
        {"measures and group-ring elements", measure_iwasawa},
        {"Eisenstein layer", eisenstein_layer},
        {"two-variable interpolation identities", interpolation_identities},
        {"Euler factor", euler_factor_copy},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (auto& [name, body] : table()) n.push_back(name);
        return n;
    }();
    return names;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > static_cast<int>(table().size())) throw std::out_of_range("no criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.name = table()[id - 1].first;
    Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
    Checker check{r};
    auto t0 = Clock::now();
    try {
        table()[id - 1].second(check, rng);
    } catch (const std::exception& e) {
        ++r.failures;
        r.witnesses.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.pass = r.failures == 0 && r.checks > 0;
    return r;
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<int> ids = cfg.only;
    if (ids.empty())
        for (int i = 1; i <= static_cast<int>(table().size()); ++i) ids.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : ids) {
        out.push_back(run_criterion(id, cfg.seed));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace iw::suite
