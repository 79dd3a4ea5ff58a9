#include "iw/distribution.hpp"

namespace iw {

namespace {

long ipow(long p, long m) { return zpow(Z(p), m).get_si(); }

bool contains(const Window& w, const Exponent& j) {
    for (int t = 0; t < w.k(); ++t)
        if (j[t] < w.d[t] || j[t] > w.e[t]) return false;
    return true;
}

// chi(gamma^a)^n = prod u_t^{n_t a_t}
Q chi_pow(const Window& w, const Coset& a, const std::vector<long>& n) {
    Q r = 1;
    for (int t = 0; t < w.k(); ++t) r *= qpow(w.u[t], n[t] * a[t]);
    return r;
}

void check_same_group(const Distribution& a, const Distribution& b) {
    if (!(a.window == b.window)) throw IncompatibleShapes("distributions on different windows");
    if (a.M != b.M) throw LevelMismatch("distributions stored to different levels");
}

void check_level(const Level& m, const Level& M) {
    if (m.size() != M.size()) throw IncompatibleShapes("level vector size");
    for (std::size_t t = 0; t < m.size(); ++t)
        if (m[t] < 0 || m[t] > M[t]) throw LevelMismatch("level not stored");
}

}  // namespace

const Q& Distribution::raw_moment(const Level& m, const Coset& a, const Exponent& j) const {
    auto it = raw.find(MomentKey{m, a, j});
    if (it == raw.end()) throw LevelMismatch("moment not stored");
    return it->second;
}

Q Distribution::moment(const Level& m, const Coset& a, const Exponent& i) const {
    const Window& w = window;
    Exponent zero(k(), 0), span(k());
    for (int t = 0; t < k(); ++t) span[t] = i[t] - w.d[t];
    Q acc = 0;
    // expand prod (chi - chi(a))^{i-d} chi^d in raw moments chi^{d+l}
    for_each_exponent(zero, span, [&](const std::vector<long>& l) {
        Q c = 1;
        Exponent j(k());
        for (int t = 0; t < k(); ++t) {
            c *= Q(binom(span[t], l[t]));
            if ((span[t] - l[t]) % 2) c = -c;
            c *= qpow(w.u[t], a[t] * (span[t] - l[t]));
            j[t] = w.d[t] + l[t];
        }
        acc += c * raw_moment(m, a, j);
    });
    return acc;
}

void for_each_coset(long p, const Level& m, const std::function<void(const Coset&)>& fn) {
    Coset a(m.size(), 0);
    std::vector<long> n(m.size());
    for (std::size_t t = 0; t < m.size(); ++t) n[t] = ipow(p, m[t]);
    while (true) {
        fn(a);
        std::size_t t = 0;
        while (t < m.size() && ++a[t] >= n[t]) a[t++] = 0;
        if (t == m.size()) break;
    }
}

Distribution from_top_level(const Window& w, const GrowthClass& h, const Level& M,
                            const std::function<Q(const Coset&, const Exponent&)>& top) {
    if (static_cast<int>(M.size()) != w.k() || h.k() != w.k()) throw IncompatibleShapes("size mismatch");
    Distribution mu;
    mu.window = w;
    mu.growth = h;
    mu.M = M;
    std::vector<Level> levels;
    for_each_level(M, [&](const Level& m) { levels.push_back(m); });
    for (auto& m : levels)
        for_each_coset(w.p, m, [&](const Coset& a) {
            for_each_exponent(w.d, w.e, [&](const Exponent& j) { mu.raw[MomentKey{m, a, j}] = 0; });
        });
    for_each_coset(w.p, M, [&](const Coset& b) {
        for_each_exponent(w.d, w.e, [&](const Exponent& j) {
            Q v = top(b, j);
            if (v == 0) return;
            for (auto& m : levels) {
                Coset a(b.size());
                for (std::size_t t = 0; t < b.size(); ++t) a[t] = b[t] % ipow(w.p, m[t]);
                mu.raw[MomentKey{m, a, j}] += v;
            }
        });
    });
    return mu;
}

Distribution dirac_combination(const Window& w, const GrowthClass& h, const Level& M,
                               const std::map<std::vector<long>, Q>& points) {
    std::map<Coset, std::vector<std::pair<std::vector<long>, Q>>> by_coset;
    for (auto& [x, c] : points) {
        if (static_cast<int>(x.size()) != w.k()) throw IncompatibleShapes("point dimension");
        Coset a(x.size());
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (x[t] < 0) throw Error("Dirac points need non-negative exponents");
            a[t] = x[t] % ipow(w.p, M[t]);
        }
        by_coset[a].emplace_back(x, c);
    }
    return from_top_level(w, h, M, [&](const Coset& a, const Exponent& j) {
        auto it = by_coset.find(a);
        if (it == by_coset.end()) return Q(0);
        Q s = 0;
        for (auto& [x, c] : it->second) s += c * chi_pow(w, x, j);
        return s;
    });
}

bool check_additivity(const Distribution& mu) {
    const Window& w = mu.window;
    bool ok = true;
    for_each_level(mu.M, [&](const Level& m) {
        for (int t = 0; t < w.k() && ok; ++t) {
            if (m[t] >= mu.M[t]) continue;
            Level up = m;
            ++up[t];
            long step = ipow(w.p, m[t]);
            for_each_coset(w.p, m, [&](const Coset& a) {
                for_each_exponent(w.d, w.e, [&](const Exponent& j) {
                    Q s = 0;
                    Coset b = a;
                    for (long r = 0; r < w.p; ++r) {
                        b[t] = a[t] + r * step;
                        s += mu.raw_moment(up, b, j);
                    }
                    if (s != mu.raw_moment(m, a, j)) ok = false;
                });
            });
        }
    });
    return ok;
}

ValuationReport vhde(const Distribution& mu) {
    const Window& w = mu.window;
    ValuationReport rep;
    for_each_level(mu.M, [&](const Level& m) {
        for_each_coset(w.p, m, [&](const Coset& a) {
            for_each_exponent(w.d, w.e, [&](const Exponent& i) {
                Q c = mu.moment(m, a, i);
                if (c == 0) return;
                Q shift = 0;
                for (int t = 0; t < w.k(); ++t) shift += (mu.growth.h[t] - Q(i[t] - w.d[t])) * Q(m[t]);
                Val v = ordp(c, w.p) + Val(shift);
                if (v < rep.retained_min) {
                    rep.retained_min = v;
                    rep.argmin = m;
                }
            });
        });
    });
    // only the stored levels enter
    rep.tail_bound = Val::inf();
    rep.exact = true;
    return rep;
}

Distribution scale(const Distribution& mu, const Q& c) {
    Distribution out = mu;
    for (auto& [key, v] : out.raw) v *= c;
    return out;
}

Distribution add(const Distribution& a, const Distribution& b) {
    check_same_group(a, b);
    Distribution out = a;
    for (auto& [key, v] : b.raw) out.raw[key] += v;
    return out;
}

Distribution convolve(const Distribution& a, const Distribution& b) {
    check_same_group(a, b);
    if (a.growth.k() != b.growth.k()) throw IncompatibleShapes("growth sizes differ");
    const Window& w = a.window;
    Distribution out = a;
    for (int t = 0; t < w.k(); ++t) out.growth.h[t] = a.growth.h[t] + b.growth.h[t];
    for (auto& [key, v] : out.raw) v = 0;
    for_each_level(a.M, [&](const Level& m) {
        std::vector<long> n(m.size());
        for (std::size_t t = 0; t < m.size(); ++t) n[t] = ipow(w.p, m[t]);
        for_each_exponent(w.d, w.e, [&](const Exponent& j) {
            std::vector<std::pair<Coset, Q>> lhs, rhs;
            for_each_coset(w.p, m, [&](const Coset& c) {
                const Q& x = a.raw_moment(m, c, j);
                if (x != 0) lhs.emplace_back(c, x);
                const Q& y = b.raw_moment(m, c, j);
                if (y != 0) rhs.emplace_back(c, y);
            });
            Coset s(m.size());
            for (auto& [c1, x] : lhs)
                for (auto& [c2, y] : rhs) {
                    for (std::size_t t = 0; t < m.size(); ++t) s[t] = (c1[t] + c2[t]) % n[t];
                    out.raw[MomentKey{m, s, j}] += x * y;
                }
        });
    });
    return out;
}

// ---------------------------------------------------------------------------

Cyclo Specialization::phi(long p, const Coset& a) const {
    Cyclo r(1);
    for (std::size_t t = 0; t < level.size(); ++t) {
        if (level[t] == 0) continue;
        long n = ipow(p, level[t]);
        r *= Cyclo::zeta(n, mod_l(twist[t] * a[t], n));
    }
    return r;
}

std::vector<Specialization> specializations(const Window& w, const Level& M) {
    std::vector<Specialization> out;
    for_each_exponent(w.d, w.e, [&](const Exponent& wt) {
        for_each_level(M, [&](const Level& lv) {
            // primitive twists only, so that lv is the exact level
            std::vector<long> lo(lv.size(), 0), hi(lv.size());
            for (std::size_t t = 0; t < lv.size(); ++t) hi[t] = ipow(w.p, lv[t]) - 1;
            for_each_exponent(lo, hi, [&](const std::vector<long>& tw) {
                for (std::size_t t = 0; t < lv.size(); ++t)
                    if (lv[t] > 0 && tw[t] % w.p == 0) return;
                out.push_back(Specialization{wt, lv, tw});
            });
        });
    });
    return out;
}

Cyclo integrate(const Distribution& mu, const Specialization& kappa) {
    check_level(kappa.level, mu.M);
    if (!contains(mu.window, kappa.weight)) throw InvalidCharacter("weight outside the window");
    Cyclo acc(0);
    for_each_coset(mu.window.p, kappa.level, [&](const Coset& a) {
        const Q& v = mu.raw_moment(kappa.level, a, kappa.weight);
        if (v != 0) acc += kappa.phi(mu.window.p, a) * Cyclo(v);
    });
    return acc;
}

Cyclo interpolate(const WindowSystem& s, const Specialization& kappa) {
    check_level(kappa.level, s.M);
    const Window& w = s.window;
    if (!contains(w, kappa.weight)) throw InvalidCharacter("weight outside the window");
    std::vector<Cyclo> pt;
    for (int t = 0; t < w.k(); ++t) {
        long n = ipow(w.p, kappa.level[t]);
        Cyclo z = kappa.level[t] == 0 ? Cyclo(1) : Cyclo::zeta(n, mod_l(kappa.twist[t], n));
        pt.push_back(Cyclo(qpow(w.u[t], kappa.weight[t])) * z - Cyclo(1));
    }
    return eval(s.at(kappa.level), pt).value;
}

// ---------------------------------------------------------------------------

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    if (p != o.p || m != o.m) throw LevelMismatch("group ring elements of different levels");
    GroupRingElement r{p, m, {}};
    Coset s(m.size());
    for (auto& [a, x] : coeffs)
        for (auto& [b, y] : o.coeffs) {
            for (std::size_t t = 0; t < m.size(); ++t) s[t] = (a[t] + b[t]) % ipow(p, m[t]);
            r.coeffs[s] += x * y;
        }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();) it = it->second == 0 ? r.coeffs.erase(it) : std::next(it);
    return r;
}

GroupRingElement measure_to_iwasawa(const Distribution& mu, const Level& m) {
    for (auto& h : mu.growth.h)
        if (h != 0) throw Error("group ring elements correspond to measures (h = 0)");
    check_level(m, mu.M);
    Exponent zero(mu.k(), 0);
    if (!contains(mu.window, zero)) throw InvalidCharacter("the window must contain the exponent 0");
    GroupRingElement g{mu.window.p, m, {}};
    for_each_coset(mu.window.p, m, [&](const Coset& a) {
        const Q& v = mu.raw_moment(m, a, zero);
        if (v != 0) g.coeffs[a] = v;
    });
    return g;
}

Distribution iwasawa_to_measure(const GroupRingElement& g, const Window& w) {
    return dirac_combination(w, GrowthClass(std::vector<Q>(w.k(), Q(0))), g.m, g.coeffs);
}

Cyclo specialize(const GroupRingElement& g, const Window& w, const Specialization& kappa) {
    check_level(kappa.level, g.m);
    Cyclo acc(0);
    for (auto& [a, c] : g.coeffs) acc += kappa.phi(g.p, a) * Cyclo(c * chi_pow(w, a, kappa.weight));
    return acc;
}

// ---------------------------------------------------------------------------

Distribution system_to_distribution(const WindowSystem& s) {
    const Window& w = s.window;
    int k = w.k();
    std::map<MomentKey, Q> raw;
    for_each_level(s.M, [&](const Level& m) {
        for_each_exponent(w.d, w.e, [&](const Exponent& i) {
            TruncSeries r = reduce_mod_omega(s.at(m), w.component(i), m);
            // coefficients in Y = 1 + X; Y^l stands for u^{il} [gamma^l]
            TruncSeries P = shift(r, std::vector<Q>(k, Q(-1)));
            for_each_coset(w.p, m, [&](const Coset& a) {
                Q c = P.coeff(Index(a.begin(), a.end()));
                raw[MomentKey{m, a, i}] = c == 0 ? Q(0) : Q(c * chi_pow(w, a, i));
            });
            for (auto& [n, c] : P.coeffs)
                for (int t = 0; t < k; ++t)
                    if (n[t] >= ipow(w.p, m[t])) throw IncompatibleSystem("remainder degree exceeds the level");
        });
    });
    Distribution mu;
    mu.window = w;
    mu.growth = s.growth;
    mu.M = s.M;
    mu.raw = std::move(raw);
    return mu;
}

WindowSystem distribution_to_system(const Distribution& mu) {
    const Window& w = mu.window;
    int k = w.k();
    WindowSystem s;
    s.window = w;
    s.growth = mu.growth;
    s.M = mu.M;
    for_each_level(mu.M, [&](const Level& m) {
        std::map<std::vector<long>, TruncSeries> parts;
        for_each_exponent(w.d, w.e, [&](const Exponent& i) {
            std::map<Index, Q> c;
            std::vector<long> neg(k);
            for (int t = 0; t < k; ++t) neg[t] = -i[t];
            for_each_coset(w.p, m, [&](const Coset& a) {
                const Q& v = mu.raw_moment(m, a, i);
                if (v != 0) c[Index(a.begin(), a.end())] = v * chi_pow(w, a, neg);
            });
            TruncSeries P = TruncSeries::polynomial(w.p, k, c);
            parts.emplace(i, shift(P, std::vector<Q>(k, Q(1))));
        });
        s.levels[m] = crt_combine(w, m, parts);
    });
    s.refresh_bound();
    return s;
}

Distribution restrict_window(const Distribution& mu, const std::vector<long>& b, const std::vector<long>& c) {
    Distribution out;
    out.window = mu.window.sub(b, c);
    out.growth = mu.growth;
    out.M = mu.M;
    for (auto& [key, v] : mu.raw)
        if (contains(out.window, key.j)) out.raw.emplace(key, v);
    return out;
}

Distribution extend_window(const Distribution& mu, const std::vector<long>& d, const std::vector<long>& e) {
    const Window& src = mu.window;
    int k = src.k();
    for (int t = 0; t < k; ++t) {
        if (Z(src.e[t] - src.d[t]) < floor_q(mu.growth.h[t])) throw WindowTooNarrow("c - b < floor(h)");
        if (d[t] > src.d[t] || e[t] < src.e[t]) throw Error("target window must contain the source window");
    }
    Window w(src.p, d, e, src.u);
    Exponent zero(k, 0), span(k);
    for (int t = 0; t < k; ++t) span[t] = src.e[t] - src.d[t];
    // on each top-level coset expand chi^{j - b} to order c - b around chi(a)
    return from_top_level(w, mu.growth, mu.M, [&](const Coset& a, const Exponent& j) {
        if (contains(src, j)) return mu.raw_moment(mu.M, a, j);
        Q acc = 0;
        for_each_exponent(zero, span, [&](const std::vector<long>& tau) {
            Q c = 1;
            Exponent i(k);
            for (int t = 0; t < k; ++t) {
                long n = j[t] - src.d[t];
                c *= qbinom(Q(n), tau[t]) * qpow(src.u[t], a[t] * (n - tau[t]));
                i[t] = src.d[t] + tau[t];
            }
            if (c != 0) acc += c * mu.moment(mu.M, a, i);
        });
        return acc;
    });
}

Cyclo integrate_locally_polynomial(const Distribution& mu, const LocallyPolynomial& f) {
    check_level(f.m, mu.M);
    Cyclo acc(0);
    for (auto& [a, terms] : f.coeffs)
        for (auto& [i, c] : terms) {
            if (!contains(mu.window, i)) throw InvalidCharacter("exponent outside the window");
            if (!c.is_zero()) acc += c * Cyclo(mu.moment(f.m, a, i));
        }
    return acc;
}

LocallyPolynomial as_locally_polynomial(const Window& w, const Specialization& kappa) {
    if (!contains(w, kappa.weight)) throw InvalidCharacter("weight outside the window");
    int k = w.k();
    LocallyPolynomial f;
    f.m = kappa.level;
    Exponent zero(k, 0), span(k);
    for (int t = 0; t < k; ++t) span[t] = kappa.weight[t] - w.d[t];
    for_each_coset(w.p, kappa.level, [&](const Coset& a) {
        Cyclo ph = kappa.phi(w.p, a);
        auto& terms = f.coeffs[a];
        // chi^w = chi^d (chi - chi(a) + chi(a))^{w - d}
        for_each_exponent(zero, span, [&](const std::vector<long>& tau) {
            Q c = 1;
            Exponent i(k);
            for (int t = 0; t < k; ++t) {
                c *= Q(binom(span[t], tau[t])) * qpow(w.u[t], a[t] * (span[t] - tau[t]));
                i[t] = w.d[t] + tau[t];
            }
            terms[i] = ph * Cyclo(c);
        });
    });
    return f;
}

}  // namespace iw
