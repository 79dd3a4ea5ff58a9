#pragma once

#include <vector>

#include "iw/series.hpp"
#include "iw/weierstrass.hpp"

namespace iw {

struct GrowthClass {
    std::vector<Q> h;
    GrowthClass() = default;
    explicit GrowthClass(std::vector<Q> v);
    int k() const { return static_cast<int>(h.size()); }
};

/// Exponent window [d, e] per variable together with u_i = chi_i(gamma_i).
struct Window {
    long p = 3;
    std::vector<long> d, e;
    std::vector<Q> u;

    Window() = default;
    Window(long p, std::vector<long> d, std::vector<long> e);
    Window(long p, std::vector<long> d, std::vector<long> e, std::vector<Q> u);
    int k() const { return static_cast<int>(d.size()); }
    long width(int i) const { return e[i] - d[i] + 1; }
    Window component(const std::vector<long>& i) const;  // the window [i, i]
    Window sub(const std::vector<long>& b, const std::vector<long>& c) const;
    bool operator==(const Window& o) const { return p == o.p && d == o.d && e == o.e && u == o.u; }
};

Q default_u(long p);

struct WindowPoly {
    Window window;
    std::vector<long> level;
    std::vector<QPoly> polys;  // Omega_{m_i}^{[d_i, e_i]}(X_i)
    std::vector<TruncSeries> series() const;
};

long ell(long i, long p);
long ell(const Z& i, long p);

ValuationReport vH(const TruncSeries& f, const GrowthClass& h);

/// inf_n v_{t_n}(f) + <h, n>; depth < 0 picks the smallest depth whose tail estimate certifies the value.
ValuationReport vH_prime(const TruncSeries& f, const GrowthClass& h, long depth = -1, long max_depth = 64);

/// Rigorous enclosure of a real number by two rationals.
struct QInterval {
    Q lo, hi;
};

/// max{0, h - (h / log p)(1 + log(log p / ((p-1) h)))}; zero for h = 0.
QInterval log_order_excess(const Q& h, long p, long bits = 256);

/// Windowless constants of the comparison vH + alpha_h <= vH' <= vH + beta_h.
QInterval alpha_h(const Q& h, long p);
Q beta_h(const Q& h, long p);

/// Integrality thresholds for one variable: floor((e-d+1)/(p-1) + excess(h)) + 1, or 0 for h = 0.
Z alpha_window(const Q& h, long d, long e, long p, bool strict = false);
/// -(floor(max{h, p/(p-1)}) + 1), or 0 for h = 0.
Z beta_window(const Q& h, long p);
/// ord_p((e-d)!) + 2(e-d) + floor((e-d+1)/(p-1)) + 1 for d < e, else 0.
Z c_window(long d, long e, long p);

struct ThresholdConstants {
    Z alpha;  // vH >= alpha forces integrality of the system
    Z beta;   // integral systems reconstruct with vH >= beta
};

ThresholdConstants alpha_beta_constants(const GrowthClass& h, const Window& w, bool strict = false);
Z c_constant(const Window& w);

/// Omega_m^{[d,e]}(X) = prod_{i=d}^{e} ((1+X)^{p^m} - u^{i p^m}).
QPoly omega(long p, long d, long e, const Q& u, long m);
WindowPoly omega_poly(const Window& w, const std::vector<long>& m);

struct OmegaBreak {
    Z degree;
    Q value;
};

OmegaBreak omega_valuation(long p, long d, long e, long m, long n);

bool separable(const QPoly& f);

}  // namespace iw
