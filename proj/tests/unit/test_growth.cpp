#include "doctest.h"
#include "iw/growth.hpp"

#include <cmath>
#include <random>

using namespace iw;

TEST_CASE("ell") {
    CHECK(ell(0, 3) == 0);
    CHECK(ell(2, 3) == 1);
    CHECK(ell(3, 3) == 2);
    CHECK(ell(8, 3) == 2);
    CHECK(ell(9, 3) == 3);
    CHECK(ell(Z("1000000000000000000000000"), 10007) == 6);
    for (long i = 1; i < 5000; ++i) {
        double l = std::log(double(i)) / std::log(5.0);
        CHECK(l <= ell(i, 5) + 1e-9);
        CHECK(ell(i, 5) <= l + 1 + 1e-9);
    }
}

TEST_CASE("vH examples") {
    GrowthClass h1({Q(1)});
    CHECK(vH(TruncSeries::polynomial(3, QPoly{Q(1)}), h1).retained_min == Val(0));
    QPoly c(30);
    for (long n = 0; n < 30; ++n) c[n] = qpow(Q(3), -ell(n, 3));
    CHECK(vH(TruncSeries::polynomial(3, c), h1).retained_min == Val(0));
    CHECK(vH(TruncSeries::monomial(3, {3}, Q(1, 3)), h1).retained_min == Val(1));
}

TEST_CASE("vH' of the logarithm") {
    auto L = padic_log(3, 3000);
    L.tail_floor = Val::inf();  // treat the truncation as an exact polynomial
    L.trunc = {3001};
    auto rep = vH_prime(L, GrowthClass({Q(1)}), 5);
    CHECK(rep.retained_min == Val(Q(1, 2)));
    CHECK(vH_prime(TruncSeries::polynomial(3, QPoly{Q(1)}), GrowthClass({Q(1)})).retained_min == Val(0));
}

TEST_CASE("vH and vH' sandwich on random polynomials") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> V(-3, 4), C(1, 40), D(0, 40);
    for (long p : {3L, 5L}) {
        for (Q h : {Q(1), Q(1, 2), Q(2)}) {
            auto al = alpha_h(h, p);
            Q be = beta_h(h, p);
            for (int it = 0; it < 15; ++it) {
                QPoly c(D(rng) + 1);
                for (auto& x : c) x = Q(C(rng)) * qpow(Q(p), V(rng));
                auto f = TruncSeries::polynomial(p, c);
                GrowthClass g({h});
                Val a = vH(f, g).retained_min;
                Val b = vH_prime(f, g).retained_min;
                CHECK(a + Val(al.lo) <= b);
                CHECK(b <= a + Val(be));
            }
        }
    }
}

TEST_CASE("threshold constants") {
    Window w5(5, {0}, {1});
    CHECK(alpha_window(Q(1), 0, 1, 5) == 2);
    CHECK(beta_window(Q(1), 3) == -2);
    CHECK(alpha_window(Q(0), 0, 4, 3) == 0);
    CHECK(beta_window(Q(0), 3) == 0);
    auto c = alpha_beta_constants(GrowthClass({Q(1)}), w5);
    CHECK(c.alpha == 2);
    CHECK(c.beta == -2);
    CHECK(c_window(0, 2, 3) == 6);
    CHECK(c_window(1, 1, 3) == 0);
    CHECK(c_constant(Window(3, {0, 0}, {2, 2})) == 12);
    auto ex = log_order_excess(Q(1), 5, 512);
    CHECK(ex.lo < ex.hi);
    CHECK(ex.hi - ex.lo < Q(1, 1000000));
}

TEST_CASE("windows") {
    CHECK_THROWS(Window(3, {1}, {0}));
    CHECK_THROWS(Window(3, {0}, {1}, {Q(2)}));
    Window w(3, {0, 1}, {2, 3});
    CHECK(w.u[0] == 4);
    CHECK(Window(2, {0}, {0}).u[0] == 5);
    CHECK(w.component({1, 2}).d == std::vector<long>{1, 2});
}

TEST_CASE("Omega polynomials") {
    CHECK(omega(3, 0, 0, Q(4), 0) == QPoly{Q(0), Q(1)});
    auto b = omega_valuation(3, 0, 1, 2, 1);
    CHECK(b.degree == 6);
    CHECK(b.value == 3);
    for (long p : {3L, 5L}) {
        Q u = default_u(p);
        for (long m = 0; m <= (p == 3 ? 3 : 2); ++m) {
            for (auto [d, e] : {std::pair<long, long>{0, 0}, {0, 1}, {1, 2}}) {
                QPoly om = omega(p, d, e, u, m);
                CHECK(poly::deg(om) == (e - d + 1) * zpow(Z(p), m).get_si());
                auto f = TruncSeries::polynomial(p, om);
                for (long n = 0; n <= m; ++n) {
                    auto cf = omega_valuation(p, d, e, m, n);
                    Q t = log_break(p, n);
                    CHECK(vr(f, t).retained_min == Val(cf.value));
                    CHECK(dr(f, t) == cf.degree.get_si());
                }
            }
        }
    }
}

TEST_CASE("Omega polynomials are separable") {
    for (long p : {2L, 3L, 5L})
        for (long m = 0; m <= 2; ++m) CHECK(separable(omega(p, 0, 2, default_u(p), m)));
    CHECK_FALSE(separable(QPoly{Q(1), Q(2), Q(1)}));
}
