#include "doctest.h"
#include "iw/weierstrass.hpp"

#include <random>

using namespace iw;

namespace {

TruncSeries P(long p, QPoly c) { return TruncSeries::polynomial(p, c); }

QPoly random_coeffs(std::mt19937_64& rng, long p, int deg, int vlo, int vhi) {
    std::uniform_int_distribution<int> V(vlo, vhi), U(1, 30), S(0, 1);
    QPoly c(deg + 1);
    for (auto& x : c) {
        Z u = U(rng);
        while (u % p == 0) u += 1;
        x = Q(S(rng) ? u : Z(-u)) * qpow(Q(p), V(rng));
    }
    return c;
}

}  // namespace

TEST_CASE("leading index of a cubic with three root sizes") {
    long p = 3;
    // (X - p)(X - p^2)(X - 1)
    QPoly f = poly::mul(poly::mul(QPoly{Q(-3), Q(1)}, QPoly{Q(-9), Q(1)}), QPoly{Q(-1), Q(1)});
    CHECK(leading_index(P(p, f), Q(1, 2)) == 2);
    CHECK(leading_index(P(p, f), Q(3, 2)) == 1);
    CHECK(leading_index(P(p, f), Q(3)) == 0);
    CHECK(count_roots(P(p, f), Q(0)) == 2);
    CHECK(count_roots(P(p, f), Q(-1)) == 3);
}

TEST_CASE("division of X^2 by X - p") {
    long p = 5;
    auto d = divide(P(p, QPoly{Q(0), Q(0), Q(1)}), P(p, QPoly{Q(-5), Q(1)}), Q(0));
    CHECK(d.s == 1);
    CHECK(d.quotient.coeffs == P(p, QPoly{Q(5), Q(1)}).coeffs);
    CHECK(d.remainder.coeffs == P(p, QPoly{Q(25)}).coeffs);
    CHECK(d.certified);
}

TEST_CASE("division by a series that is not a polynomial of degree s") {
    long p = 3;
    // f = 3 + X + 9 X^2 + 27 X^3 at r = 0: s = 1 and the quotient is a genuine series
    auto f = P(p, QPoly{Q(3), Q(1), Q(9), Q(27)});
    auto g = P(p, QPoly{Q(1), Q(2), Q(0), Q(1)});
    auto d = divide(g, f, Q(0));
    CHECK(d.s == 1);
    CHECK(d.remainder.degree(0) < 1);
    CHECK(d.iterations > 0);
    // g - f q - t is small on the retained range
    auto res = sub(sub(g, mul(f, d.quotient)), d.remainder);
    auto rep = vr(res, Q(0));
    CHECK(rep.retained_min >= vr(d.quotient, Q(0)).prec_part);
    CHECK(check_valuation_identity(g, f, d, Q(0)));
}

TEST_CASE("random divisions satisfy the identity and redivide consistently") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> Dg(0, 6), Df(1, 5), R(0, 3);
    const long p = 3;
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
        auto fc = random_coeffs(rng, p, Df(rng), 0, 3);
        auto gc = random_coeffs(rng, p, Dg(rng), -1, 3);
        Q r(R(rng), 2);
        auto f = P(p, fc), g = P(p, gc);
        auto d = divide(g, f, r);
        REQUIRE(d.remainder.degree(0) < d.s);
        CHECK(check_valuation_identity(g, f, d, r));
        // the exact polynomial f q~ + t~ divides back to (q~, t~) within precision
        TruncSeries qt = TruncSeries::polynomial(p, 1, d.quotient.coeffs);
        TruncSeries tt = TruncSeries::polynomial(p, 1, d.remainder.coeffs);
        auto g2 = add(mul(f, qt), tt);
        auto d2 = divide(g2, f, r);
        auto dq = vr(sub(d2.quotient, qt), r);
        auto dt = vr(sub(d2.remainder, tt), r);
        Val vg = vr(g2, r).retained_min;
        Val vf = vr(f, r).retained_min;
        CHECK(dq.retained_min >= vmin(dq.prec_part, Val(vg - vf)));
        CHECK(dt.retained_min >= vmin(dt.prec_part, vg));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("d_r is additive") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> D(0, 5), R(-2, 4);
    for (int it = 0; it < 50; ++it) {
        auto f = P(5, random_coeffs(rng, 5, D(rng), -1, 3));
        auto g = P(5, random_coeffs(rng, 5, D(rng), -1, 3));
        Q r(R(rng), 3);
        CHECK(leading_index(mul(f, g), r) == leading_index(f, r) + leading_index(g, r));
    }
}

TEST_CASE("preparation splits off a distinguished polynomial") {
    long p = 3;
    auto f = P(p, QPoly{Q(9), Q(3), Q(1), Q(27)});
    auto pr = prepare(f, Q(0));
    CHECK(pr.distinguished.degree(0) == 2);
    CHECK(pr.unit.coeff(0) == 1);
    auto back = sub(mul(pr.distinguished, pr.unit), f);
    auto rep = vr(back, Q(0));
    CHECK(rep.retained_min >= rep.prec_part);
    // the distinguished part has all its roots in the open unit disk
    CHECK(leading_index(pr.distinguished, Q(0)) == 2);
}

TEST_CASE("two variable division") {
    long p = 3;
    auto g = TruncSeries::polynomial(p, 2, {{{1, 1}, Q(1)}});  // X1 X2
    auto f1 = P(p, QPoly{Q(0), Q(1)});   // X1
    auto f2 = P(p, QPoly{Q(-3), Q(1)});  // X2 - p
    auto md = multi_divide(g, {f1, f2}, {Q(0), Q(0)});
    REQUIRE(md.quotients.size() == 2);
    CHECK(md.quotients[0].coeffs == std::map<Index, Q>{{{0, 1}, Q(1)}});
    CHECK(md.remainder.coeffs.empty());
    CHECK(divisibility_test(g, {f1, f2}, {Q(0), Q(0)}));

    // X1 X2 modulo (X1 - p, X2 - p): q1 = X2, q2 = p, t = p^2
    auto m2 = multi_divide(g, {f2, f2}, {Q(0), Q(0)});
    CHECK(m2.quotients[0].coeffs == std::map<Index, Q>{{{0, 1}, Q(1)}});
    CHECK(m2.quotients[1].coeffs == std::map<Index, Q>{{{0, 0}, Q(3)}});
    CHECK(m2.remainder.coeffs == std::map<Index, Q>{{{0, 0}, Q(9)}});
}

TEST_CASE("Newton data of log(1+X)") {
    for (long p : {2L, 3L, 5L}) {
        auto L = padic_log(p, zpow(Z(p), 4).get_si());
        Q tmax = log_break(p, 0);
        Q tmin = (log_break(p, 3) + log_break(p, 4)) / 2;
        auto nd = newton(L, tmin, tmax);
        // breaks exactly at t_1, t_2, t_3 and t_0
        REQUIRE(nd.break_points.size() == 4);
        for (long n = 0; n <= 3; ++n) {
            CHECK(nd.break_points[3 - n] == log_break(p, n));
            CHECK(nd.degree_at(log_break(p, n)) == zpow(Z(p), n).get_si());
            CHECK(m_f(L, log_break(p, n)) == Q(-n) + Q(1, p - 1));
        }
    }
}

TEST_CASE("Newton value of log at p = 3") {
    auto L = padic_log(3, 400);
    for (long n = 0; n <= 3; ++n) CHECK(m_f(L, log_break(3, n)) == Q(-n) + Q(1, 2));
}

TEST_CASE("log tail is certified") {
    auto L = padic_log(3, 50);
    CHECK_FALSE(L.tail_floor.is_inf());
    CHECK_THROWS_AS(newton(L, Q(0), Q(1, 2)), InsufficientTruncation);
}
