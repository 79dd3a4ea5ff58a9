#include "doctest.h"
#include "iw/distribution.hpp"

#include <random>

using namespace iw;

namespace {

GrowthClass zeros(int k) { return GrowthClass(std::vector<Q>(k, Q(0))); }

TruncSeries random_poly(std::mt19937_64& rng, long p, int deg) {
    std::uniform_int_distribution<int> C(-9, 9);
    QPoly c(deg + 1);
    for (auto& x : c) x = C(rng);
    return TruncSeries::polynomial(p, c);
}

}  // namespace

TEST_CASE("Dirac measures") {
    Window w(3, {0}, {2});
    auto d = dirac_combination(w, zeros(1), {2}, {{{4}, Q(1)}});
    CHECK(check_additivity(d));
    CHECK(d.raw_moment({1}, {1}, {2}) == Q(65536));  // chi(gamma^4)^2 = 4^8
    CHECK(d.raw_moment({1}, {0}, {2}) == 0);
    CHECK(vhde(d).retained_min == Val(0));
    CHECK(vhde(scale(d, Q(3))).retained_min == Val(1));
    // chi(gamma^4) = 4^4, the coset at level 1 is centered at chi(gamma) = 4
    CHECK(d.moment({1}, {1}, {1}) == Q(256 - 4));
}

TEST_CASE("Dirac convolution") {
    Window w(3, {0}, {1});
    auto a = dirac_combination(w, zeros(1), {2}, {{{2}, Q(1)}});
    auto b = dirac_combination(w, zeros(1), {2}, {{{5}, Q(1)}});
    auto ab = dirac_combination(w, zeros(1), {2}, {{{7}, Q(1)}});
    CHECK(convolve(a, b).raw == ab.raw);
    auto e = dirac_combination(w, zeros(1), {2}, {{{0}, Q(1)}});
    CHECK(convolve(e, a).raw == a.raw);
}

TEST_CASE("convolution is superadditive in valuation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> C(-20, 20), X(0, 26), V(-2, 2);
    Window w(3, {0}, {1});
    for (int it = 0; it < 10; ++it) {
        std::map<std::vector<long>, Q> p1, p2;
        for (int j = 0; j < 4; ++j) {
            p1[{X(rng)}] += Q(C(rng)) * qpow(Q(3), V(rng));
            p2[{X(rng)}] += Q(C(rng)) * qpow(Q(3), V(rng));
        }
        auto a = dirac_combination(w, GrowthClass({Q(1)}), {2}, p1);
        auto b = dirac_combination(w, GrowthClass({Q(1, 2)}), {2}, p2);
        auto c = convolve(a, b);
        CHECK(c.growth.h[0] == Q(3, 2));
        CHECK(vhde(c).retained_min >= vhde(a).retained_min + vhde(b).retained_min);
    }
}

TEST_CASE("group ring round trip") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> C(-9, 9);
    Window w(3, {0, 0}, {1, 1});
    GroupRingElement g{3, {2, 1}, {}};
    for_each_coset(3, {2, 1}, [&](const Coset& a) {
        int c = C(rng);
        if (c) g.coeffs[a] = c;
    });
    auto mu = iwasawa_to_measure(g, w);
    CHECK(measure_to_iwasawa(mu, {2, 1}) == g);
    for (auto& kappa : specializations(w, {2, 1})) CHECK(specialize(g, w, kappa) == integrate(mu, kappa));
    // products go to convolutions
    auto g2 = g * g;
    CHECK(measure_to_iwasawa(convolve(mu, mu), {2, 1}) == g2);
}

TEST_CASE("system and distribution correspond") {
    std::mt19937_64 rng(7);
    Window w(3, {0}, {2});
    GrowthClass h({Q(1)});
    auto f = random_poly(rng, 3, 40);
    auto s = system_from_series(f, h, w, {2});
    auto mu = system_to_distribution(s);
    CHECK(check_additivity(mu));
    for (auto& kappa : specializations(w, {2})) CHECK(interpolate(s, kappa) == integrate(mu, kappa));
    auto back = distribution_to_system(mu);
    for (auto& [m, r] : s.levels) CHECK(back.at(m).coeffs == r.coeffs);
}

TEST_CASE("constant system gives the Dirac at the identity") {
    Window w(5, {0}, {1});
    auto s = system_from_series(TruncSeries::polynomial(5, QPoly{Q(1)}), GrowthClass({Q(1)}), w, {1});
    auto mu = system_to_distribution(s);
    auto dirac = dirac_combination(w, GrowthClass({Q(1)}), {1}, {{{0}, Q(1)}});
    CHECK(mu.raw == dirac.raw);
}

TEST_CASE("two variable correspondence") {
    Window w(3, {0, 1}, {1, 1});
    GrowthClass h({Q(1), Q(0)});
    std::map<Index, Q> c{{{0, 0}, Q(2)}, {{4, 1}, Q(1)}, {{7, 3}, Q(-5)}, {{2, 5}, Q(1, 3)}};
    auto s = system_from_series(TruncSeries::polynomial(3, 2, c), h, w, {1, 1});
    auto mu = system_to_distribution(s);
    CHECK(check_additivity(mu));
    for (auto& kappa : specializations(w, {1, 1})) CHECK(interpolate(s, kappa) == integrate(mu, kappa));
    auto back = distribution_to_system(mu);
    for (auto& [m, r] : s.levels) CHECK(back.at(m).coeffs == r.coeffs);
}

TEST_CASE("restriction and extension") {
    std::mt19937_64 rng(8);
    Window w(3, {0}, {2});
    GrowthClass h({Q(1)});
    auto s = system_from_series(random_poly(rng, 3, 30), h, w, {2});
    auto mu = system_to_distribution(s);
    auto same = restrict_window(mu, {0}, {2});
    CHECK(same.raw == mu.raw);
    auto small = restrict_window(mu, {1}, {2});
    auto big = extend_window(small, {0}, {2});
    CHECK(restrict_window(big, {1}, {2}).raw == small.raw);
    CHECK(vhde(restrict_window(big, {1}, {2})).retained_min == vhde(small).retained_min);
    CHECK(check_additivity(big));
    CHECK_THROWS_AS(extend_window(restrict_window(mu, {1}, {1}), {0}, {2}), WindowTooNarrow);
}

TEST_CASE("locally polynomial integration") {
    Window w(3, {0}, {2});
    auto mu = dirac_combination(w, zeros(1), {2}, {{{1}, Q(2)}, {{5}, Q(-1)}, {{12}, Q(1, 3)}});
    for (auto& kappa : specializations(w, {2}))
        CHECK(integrate_locally_polynomial(mu, as_locally_polynomial(w, kappa)) == integrate(mu, kappa));
    LocallyPolynomial ind;
    ind.m = {1};
    ind.coeffs[{2}][{0}] = Cyclo(1);
    CHECK(integrate_locally_polynomial(mu, ind) == Cyclo(mu.raw_moment({1}, {2}, {0})));
    CHECK(integrate_locally_polynomial(mu, LocallyPolynomial{{1}, {}}) == Cyclo(0));
}
