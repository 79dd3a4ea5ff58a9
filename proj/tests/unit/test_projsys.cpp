#include "doctest.h"
#include "iw/projsys.hpp"

#include <random>

using namespace iw;

namespace {

TruncSeries random_integral(std::mt19937_64& rng, long p, int deg) {
    std::uniform_int_distribution<int> C(-20, 20);
    QPoly c(deg + 1);
    for (auto& x : c) x = C(rng);
    return TruncSeries::polynomial(p, c);
}

bool same_mod_omega(const TruncSeries& a, const TruncSeries& b, const Window& w, const Level& m) {
    return reduce_mod_omega(sub(a, b), w, m).coeffs.empty();
}

}  // namespace

TEST_CASE("remainders of Omega itself vanish") {
    Window w(3, {0}, {1});
    auto f = TruncSeries::polynomial(3, omega(3, 0, 1, Q(4), 2));
    auto s = system_from_series(f, GrowthClass({Q(1)}), w, {2});
    for (auto& [m, r] : s.levels) CHECK(r.coeffs.empty());
    CHECK(check_compatibility(s));
}

TEST_CASE("integral series give integral systems for h = 0") {
    std::mt19937_64 rng(1);
    Window w(3, {0}, {0});
    for (int it = 0; it < 5; ++it) {
        auto f = random_integral(rng, 3, 12);
        auto s = system_from_series(f, GrowthClass({Q(0)}), w, {2});
        CHECK(is_integral(s));
        CHECK(check_compatibility(s));
    }
}

TEST_CASE("reconstruction round trip") {
    std::mt19937_64 rng(2);
    Window w(3, {0}, {1});
    GrowthClass h({Q(1)});
    for (int it = 0; it < 4; ++it) {
        auto f = random_integral(rng, 3, 25);
        auto s = system_from_series(f, h, w, {2});
        auto g = reconstruct(s);
        for (auto& [m, r] : s.levels) CHECK(same_mod_omega(g, f, w, m));
    }
    WindowSystem c = system_from_series(TruncSeries::polynomial(3, QPoly{Q(5)}), h, w, {2});
    CHECK(reconstruct(c).coeffs == TruncSeries::polynomial(3, QPoly{Q(5)}).coeffs);
    WindowSystem narrow = system_from_series(TruncSeries::polynomial(3, QPoly{Q(5)}), GrowthClass({Q(2)}), w, {1});
    CHECK_THROWS_AS(reconstruct(narrow), WindowTooNarrow);
}

TEST_CASE("vanishing test") {
    std::vector<long> d{0};
    GrowthClass h({Q(1)});
    CHECK(vanishing_test(TruncSeries::polynomial(3, QPoly{Q(0)}), h, d, 3));
    CHECK(vanishing_depth(TruncSeries::polynomial(3, QPoly{Q(1)}), h, d, 3) == 0);
    auto om = TruncSeries::polynomial(3, omega(3, 0, 1, Q(4), 2));
    auto f = mul(om, TruncSeries::polynomial(3, QPoly{Q(1), Q(2), Q(-1)}));
    CHECK(vanishing_depth(f, h, d, 3) == 3);
}

TEST_CASE("window projection and components") {
    std::mt19937_64 rng(3);
    Window w(3, {0}, {2});
    GrowthClass h({Q(1)});
    auto f = random_integral(rng, 3, 30);
    auto s = system_from_series(f, h, w, {1});
    auto same = project_window(s, {0}, {2});
    for (auto& [m, r] : s.levels) CHECK(same.at(m).coeffs == r.coeffs);
    // the [1,1] component at level m interpolates f at u zeta - 1 for zeta of order p^m
    auto c = project_window(s, {1}, {1});
    for (long m = 0; m <= 1; ++m) {
        long P = zpow(Z(3), m).get_si();
        for (long k = 0; k < P; ++k) {
            Cyclo pt = Cyclo(Q(4)) * Cyclo::zeta(P, k) - Cyclo(1);
            CHECK(eval(c.at({m}), {pt}).value == eval(f, {pt}).value);
        }
    }
}

TEST_CASE("theta and lifting") {
    std::mt19937_64 rng(4);
    Window w(3, {0}, {2});
    GrowthClass h({Q(1)});
    auto f = random_integral(rng, 3, 30);
    auto s = system_from_series(f, h, w, {2});
    auto comps = extract_components(s);
    // theta_d is the first component
    CHECK(theta(comps, {0}, {1}).coeffs == comps.comps.at({0}).at({1}).coeffs);
    long n = minimal_slack(comps);
    auto lifted = lift_components(comps, n);
    for (auto& [m, r] : s.levels) CHECK(same_mod_omega(lifted.at(m), r, w, m));
    CHECK(lifted.denom_bound >= Val(Q(-(c_constant(w) + n))));
    if (n > 0) CHECK_THROWS_AS(lift_components(comps, n - 1), HypothesisFailed);

    // equal components: theta_j vanishes for j > d
    ComponentFamily eq = comps;
    for (long i = 1; i <= 2; ++i) eq.comps[{i}] = eq.comps.at({0});
    CHECK(theta(eq, {2}, {1}).coeffs.empty());
}

TEST_CASE("trivial windows lift to themselves") {
    Window w(5, {1}, {1});
    GrowthClass h({Q(0)});
    auto f = TruncSeries::polynomial(5, QPoly{Q(1), Q(2), Q(3), Q(4), Q(5), Q(6), Q(7)});
    auto s = system_from_series(f, h, w, {1});
    auto lifted = lift_components(extract_components(s), 0);
    for (auto& [m, r] : s.levels) CHECK(lifted.at(m).coeffs == r.coeffs);
}

TEST_CASE("two variable systems") {
    Window w(3, {0, 0}, {1, 0});
    GrowthClass h({Q(1), Q(0)});
    std::map<Index, Q> c{{{0, 0}, Q(1)}, {{3, 1}, Q(2)}, {{5, 2}, Q(-1)}, {{1, 4}, Q(7)}};
    auto f = TruncSeries::polynomial(3, 2, c);
    auto s = system_from_series(f, h, w, {1, 1});
    CHECK(check_compatibility(s));
    auto g = reconstruct(s);
    for (auto& [m, r] : s.levels) CHECK(same_mod_omega(g, f, w, m));
    auto comps = extract_components(s);
    auto lifted = lift_components(comps, minimal_slack(comps));
    for (auto& [m, r] : s.levels) CHECK(same_mod_omega(lifted.at(m), r, w, m));
}
