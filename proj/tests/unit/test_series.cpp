#include "doctest.h"
#include "iw/series.hpp"

#include <random>

using namespace iw;

namespace {

TruncSeries random_poly(std::mt19937_64& rng, long p, int deg, int vlo, int vhi) {
    std::uniform_int_distribution<int> V(vlo, vhi), U(1, 40);
    QPoly c(deg + 1);
    for (auto& x : c) {
        Q u(U(rng) * (U(rng) % 2 ? 1 : -1), 1);
        while (u.get_num() % p == 0) u += 1;
        x = u * qpow(Q(p), V(rng));
    }
    return TruncSeries::polynomial(p, c);
}

}  // namespace

TEST_CASE("vr on a polynomial") {
    auto f = TruncSeries::polynomial(3, QPoly{Q(3), Q(1)});  // p + X
    auto rep = vr(f, Q(0));
    CHECK(rep.exact);
    CHECK(rep.retained_min == Val(0));
    CHECK(rep.argmin == Index{1});
    rep = vr(f, Q(2));
    CHECK(rep.retained_min == Val(1));
    CHECK(rep.argmin == Index{0});
}

TEST_CASE("vr is additive on exact products") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        auto f = random_poly(rng, 5, 4, -2, 3), g = random_poly(rng, 5, 3, -2, 3);
        for (Q r : {Q(0), Q(1, 3), Q(2)}) {
            auto fg = mul(f, g);
            CHECK(vr(fg, r).retained_min == vr(f, r).retained_min + vr(g, r).retained_min);
        }
    }
}

TEST_CASE("truncated series report their tail") {
    TruncSeries f(3, 1);
    f.coeffs[{0}] = 1;
    f.coeffs[{1}] = 3;
    f.trunc = {4};
    f.tail_floor = Val(0);
    auto rep = vr(f, Q(0));
    CHECK(rep.retained_min == Val(0));
    CHECK(rep.tail_bound == Val(0));
    CHECK(rep.exact);  // the tail can not go below the retained minimum
    auto r2 = vr(f, Q(1, 2));
    CHECK(r2.tail_bound == Val(2));
    // a weight below the tail weight is uncertified
    f.rho = {Q(1)};
    CHECK(vr(f, Q(0)).tail_bound.is_neg_inf());
}

TEST_CASE("shift preserves v_r inside the disk") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 30; ++it) {
        auto f = random_poly(rng, 3, 5, -1, 4);
        Q r(1, 2);
        auto g = shift(f, Q(9));  // ord 2 > 1/2
        CHECK(vr(g, r).retained_min == vr(f, r).retained_min);
        auto back = shift(g, Q(-9));
        CHECK(back.coeffs == f.coeffs);
    }
}

TEST_CASE("shift of a truncated series needs a small point") {
    TruncSeries f(3, 1);
    f.coeffs[{0}] = 1;
    f.trunc = {3};
    f.tail_floor = Val(0);
    CHECK_THROWS_AS(shift(f, Q(1)), ShiftOutOfDisk);
    auto g = shift(f, Q(3));
    CHECK(g.prec == Val(1));
}

TEST_CASE("evaluation with error bounds") {
    auto f = TruncSeries::polynomial(3, QPoly{Q(1), Q(1), Q(1)});
    auto e = eval(f, {Cyclo(Q(3))});
    CHECK(e.value == Cyclo(13));
    CHECK(e.error_bound.is_inf());
    // at zeta_3 - 1
    Cyclo b = Cyclo::zeta(3) - Cyclo(1);
    auto e2 = eval(f, {b});
    CHECK(e2.value == Cyclo(1) + b + b * b);
    TruncSeries g = f;
    g.tail_floor = Val(0);
    g.trunc = {3};
    auto e3 = eval(g, {b});
    CHECK(e3.error_bound == Val(Q(3, 2)));
}

TEST_CASE("nest and unnest are inverse and agree on valuations") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> V(-2, 3), C(1, 9);
    for (int it = 0; it < 20; ++it) {
        std::map<Index, Q> c;
        for (long a = 0; a < 4; ++a)
            for (long b = 0; b < 3; ++b) c[{a, b}] = Q(C(rng)) * qpow(Q(3), V(rng));
        auto f = TruncSeries::polynomial(3, 2, c);
        auto n = nest(f);
        auto g = unnest(n);
        CHECK(g.coeffs == f.coeffs);
        std::vector<Q> r{Q(1, 3), Q(1, 2)};
        CHECK(vr_nested(n, r).retained_min == vr(f, r).retained_min);
    }
}

TEST_CASE("zero test on the small disk") {
    auto f = TruncSeries::polynomial(3, QPoly{Q(0)});
    CHECK(zero_test_small_disk(f, {Q(3), Q(9)}));
    auto g = TruncSeries::polynomial(3, QPoly{Q(-3), Q(1)});
    CHECK_FALSE(zero_test_small_disk(g, {Q(3), Q(9)}));
}

TEST_CASE("mixed shapes are rejected") {
    auto f = TruncSeries::polynomial(3, QPoly{Q(1)});
    auto g = TruncSeries::constant(3, 2, Q(1));
    CHECK_THROWS_AS(add(f, g), IncompatibleShapes);
}
