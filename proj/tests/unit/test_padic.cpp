#include "doctest.h"
#include "iw/padic.hpp"

#include <random>

using namespace iw;

TEST_CASE("primes are checked") {
    CHECK_NOTHROW(Prime(3));
    CHECK_THROWS_AS(Prime(4), NotPrime);
    CHECK_THROWS_AS(Prime(1), NotPrime);
}

TEST_CASE("rational valuations") {
    CHECK(ordp(Q(18), 3) == Val(2));
    CHECK(ordp(Q(1, 9), 3) == Val(-2));
    CHECK(ordp(Q(5, 7), 3) == Val(0));
    CHECK(ordp(Q(0), 3).is_inf());
    CHECK_THROWS_AS(ordp_checked(Q(0), 3), ValuationOfZero);
}

TEST_CASE("valuation is additive and ultrametric on rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> D(-500, 500);
    for (int it = 0; it < 300; ++it) {
        Q a(D(rng), 1 + std::abs(D(rng))), b(D(rng), 1 + std::abs(D(rng)));
        a.canonicalize();
        b.canonicalize();
        if (a == 0 || b == 0) continue;
        CHECK(ordp(Q(a * b), 5) == ordp(a, 5) + ordp(b, 5));
        CHECK(ordp(Q(a + b), 5) >= vmin(ordp(a, 5), ordp(b, 5)));
    }
}

TEST_CASE("cyclotomic valuations") {
    // zeta_3 - 1 has valuation 1/2 at p = 3
    Cyclo z = Cyclo::zeta(3) - Cyclo(1);
    CHECK(ordp(z, 3) == Val(Q(1, 2)));
    Cyclo w = Cyclo::zeta(9) - Cyclo(1);
    CHECK(ordp(w, 3) == Val(Q(1, 6)));
    CHECK(ordp(Cyclo(Q(9)), 3) == Val(2));
    CHECK_THROWS_AS(ordp(Cyclo::zeta(15), 3), UnsupportedField);
    CHECK_THROWS_AS(Cyclo(0).inv(), DivisionByZero);
}

TEST_CASE("cyclotomic arithmetic") {
    Cyclo z = Cyclo::zeta(5);
    CHECK(z.pow(5) == Cyclo(1));
    Cyclo s = 0;
    for (int k = 0; k < 5; ++k) s += z.pow(k);
    CHECK(s.is_zero());
    Cyclo a = Cyclo(2) + z * Cyclo(3) - z.pow(3);
    CHECK(a * a.inv() == Cyclo(1));
    CHECK(a.conj().conj() == a);
    // embedding agrees with arithmetic in the larger field
    Cyclo e = a.embed(15);
    CHECK(e * Cyclo::zeta(3) == (a * Cyclo::zeta(3)));
    // zeta_6 = -zeta_3^2
    CHECK(Cyclo::zeta(6) == -Cyclo::zeta(3, 2));
    CHECK(Cyclo::zeta(4).pow(2) == Cyclo(-1));
}

TEST_CASE("cyclotomic valuation is multiplicative") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> D(-20, 20);
    for (int it = 0; it < 40; ++it) {
        std::vector<Q> ca(6), cb(6);
        for (auto& x : ca) x = D(rng);
        for (auto& x : cb) x = D(rng);
        Cyclo a(9, ca), b(9, cb);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(ordp(a * b, 3) == ordp(a, 3) + ordp(b, 3));
    }
}

TEST_CASE("padic rounding") {
    Q x(1, 7);
    Q y = round_padic(x, 3, Z(5));
    CHECK(ordp(Q(x - y), 3) >= Val(5));
    CHECK(y.get_den() == 1);
    CHECK(round_padic(Q(81), 3, Z(3)) == 0);
    Q z(2, 27);
    CHECK(ordp(Q(z - round_padic(z, 3, Z(1))), 3) >= Val(1));
}

TEST_CASE("polynomial helpers") {
    QPoly a{Q(-1), Q(0), Q(1)};  // X^2 - 1
    QPoly b{Q(1), Q(1)};         // X + 1
    CHECK(poly::deg(poly::gcd(a, b)) == 1);
    CHECK(poly::coprime(QPoly{Q(-2), Q(0), Q(1)}, QPoly{Q(0), Q(2)}));
    CHECK(poly::resultant(a, b) == 0);
    CHECK(poly::resultant(QPoly{Q(-2), Q(1)}, QPoly{Q(-3), Q(1)}) == Q(-1));
    CHECK(poly::shift(a, Q(1)) == QPoly{Q(0), Q(2), Q(1)});
    CHECK(cyclotomic_poly(6) == QPoly{Q(1), Q(-1), Q(1)});
}
