#include "doctest.h"
#include "iw/suite/io.hpp"

#include <random>

using namespace iw;

TEST_CASE("scalars round trip") {
    for (Q x : {Q(0), Q(-7, 3), Q(Q(Z("123456789012345678901234567891")) / Q(7))})
        CHECK(io::q_from_json(io::to_json(x)) == x);
    CHECK(io::q_from_json(io::json(5)) == 5);
    for (Val v : {Val::inf(), Val::neg_inf(), Val(Q(3, 2))}) CHECK(io::val_from_json(io::to_json(v)) == v);
    Cyclo z = Cyclo(Q(1, 2)) + Cyclo::zeta(9, 2) * Cyclo(3);
    CHECK(io::cyclo_from_json(io::to_json(z)) == z);
    CHECK_THROWS_AS(io::q_from_json(io::json("1/0")), ParseError);
    CHECK_THROWS_AS(io::q_from_json(io::json(1.5)), ParseError);
    CHECK_THROWS_AS(io::parse("{\"p\": "), ParseError);
}

TEST_CASE("series and systems round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> C(-9, 9);
    QPoly c(20);
    for (auto& x : c) x = Q(C(rng)) / Q(1 + (C(rng) + 9) % 4);
    auto f = TruncSeries::polynomial(3, c);
    auto g = io::series_from_json(io::to_json(f));
    CHECK(g.coeffs == f.coeffs);
    CHECK(g.trunc == f.trunc);
    CHECK(g.prec == f.prec);

    auto log = padic_log(5, 30);
    auto l2 = io::series_from_json(io::to_json(log));
    CHECK(l2.tail_floor == log.tail_floor);
    CHECK(l2.rho == log.rho);

    Window w(3, {0}, {1});
    auto s = system_from_series(f, GrowthClass({Q(1)}), w, {2});
    auto s2 = io::system_from_json(io::parse(io::to_json(s).dump()));
    CHECK(s2.window == s.window);
    for (auto& [m, r] : s.levels) CHECK(s2.at(m).coeffs == r.coeffs);
    CHECK(s2.denom_bound == s.denom_bound);

    auto mu = system_to_distribution(s);
    CHECK(io::distribution_from_json(io::to_json(mu)).raw == mu.raw);
}

TEST_CASE("q-expansions and characters round trip") {
    auto chi = DirichletCharacter::from_generators(7, {1});
    CHECK(io::character_from_json(io::to_json(chi)) == chi);
    CHECK(io::character_from_json(io::parse(R"({"modulus": 7, "generators": [1]})")) == chi);
    auto F = eisen_F_qexp(3, 1, DirichletCharacter::trivial(1), chi, 12);
    auto back = io::qexp_from_json(io::to_json(F));
    CHECK(back == F);
    CHECK(back.order == F.order);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(io::series_from_json(io::parse(R"({"p": 4, "coeffs": []})")), ParseError);
    CHECK_THROWS_AS(io::series_from_json(io::parse(R"({"p": 3, "coeffs": [{"n": [1, 2], "c": "1"}]})")), ParseError);
    CHECK_THROWS_AS(io::series_from_json(io::parse(R"({"p": 3, "coeffs": [{"n": [5], "c": "1"}], "trunc": [2]})")),
                    ParseError);
    CHECK_THROWS_AS(io::qexp_from_json(io::parse(R"({"Q": 2, "coeffs": [{"n": 3, "poly": []}]})")), ParseError);
    CHECK_THROWS_AS(io::character_from_json(io::parse(R"({"modulus": 3, "order": 2, "table": [0, 0, 1]})")),
                    ParseError);
    CHECK_THROWS_AS(io::window_from_json(io::parse(R"({"p": 3, "d": [2], "e": [1]})")), ParseError);
}
