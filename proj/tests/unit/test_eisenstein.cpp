#include "doctest.h"
#include "iw/eisenstein.hpp"

#include <random>

using namespace iw;

namespace {

QExpansion constant_x(const std::vector<long>& a) {
    QExpansion h(static_cast<long>(a.size()) - 1);
    for (std::size_t n = 0; n < a.size(); ++n)
        if (a[n]) h.coeffs[n] = {Cyclo(a[n])};
    return h;
}

QExpansion random_qexp(std::mt19937_64& rng, long Q, long deg) {
    std::uniform_int_distribution<int> C(-5, 5);
    QExpansion h(Q, deg);
    for (auto& c : h.coeffs) {
        c.resize(deg + 1);
        for (auto& x : c) x = Cyclo(C(rng));
        xpoly::trim(c);
    }
    return h;
}

GammaQExpansion random_family(std::mt19937_64& rng, long top) {
    std::uniform_int_distribution<int> C(-3, 3), J(-4, 4);
    GammaQExpansion G(3, top, 0);
    for (long n = 0; n <= top; ++n)
        for (int t = 0; t < 2; ++t) {
            long c = C(rng);
            if (c) G.coeffs[n][Q(1 + 3 * J(rng))] = {Cyclo(c)};
        }
    return G;
}

}  // namespace

TEST_CASE("Dirichlet characters") {
    auto all = DirichletCharacter::all(12);
    CHECK(all.size() == 4);
    for (auto& chi : all) {
        for (long a = 0; a < 12; ++a)
            for (long b = 0; b < 12; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
        CHECK(chi(3).is_zero());
        auto prim = chi.primitive();
        CHECK(12 % prim.conductor() == 0);
        CHECK(prim.conductor() == prim.modulus());
        for (long a = 1; a < 12; a += 2)
            if (a % 3) CHECK(prim(a) == chi(a));
    }
    auto w = DirichletCharacter::teichmuller(5);
    CHECK(w(2) == Cyclo::zeta(4, 1));
    CHECK(w.parity() == -1);
    CHECK((w * w.inverse()).is_principal());
    CHECK(w.pow(2).order() == 2);
    CHECK(w.lift(25)(7) == w(2));
    CHECK(DirichletCharacter::trivial(9).conductor() == 1);
    CHECK_THROWS_AS(DirichletCharacter::from_table(3, 2, {0, 0, 0}), InvalidCharacter);
    CHECK_THROWS_AS(DirichletCharacter::from_table(5, 4, {-1, 0, 1, 1, 2}), InvalidCharacter);
}

TEST_CASE("Bernoulli polynomials and special values") {
    CHECK(bernoulli_poly(0) == QPoly{Q(1)});
    CHECK(bernoulli_poly(1) == QPoly{Q(-1, 2), Q(1)});
    CHECK(bernoulli_poly(2) == QPoly{Q(1, 6), Q(-1), Q(1)});
    CHECK(bernoulli_number(4) == Q(-1, 30));
    CHECK(bernoulli_number(3) == 0);
    CHECK(m_special_value(1, 2, 0, -1) == Q(1, 6));
    CHECK(m_special_value(0, 3, 0, -2) == Q(-1, 2) * Q(27) * Q(-1, 30));
    CHECK_THROWS_AS(m_special_value(0, 3, 1, -1), PoleCase);
    CHECK(dirichlet_L_nonpositive(2, DirichletCharacter::trivial(1)) == Cyclo(Q(-1, 12)));
    CHECK(dirichlet_L_nonpositive(4, DirichletCharacter::trivial(1)) == Cyclo(Q(1, 120)));
    auto chi3 = DirichletCharacter::from_generators(3, {1});
    CHECK(dirichlet_L_nonpositive(1, chi3) == Cyclo(Q(1, 3)));
    CHECK_THROWS_AS(dirichlet_L_nonpositive(2, chi3), ParityMismatch);
}

TEST_CASE("Whittaker polynomials") {
    CHECK(whittaker_poly(Q(7), 0) == QPoly{Q(1)});
    CHECK(whittaker_poly(Q(4), 1) == QPoly{Q(-3), Q(1)});
    CHECK(whittaker_poly(Q(1), 3) == QPoly{0, 0, 0, Q(1)});
}

TEST_CASE("formal operators") {
    auto T = hecke_Tp(constant_x({0, 1, 0, 5, 0, 0, 0, 0, 0, 1}), 3);
    CHECK(T == constant_x({0, 5, 0, 1}));
    auto d = delta_m(constant_x({0, 1}), 2);
    CHECK(d.coeffs[1] == XPoly{Cyclo(1), Cyclo(2)});

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto h = random_qexp(rng, 12, 2);
        CHECK(iota(delta_m(h, 3)) == d_op(iota(h)));
        CHECK(iota(hecke_Tp(h, 3)) == hecke_Tp(iota(h), 3));
        QExpansion s(12, 2);
        for (long a = 0; a < 4; ++a) s = add(s, slice(h, a, 4));
        CHECK(s == h);
    }
    auto h = constant_x({1, 2, 3});
    CHECK(dilate(h, 2).coeffs[2] == XPoly{Cyclo(2)});
    CHECK(delta_mr(h, 2, 2) == delta_m(delta_m(h, 2), 4));
}

TEST_CASE("F_k(z; 1, psi)") {
    auto psi = DirichletCharacter::from_generators(5, {1});  // odd
    auto F = eisen_F_qexp(3, 0, DirichletCharacter::trivial(1), psi, 20);
    CHECK(F.coeffs[1] == XPoly{Cyclo(1)});
    CHECK(F.coeffs[2] == XPoly{Cyclo(1) + psi(2) * Cyclo(4)});
    CHECK(F.coeffs[0] == XPoly{dirichlet_L_nonpositive(3, psi) / Cyclo(2)});
    CHECK(F.respects_order());
    CHECK(eisen_F_qexp(2, 0, DirichletCharacter::trivial(1), psi, 5).coeffs[1].empty());
}

TEST_CASE("tilde Eisenstein series") {
    auto E = eisen_tilde_qexp(4, 3, 1, 1, 1, 10);
    CHECK(E.respects_order());
    CHECK(E.order == 2);
    // n = 1: d = d' = 1 only; (4 pi y)^{-1} W(4 pi y, 3, -1) = 1 + 2X
    CHECK(E.coeffs[1] == XPoly{Cyclo(1), Cyclo(2)});
    CHECK(E.coeffs[3].empty());
    CHECK_THROWS_AS(eisen_tilde_qexp(2, 3, 1, 1, 0, 4), UnsupportedConstantTerm);
    CHECK_NOTHROW(eisen_tilde_qexp(2, 4, 1, 1, 0, 4));
}

TEST_CASE("character sums of tilde E give 2F") {
    for (long N : {1L, 3L, 4L, 5L})
        for (auto& p1 : DirichletCharacter::all(N))
            for (auto& p2 : DirichletCharacter::all(N))
                for (long k = 1; k <= 5; ++k)
                    for (long r = 0; r < k; ++r) {
                        if (N > 1 && (k - 2 * r == 0 || k - 2 * r == 2)) continue;
                        QExpansion lhs(8);
                        for (long a = 0; a < N; ++a)
                            for (long b = 0; b < N; ++b) {
                                Cyclo w = p1(a) * p2(b);
                                if (!w.is_zero()) lhs = add(lhs, scale(eisen_tilde_qexp(k, N, r, a, b, 8), w));
                            }
                        auto rhs = scale(eisen_F_qexp(k, r, p2, p1, 8), Cyclo(2));
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("group-ring coefficients") {
    CHECK(bracket_inverse_point(2, 3) == Q(1, 2) * Q(-1) * Q(-1) * Q(-1));
    CHECK(gamma_index(Q(16), 3, 2) == 2);
    CHECK_THROWS_AS(bracket_inverse_point(2, 5), UnsupportedField);
    auto chi = gamma_character(3, 1, 1);
    CHECK(chi.modulus() == 9);
    CHECK(chi(4) == Cyclo::zeta(3, 1));
    CHECK(chi(-1) == Cyclo(1));

    EisensteinDatum D;
    D.psi = DirichletCharacter::teichmuller(3);
    D.xi = DirichletCharacter::trivial(3);
    D.G = GammaQExpansion(3, 20);
    CHECK(Phi(D, {0, 2}, 1, 0, 20).is_zero());
    CHECK(distribution_property_check(D, {0, 2}, 0, 0, 3));
}

TEST_CASE("interpolation and distribution identities") {
    std::mt19937_64 rng(11);
    EisensteinDatum D;
    D.psi = DirichletCharacter::teichmuller(3);
    D.xi = DirichletCharacter::trivial(3);
    const long top = 4;
    D.G = random_family(rng, 3 * top + 2);
    int nonzero = 0;
    for (WeightPair i : {WeightPair{0, 2}, WeightPair{1, 2}, WeightPair{1, 3}, WeightPair{2, 2}})
        for (auto& phi1 : DirichletCharacter::all(3))
            for (long t2 : {0L, 1L}) {
                auto s = interpolation_sides(D, i, phi1, 0, t2, 1, top);
                CHECK(s.lhs == s.rhs);
                if (!(s.rhs == QExpansion(top))) ++nonzero;
            }
    CHECK(nonzero >= 8);
    CHECK(distribution_property_check(D, {1, 2}, 0, 0, 2));
}

TEST_CASE("admissible congruences") {
    CHECK(admissible_congruence_check(3, Q(1), Q(1), Q(2), 2, 1));
    CHECK(admissible_congruence_check(3, Q(1), Q(1), Q(1), 0, 5));
    CHECK_FALSE(admissible_congruence_check(3, Q(1), Q(1), Q(1), 1, 1));
}

TEST_CASE("Euler factor branches") {
    EulerInputs in;
    in.p = 3;
    in.s = 2;
    in.alpha_f = Cyclo(2);
    in.alpha_f_prime = Cyclo(5);
    in.alpha_g = Cyclo::zeta(4, 1);
    in.alpha_g_prime = Cyclo(3);
    in.beta_g = Cyclo(7);
    in.ord_c_phi = 1;
    in.ord_c_xiphi = 2;
    auto E = euler_factor(in);
    CHECK(E.E2 == Cyclo(1));
    CHECK(E.E3 == Cyclo(1));
    Cyclo r1 = Cyclo(3) / (Cyclo::zeta(4, -1) * Cyclo(2)), r2 = Cyclo(3) / Cyclo(14);
    CHECK(E.E1 == r1 * r2 * r2);

    in.special = true;
    in.ord_c_phi = 0;
    E = euler_factor(in);
    CHECK(E.E1 == -r1);
    CHECK(E.E2 == Cyclo(1) - r2);

    in.beta_g = Cyclo(0);
    CHECK_THROWS_AS(euler_factor(in), DivisionByZero);
}
