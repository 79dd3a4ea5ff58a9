#pragma once

#include <array>
#include <map>
#include <vector>

#include "iw/padic.hpp"

namespace iw {

/// Dirichlet character mod N with values in the roots of unity of order `order`.
///
/// expo[a] is the exponent of zeta_order at a mod N, or -1 when gcd(a, N) > 1.
class DirichletCharacter {
public:
    DirichletCharacter() : DirichletCharacter(trivial(1)) {}

    static DirichletCharacter trivial(long N = 1);
    /// Values on the standard generators of (Z/NZ)^x: a primitive root for each odd prime power,
    /// then -1 and 5 for the 2-part. exps[i] is taken modulo the order of the i-th generator.
    static DirichletCharacter from_generators(long N, const std::vector<long>& exps);
    static DirichletCharacter from_table(long N, long order, std::vector<long> expo);
    static std::vector<DirichletCharacter> all(long N);
    /// Orders of the standard generators of (Z/NZ)^x.
    static std::vector<long> generator_orders(long N);
    /// omega with omega(g) = zeta_{p-1} for the least primitive root g mod p.
    static DirichletCharacter teichmuller(long p);

    long modulus() const { return N_; }
    long order() const { return order_; }
    const std::vector<long>& table() const { return expo_; }

    Cyclo operator()(long n) const;
    long exponent(long n) const;  // -1 off the units
    bool is_principal() const;
    bool is_trivial() const { return N_ == 1; }
    int parity() const;  // psi(-1)
    long conductor() const;
    DirichletCharacter primitive() const;
    /// Same character viewed modulo a multiple L of N.
    DirichletCharacter lift(long L) const;

    DirichletCharacter operator*(const DirichletCharacter& o) const;
    DirichletCharacter inverse() const;
    DirichletCharacter pow(long e) const;
    bool operator==(const DirichletCharacter& o) const;

private:
    DirichletCharacter(long N, long order, std::vector<long> expo);
    void normalize();
    long N_;
    long order_;
    std::vector<long> expo_;
};

// ---------------------------------------------------------------------------

Q bernoulli_number(long n);  // B_1 = -1/2
QPoly bernoulli_poly(long n);

/// (2/(m+2k)) N^{-m-2k-1} B_{-(m+2k)}(a/N), for m + 2k <= -1 and 0 <= a < N.
Q m_special_value(long a, long N, long m, long k);

/// L_N(1-k, psi) = 1/2 sum_a psi(a) M_{a,N}^nu at the matching point, psi(-1) = (-1)^nu.
Cyclo dirichlet_L_nonpositive(long k, const DirichletCharacter& psi);

/// W(z, alpha, -r) = sum_mu C(r, mu) z^{r-mu} prod_{nu=1}^{mu} (nu - alpha).
QPoly whittaker_poly(const Q& alpha, long r);

// ---------------------------------------------------------------------------

/// Polynomial in X = -1/(4 pi y), low degree first.
using XPoly = std::vector<Cyclo>;

namespace xpoly {
void trim(XPoly& a);
long deg(const XPoly& a);
XPoly add(const XPoly& a, const XPoly& b);
XPoly sub(const XPoly& a, const XPoly& b);
XPoly mul(const XPoly& a, const XPoly& b);
XPoly scale(const XPoly& a, const Cyclo& c);
XPoly deriv(const XPoly& a);
XPoly dilate(const XPoly& a, const Q& c);  // a(cX)
XPoly from_q(const QPoly& a);
XPoly monomial(long d, const Cyclo& c);
}  // namespace xpoly

/// q-expansion sum_{n=0}^{Q} a_n(X) q^n of a nearly holomorphic form.
struct QExpansion {
    long Q = 0;
    std::vector<XPoly> coeffs;  // size Q + 1
    long order = 0;             // declared bound on the X-degree

    QExpansion() = default;
    explicit QExpansion(long q, long ord = 0) : Q(q), coeffs(q + 1), order(ord) {}
    long max_degree() const;
    bool respects_order() const { return max_degree() <= order; }
    bool operator==(const QExpansion& o) const;
};

QExpansion truncate(const QExpansion& h, long Q);
QExpansion add(const QExpansion& a, const QExpansion& b);
QExpansion sub(const QExpansion& a, const QExpansion& b);
QExpansion scale(const QExpansion& a, const Cyclo& c);
QExpansion mul(const QExpansion& a, const QExpansion& b);

/// sum_n a_{pn}(pX) q^n; the truncation drops to floor(Q / p).
QExpansion hecke_Tp(const QExpansion& h, long p);
/// sum_n ((n + mX) a_n - X^2 a_n') q^n.
QExpansion delta_m(const QExpansion& h, long m);
/// delta_{m+2r-2} ... delta_{m+2} delta_m.
QExpansion delta_mr(const QExpansion& h, long m, long r);
/// X = 0.
QExpansion iota(const QExpansion& h);
/// sum_n n a_n q^n.
QExpansion d_op(const QExpansion& h);
QExpansion twist(const QExpansion& h, const DirichletCharacter& chi);
/// Terms with n = a mod m.
QExpansion slice(const QExpansion& h, long a, long m);
/// q -> q^N.
QExpansion dilate(const QExpansion& h, long N);

// ---------------------------------------------------------------------------

/// Constant-term data of E~_{k,N}(z, -r; a, b): the coefficient of (4 pi y)^{-r} (needs b = 0 mod N).
Q tilde_constant_A(long k, long r, long a, long N);
/// The coefficient of (4 pi y)^{1-k+r} (needs a = 0 mod N).
Q tilde_constant_B(long k, long r, long b, long N);

QExpansion eisen_tilde_qexp(long k, long N, long r, long a, long b, long Q);
/// F_k(z, -r; psi1, psi2); zero when psi1 psi2(-1) != (-1)^k.
QExpansion eisen_F_qexp(long k, long r, const DirichletCharacter& psi1, const DirichletCharacter& psi2, long Q);

// ---------------------------------------------------------------------------
// Coefficients in the group ring of Gamma_2 = 1 + pZ_p, p = 3.

/// Finite combination of Dirac points x in 1 + pZ_(p), each weighted by a polynomial in X.
using PointMeasure = std::map<Q, XPoly>;

struct GammaQExpansion {
    long p = 3;
    long Q = 0;
    std::vector<PointMeasure> coeffs;
    long order = 0;

    GammaQExpansion() = default;
    GammaQExpansion(long p_, long q, long ord = 0) : p(p_), Q(q), coeffs(q + 1), order(ord) {}
    bool is_zero() const;
};

GammaQExpansion add(const GammaQExpansion& a, const GammaQExpansion& b);
GammaQExpansion scale(const GammaQExpansion& a, const Cyclo& c);
GammaQExpansion mul(const GammaQExpansion& a, const GammaQExpansion& b);
GammaQExpansion hecke_Tp(const GammaQExpansion& h);
GammaQExpansion delta_mr(const GammaQExpansion& h, long m, long r);
GammaQExpansion slice(const GammaQExpansion& h, long a, long m);

/// s in [0, p^m) with (1+p)^s = x mod p^{m+1}.
long gamma_index(const Q& x, long p, long m);
/// The Dirac point of <d>^{-1}, that is omega(d)/d.
Q bracket_inverse_point(long d, long p);

/// Integral of chi_2^i over the coset (1+p)^s Gamma_2^{p^m}.
QExpansion integrate_coset(const GammaQExpansion& h, long s, long m, long i);
/// kappa with kappa(x) = x^w zeta_{p^m}^{t s(x)}.
QExpansion specialize(const GammaQExpansion& h, long w, long m, long t);
/// The finite character z -> zeta_{p^m}^{t s} of Z_p^x, s the index of z omega^{-1}(z); modulus p^{m+1}.
DirichletCharacter gamma_character(long p, long m, long t);

/// sum_n sum_{d | n, d = a mod L} (n/d)^{i1} d^{i2} n^{i3} <d>^{-1} q^n.
GammaQExpansion F_family(long p, const std::array<long, 3>& i, long a, long L, long Q);

/// Fixed data of the two-variable construction.
struct EisensteinDatum {
    long p = 3;
    long k = 5;
    long M = 1;                 // lcm of the tame levels, prime to p
    DirichletCharacter psi;     // modulo M p^{m_psi + 1}
    long m_psi = 0;
    DirichletCharacter xi;      // modulo M p
    GammaQExpansion G;          // an arbitrary test family
};

using WeightPair = std::array<long, 2>;

GammaQExpansion H_c(const EisensteinDatum& D, const WeightPair& i, long c, long L, long Q);
/// Phi^{(i)}(a) for a in (Z/p^{m+1})^x.
GammaQExpansion Phi(const EisensteinDatum& D, const WeightPair& i, long a, long m, long Q);
/// phi^{(i)}((a1, a2)): a1 in (Z/p^{m1+1})^x, a2 the index of a coset of Gamma_2 / Gamma_2^{p^{m2}}.
QExpansion phi_value(const EisensteinDatum& D, const WeightPair& i, long a1, long m1, long a2, long m2, long Q);

struct InterpolationSides {
    QExpansion lhs;
    QExpansion rhs;
};

/// Both sides of the interpolation identity for phi1 mod p^{m1+1} and phi2 = zeta_{p^{m2}}^{t2 s}.
InterpolationSides interpolation_sides(const EisensteinDatum& D, const WeightPair& i, const DirichletCharacter& phi1,
                                       long m1, long t2, long m2, long Q);

/// Fiber sums from level m + e_t equal the level-m values, in both directions.
bool distribution_property_check(const EisensteinDatum& D, const WeightPair& i, long m1, long m2, long Q);

/// ord_p((n2/t^2 + chi1)^e) >= e * depth.
bool admissible_congruence_check(long p, const Q& chi1_a1, const Q& t, const Q& n2, long e, long depth);

// ---------------------------------------------------------------------------

struct EulerInputs {
    long p = 3;
    long s = 0;
    Cyclo alpha_f, alpha_f_prime, alpha_g, alpha_g_prime, beta_g;
    Cyclo phi0_p;     // phi_0(p), zero when phi is ramified
    Cyclo xiphi0_p;   // (xi_(p) phi)_0(p)
    long ord_c_phi = 0;
    long ord_c_xiphi = 0;
    bool special = false;  // pi_{g,p} special
};

struct EulerFactor {
    Cyclo E1, E2, E3;
    Cyclo value() const { return E1 * E2 * E3; }
};

EulerFactor euler_factor(const EulerInputs& in);

}  // namespace iw
