#include "iw/suite/oracles.hpp"

#include <cstdlib>
#include <vector>

namespace iw::oracle {

namespace {

// Coefficients of e^{ct} up to t^n.
std::vector<Q> exp_series(const Q& c, long n) {
    std::vector<Q> out(n + 1);
    Q term = 1;
    for (long j = 0; j <= n; ++j) {
        out[j] = term;
        term = term * c / Q(j + 1);
    }
    return out;
}

// 1 / a for a power series with a[0] != 0.
std::vector<Q> inverse_series(const std::vector<Q>& a) {
    std::vector<Q> b(a.size());
    b[0] = 1 / a[0];
    for (std::size_t n = 1; n < a.size(); ++n) {
        Q s = 0;
        for (std::size_t j = 1; j <= n; ++j) s += a[j] * b[n - j];
        b[n] = -s / a[0];
    }
    return b;
}

}  // namespace

Cyclo generalized_bernoulli(long k, const DirichletCharacter& psi) {
    long N = psi.modulus();
    // (e^{Nt} - 1) / t = sum N^{j+1} t^j / (j+1)!
    auto e = exp_series(Q(N), k + 1);
    std::vector<Q> den(k + 1);
    for (long j = 0; j <= k; ++j) den[j] = e[j + 1];
    auto inv = inverse_series(den);
    Cyclo total(0);
    for (long a = 1; a <= N; ++a) {
        Cyclo w = psi(a);
        if (w.is_zero()) continue;
        auto ea = exp_series(Q(a), k);
        Q ck = 0;  // coefficient of t^k in e^{at} / den
        for (long j = 0; j <= k; ++j) ck += ea[j] * inv[k - j];
        total += w * Cyclo(ck);
    }
    Q fact = 1;
    for (long j = 2; j <= k; ++j) fact *= j;
    return total * Cyclo(fact);
}

Cyclo L_value(long k, const DirichletCharacter& psi) { return -generalized_bernoulli(k, psi) / Cyclo(k); }

Cyclo divisor_sum(long n, long k, const DirichletCharacter& psi) {
    Cyclo s(0);
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        Z pw = 1;
        for (long j = 1; j < k; ++j) pw *= d;
        s += psi(d) * Cyclo(Q(pw));
    }
    return s;
}

Cyclo euler_factor(const EulerInputs& in) {
    Q p(in.p);
    Q ps1 = 1, pms = 1;
    for (long j = 0; j < std::abs(in.s - 1); ++j) ps1 = in.s - 1 >= 0 ? Q(ps1 * p) : Q(ps1 / p);
    for (long j = 0; j < std::abs(in.s); ++j) pms = in.s >= 0 ? Q(pms / p) : Q(pms * p);
    Cyclo A = in.alpha_g.conj() * in.alpha_f;  // alpha(g0)^rho alpha(f0)
    Cyclo B = in.beta_g.conj() * in.alpha_f;   // beta(g0)^rho alpha(f0)
    if (A.is_zero() || B.is_zero()) throw DivisionByZero("oracle");
    bool principal_branch = !in.special || in.ord_c_phi > 0;
    Cyclo E1(1), E2(1);
    if (principal_branch) {
        for (long j = 0; j < in.ord_c_phi; ++j) E1 = E1 * Cyclo(ps1) / A;
        for (long j = 0; j < in.ord_c_xiphi; ++j) E1 = E1 * Cyclo(ps1) / B;
        E2 = (Cyclo(1) - in.phi0_p * Cyclo(ps1) / A) * (Cyclo(1) - in.xiphi0_p * Cyclo(ps1) / B);
    } else {
        E1 = Cyclo(0) - Cyclo(ps1) / A;
        E2 = Cyclo(1) - Cyclo(ps1) / B;
    }
    Cyclo E3a = Cyclo(1) - in.phi0_p * in.alpha_f_prime * in.alpha_g.conj() * Cyclo(pms);
    Cyclo E3b = Cyclo(1) - in.xiphi0_p * in.alpha_f_prime * in.alpha_g_prime.conj() * Cyclo(pms);
    return E1 * E2 * E3a * E3b;
}

Q bernoulli(long n) {
    std::vector<Q> a(n + 1);
    for (long m = 0; m <= n; ++m) {
        a[m] = Q(1, m + 1);
        for (long j = m; j >= 1; --j) a[j - 1] = Q(j) * (a[j - 1] - a[j]);
    }
    return n == 1 ? -a[0] : a[0];
}

}  // namespace iw::oracle
