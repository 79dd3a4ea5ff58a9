#include "iw/eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace iw {

namespace {

long ipow(long b, long e) { return zpow(Z(b), e).get_si(); }

std::vector<std::pair<long, long>> factor(long n) {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        long e = 0;
        while (n % q == 0) n /= q, ++e;
        out.emplace_back(q, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long multiplicative_order(long g, long n) {
    long x = mod_l(g, n), k = 1;
    while (x != 1 % n) x = x * g % n, ++k;
    return k;
}

// Standard generators of (Z/NZ)^x lifted by CRT, with their orders.
std::vector<std::pair<long, long>> standard_generators(long N) {
    std::vector<std::pair<long, long>> gens;
    for (auto [q, e] : factor(N)) {
        long qe = ipow(q, e), rest = N / qe;
        auto crt = [&](long g) {
            // x = g mod qe, x = 1 mod rest
            if (rest == 1) return mod_l(g, qe);
            long t = mod_l((g - 1) % qe * inv_mod_l(rest % qe, qe), qe);
            return mod_l(1 + rest * t, N);
        };
        if (q == 2) {
            if (e >= 2) gens.emplace_back(crt(-1), 2);
            if (e >= 3) gens.emplace_back(crt(5), ipow(2, e - 2));
            continue;
        }
        long phi = euler_phi(qe);
        long g = 2;
        while (multiplicative_order(g, qe) != phi) ++g;
        gens.emplace_back(crt(g), phi);
    }
    return gens;
}

bool is_square(long n, long& root) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

Q inv_sqrt(long N) {
    long r;
    if (!is_square(N, r)) throw UnsupportedConstantTerm("N^{-1/2} is irrational for N = " + std::to_string(N));
    return Q(1, r);
}

// (-X)^e as an X-polynomial times c.
XPoly neg_x_pow(long e, const Cyclo& c) { return xpoly::monomial(e, e % 2 ? -c : c); }

void add_into(XPoly& a, const XPoly& b) { a = xpoly::add(a, b); }

void add_into(PointMeasure& a, const Q& x, const XPoly& b) {
    auto& slot = a[x];
    slot = xpoly::add(slot, b);
    if (slot.empty()) a.erase(x);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dirichlet characters

DirichletCharacter::DirichletCharacter(long N, long order, std::vector<long> expo)
    : N_(N), order_(order), expo_(std::move(expo)) {
    normalize();
}

void DirichletCharacter::normalize() {
    long g = order_;
    for (long e : expo_)
        if (e > 0) g = std::gcd(g, e);
    if (g > 1) {
        order_ /= g;
        for (long& e : expo_)
            if (e > 0) e /= g;
    }
}

DirichletCharacter DirichletCharacter::trivial(long N) {
    std::vector<long> t(N);
    for (long a = 0; a < N; ++a) t[a] = gcd_l(a, N) == 1 ? 0 : -1;
    return DirichletCharacter(N, 1, t);
}

std::vector<long> DirichletCharacter::generator_orders(long N) {
    std::vector<long> out;
    for (auto& g : standard_generators(N)) out.push_back(g.second);
    return out;
}

DirichletCharacter DirichletCharacter::from_generators(long N, const std::vector<long>& exps) {
    if (N < 1) throw InvalidCharacter("modulus must be positive");
    auto gens = standard_generators(N);
    if (exps.size() != gens.size())
        throw InvalidCharacter("expected " + std::to_string(gens.size()) + " generator exponents");
    long L = 1;
    for (auto& g : gens) L = lcm_l(L, g.second);
    std::vector<long> t(N, -1);
    if (N == 1) t[0] = 0;
    // walk the product of cyclic groups
    std::vector<long> k(gens.size(), 0);
    while (true) {
        long x = 1 % N, e = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            x = x * powmod_l(gens[i].first, k[i], N) % N;
            e += mod_l(exps[i], gens[i].second) * k[i] * (L / gens[i].second);
        }
        t[x] = mod_l(e, L);
        std::size_t i = 0;
        while (i < gens.size() && ++k[i] == gens[i].second) k[i++] = 0;
        if (i == gens.size()) break;
    }
    return DirichletCharacter(N, L, t);
}

DirichletCharacter DirichletCharacter::from_table(long N, long order, std::vector<long> expo) {
    if (static_cast<long>(expo.size()) != N) throw InvalidCharacter("table size differs from the modulus");
    for (long a = 0; a < N; ++a) {
        bool unit = gcd_l(a, N) == 1;
        if (unit != (expo[a] >= 0)) throw InvalidCharacter("table must be supported on the units");
        if (unit) expo[a] = mod_l(expo[a], order);
    }
    DirichletCharacter chi(N, order, std::move(expo));
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            if (chi.expo_[a] >= 0 && chi.expo_[b] >= 0 &&
                chi.expo_[a * b % N] != (chi.expo_[a] + chi.expo_[b]) % chi.order_)
                throw InvalidCharacter("table is not multiplicative");
    return chi;
}

std::vector<DirichletCharacter> DirichletCharacter::all(long N) {
    auto orders = generator_orders(N);
    std::vector<DirichletCharacter> out;
    std::vector<long> k(orders.size(), 0);
    while (true) {
        out.push_back(from_generators(N, k));
        std::size_t i = 0;
        while (i < orders.size() && ++k[i] == orders[i]) k[i++] = 0;
        if (i == orders.size()) break;
    }
    return out;
}

DirichletCharacter DirichletCharacter::teichmuller(long p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p));
    if (p == 2) return trivial(2);
    return from_generators(p, {1});
}

long DirichletCharacter::exponent(long n) const { return expo_[mod_l(n, N_)]; }

Cyclo DirichletCharacter::operator()(long n) const {
    long e = exponent(n);
    if (e < 0) return Cyclo(0);
    if (order_ == 1) return Cyclo(1);
    return Cyclo::zeta(order_, e);
}

bool DirichletCharacter::is_principal() const { return order_ == 1; }

int DirichletCharacter::parity() const {
    long e = exponent(-1);
    return e == 0 ? 1 : -1;
}

long DirichletCharacter::conductor() const {
    for (long f = 1; f <= N_; ++f) {
        if (N_ % f) continue;
        bool ok = true;
        for (long a = 1 % f; a < N_ && ok; a += f)
            if (expo_[a] > 0) ok = false;
        if (ok) return f;
    }
    return N_;
}

DirichletCharacter DirichletCharacter::primitive() const {
    long f = conductor();
    std::vector<long> t(f, -1);
    for (long b = 0; b < f; ++b) {
        if (gcd_l(b, f) != 1) continue;
        for (long a = b; a < N_ + f; a += f)
            if (gcd_l(a, N_) == 1) {
                t[b] = expo_[a % N_];
                break;
            }
    }
    if (f == 1) t[0] = 0;
    return DirichletCharacter(f, order_, t);
}

DirichletCharacter DirichletCharacter::lift(long L) const {
    if (L % N_) throw InvalidCharacter("lift needs a multiple of the modulus");
    std::vector<long> t(L);
    for (long a = 0; a < L; ++a) t[a] = gcd_l(a, L) == 1 ? expo_[a % N_] : -1;
    return DirichletCharacter(L, order_, t);
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    long L = lcm_l(N_, o.N_), ord = lcm_l(order_, o.order_);
    std::vector<long> t(L);
    for (long a = 0; a < L; ++a) {
        long x = expo_[a % N_], y = o.expo_[a % o.N_];
        t[a] = (x < 0 || y < 0) ? -1 : (x * (ord / order_) + y * (ord / o.order_)) % ord;
    }
    return DirichletCharacter(L, ord, t);
}

DirichletCharacter DirichletCharacter::inverse() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(long e) const {
    std::vector<long> t = expo_;
    for (long& x : t)
        if (x >= 0) x = mod_l(x * e, order_);
    return DirichletCharacter(N_, order_, t);
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    return N_ == o.N_ && order_ == o.order_ && expo_ == o.expo_;
}

// ---------------------------------------------------------------------------
// Bernoulli data and special values

Q bernoulli_number(long n) {
    static std::vector<Q> cache{Q(1)};
    if (n < 0) throw std::invalid_argument("negative Bernoulli index");
    while (static_cast<long>(cache.size()) <= n) {
        long m = cache.size();
        Q s = 0;
        for (long j = 0; j < m; ++j) s += Q(binom(m + 1, j)) * cache[j];
        cache.push_back(-s / Q(m + 1));
    }
    return cache[n];
}

QPoly bernoulli_poly(long n) {
    QPoly c(n + 1);
    for (long j = 0; j <= n; ++j) c[n - j] = Q(binom(n, j)) * bernoulli_number(j);
    return c;
}

namespace {

// (2/(-n)) N^{n-1} B_n(a/N), the value at m + 2k = -n.
Q special_by_exponent(long a, long N, long n) {
    if (a < 0 || a >= N) throw std::invalid_argument("need 0 <= a < N");
    if (a == 0 && n == 1) throw PoleCase("a = 0 and m + 2k = -1");
    return Q(-2, n) * qpow(Q(N), n - 1) * poly::eval(bernoulli_poly(n), Q(a, N));
}

}  // namespace

Q m_special_value(long a, long N, long m, long k) {
    long s = m + 2 * k;
    if (s > -1) throw std::invalid_argument("need m + 2k <= -1");
    return special_by_exponent(a, N, -s);
}

Cyclo dirichlet_L_nonpositive(long k, const DirichletCharacter& psi) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    if (psi.parity() != (k % 2 ? -1 : 1)) throw ParityMismatch("psi(-1) != (-1)^k");
    long N = psi.modulus();
    Cyclo acc(0);
    for (long a = 0; a < N; ++a) {
        if (psi.exponent(a) < 0) continue;
        acc += psi(a) * Cyclo(special_by_exponent(a, N, k) / 2);
    }
    return acc;
}

QPoly whittaker_poly(const Q& alpha, long r) {
    if (r < 0) throw std::invalid_argument("need r >= 0");
    QPoly c(r + 1);
    Q prod = 1;
    for (long mu = 0; mu <= r; ++mu) {
        if (mu > 0) prod *= Q(mu) - alpha;
        c[r - mu] = Q(binom(r, mu)) * prod;
    }
    poly::trim(c);
    return c;
}

namespace {

// (4 pi y)^{-r} W(4 pi n y, k - r, -r) in X = -1/(4 pi y).
QPoly whittaker_x(long k, long r, long n) {
    QPoly w = whittaker_poly(Q(k - r), r);
    QPoly out(r + 1);
    for (long j = 0; j < static_cast<long>(w.size()); ++j) {
        Q c = qpow(Q(n), j) * w[j];
        out[r - j] = (r - j) % 2 ? -c : c;
    }
    poly::trim(out);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// X-polynomials

namespace xpoly {

void trim(XPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long deg(const XPoly& a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

XPoly add(const XPoly& a, const XPoly& b) {
    XPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] += b[i];
    }
    trim(c);
    return c;
}

XPoly sub(const XPoly& a, const XPoly& b) { return add(a, scale(b, Cyclo(-1))); }

XPoly mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

XPoly scale(const XPoly& a, const Cyclo& c) {
    if (c.is_zero()) return {};
    XPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    trim(r);
    return r;
}

XPoly deriv(const XPoly& a) {
    if (a.size() <= 1) return {};
    XPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Cyclo(static_cast<long>(i));
    trim(r);
    return r;
}

XPoly dilate(const XPoly& a, const Q& c) {
    XPoly r(a.size());
    Q f = 1;
    for (std::size_t i = 0; i < a.size(); ++i, f *= c) r[i] = a[i] * Cyclo(f);
    trim(r);
    return r;
}

XPoly from_q(const QPoly& a) {
    XPoly r(a.begin(), a.end());
    trim(r);
    return r;
}

XPoly monomial(long d, const Cyclo& c) {
    if (c.is_zero()) return {};
    XPoly r(d + 1);
    r[d] = c;
    return r;
}

}  // namespace xpoly

namespace {

// (n + mX) a - X^2 a'
XPoly delta_coeff(const XPoly& a, long n, long m) {
    XPoly t = xpoly::mul(XPoly{Cyclo(n), Cyclo(m)}, a);
    XPoly s = xpoly::mul(XPoly{Cyclo(0), Cyclo(0), Cyclo(1)}, xpoly::deriv(a));
    return xpoly::sub(t, s);
}

}  // namespace

// ---------------------------------------------------------------------------
// q-expansions

long QExpansion::max_degree() const {
    long d = -1;
    for (auto& c : coeffs) d = std::max(d, xpoly::deg(c));
    return d;
}

bool QExpansion::operator==(const QExpansion& o) const {
    if (Q != o.Q) return false;
    for (long n = 0; n <= Q; ++n) {
        XPoly a = coeffs[n], b = o.coeffs[n];
        xpoly::trim(a);
        xpoly::trim(b);
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!(a[i] == b[i])) return false;
    }
    return true;
}

QExpansion truncate(const QExpansion& h, long Q) {
    if (Q > h.Q) throw InsufficientTruncation("q-expansion is known to q^" + std::to_string(h.Q));
    QExpansion r(Q, h.order);
    for (long n = 0; n <= Q; ++n) r.coeffs[n] = h.coeffs[n];
    return r;
}

QExpansion add(const QExpansion& a, const QExpansion& b) {
    QExpansion r(std::min(a.Q, b.Q), std::max(a.order, b.order));
    for (long n = 0; n <= r.Q; ++n) r.coeffs[n] = xpoly::add(a.coeffs[n], b.coeffs[n]);
    return r;
}

QExpansion sub(const QExpansion& a, const QExpansion& b) { return add(a, scale(b, Cyclo(-1))); }

QExpansion scale(const QExpansion& a, const Cyclo& c) {
    QExpansion r(a.Q, a.order);
    for (long n = 0; n <= a.Q; ++n) r.coeffs[n] = xpoly::scale(a.coeffs[n], c);
    return r;
}

QExpansion mul(const QExpansion& a, const QExpansion& b) {
    QExpansion r(std::min(a.Q, b.Q), a.order + b.order);
    for (long i = 0; i <= r.Q; ++i) {
        if (a.coeffs[i].empty()) continue;
        for (long j = 0; i + j <= r.Q; ++j)
            if (!b.coeffs[j].empty()) add_into(r.coeffs[i + j], xpoly::mul(a.coeffs[i], b.coeffs[j]));
    }
    return r;
}

QExpansion hecke_Tp(const QExpansion& h, long p) {
    QExpansion r(h.Q / p, h.order);
    for (long n = 0; n <= r.Q; ++n) r.coeffs[n] = xpoly::dilate(h.coeffs[p * n], Q(p));
    return r;
}

QExpansion delta_m(const QExpansion& h, long m) {
    QExpansion r(h.Q, h.order + 1);
    for (long n = 0; n <= h.Q; ++n) r.coeffs[n] = delta_coeff(h.coeffs[n], n, m);
    return r;
}

QExpansion delta_mr(const QExpansion& h, long m, long r) {
    QExpansion out = h;
    for (long j = 0; j < r; ++j) out = delta_m(out, m + 2 * j);
    return out;
}

QExpansion iota(const QExpansion& h) {
    QExpansion r(h.Q, 0);
    for (long n = 0; n <= h.Q; ++n)
        if (!h.coeffs[n].empty()) r.coeffs[n] = xpoly::monomial(0, h.coeffs[n][0]);
    return r;
}

QExpansion d_op(const QExpansion& h) {
    QExpansion r(h.Q, h.order);
    for (long n = 0; n <= h.Q; ++n) r.coeffs[n] = xpoly::scale(h.coeffs[n], Cyclo(n));
    return r;
}

QExpansion twist(const QExpansion& h, const DirichletCharacter& chi) {
    QExpansion r(h.Q, h.order);
    for (long n = 0; n <= h.Q; ++n) r.coeffs[n] = xpoly::scale(h.coeffs[n], chi(n));
    return r;
}

QExpansion slice(const QExpansion& h, long a, long m) {
    QExpansion r(h.Q, h.order);
    for (long n = 0; n <= h.Q; ++n)
        if (mod_l(n - a, m) == 0) r.coeffs[n] = h.coeffs[n];
    return r;
}

QExpansion dilate(const QExpansion& h, long N) {
    QExpansion r(h.Q, h.order);
    for (long n = 0; n * N <= h.Q; ++n) r.coeffs[n * N] = h.coeffs[n];
    return r;
}

// ---------------------------------------------------------------------------
// Eisenstein series

Q tilde_constant_A(long k, long r, long a, long N) {
    long kk = k - 2 * r;
    a = mod_l(a, N);
    if (kk > 1) return Q(-1, kk) * qpow(Q(N), kk - 1) * poly::eval(bernoulli_poly(kk), Q(a, N));
    if (kk == 1) return a ? Q(1, 2) - Q(a, N) : Q(0);
    if (kk == 0) return inv_sqrt(N);
    return 0;
}

Q tilde_constant_B(long k, long r, long b, long N) {
    long kk = k - 2 * r;
    b = mod_l(b, N);
    if (kk > 2) return 0;
    if (kk == 2) return inv_sqrt(N);
    if (kk == 1) return b ? Q(1, 2) - Q(b, N) : Q(0);
    return Q(1) / Q(kk - 2) * qpow(Q(N), 1 - kk) * poly::eval(bernoulli_poly(2 - kk), Q(b, N));
}

QExpansion eisen_tilde_qexp(long k, long N, long r, long a, long b, long Q) {
    if (k < 1 || r < 0 || r > k - 1) throw std::invalid_argument("need 1 <= k and 0 <= r <= k - 1");
    QExpansion h(Q, r + (k == 2 * r + 2 ? 1 : 0));
    a = mod_l(a, N);
    b = mod_l(b, N);
    if (b == 0) add_into(h.coeffs[0], neg_x_pow(r, Cyclo(tilde_constant_A(k, r, a, N))));
    if (a == 0) add_into(h.coeffs[0], neg_x_pow(k - 1 - r, Cyclo(tilde_constant_B(k, r, b, N))));
    long e = k - 2 * r - 1;
    for (long n = 1; n <= Q; ++n) {
        ::iw::Q s = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d) continue;
            long dp = n / d;
            ::iw::Q de = qpow(::iw::Q(d), e);
            if (mod_l(d - a, N) == 0 && mod_l(dp - b, N) == 0) s += de;
            if (mod_l(-d - a, N) == 0 && mod_l(-dp - b, N) == 0) s += (e % 2 ? de : -de);  // sign(-d) (-d)^e
        }
        if (s != 0) h.coeffs[n] = xpoly::scale(xpoly::from_q(whittaker_x(k, r, n)), Cyclo(s));
    }
    return h;
}

QExpansion eisen_F_qexp(long k, long r, const DirichletCharacter& psi1, const DirichletCharacter& psi2, long Q) {
    if (k < 1 || r < 0 || r > k - 1) throw std::invalid_argument("need 1 <= k and 0 <= r <= k - 1");
    QExpansion h(Q, r + (k == 2 * r + 2 ? 1 : 0));
    if (psi1.parity() * psi2.parity() != (k % 2 ? -1 : 1)) return h;
    long kk = k - 2 * r;
    if (psi1.is_trivial()) {
        long N = psi2.modulus();
        Cyclo C(0);
        if (kk == 0) {
            Cyclo s(0);
            for (long a = 0; a < N; ++a) s += psi2(a);
            if (!s.is_zero()) C = s * Cyclo(inv_sqrt(N) / 2);
        } else {
            for (long a = 0; a < N; ++a)
                if (psi2.exponent(a) >= 0) C += psi2(a) * Cyclo(tilde_constant_A(k, r, a, N) / 2);
        }
        add_into(h.coeffs[0], neg_x_pow(r, C));
    }
    if (psi2.is_trivial()) {
        long N = psi1.modulus();
        Cyclo D(0);
        if (kk == 2) {
            if (psi1.is_principal()) D = Cyclo(::iw::Q(euler_phi(N), 2 * N));
        } else {
            for (long b = 0; b < N; ++b)
                if (psi1.exponent(b) >= 0) D += psi1(b) * Cyclo(tilde_constant_B(k, r, b, N) / 2);
        }
        add_into(h.coeffs[0], neg_x_pow(k - 1 - r, D));
    }
    long e = kk - 1;
    for (long n = 1; n <= Q; ++n) {
        Cyclo s(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d) continue;
            long e1 = psi1.exponent(n / d), e2 = psi2.exponent(d);
            if (e1 < 0 || e2 < 0) continue;
            s += psi1(n / d) * psi2(d) * Cyclo(qpow(::iw::Q(d), e));
        }
        if (!s.is_zero()) h.coeffs[n] = xpoly::scale(xpoly::from_q(whittaker_x(k, r, n)), s);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Group-ring coefficients

bool GammaQExpansion::is_zero() const {
    for (auto& c : coeffs)
        if (!c.empty()) return false;
    return true;
}

namespace {

void check_same(const GammaQExpansion& a, const GammaQExpansion& b) {
    if (a.p != b.p) throw IncompatibleShapes("group-ring expansions over different primes");
}

}  // namespace

GammaQExpansion add(const GammaQExpansion& a, const GammaQExpansion& b) {
    check_same(a, b);
    GammaQExpansion r(a.p, std::min(a.Q, b.Q), std::max(a.order, b.order));
    for (long n = 0; n <= r.Q; ++n) {
        r.coeffs[n] = a.coeffs[n];
        for (auto& [x, c] : b.coeffs[n]) add_into(r.coeffs[n], x, c);
    }
    return r;
}

GammaQExpansion scale(const GammaQExpansion& a, const Cyclo& c) {
    GammaQExpansion r(a.p, a.Q, a.order);
    if (c.is_zero()) return r;
    for (long n = 0; n <= a.Q; ++n)
        for (auto& [x, v] : a.coeffs[n]) r.coeffs[n][x] = xpoly::scale(v, c);
    return r;
}

GammaQExpansion mul(const GammaQExpansion& a, const GammaQExpansion& b) {
    check_same(a, b);
    GammaQExpansion r(a.p, std::min(a.Q, b.Q), a.order + b.order);
    for (long i = 0; i <= r.Q; ++i) {
        if (a.coeffs[i].empty()) continue;
        for (long j = 0; i + j <= r.Q; ++j)
            for (auto& [x, u] : a.coeffs[i])
                for (auto& [y, v] : b.coeffs[j]) add_into(r.coeffs[i + j], x * y, xpoly::mul(u, v));
    }
    return r;
}

GammaQExpansion hecke_Tp(const GammaQExpansion& h) {
    GammaQExpansion r(h.p, h.Q / h.p, h.order);
    for (long n = 0; n <= r.Q; ++n)
        for (auto& [x, c] : h.coeffs[h.p * n]) add_into(r.coeffs[n], x, xpoly::dilate(c, Q(h.p)));
    return r;
}

GammaQExpansion delta_mr(const GammaQExpansion& h, long m, long r) {
    GammaQExpansion out = h;
    for (long j = 0; j < r; ++j) {
        GammaQExpansion next(out.p, out.Q, out.order + 1);
        for (long n = 0; n <= out.Q; ++n)
            for (auto& [x, c] : out.coeffs[n]) add_into(next.coeffs[n], x, delta_coeff(c, n, m + 2 * j));
        out = std::move(next);
    }
    return out;
}

GammaQExpansion slice(const GammaQExpansion& h, long a, long m) {
    GammaQExpansion r(h.p, h.Q, h.order);
    for (long n = 0; n <= h.Q; ++n)
        if (mod_l(n - a, m) == 0) r.coeffs[n] = h.coeffs[n];
    return r;
}

long gamma_index(const Q& x, long p, long m) {
    long P = ipow(p, m + 1);
    Z num = x.get_num(), den = x.get_den();
    if (den % p == 0 || num % p == 0) throw InvalidLevel("point is not a p-adic unit");
    long nr = mod_l(Z(num % P).get_si(), P), dr = mod_l(Z(den % P).get_si(), P);
    long xr = nr * inv_mod_l(dr, P) % P;
    if (xr % p != 1 % p) throw InvalidLevel("point is not in 1 + pZ_p");
    long cur = 1 % P, n = ipow(p, m);
    for (long s = 0; s < n; ++s) {
        if (cur == xr) return s;
        cur = cur * (1 + p) % P;
    }
    throw InvalidLevel("1 + p does not generate the point");
}

Q bracket_inverse_point(long d, long p) {
    if (p != 3) throw UnsupportedField("group-ring coefficients need a rational Teichmuller character (p = 3)");
    if (d % p == 0) throw InvalidLevel("d must be prime to p");
    long w = mod_l(d, 3) == 1 ? 1 : -1;
    return Q(w) / Q(d);
}

QExpansion integrate_coset(const GammaQExpansion& h, long s, long m, long i) {
    QExpansion r(h.Q, h.order);
    std::map<Q, long> idx;
    for (long n = 0; n <= h.Q; ++n)
        for (auto& [x, c] : h.coeffs[n]) {
            auto it = idx.find(x);
            if (it == idx.end()) it = idx.emplace(x, gamma_index(x, h.p, m)).first;
            if (it->second == s) add_into(r.coeffs[n], xpoly::scale(c, Cyclo(qpow(x, i))));
        }
    return r;
}

QExpansion specialize(const GammaQExpansion& h, long w, long m, long t) {
    QExpansion r(h.Q, h.order);
    long P = ipow(h.p, m);
    for (long n = 0; n <= h.Q; ++n)
        for (auto& [x, c] : h.coeffs[n]) {
            Cyclo v(qpow(x, w));
            if (m > 0) v *= Cyclo::zeta(P, mod_l(t * gamma_index(x, h.p, m), P));
            add_into(r.coeffs[n], xpoly::scale(c, v));
        }
    return r;
}

DirichletCharacter gamma_character(long p, long m, long t) {
    long N = ipow(p, m + 1), P = ipow(p, m);
    std::vector<long> e(N, -1);
    for (long d = 1; d < N; ++d) {
        if (d % p == 0) continue;
        // d omega^{-1}(d) = 1 / point of <d>^{-1}
        Q z = 1 / bracket_inverse_point(d, p);
        e[d] = mod_l(t * gamma_index(z, p, m), P);
    }
    return DirichletCharacter::from_table(N, P, e);
}

GammaQExpansion F_family(long p, const std::array<long, 3>& i, long a, long L, long Q) {
    GammaQExpansion r(p, Q, 0);
    for (long n = 1; n <= Q; ++n)
        for (long d = 1; d <= n; ++d) {
            if (n % d || mod_l(d - a, L) != 0) continue;
            ::iw::Q c = qpow(::iw::Q(n / d), i[0]) * qpow(::iw::Q(d), i[1]) * qpow(::iw::Q(n), i[2]);
            add_into(r.coeffs[n], bracket_inverse_point(d, p), XPoly{Cyclo(c)});
        }
    return r;
}

namespace {

void check_weights(const EisensteinDatum& D, const WeightPair& i) {
    if (i[0] < 0 || i[1] < 2 || i[0] + i[1] >= D.k) throw std::invalid_argument("need i1 >= 0, i2 >= 2, i1 + i2 < k");
}

bool first_case(const EisensteinDatum& D, const WeightPair& i) { return 2 * i[0] < D.k - i[1]; }

}  // namespace

GammaQExpansion H_c(const EisensteinDatum& D, const WeightPair& i, long c, long L, long Q) {
    check_weights(D, i);
    long k = D.k, i1 = i[0], i2 = i[1];
    if (first_case(D, i)) return delta_mr(F_family(D.p, {0, k - 2 * i1 - 1, 0}, c, L, Q), k - 2 * i1 - i2, i1);
    return delta_mr(F_family(D.p, {-k + 2 * i1 + 1, 0, i2}, c, L, Q), i2 - k + 2 * i1 + 2, k - i1 - i2 - 1);
}

GammaQExpansion Phi(const EisensteinDatum& D, const WeightPair& i, long a, long m, long Q) {
    check_weights(D, i);
    if (gcd_l(D.M, D.p) != 1) throw InvalidLevel("M must be prime to p");
    long pm = ipow(D.p, m + 1);
    long L = D.M * ipow(D.p, std::max(m, D.m_psi) + 1);
    DirichletCharacter chi = D.psi * D.xi.inverse();
    if (L % chi.modulus()) throw LevelMismatch("psi xi^{-1} is not defined modulo M p^{max(m, m_psi)+1}");
    if (D.G.Q < Q) throw InsufficientTruncation("test family is known to q^" + std::to_string(D.G.Q));
    GammaQExpansion G(D.p, Q, D.G.order);
    for (long n = 0; n <= Q; ++n) G.coeffs[n] = D.G.coeffs[n];

    GammaQExpansion out(D.p, Q, 0);
    for (long b = 1; b < pm; ++b) {
        if (b % D.p == 0) continue;
        GammaQExpansion inner(D.p, Q, 0);
        for (long c = b; c < L; c += pm) {
            if (gcd_l(c, L) != 1) continue;
            Cyclo w = chi(c);
            if (w.is_zero()) continue;
            inner = add(inner, scale(H_c(D, i, c, L, Q), w));
        }
        out = add(out, mul(slice(G, a * b % pm * b % pm, pm), inner));
    }
    return out;
}

namespace {

Cyclo sign_pow(long e) { return e % 2 ? Cyclo(-1) : Cyclo(1); }

QExpansion phi_from_Phi(const GammaQExpansion& Ph, const WeightPair& i, long a2, long m2) {
    return scale(hecke_Tp(integrate_coset(Ph, a2, m2, i[1]), Ph.p), sign_pow(i[0]));
}

}  // namespace

QExpansion phi_value(const EisensteinDatum& D, const WeightPair& i, long a1, long m1, long a2, long m2, long Q) {
    return phi_from_Phi(Phi(D, i, a1, m1, D.p * Q + D.p - 1), i, a2, m2);
}

InterpolationSides interpolation_sides(const EisensteinDatum& D, const WeightPair& i, const DirichletCharacter& phi1,
                                       long m1, long t2, long m2, long Q) {
    check_weights(D, i);
    long p = D.p, pm1 = ipow(p, m1 + 1), P2 = ipow(p, m2), QQ = p * Q + p - 1;
    if (phi1.modulus() != pm1) throw LevelMismatch("phi1 must be a character modulo p^{m1+1}");
    InterpolationSides out;
    out.lhs = QExpansion(Q, 0);
    for (long a1 = 1; a1 < pm1; ++a1) {
        if (a1 % p == 0) continue;
        GammaQExpansion Ph = Phi(D, i, a1, m1, QQ);
        for (long a2 = 0; a2 < P2; ++a2) {
            Cyclo w = phi1(a1);
            if (m2 > 0) w *= Cyclo::zeta(P2, mod_l(t2 * a2, P2));
            out.lhs = add(out.lhs, scale(phi_from_Phi(Ph, i, a2, m2), w));
        }
    }
    long k = D.k, i1 = i[0], i2 = i[1];
    DirichletCharacter chi = D.psi * D.xi.inverse() * phi1.pow(-2) *
                             DirichletCharacter::teichmuller(p).pow(i2) * gamma_character(p, m2, t2).inverse();
    chi = chi.lift(lcm_l(chi.modulus(), D.M * p));
    QExpansion G = specialize(D.G, i2, m2, t2);
    G = twist(truncate(G, QQ), phi1);
    QExpansion E;
    if (first_case(D, i)) {
        long w = k - 2 * i1 - i2;
        E = delta_mr(eisen_F_qexp(w, 0, DirichletCharacter::trivial(1), chi, QQ), w, i1);
    } else {
        long w = i2 - k + 2 * i1 + 2;
        E = delta_mr(eisen_F_qexp(w, 0, chi, DirichletCharacter::trivial(1), QQ), w, k - i1 - i2 - 1);
    }
    out.rhs = truncate(scale(hecke_Tp(mul(G, E), p), sign_pow(i1)), Q);
    out.lhs = truncate(out.lhs, Q);
    return out;
}

bool distribution_property_check(const EisensteinDatum& D, const WeightPair& i, long m1, long m2, long Q) {
    long p = D.p, QQ = p * Q + p - 1;
    long pm1 = ipow(p, m1 + 1), pm1n = pm1 * p, P2 = ipow(p, m2);
    std::map<long, GammaQExpansion> coarse, fine;
    for (long a = 1; a < pm1; ++a)
        if (a % p) coarse[a] = Phi(D, i, a, m1, QQ);
    for (long a = 1; a < pm1n; ++a)
        if (a % p) fine[a] = Phi(D, i, a, m1 + 1, QQ);
    for (auto& [a1, Ph] : coarse)
        for (long a2 = 0; a2 < P2; ++a2) {
            QExpansion target = phi_from_Phi(Ph, i, a2, m2);
            // Gamma_2 direction
            QExpansion s2(target.Q, target.order);
            for (long j = 0; j < p; ++j) s2 = add(s2, phi_from_Phi(Ph, i, a2 + j * P2, m2 + 1));
            if (!(s2 == target)) return false;
            // Gamma_1 direction
            QExpansion s1(target.Q, target.order);
            for (long j = 0; j < p; ++j) s1 = add(s1, phi_from_Phi(fine.at(a1 + j * pm1), i, a2, m2));
            if (!(s1 == target)) return false;
        }
    return true;
}

bool admissible_congruence_check(long p, const Q& chi1_a1, const Q& t, const Q& n2, long e, long depth) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) return true;
    if (t == 0) throw DivisionByZero("t = 0");
    Val v = ordp(qpow(n2 / (t * t) + chi1_a1, e), p);
    return v >= Val(e * depth);
}

// ---------------------------------------------------------------------------

EulerFactor euler_factor(const EulerInputs& in) {
    Cyclo ps1(qpow(Q(in.p), in.s - 1)), pms(qpow(Q(in.p), -in.s));
    Cyclo den1 = in.alpha_g.conj() * in.alpha_f;
    Cyclo den2 = in.beta_g.conj() * in.alpha_f;
    auto ratio = [&](const Cyclo& den) {
        if (den.is_zero()) throw DivisionByZero("vanishing denominator in the Euler factor");
        return ps1 / den;
    };
    EulerFactor E;
    if (in.special && in.ord_c_phi == 0) {
        E.E1 = -ratio(den1);
        E.E2 = Cyclo(1) - ratio(den2);
    } else {
        Cyclo r1 = ratio(den1), r2 = ratio(den2);
        E.E1 = r1.pow(in.ord_c_phi) * r2.pow(in.ord_c_xiphi);
        E.E2 = (Cyclo(1) - in.phi0_p * r1) * (Cyclo(1) - in.xiphi0_p * r2);
    }
    E.E3 = (Cyclo(1) - in.phi0_p * in.alpha_f_prime * in.alpha_g.conj() * pms) *
           (Cyclo(1) - in.xiphi0_p * in.alpha_f_prime * in.alpha_g_prime.conj() * pms);
    return E;
}

}  // namespace iw
