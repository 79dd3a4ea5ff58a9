#include "iw/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace iw {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Prime::Prime(long p) : p_(p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p));
}

const Q& Val::value() const {
    if (kind_ != Kind::Finite) throw Error("valuation is infinite");
    return v_;
}

Val operator+(const Val& a, const Val& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) {
        if (a.is_inf() || b.is_inf()) throw Error("inf - inf in valuation arithmetic");
        return Val::neg_inf();
    }
    if (a.is_inf() || b.is_inf()) return Val::inf();
    return Val(Q(a.v_ + b.v_));
}

Val operator-(const Val& a, const Val& b) {
    if (!b.finite()) throw Error("subtracting an infinite valuation");
    if (!a.finite()) return a;
    return Val(Q(a.v_ - b.v_));
}

bool operator==(const Val& a, const Val& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.v_ == b.v_;
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.finite()) return std::strong_ordering::equal;
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Val::str() const {
    if (is_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return q_str(v_);
}

Val vmin(const Val& a, const Val& b) { return a < b ? a : b; }
Val vmax(const Val& a, const Val& b) { return a < b ? b : a; }

long ordp(const Z& x, long p) {
    if (x == 0) throw ValuationOfZero("ordp(0)");
    Z t = x;
    Z pz = p;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t()));
}

Val ordp(const Q& x, long p) {
    if (x == 0) return Val::inf();
    return Val(Q(ordp(x.get_num(), p) - ordp(x.get_den(), p)));
}

long ordp_checked(const Q& x, long p) {
    if (x == 0) throw ValuationOfZero("ordp(0)");
    return ordp(x.get_num(), p) - ordp(x.get_den(), p);
}

Z zpow(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Q qpow(const Q& b, long e) {
    if (e >= 0) {
        Q r(zpow(b.get_num(), e), zpow(b.get_den(), e));
        r.canonicalize();
        return r;
    }
    if (b == 0) throw DivisionByZero("0 to a negative power");
    Q r(zpow(b.get_den(), -e), zpow(b.get_num(), -e));
    r.canonicalize();
    return r;
}

Z binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Q qbinom(const Q& a, long k) {
    if (k < 0) return 0;
    Q r = 1;
    for (long i = 0; i < k; ++i) r *= (a - i) / Q(i + 1);
    return r;
}

Z factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Z floor_q(const Q& x) {
    Z r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Z ceil_q(const Q& x) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Q parse_q(const std::string& s) {
    Q r;
    if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ParseError("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::string q_str(const Q& x) { return x.get_str(); }

Q round_padic(const Q& x, long p, const Z& k) {
    if (x == 0) return 0;
    long v = ordp_checked(x, p);
    if (Z(v) >= k) return 0;
    Z prec = k - v;  // > 0
    if (!prec.fits_ulong_p()) return x;
    Z mod = zpow(Z(p), prec.get_ui());
    // x = p^v * a / b with a, b prime to p
    Z a = x.get_num(), b = x.get_den();
    Z pz = p;
    mpz_remove(a.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
    mpz_remove(b.get_mpz_t(), b.get_mpz_t(), pz.get_mpz_t());
    Z binv;
    mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), mod.get_mpz_t());
    Z u = a * binv;
    mpz_mod(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    // symmetric representative keeps numbers small
    if (2 * u > mod) u -= mod;
    Q r(u);
    if (v >= 0)
        r *= Q(zpow(pz, v));
    else
        r /= Q(zpow(pz, -v));
    return r;
}

long gcd_l(long a, long b) { return std::gcd(a, b); }
long lcm_l(long a, long b) { return std::lcm(a, b); }
long mod_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long powmod_l(long b, long e, long m) {
    __int128 r = 1 % m, x = mod_l(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<long>(r);
}

long inv_mod_l(long a, long m) {
    long g = m, x = 0, x1 = 1, a1 = mod_l(a, m);
    long b = a1;
    while (b != 0) {
        long q = g / b;
        long t = g - q * b;
        g = b;
        b = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) throw DivisionByZero("not invertible mod " + std::to_string(m));
    return mod_l(x, m);
}

long euler_phi(long n) {
    long r = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            r -= r / d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

// ---------------------------------------------------------------------------

namespace poly {

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const QPoly& a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    return mul_trunc(a, b, a.size() + b.size() - 1);
}

QPoly mul_trunc(const QPoly& a, const QPoly& b, std::size_t n) {
    QPoly r(std::min(n, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1));
    Q t;
    for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j) {
            if (b[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const Q& c) {
    if (c == 0) return {};
    QPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    long db = deg(b);
    if (db < 0) throw DivisionByZero("polynomial division by zero");
    r = a;
    trim(r);
    long da = deg(r);
    q.assign(da >= db ? da - db + 1 : 0, Q(0));
    Q lc_inv = 1 / b[db];
    for (long i = da; i >= db; --i) {
        if (r[i] == 0) continue;
        Q c = r[i] * lc_inv;
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    r.resize(std::min<std::size_t>(r.size(), db));
    trim(r);
    trim(q);
}

QPoly rem(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    return r;
}

QPoly deriv(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Q(static_cast<long>(i));
    trim(r);
    return r;
}

static QPoly monic(QPoly a) {
    trim(a);
    if (a.empty()) return a;
    Q c = 1 / a.back();
    for (auto& x : a) x *= c;
    return a;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s2 = sub(s0, mul(q, s1));
        QPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = s0;
        t = t0;
        return r0;
    }
    Q c = 1 / r0.back();
    s = scale(s0, c);
    t = scale(t0, c);
    return scale(r0, c);
}

QPoly inv_mod(const QPoly& a, const QPoly& m) {
    QPoly s, t;
    QPoly g = xgcd(rem(a, m), m, s, t);
    if (g.size() != 1) throw DivisionByZero("polynomial not invertible modulo modulus");
    return rem(s, m);
}

Q eval(const QPoly& a, const Q& x) {
    Q r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

Q resultant(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    Q res = 1;
    while (true) {
        long da = deg(a), db = deg(b);
        if (da == 0) return res * qpow(a[0], db);
        if (db == 0) return res * qpow(b[0], da);
        if (da < db) {
            std::swap(a, b);
            if ((da * db) % 2) res = -res;
            continue;
        }
        // Res(a, b) = (-1)^{da db} Res(b, a) and Res(b, a) = lc(b)^{da - dr} Res(b, a mod b)
        QPoly r = rem(a, b);
        if (r.empty()) return 0;
        long dr = deg(r);
        if ((da * db) % 2) res = -res;
        res *= qpow(b[db], da - dr);
        a = std::move(b);
        b = std::move(r);
    }
}

QPoly shift(const QPoly& a, const Q& c) {
    // Horner in X + c
    QPoly r;
    for (std::size_t i = a.size(); i-- > 0;) {
        QPoly t(r.size() + 1);
        for (std::size_t j = 0; j < r.size(); ++j) {
            t[j + 1] += r[j];
            t[j] += r[j] * c;
        }
        t[0] += a[i];
        r = std::move(t);
    }
    trim(r);
    return r;
}

QPoly pow(const QPoly& a, unsigned long e) {
    QPoly r{1}, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

QPoly one_plus_x_pow(long e) {
    QPoly r(e + 1);
    for (long i = 0; i <= e; ++i) r[i] = Q(binom(e, i));
    return r;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }
u64 powm(u64 b, u64 e, u64 m) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool reduce_mod(const QPoly& a, u64 ell, std::vector<u64>& out) {
    out.assign(a.size(), 0);
    Z L = static_cast<unsigned long>(ell);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Z n = a[i].get_num() % L, d = a[i].get_den() % L;
        if (n < 0) n += L;
        if (d == 0) return false;
        u64 nn = n.get_ui(), dd = d.get_ui();
        out[i] = mulmod(nn, powm(dd, ell - 2, ell), ell);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return true;
}

std::size_t gcd_deg_mod(std::vector<u64> a, std::vector<u64> b, u64 ell) {
    while (!b.empty()) {
        u64 inv = powm(b.back(), ell - 2, ell);
        while (a.size() >= b.size()) {
            u64 c = mulmod(a.back(), inv, ell);
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = (a[off + j] + ell - mulmod(c, b[j], ell)) % ell;
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

}  // namespace

bool coprime(const QPoly& a, const QPoly& b) {
    long da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return da == 0 || db == 0;
    if (da == 0 || db == 0) return true;
    // Degree of gcd mod ell bounds the degree over Q when leading coefficients survive.
    const u64 primes[] = {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL};
    for (u64 ell : primes) {
        std::vector<u64> am, bm;
        if (!reduce_mod(a, ell, am) || !reduce_mod(b, ell, bm)) continue;
        if (static_cast<long>(am.size()) - 1 != da || static_cast<long>(bm.size()) - 1 != db) continue;
        if (gcd_deg_mod(am, bm, ell) == 0) return true;
    }
    return deg(gcd(a, b)) == 0;
}

}  // namespace poly

// ---------------------------------------------------------------------------

QPoly cyclotomic_poly(long n) {
    if (n < 1) throw UnsupportedField("conductor " + std::to_string(n));
    QPoly f(n + 1);
    f[0] = -1;
    f[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        QPoly q, r;
        poly::divmod(f, cyclotomic_poly(d), q, r);
        f = q;
    }
    return f;
}

CycloField::CycloField(long n) : n_(n) {
    phi_ = cyclotomic_poly(n);
    deg_ = poly::deg(phi_);
    pow_.resize(n);
    for (long j = 0; j < n; ++j) {
        QPoly x(j + 1);
        x[j] = 1;
        pow_[j] = poly::rem(x, phi_);
        pow_[j].resize(deg_);
    }
}

std::shared_ptr<const CycloField> CycloField::get(long n) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const CycloField>(n);
    cache.emplace(n, f);
    return f;
}

namespace {
long normalize_conductor(long n) { return (n % 4 == 2) ? n / 2 : n; }
constexpr long kMaxDegree = 512;
}  // namespace

long common_conductor(long a, long b) {
    long n = normalize_conductor(lcm_l(a, b));
    if (euler_phi(n) > kMaxDegree) throw UnsupportedField("compositum of conductors too large");
    return n;
}

Cyclo::Cyclo() : F_(CycloField::get(1)), c_{Q(0)} {}
Cyclo::Cyclo(const Q& x) : F_(CycloField::get(1)), c_{x} {}
Cyclo::Cyclo(long x) : F_(CycloField::get(1)), c_{Q(x)} {}

Cyclo::Cyclo(long n, std::vector<Q> coords) {
    if (n < 1) throw UnsupportedField("conductor " + std::to_string(n));
    long m = normalize_conductor(n);
    if (m != n) {
        // zeta_n = -zeta_m^{(m+1)/2} for n = 2m, m odd
        Cyclo z = Cyclo::zeta(m, (m + 1) / 2);
        z = -z;
        Cyclo acc(Q(0));
        Cyclo pw(Q(1));
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] != 0) acc += pw * Cyclo(coords[j]);
            pw *= z;
        }
        *this = acc;
        return;
    }
    F_ = CycloField::get(n);
    c_ = std::move(coords);
    reduce();
}

Cyclo Cyclo::zeta(long n, long k) {
    long m = normalize_conductor(n);
    if (m != n) {
        Cyclo z = -Cyclo::zeta(m, (m + 1) / 2);
        return z.pow(mod_l(k, n));
    }
    auto F = CycloField::get(n);
    Cyclo r;
    r.F_ = F;
    r.c_ = F->power_table()[mod_l(k, n)];
    return r;
}

void Cyclo::reduce() {
    long d = F_->degree();
    if (static_cast<long>(c_.size()) > d) {
        const QPoly& phi = F_->modulus();
        for (long i = static_cast<long>(c_.size()) - 1; i >= d; --i) {
            if (c_[i] == 0) continue;
            Q c = c_[i];
            for (long j = 0; j <= d; ++j) c_[i - d + j] -= c * phi[j];
        }
    }
    c_.resize(d);
}

bool Cyclo::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Q Cyclo::rational() const {
    if (!is_rational()) throw Error("cyclotomic element is not rational");
    return c_.empty() ? Q(0) : c_[0];
}

Cyclo Cyclo::embed(long N) const {
    long n = conductor();
    N = normalize_conductor(N);
    if (N % n) throw UnsupportedField("cannot embed Q(zeta_" + std::to_string(n) + ") in Q(zeta_" +
                                      std::to_string(N) + ")");
    if (N == n) return *this;
    if (is_rational()) {
        Cyclo r = Cyclo::zeta(N, 0);
        for (auto& x : r.c_) x *= c_[0];
        return r;
    }
    auto F = CycloField::get(N);
    long step = N / n;
    std::vector<Q> out(F->degree());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const QPoly& z = F->power_table()[(j * step) % N];
        for (std::size_t i = 0; i < z.size(); ++i) out[i] += c_[j] * z[i];
    }
    Cyclo r;
    r.F_ = F;
    r.c_ = std::move(out);
    return r;
}

Cyclo Cyclo::galois(long a) const {
    long n = conductor();
    if (gcd_l(a, n) != 1) throw Error("galois exponent not a unit");
    std::vector<Q> out(F_->degree());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const QPoly& z = F_->power_table()[mod_l(static_cast<long>(j) * a, n)];
        for (std::size_t i = 0; i < z.size(); ++i) out[i] += c_[j] * z[i];
    }
    Cyclo r;
    r.F_ = F_;
    r.c_ = std::move(out);
    return r;
}

Cyclo Cyclo::conj() const { return galois(-1); }

Cyclo Cyclo::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    QPoly a(c_.begin(), c_.end());
    QPoly s = poly::inv_mod(a, F_->modulus());
    s.resize(F_->degree());
    Cyclo r;
    r.F_ = F_;
    r.c_ = std::move(s);
    return r;
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo r = Cyclo::zeta(conductor(), 0), x = *this;
    while (e) {
        if (e & 1) r *= x;
        e >>= 1;
        if (e) x *= x;
    }
    return r;
}

Q Cyclo::norm() const {
    if (is_rational()) return qpow(c_[0], F_->degree());
    QPoly a(c_.begin(), c_.end());
    return poly::resultant(F_->modulus(), a);
}

Q Cyclo::trace() const {
    Q t = 0;
    long n = conductor();
    for (long a = 1; a <= n; ++a)
        if (gcd_l(a, n) == 1) t += galois(a).c_[0];
    return t;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.conductor() != conductor()) {
        long N = common_conductor(conductor(), o.conductor());
        *this = embed(N);
        return *this += o.embed(N);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (o.conductor() != conductor()) {
        long N = common_conductor(conductor(), o.conductor());
        *this = embed(N);
        return *this -= o.embed(N);
    }
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.is_rational()) {
        const Q& s = o.c_[0];
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (is_rational()) {
        Q s = c_[0];
        *this = o;
        for (auto& x : c_) x *= s;
        return *this;
    }
    if (o.conductor() != conductor()) {
        long N = common_conductor(conductor(), o.conductor());
        *this = embed(N);
        return *this *= o.embed(N);
    }
    std::size_t d = c_.size();
    std::vector<Q> r(2 * d - 1);
    Q t;
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), c_[i].get_mpq_t(), o.c_[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    c_ = std::move(r);
    reduce();
    return *this;
}

Cyclo& Cyclo::operator/=(const Cyclo& o) { return *this *= o.inv(); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.conductor() != b.conductor()) {
        if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
        long N = common_conductor(a.conductor(), b.conductor());
        return a.embed(N) == b.embed(N);
    }
    return a.c_ == b.c_;
}

std::string Cyclo::str() const {
    if (is_rational()) return q_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << q_str(c_[i]) << ")";
        if (i) os << "*z" << conductor() << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

Val ordp(const Cyclo& x, long p) {
    if (x.is_rational()) return ordp(x.rational(), p);
    long n = x.conductor();
    long m = n;
    while (m % p == 0) m /= p;
    if (m != 1) throw UnsupportedField("valuation needs a p-power conductor, got " + std::to_string(n));
    Q N = x.norm();
    if (N == 0) return Val::inf();
    return Val(Q(Q(ordp_checked(N, p)) / Q(x.field().degree())));
}

}  // namespace iw
