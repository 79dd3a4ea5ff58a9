#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "iw/errors.hpp"

namespace iw {

using Z = mpz_class;
using Q = mpq_class;

/// A rational prime, checked on construction.
class Prime {
public:
    Prime(long p);  // NOLINT: implicit so that plain integers can be passed
    operator long() const { return p_; }
    long value() const { return p_; }

private:
    long p_;
};

bool is_prime(long n);

/// Extended rational valuation: -inf, a finite rational, or +inf.
class Val {
public:
    enum class Kind { NegInf, Finite, PosInf };

    Val() : kind_(Kind::PosInf) {}
    Val(const Q& v) : kind_(Kind::Finite), v_(v) {}  // NOLINT
    Val(long v) : kind_(Kind::Finite), v_(v) {}      // NOLINT
    static Val inf() { return Val(); }
    static Val neg_inf() {
        Val r;
        r.kind_ = Kind::NegInf;
        return r;
    }

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::Finite; }
    bool is_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    const Q& value() const;

    friend Val operator+(const Val& a, const Val& b);
    friend Val operator-(const Val& a, const Val& b);  // b must be finite
    friend bool operator==(const Val& a, const Val& b);
    friend std::strong_ordering operator<=>(const Val& a, const Val& b);

    std::string str() const;

private:
    Kind kind_;
    Q v_;
};

Val vmin(const Val& a, const Val& b);
Val vmax(const Val& a, const Val& b);

long ordp(const Z& x, long p);  // x != 0
Val ordp(const Q& x, long p);   // +inf at zero
long ordp_checked(const Q& x, long p);  // throws ValuationOfZero

Q qpow(const Q& b, long e);  // e may be negative
Z zpow(const Z& b, unsigned long e);
Z binom(long n, long k);
Q qbinom(const Q& a, long k);  // generalized binomial a choose k
Z factorial(long n);
Z floor_q(const Q& x);
Z ceil_q(const Q& x);
Q parse_q(const std::string& s);
std::string q_str(const Q& x);

/// x mod p^k reduced to a representative with valuation >= k dropped: returns y with ord(x - y) >= k.
Q round_padic(const Q& x, long p, const Z& k);

long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long m);
long powmod_l(long b, long e, long m);
long inv_mod_l(long a, long m);

// ---------------------------------------------------------------------------
// Dense rational polynomials, low degree first.

using QPoly = std::vector<Q>;

namespace poly {
void trim(QPoly& a);
long deg(const QPoly& a);  // -1 for zero
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly mul_trunc(const QPoly& a, const QPoly& b, std::size_t n);
QPoly scale(const QPoly& a, const Q& c);
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly deriv(const QPoly& a);
QPoly gcd(QPoly a, QPoly b);  // monic
/// s*a + t*b = g (monic gcd)
QPoly xgcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);
QPoly inv_mod(const QPoly& a, const QPoly& m);
Q eval(const QPoly& a, const Q& x);
Q resultant(QPoly a, QPoly b);
QPoly shift(const QPoly& a, const Q& c);  // a(X + c)
QPoly pow(const QPoly& a, unsigned long e);
QPoly one_plus_x_pow(long e);  // (1+X)^e, e >= 0
/// True when a and b are coprime; uses reduction modulo random large primes with an exact fallback.
bool coprime(const QPoly& a, const QPoly& b);
}  // namespace poly

// ---------------------------------------------------------------------------
// Cyclotomic fields Q(zeta_n) and their elements.

class CycloField {
public:
    static std::shared_ptr<const CycloField> get(long n);
    long conductor() const { return n_; }
    long degree() const { return deg_; }
    const QPoly& modulus() const { return phi_; }
    const std::vector<QPoly>& power_table() const { return pow_; }

    explicit CycloField(long n);

private:
    long n_;
    long deg_;
    QPoly phi_;
    std::vector<QPoly> pow_;  // zeta^j reduced, j in [0, n)
};

QPoly cyclotomic_poly(long n);

/// Element of Q(zeta_n) in the power basis reduced modulo Phi_n.
class Cyclo {
public:
    Cyclo();
    Cyclo(const Q& x);  // NOLINT
    Cyclo(long x);      // NOLINT
    Cyclo(long n, std::vector<Q> coords);

    static Cyclo zeta(long n, long k = 1);

    long conductor() const { return F_->conductor(); }
    const std::vector<Q>& coords() const { return c_; }
    const CycloField& field() const { return *F_; }

    bool is_zero() const;
    bool is_rational() const;
    Q rational() const;  // throws if not rational

    Cyclo embed(long N) const;
    Cyclo conj() const;
    Cyclo inv() const;
    Cyclo pow(long e) const;
    Cyclo galois(long a) const;  // zeta -> zeta^a, gcd(a, n) = 1
    Q norm() const;
    Q trace() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    Cyclo operator-() const;
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    std::string str() const;

private:
    void reduce();
    std::shared_ptr<const CycloField> F_;
    std::vector<Q> c_;
};

/// Common field for two conductors; throws UnsupportedField past a size limit.
long common_conductor(long a, long b);

/// p-adic valuation of an element of Q(zeta_n); needs n = p^m (or a rational element).
Val ordp(const Cyclo& x, long p);

}  // namespace iw
