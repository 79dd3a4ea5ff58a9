#pragma once

#include <map>
#include <vector>

#include "iw/padic.hpp"

namespace iw {

using Index = std::vector<long>;

/// Truncated power series in `vars` variables over Q, viewed p-adically.
///
/// Stored coefficients live in the box [0, trunc). The true series differs from the
/// stored one by an error term e with
///   ord(e_n) + <rho, n> >= prec        for n inside the box,
///   ord(e_n) + <rho, n> >= tail_floor  for n outside the box.
/// An exact polynomial has prec = tail_floor = +inf.
struct TruncSeries {
    long p = 3;
    int vars = 1;
    std::map<Index, Q> coeffs;  // nonzero entries only
    Index trunc;
    std::vector<Q> rho;
    Val tail_floor = Val::inf();
    Val prec = Val::inf();

    TruncSeries() = default;
    TruncSeries(long p, int vars);

    static TruncSeries polynomial(long p, const QPoly& c);  // one variable
    static TruncSeries polynomial(long p, int vars, const std::map<Index, Q>& c);
    static TruncSeries constant(long p, int vars, const Q& c);
    static TruncSeries monomial(long p, const Index& n, const Q& c);

    bool exact() const { return tail_floor.is_inf() && prec.is_inf(); }
    bool in_box(const Index& n) const;
    Q coeff(const Index& n) const;
    Q coeff(long n) const { return coeff(Index{n}); }
    void set(const Index& n, const Q& c);
    long degree(int var) const;  // of stored part, -1 for zero
    QPoly dense() const;         // one variable, stored part of length trunc[0]
};

/// Result of a valuation query with a bound on what the discarded part can do.
struct ValuationReport {
    Val retained_min;
    Val tail_bound;
    bool exact = false;
    Val prec_part = Val::inf();      // bound coming from errors on stored coefficients
    Val frontier_part = Val::inf();  // bound coming from discarded coefficients
    Index argmin;  // lexicographically least index attaining retained_min
    Val lower() const { return vmin(retained_min, tail_bound); }
};

ValuationReport vr(const TruncSeries& f, const std::vector<Q>& r);
ValuationReport vr(const TruncSeries& f, const Q& r);  // one variable
/// Minimal index attaining v_r; requires an exact report.
long dr(const TruncSeries& f, const Q& r);

TruncSeries truncate(const TruncSeries& f, const Index& box);
TruncSeries with_rho(const TruncSeries& f, const std::vector<Q>& rho);
TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries neg(const TruncSeries& f);
TruncSeries scale(const TruncSeries& f, const Q& c);
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);
/// f(X + a) for one variable; a tail is admissible only when ord(a) > rho.
TruncSeries shift(const TruncSeries& f, const Q& a);
/// Substitute X_i -> X_i + a_i in every variable.
TruncSeries shift(const TruncSeries& f, const std::vector<Q>& a);

struct EvalResult {
    Cyclo value;
    Val error_bound;  // ord of the difference to the true value is at least this
};

EvalResult eval(const TruncSeries& f, const std::vector<Cyclo>& b);

/// f in k variables as a series in the last variable with coefficients in k-1 variables.
struct NestedSeries {
    long p = 3;
    std::vector<TruncSeries> coeffs;  // index = exponent of the last variable
    long trunc = 0;
    Q rho = 0;
    Val tail_floor = Val::inf();  // for the outer exponents >= trunc, in the inner rho too
};

NestedSeries nest(const TruncSeries& f);
TruncSeries unnest(const NestedSeries& n);
/// v_{(r', r_k)} computed as inf_n v_{r'}(c_n) + r_k n.
ValuationReport vr_nested(const NestedSeries& n, const std::vector<Q>& r);

/// Evidence that f vanishes identically: evaluates on a grid of points of the small disk.
/// For polynomials the answer is a proof once every grid axis exceeds the degree.
bool zero_test_small_disk(const TruncSeries& f, const std::vector<Q>& samples);

}  // namespace iw
