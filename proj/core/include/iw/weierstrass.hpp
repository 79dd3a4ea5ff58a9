#pragma once

#include <vector>

#include "iw/series.hpp"

namespace iw {

struct DivisionOptions {
    Q gain = 16;           // extra weighted precision asked for the quotient
    long extra_terms = 24; // quotient terms kept beyond deg g + deg f - s
    long q_len = 0;        // fixed quotient length when > 0
    long max_iterations = 4000;
};

struct DivisionResult {
    TruncSeries quotient;
    TruncSeries remainder;
    long s = 0;                // d_r(f)
    long iterations = 0;       // tau iterations used, 0 for long division
    Q gamma = 0;               // weighted gain per iteration (0 when the iteration is exact)
    bool certified = false;    // valuation identity checked on the certified data
};

/// d_r(f); requires an exact report.
long leading_index(const TruncSeries& f, const Q& r);

/// Weierstrass division g = f q + t in B_r with deg t < d_r(f).
DivisionResult divide(const TruncSeries& g, const TruncSeries& f, const Q& r,
                      const DivisionOptions& opt = {});

/// Checks v_r(g) = min(v_r(f) + v_r(q), v_r(t)) using only certified information.
bool check_valuation_identity(const TruncSeries& g, const TruncSeries& f, const DivisionResult& d,
                              const Q& r);

struct Preparation {
    TruncSeries distinguished;  // polynomial of degree d_r(f)
    TruncSeries unit;           // u(0) = 1
};

Preparation prepare(const TruncSeries& f, const Q& r, const DivisionOptions& opt = {});

/// Number of roots with ord_p > r counted with multiplicity, i.e. d_r(f).
long count_roots(const TruncSeries& f, const Q& r);

struct MultiDivisionResult {
    std::vector<TruncSeries> quotients;
    TruncSeries remainder;
};

/// Divides by f_1(X_1), ..., f_k(X_k) in turn: X_1 first, then the remainder in X_2, and so on.
MultiDivisionResult multi_divide(const TruncSeries& g, const std::vector<TruncSeries>& f,
                                 const std::vector<Q>& r, const DivisionOptions& opt = {});

/// True when the multi-remainder vanishes on the retained range.
bool divisibility_test(const TruncSeries& g, const std::vector<TruncSeries>& f, const std::vector<Q>& r);

// ---------------------------------------------------------------------------

struct NewtonData {
    Q t_min, t_max;
    std::vector<Q> break_points;        // increasing, inside (t_min, t_max]
    std::vector<long> segment_degrees;  // n_f on (t_min, b_0), [b_0, b_1), ..., [b_last, t_max]
    std::vector<Q> segment_values;      // m_f at the break points
    long degree_at(const Q& t) const;
};

/// Newton data of f on (t_min, t_max]; raises InsufficientTruncation when the tail could interfere.
NewtonData newton(const TruncSeries& f, const Q& t_min, const Q& t_max);

Q m_f(const TruncSeries& f, const Q& t);
long n_f(const TruncSeries& f, const Q& t);

/// t_n = 1 / (p^n (p - 1)).
Q log_break(long p, long n);

/// log(1+X) with `terms` coefficients and a certified tail bound.
TruncSeries padic_log(long p, long terms);

}  // namespace iw
