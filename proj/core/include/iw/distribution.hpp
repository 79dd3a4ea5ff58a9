#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "iw/projsys.hpp"

namespace iw {

using Coset = std::vector<long>;     // a with 0 <= a_i < p^{m_i}, standing for gamma^a Gamma^{p^m}
using Exponent = std::vector<long>;  // i in [d, e]

struct MomentKey {
    Level m;
    Coset a;
    Exponent j;
    auto operator<=>(const MomentKey&) const = default;
};

/// Distribution on Gamma = Gamma_1 x ... x Gamma_k known through its coset moments up to level M.
///
/// raw[(m, a, j)] is the integral of chi^j over gamma^a Gamma^{p^m}; the centered moments
/// of the window are derived from these.
struct Distribution {
    Window window;
    GrowthClass growth;
    Level M;
    std::map<MomentKey, Q> raw;

    int k() const { return window.k(); }
    const Q& raw_moment(const Level& m, const Coset& a, const Exponent& j) const;
    /// Integral of prod (chi_t - chi_t(a))^{i_t - d_t} chi_t^{d_t} over the coset.
    Q moment(const Level& m, const Coset& a, const Exponent& i) const;
};

void for_each_coset(long p, const Level& m, const std::function<void(const Coset&)>& fn);

/// Fill every level from top-level raw moments by summing over sub-cosets.
Distribution from_top_level(const Window& w, const GrowthClass& h, const Level& M,
                            const std::function<Q(const Coset&, const Exponent&)>& top);

/// Finite combination of Dirac measures at the points gamma^x, x in Z_{>=0}^k.
Distribution dirac_combination(const Window& w, const GrowthClass& h, const Level& M,
                               const std::map<std::vector<long>, Q>& points);

/// Each level-m moment equals the sum of the raw moments over its sub-cosets at level m + e_t.
bool check_additivity(const Distribution& mu);

/// inf over stored (m, a, i) of ord_p(moment) + <h - (i - d), m>.
ValuationReport vhde(const Distribution& mu);

Distribution scale(const Distribution& mu, const Q& c);
Distribution add(const Distribution& a, const Distribution& b);

/// Convolution on Gamma; growth classes add.
Distribution convolve(const Distribution& a, const Distribution& b);

// ---------------------------------------------------------------------------

/// prod chi_t^{w_t} phi_t with phi_t(gamma_t) = zeta_{p^{level_t}}^{k_t}.
struct Specialization {
    Exponent weight;
    Level level;
    std::vector<long> twist;
    Cyclo phi(long p, const Coset& a) const;
};

/// Every specialization with weight in [d, e] and finite part of level <= M.
std::vector<Specialization> specializations(const Window& w, const Level& M);

/// Integral of kappa against mu; exact when the finite level of kappa is stored.
Cyclo integrate(const Distribution& mu, const Specialization& kappa);

/// kappa applied to the remainder at the finite level of kappa: evaluation at u^w zeta - 1.
Cyclo interpolate(const WindowSystem& s, const Specialization& kappa);

// ---------------------------------------------------------------------------

/// Element of the group ring of Gamma / Gamma^{p^m}.
struct GroupRingElement {
    long p = 3;
    Level m;
    std::map<Coset, Q> coeffs;
    GroupRingElement operator*(const GroupRingElement& o) const;
    bool operator==(const GroupRingElement& o) const { return p == o.p && m == o.m && coeffs == o.coeffs; }
};

GroupRingElement measure_to_iwasawa(const Distribution& mu, const Level& m);
/// The element as a measure supported on coset representatives.
Distribution iwasawa_to_measure(const GroupRingElement& g, const Window& w);
Cyclo specialize(const GroupRingElement& g, const Window& w, const Specialization& kappa);

// ---------------------------------------------------------------------------

Distribution system_to_distribution(const WindowSystem& s);
WindowSystem distribution_to_system(const Distribution& mu);

/// Keep the exponents in [b, c].
Distribution restrict_window(const Distribution& mu, const std::vector<long>& b, const std::vector<long>& c);
/// Recover the moments of a wider window; needs c - b >= floor(h) on the source window.
Distribution extend_window(const Distribution& mu, const std::vector<long>& d, const std::vector<long>& e);

/// Locally polynomial function: on each level-m coset a, sum_i c_{a,i} prod (chi - chi(a))^{i-d} chi^d.
struct LocallyPolynomial {
    Level m;
    std::map<Coset, std::map<Exponent, Cyclo>> coeffs;
};

Cyclo integrate_locally_polynomial(const Distribution& mu, const LocallyPolynomial& f);
/// kappa restricted to Gamma, written in the coset basis of the window at the level of kappa.
LocallyPolynomial as_locally_polynomial(const Window& w, const Specialization& kappa);

}  // namespace iw
