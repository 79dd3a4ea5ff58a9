#pragma once

#include <functional>
#include <map>
#include <vector>

#include "iw/growth.hpp"

namespace iw {

using Level = std::vector<long>;

/// Compatible remainders s_m modulo Omega_m^{[d,e]} for m in the grid [0, M]^k.
struct WindowSystem {
    Window window;
    GrowthClass growth;
    Level M;
    std::map<Level, TruncSeries> levels;
    Val denom_bound = Val::inf();  // inf_m v_0(s_m) + <h, m>

    const TruncSeries& at(const Level& m) const;
    void refresh_bound();
};

/// Component systems over single exponents i in [d, e].
struct ComponentFamily {
    Window window;  // the full window [d, e]
    GrowthClass growth;
    Level M;
    std::map<std::vector<long>, WindowSystem> comps;  // key i
};

void for_each_level(const Level& M, const std::function<void(const Level&)>& fn);
void for_each_exponent(const std::vector<long>& d, const std::vector<long>& e,
                       const std::function<void(const std::vector<long>&)>& fn);

/// Canonical remainder of f modulo (Omega_{m_i}^{[d_i,e_i]}(X_i))_i.
TruncSeries reduce_mod_omega(const TruncSeries& f, const Window& w, const Level& m);

WindowSystem system_from_series(const TruncSeries& f, const GrowthClass& h, const Window& w, const Level& M);
bool check_compatibility(const WindowSystem& s);
bool is_integral(const WindowSystem& s);
WindowSystem scale(const WindowSystem& s, const Q& c);

/// The top-level remainder: it agrees with every stored remainder modulo the Omega ideals.
TruncSeries reconstruct(const WindowSystem& s);

/// True iff all remainders of f modulo Omega_m^{[d, d + floor h]} vanish for m <= maxlevel.
bool vanishing_test(const TruncSeries& f, const GrowthClass& h, const std::vector<long>& d, long maxlevel);
/// First level at which a remainder is nonzero, or -1 when none up to maxlevel.
long vanishing_depth(const TruncSeries& f, const GrowthClass& h, const std::vector<long>& d, long maxlevel);

WindowSystem project_window(const WindowSystem& s, const std::vector<long>& b, const std::vector<long>& c);
ComponentFamily extract_components(const WindowSystem& s);

/// theta_j at level m: alternating binomial combination of component remainders.
TruncSeries theta(const ComponentFamily& c, const std::vector<long>& j, const Level& m);

/// Smallest slack n for which the theta hypothesis holds.
long minimal_slack(const ComponentFamily& c);

/// The remainder modulo Omega_m^{[d,e]} congruent to parts[i] modulo Omega_m^{[i]} for every i.
TruncSeries crt_combine(const Window& w, const Level& m, const std::map<std::vector<long>, TruncSeries>& parts);

/// Lift the components to a system over [d, e] by the Chinese remainder theorem.
WindowSystem lift_components(const ComponentFamily& c, long n);

}  // namespace iw
