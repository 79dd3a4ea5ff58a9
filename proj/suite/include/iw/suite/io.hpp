#pragma once

#include <json.hpp>

#include "iw/distribution.hpp"
#include "iw/eisenstein.hpp"
#include "iw/suite/acceptance.hpp"

/// JSON forms of the library types. Every reader raises ParseError on a schema violation.
///
///   rational        "a/b" or an integer
///   valuation       rational, "inf" or "-inf"
///   cyclotomic      {"conductor": n, "coords": [rational, ...]}, or a rational when it is one
///   series          {"p", "vars", "trunc", "rho", "prec", "tail_floor", "coeffs": [{"n": [...], "c"}]}
///   system          {"window", "growth", "M", "levels": [{"m": [...], "remainder": series}]}
///   moment table    {"window", "growth", "level", "entries": [{"m", "coset", "i", "value"}]}
///   q-expansion     {"Q", "order", "coeffs": [{"n", "poly": [cyclotomic, ...]}]}
///   character       {"modulus", "order", "table"} or {"modulus", "generators": [...]}
///   family          {"p", "Q", "order", "coeffs": [{"n", "points": [{"x": rational, "poly"}]}]}
///   datum           {"p", "k", "M", "psi", "m_psi", "xi", "G": family}
namespace iw::io {

using json = nlohmann::json;

json to_json(const Q& x);
Q q_from_json(const json& j);

json to_json(const Val& v);
Val val_from_json(const json& j);

json to_json(const Cyclo& x);
Cyclo cyclo_from_json(const json& j);

json poly_to_json(const QPoly& a);
QPoly poly_from_json(const json& j);

json to_json(const TruncSeries& f);
TruncSeries series_from_json(const json& j);

json to_json(const Window& w);
Window window_from_json(const json& j);

json to_json(const GrowthClass& h);
GrowthClass growth_from_json(const json& j);

json to_json(const WindowSystem& s);
WindowSystem system_from_json(const json& j);

json to_json(const Distribution& mu);
Distribution distribution_from_json(const json& j);

json to_json(const QExpansion& h);
QExpansion qexp_from_json(const json& j);

json to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const json& j);

json to_json(const GammaQExpansion& h);
GammaQExpansion family_from_json(const json& j);

json to_json(const EisensteinDatum& D);
EisensteinDatum datum_from_json(const json& j);

json to_json(const ValuationReport& v);
json to_json(const NewtonData& nd);
json to_json(const suite::CriterionResult& r);

/// Parse text, turning syntax errors into ParseError.
json parse(const std::string& text);

}  // namespace iw::io
