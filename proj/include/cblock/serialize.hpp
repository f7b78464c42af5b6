#pragma once

#include <string>
#include <string_view>

#include "cblock/linear_factor_fraction.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// Canonical text form: terms in canonical (map) order, joined sign-aware,
// factors as y[j,a]^e / z[a]^e with ^e omitted for e = 1, rationals as
// num/den. This is the golden-file format; parse(print(p)) == p.
std::string poly_str(const QPoly& p);
QPoly poly_parse(std::string_view text);

std::string monomial_str(const Monomial& m);
std::string lff_str(const Lff& f);
std::string lpoly_str(const LPoly& p);

} // namespace cblock
