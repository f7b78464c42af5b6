#pragma once

#include <vector>

#include "cblock/linear_factor_fraction.hpp"
#include "cblock/localization.hpp"
#include "cblock/partition.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// (p - p(z_i <-> z_{i+1})) / (z_i - z_{i+1}); always exact on polynomials
// because the numerator is antisymmetric in z_i, z_{i+1}.
QPoly divided_difference(int i, const QPoly& p);

// Generalized divided difference: the transposition i <-> i+1 is applied to
// every y family (when swap_y) and to z (when swap_z); the quotient lives in
// the linear-factor-fraction coefficient class.
LPoly generalized_divided_difference(int i, const LPoly& e, bool swap_y = true,
                                     bool swap_z = true);

// Applies the composite along a reduced word of w: with the lexicographically
// smallest word (i_1, ..., i_r), the operator for the last letter acts first.
LPoly apply_divided_differences(const Permutation& w, const LPoly& e, bool swap_y = true,
                                bool swap_z = true);

// The seed monomial y^{(1)}_1 ... y^{(1)}_{l1} y^{(2)}_{l1+1} ... of lambda.
LPoly concise_seed(const Partition& lambda);

// Divided-difference form of P_z(lambda); must agree with
// evaluate_symbolic(build_P(lambda)) as a rational expression.
LPoly build_P_concise(const Partition& lambda);

} // namespace cblock
