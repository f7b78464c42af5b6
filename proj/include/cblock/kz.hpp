#pragma once

#include <vector>

#include "cblock/linear_factor_fraction.hpp"
#include "cblock/localization.hpp"
#include "cblock/rng.hpp"

namespace cblock {

enum class CasimirKind { Gl, Sl };

// Term-wise exact z_i-derivative of an evaluated localization sum: each
// denominator is a product of linear factors, so the derivative is the value
// times an explicit logarithmic derivative (decorated numerators contribute
// through the product rule).
QPoly dP_dz(const LocalizationSum& s, int i, const ZValsQ& z);

// Fully symbolic derivative, for the dual-representation cross-check.
LPoly dP_dz_symbolic(const LocalizationSum& s, int i);

// Casimir factor-swap: gl swaps all y subscripts i <-> j; sl subtracts p/m.
QPoly casimir_apply(CasimirKind kind, int i, int j, const QPoly& p, int m);

// Left side of the logarithmic-derivative form of the KZ equation at level 1:
// dP/dz_i - 1/(m+1) sum_{j != i} Omega^{(i,j)} P / (z_i - z_j).
QPoly kz_lhs(CasimirKind kind, int m, int N, int i, const ZValsQ& z);

// Solves for the exponents {a_{i,j}}_{j != i} in
//   kz_lhs = P * sum_{j != i} a_{i,j} / (z_i - z_j)
// by sampling additional seeded assignments until the linear system pins a
// unique solution, then verifying every equation exactly. Throws Inconsistent
// when the ansatz fails.
std::vector<Rational> solve_kz_exponents(int m, int N, int i, const ZValsQ& z,
                                         CasimirKind kind, SeededRng& rng);

// Verifies the KZ relation at the known constants, -m/(m+1) for gl and
// -(m-1)/m for sl, for every i at the given assignment.
bool verify_kz(int m, int N, const ZValsQ& z, CasimirKind kind);
bool verify_kz_with_constant(int m, int N, const ZValsQ& z, CasimirKind kind,
                             const Rational& a);

// lhs - P * sum_j a/(z_i - z_j) for one i; zero exactly when the relation
// holds there.
QPoly kz_residual(int m, int N, int i, const ZValsQ& z, CasimirKind kind,
                  const Rational& a);

Rational kz_expected_constant(int m, CasimirKind kind);

// Residue identity of the KZ denominators, symbolically in the
// linear-factor-fraction ring:
//   R * sum_{j=N+1}^{mN} d_{1,j}(1/R) = (1-m) sum_{j=2}^{N} 1/(z_1-z_j)
//                                       + 2 sum_{j=N+1}^{mN} 1/(z_1-z_j),
// where d_{1,j} f = (f - f(z_1 <-> z_j)) / (z_1 - z_j).
bool remark52_check(int m, int N);

} // namespace cblock
