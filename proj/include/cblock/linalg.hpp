#pragma once

#include <vector>

#include "cblock/polynomial.hpp"
#include "cblock/rational.hpp"

namespace cblock {

using QRow = std::vector<Rational>;

// Rank over Q via fraction-free (Bareiss) elimination on integer-cleared rows.
int rank_rational(std::vector<QRow> rows);

// Rank of the coefficient matrix of a family of polynomials in the monomial
// basis of their union of monomials.
int rank_of_polys(const std::vector<QPoly>& polys);

// Dimension of the joint kernel of the given functionals on a space of
// dimension `ncols`.
int kernel_dimension(const std::vector<QRow>& rows, int ncols);

// Basis of the joint kernel, via rational reduced row echelon form.
std::vector<QRow> kernel_basis(std::vector<QRow> rows, int ncols);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

// Exact solve of the (possibly overdetermined) system A x = b.
SolveStatus solve_exact(std::vector<QRow> a, QRow b, QRow& solution);

} // namespace cblock
