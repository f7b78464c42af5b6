#pragma once

#include <vector>

#include "cblock/linear_factor_fraction.hpp"
#include "cblock/partition.hpp"
#include "cblock/polynomial.hpp"
#include "cblock/rng.hpp"

namespace cblock {

// k-th elementary symmetric polynomial of the z variables with the given
// subscripts (k = 0 gives 1).
QPoly elementary_symmetric(const std::vector<int>& subscripts, int k);

// Symmetry of a pure-z polynomial in the listed subscripts, checked on
// adjacent transpositions.
bool is_symmetric_in(const QPoly& p, const std::vector<int>& subscripts);

// sum over k-subsets I of {1..n} of p(z_I) q(z_complement) / R(z_I | z_comp),
// as a reduced fraction. p lives in slots z_1..z_k, q in slots z_1..z_{n-k}.
// The sum is identically zero whenever deg p + deg q < k(n-k).
Lff check_lagrange(int k, int n, const QPoly& p, const QPoly& q);

// Flag version: one symmetric polynomial per block of lambda; vanishes when
// the total degree is below sum_{i<j} lambda_i lambda_j.
Lff check_flag_vanishing(const Partition& lambda, const std::vector<QPoly>& polys);

// Random polynomial symmetric in slots z_1..z_nvars with total degree exactly
// or at most `degree` (generated in the elementary symmetric generators).
QPoly random_symmetric_poly(SeededRng& rng, int nvars, int degree, bool exact_degree);

// Random dense-ish test polynomial over mixed y/z variables.
QPoly random_poly(SeededRng& rng, int max_sub, int max_sup, int terms, int max_exp);

// Random pure-z polynomial.
QPoly random_z_poly(SeededRng& rng, int nvars, int terms, int max_exp);

} // namespace cblock
