#pragma once

#include <string>

#include "cblock/blocks.hpp"
#include "cblock/eps_ratfun.hpp"
#include "cblock/rng.hpp"

namespace cblock {

enum class AsymMode { Clustered, Nested };

struct AsymReport {
    bool match = false;
    int sign = 0;       // resolved global sign: lhs == sign * target
    QPoly limit;        // the computed limit polynomial
    QPoly target;       // the closed-form target (with the stated sign)
};

// Evaluates P along a one-parameter eps path, multiplies by the prescribed
// prefactors, takes the exact limit at eps = 0, and compares against the
// closed-form product of determinants, up to a recorded global sign.
//
// Clustered mode needs lambda = (N,...,N); the path sends the first m-1
// points of each cluster to the cluster's base point. Nested mode is the
// m = 2 iterated limit z_n -> 0 after ... after z_1 -> 0, realized with
// exponent gaps wide enough to separate every scale.
AsymReport check_P_asymptotics(const Partition& lambda, AsymMode mode, SeededRng& rng);

// Per-coefficient exact limit of an eps-valued polynomial.
QPoly poly_limit_at_zero(const Poly<EpsRat>& p);

// Leading part of P along the separated-scale path z_i = c_i eps^{B^{n-i}}
// (any m): the monomials of minimal eps valuation with their leading
// coefficients. Proportional to the closed-form leading product by a single
// scalar; used to check the general-m leading-term formula.
QPoly leading_term_along_path(const Partition& lambda, SeededRng& rng);

// True when a and b agree up to one nonzero scalar.
bool proportional(const QPoly& a, const QPoly& b);

// The m = 2 determinant identity relating the anv-style N x N determinant
// (at y^{(1)} = 1) to disc * disc * P(N,N); checked at the given assignment.
// Returns the resolved sign (+1/-1), or 0 when the identity fails.
int determinant_identity_sign(int N, const ZValsQ& z);

} // namespace cblock
