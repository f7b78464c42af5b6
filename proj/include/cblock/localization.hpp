#pragma once

#include <utility>
#include <vector>

#include "cblock/linear_factor_fraction.hpp"
#include "cblock/partition.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// Formal sum over indexed partitionings I of terms
//   numerator(z) * prod_j Y^{(j)}_{I_j} / R(z_{I_1} | ... | z_{I_m}),
// the shape produced by torus fixed-point formulas. The numerator is 1 for
// the plain sum and a block-evaluated decoration polynomial otherwise.
struct LocalizationSum {
    struct Term {
        IndexedPartitioning part;
        QPoly numerator; // in the global z variables
    };

    Partition lambda;
    int n = 0;
    std::vector<Term> terms;
};

// Ordered pairs (a, b) of the generalized resultant of a partitioning:
// a in I_i, b in I_j for i < j, each standing for a factor (z_a - z_b).
std::vector<std::pair<int, int>> resultant_pairs(const IndexedPartitioning& part);

// The y-monomial prod_j prod_{a in I_j} y[j, a] of a partitioning.
Monomial y_monomial(const IndexedPartitioning& part);

// prod_{i<j} prod_{a in sets_i, b in sets_j} (z_a - z_b) in the given ring.
template <class R>
R resultant_value(const std::vector<std::vector<int>>& sets, const ZVals<R>& z) {
    R acc{Rational(1)};
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (int a : sets[i])
                for (int b : sets[j]) {
                    R d = z.at(a) - z.at(b);
                    acc = acc * d;
                }
    return acc;
}

// P_z(lambda): one term per partitioning, unit numerators. Requires m >= 2.
LocalizationSum build_P(const Partition& lambda);

// Decorated variant: h is a lambda-symmetric polynomial in the slot variables
// z_1..z_n (slots grouped by lambda); each term's numerator is h evaluated on
// the blocks. Throws NotLambdaSymmetric when h fails the symmetry check.
LocalizationSum build_decorated_P(const Partition& lambda, const QPoly& h);

// P^{(k_1,...,k_n)}: y- and z-subscripts pushed through a |-> indices[a-1].
LocalizationSum relabel(const LocalizationSum& s, const std::vector<int>& indices);

// Evaluation at a distinct assignment, in any ring with division.
template <class R>
Poly<R> evaluate_sum(const LocalizationSum& s, const ZVals<R>& z) {
    for (int a = 1; a <= s.n; ++a)
        if (!z.has(a)) throw Error("assignment does not cover index " + std::to_string(a));
    require_distinct(z);
    Poly<R> acc;
    for (const auto& term : s.terms) {
        R den{Rational(1)};
        for (auto [a, b] : resultant_pairs(term.part)) {
            R d = z.at(a) - z.at(b);
            den = den * d;
        }
        R num = eval_z_only<R>(term.numerator, z);
        acc.add_term(y_monomial(term.part), num / den);
    }
    return acc;
}

// Fully symbolic evaluation: coefficients live in the linear-factor-fraction
// ring, z stays formal.
LPoly evaluate_symbolic(const LocalizationSum& s);

} // namespace cblock
