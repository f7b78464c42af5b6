#pragma once

#include <string>
#include <vector>

#include "cblock/linalg.hpp"
#include "cblock/localization.hpp"
#include "cblock/operators.hpp"
#include "cblock/partition.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// The unique partition in N^m with given size and spread 0 or 1: writing
// size = q*m + r, that is (q+1, ..., q+1, q, ..., q) with r copies of q+1.
Partition mu_of_part(int size, int m);

// Multiset partitioning of {1..|lambda|} into `level` subsets (empties
// allowed) with, for every j = 0..m-1 and lambda_0 := level + lambda_m,
// exactly lambda_j - lambda_{j+1} parts of cardinality == j (mod m).
// Canonical form: parts sorted lexicographically (empties first).
struct UFamily {
    std::vector<std::vector<int>> parts;

    bool operator==(const UFamily&) const = default;
    auto operator<=>(const UFamily&) const = default;
    std::string str() const;
};

bool validate_U_family(const std::vector<std::vector<int>>& parts, const Partition& lambda,
                       int level);

std::vector<UFamily> enumerate_U_families(const Partition& lambda, int level);

// Q(U) = prod_j P^{(U_j)}(mu(|U_j|)), kept as a product of relabeled sums.
struct BlockProduct {
    std::vector<LocalizationSum> factors;
};

BlockProduct build_Q(const UFamily& family, const Partition& lambda, int level);

template <class R>
Poly<R> evaluate_product(const BlockProduct& q, const ZVals<R>& z) {
    Poly<R> acc{R{Rational(1)}};
    for (const auto& f : q.factors) acc = acc * evaluate_sum(f, z);
    return acc;
}

// m = 2 square-free generator R(U): per part {u_1 < u_2 < ...}, the product
// (y_{u_1}-y_{u_2})(y_{u_3}-y_{u_4})...; odd parts drop their last element.
// Variables are y_a := y^{(2)}_a.
QPoly R_poly(const std::vector<std::vector<int>>& parts);

// dim L^level(lambda) = rank of all admissible R(U) generators (m = 2).
int L_dim(const Partition& lambda, int level);

std::vector<QPoly> L_generators(const Partition& lambda, int level);

// Pascal-style recursion for dim CB^level(a,b) (m = 2).
long cb_dim_sl2(const Partition& lambda, int level);

// Weight basis of the weight-lambda subspace of V^{tensor n}: all monomials
// with superscript multiset lambda, in deterministic order.
std::vector<Monomial> weight_basis(const Partition& lambda);

// Kernel dimension of the stacked defining constraints (all e_{i,j}, i<j,
// plus the (level-d+1)-st power of e^z_{1,m}) on the weight-lambda subspace.
int cb_dim_generic(const Partition& lambda, int level, const ZValsQ& z);

// Basis polynomials of the conformal-block space itself (kernel vectors).
std::vector<QPoly> cb_space_basis(const Partition& lambda, int level, const ZValsQ& z);

// Basis of the singular vectors of weight lambda (no e^z constraint).
std::vector<QPoly> singular_space_basis(const Partition& lambda);

// Drops every monomial containing a squared variable.
QPoly square_free_drop(const QPoly& p);

// The two L-space recursion maps of the m = 2 spanning argument.
QPoly phi_map(const QPoly& g, const Partition& lambda, int level);
QPoly psi_map(const QPoly& g, const Partition& lambda, int level);

// Ballot words: lambda_1 plus signs, lambda_2 minus signs, prefix sums within
// [0, level]; lexicographic with '+' < '-'.
using SignWord = std::string;
std::vector<SignWord> enumerate_sign_words(const Partition& lambda, int level);

// The multiset S_w of U-families grown along the word: '+' adds the next
// index to an even part, '-' to an odd part.
std::vector<UFamily> qw_families(const SignWord& word, const Partition& lambda, int level);

template <class R>
Poly<R> evaluate_Qw(const SignWord& word, const Partition& lambda, int level,
                    const ZVals<R>& z) {
    Poly<R> acc;
    for (const auto& fam : qw_families(word, lambda, level))
        acc += evaluate_product(build_Q(fam, lambda, level), z);
    return acc;
}

// Jacobi-Trudi determinant in elementary symmetric polynomials of z_1..z_k:
// s^{(k)}(mu) = det(Z^{(k)}_{mu_i + j - i}).
QPoly schur_s(int k, const std::vector<int>& mu);

// Exponent vector of the nested limit (m = 2):
// (0,1,1,2,2,...,l2-1,l2-1,l2,...,l2) with d+1 trailing copies of l2.
std::vector<int> alpha_exponents(const Partition& lambda);

// Leading coefficient of P along the nested path, as a product of
// determinants (general m), up to a global sign.
QPoly asymptotic_leading_general(const Partition& lambda);

} // namespace cblock
