#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cblock/partition.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// e_{k,l} = sum_a y^{(k)}_a d/dy^{(l)}_a, the gl_m generator acting on the
// polynomial model of V^{tensor n}.
template <class C>
Poly<C> apply_e(int k, int l, const Poly<C>& p) {
    Poly<C> out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, e] : m.factors()) {
            if (is_z_var(var) || var_sup(var) != l) continue;
            int a = var_sub(var);
            Monomial m2 = m.without(var, 1).times(Monomial::variable(yvar(k, a)));
            out.add_term(m2, c * C(Rational(e)));
        }
    }
    return out;
}

// e^z_{k,l} = sum_a z_a y^{(k)}_a d/dy^{(l)}_a with z from the assignment.
template <class C>
Poly<C> apply_ez(int k, int l, const Poly<C>& p, const ZVals<C>& z) {
    Poly<C> out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [var, e] : m.factors()) {
            if (is_z_var(var) || var_sup(var) != l) continue;
            int a = var_sub(var);
            Monomial m2 = m.without(var, 1).times(Monomial::variable(yvar(k, a)));
            out.add_term(m2, c * C(Rational(e)) * z.at(a));
        }
    }
    return out;
}

template <class C>
Poly<C> apply_ez_power(int k, int l, Poly<C> p, const ZVals<C>& z, int power) {
    for (int t = 0; t < power && !p.is_zero(); ++t) p = apply_ez(k, l, p, z);
    return p;
}

// Superscript degree profile of a single monomial, length m.
std::vector<int> superscript_profile(const Monomial& m, int superscripts);

// The common weight when every monomial has the same superscript profile;
// nullopt for mixed weight. Throws ZeroPolynomial on 0.
template <class C>
std::optional<std::vector<int>> weight_of(const Poly<C>& p, int m) {
    if (p.is_zero()) throw ZeroPolynomial("weight of the zero polynomial");
    std::optional<std::vector<int>> weight;
    for (const auto& [mono, c] : p.terms()) {
        auto profile = superscript_profile(mono, m);
        if (!weight) weight = profile;
        else if (*weight != profile) return std::nullopt;
    }
    return weight;
}

// Multi-degree (1,...,1): every monomial uses exactly one y variable (to the
// first power) for each subscript 1..n, and no z variables.
template <class C>
bool is_tensor_element(const Poly<C>& p, int n) {
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> per_sub(n + 1, 0);
        for (const auto& [var, e] : mono.factors()) {
            if (is_z_var(var)) return false;
            int a = var_sub(var);
            if (a < 1 || a > n) return false;
            per_sub[a] += e;
        }
        for (int a = 1; a <= n; ++a)
            if (per_sub[a] != 1) return false;
    }
    return true;
}

// Singular vector test: p in V^{tensor |lambda|}, weight lambda, killed by
// every raising operator e_{i,j}, i < j.
bool is_singular(const QPoly& p, const Partition& lambda);

struct CbCertificate {
    bool singular = false;
    bool member = false;
    std::optional<std::vector<int>> weight;
    std::string failing_operator; // empty when member
};

CbCertificate conformal_block_certificate(const QPoly& p, const Partition& lambda, int level,
                                          const ZValsQ& z);

// Level-l membership: singular and annihilated by the (l - d + 1)-st power
// of e^z_{1,m}. Throws LevelTooLow when level < d(lambda).
bool is_conformal_block(const QPoly& p, const Partition& lambda, int level, const ZValsQ& z);

// Substitution y^{(m)}_a <- z_a y^{(1)}_a for every subscript a.
template <class C>
Poly<C> restrict_to_A(const Poly<C>& p, int m, const ZVals<C>& z) {
    require_distinct(z);
    Poly<C> out;
    for (const auto& [mono, c] : p.terms()) {
        C coeff = c;
        Monomial::Factors f;
        for (const auto& [var, e] : mono.factors()) {
            if (!is_z_var(var) && var_sup(var) == m) {
                int a = var_sub(var);
                coeff = coeff * ring_pow(z.at(a), e);
                f.emplace_back(yvar(1, a), e);
            } else {
                f.emplace_back(var, e);
            }
        }
        out.add_term(Monomial::from_factors(std::move(f)), coeff);
    }
    return out;
}

// Vanishing-order characterization for lambda = (N,...,N): p (an
// SL_m-invariant) lies
// in CB^level iff every derivative prod_{b in B} y^{(1)}_b d/dy^{(m)}_b with
// |B| <= N - level - 1 restricts to zero on A(z). |B| = 0 is the bare
// restriction. Throws NotInvariant when the precondition fails.
bool vanishing_order_check(const QPoly& p, int N, int m, int level, const ZValsQ& z);

} // namespace cblock
