#include "cblock/divided_difference.hpp"

namespace cblock {

QPoly divided_difference(int i, const QPoly& p) {
    QPoly numerator = p - p.swap_subscript(i, i + 1, /*in_y=*/false, /*in_z=*/true);
    if (numerator.is_zero()) return numerator;
    return exact_linear_divide(numerator, i, i + 1);
}

LPoly generalized_divided_difference(int i, const LPoly& e, bool swap_y, bool swap_z) {
    LPoly swapped = e.map_terms([&](const Monomial& m, const Lff& c) {
        Monomial m2 = m;
        if (swap_y) {
            Monomial::Factors f;
            f.reserve(m.factors().size());
            for (auto [var, exp] : m.factors()) {
                if (!is_z_var(var)) {
                    int sub = var_sub(var);
                    if (sub == i) sub = i + 1;
                    else if (sub == i + 1) sub = i;
                    var = yvar(var_sup(var), sub);
                }
                f.emplace_back(var, exp);
            }
            m2 = Monomial::from_factors(std::move(f));
        }
        Lff c2 = swap_z ? c.swapped(i, i + 1) : c;
        return std::make_pair(m2, c2);
    });
    LPoly numerator = e - swapped;
    return numerator.map_terms([&](const Monomial& m, const Lff& c) {
        Lff q = c;
        q.divide_linear(i, i + 1);
        return std::make_pair(m, q);
    });
}

LPoly apply_divided_differences(const Permutation& w, const LPoly& e, bool swap_y,
                                bool swap_z) {
    std::vector<int> word = lex_min_reduced_word(w);
    LPoly acc = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = generalized_divided_difference(*it, acc, swap_y, swap_z);
    return acc;
}

LPoly concise_seed(const Partition& lambda) {
    Monomial::Factors f;
    int a = 1;
    for (int j = 1; j <= lambda.m(); ++j)
        for (int t = 0; t < lambda.part(j); ++t) f.emplace_back(yvar(j, a++), 1);
    return LPoly::term(Monomial::from_factors(std::move(f)), Lff(Rational(1)));
}

LPoly build_P_concise(const Partition& lambda) {
    return apply_divided_differences(omega_lambda(lambda), concise_seed(lambda));
}

} // namespace cblock
