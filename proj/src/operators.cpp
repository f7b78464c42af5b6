#include "cblock/operators.hpp"

namespace cblock {

std::vector<int> superscript_profile(const Monomial& m, int superscripts) {
    std::vector<int> profile(superscripts, 0);
    for (const auto& [var, e] : m.factors()) {
        if (is_z_var(var)) throw Error("z variable in tensor-space polynomial");
        int j = var_sup(var);
        if (j < 1 || j > superscripts) throw Error("superscript out of range");
        profile[j - 1] += e;
    }
    return profile;
}

bool is_singular(const QPoly& p, const Partition& lambda) {
    const int m = lambda.m();
    if (!is_tensor_element(p, lambda.size()))
        throw NotTensorElement("polynomial is not multi-degree (1,...,1)");
    auto w = weight_of(p, m);
    if (!w || *w != lambda.parts) return false;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (!apply_e(i, j, p).is_zero()) return false;
    return true;
}

CbCertificate conformal_block_certificate(const QPoly& p, const Partition& lambda, int level,
                                          const ZValsQ& z) {
    if (level < lambda.spread())
        throw LevelTooLow("level " + std::to_string(level) + " below spread " +
                          std::to_string(lambda.spread()));
    require_distinct(z);
    CbCertificate cert;
    const int m = lambda.m();
    if (!is_tensor_element(p, lambda.size()))
        throw NotTensorElement("polynomial is not multi-degree (1,...,1)");
    if (p.is_zero()) throw ZeroPolynomial("membership of the zero polynomial");
    cert.weight = weight_of(p, m);
    if (!cert.weight || *cert.weight != lambda.parts) {
        cert.failing_operator = "weight";
        return cert;
    }
    for (int i = 1; i <= m && cert.failing_operator.empty(); ++i)
        for (int j = i + 1; j <= m; ++j)
            if (!apply_e(i, j, p).is_zero()) {
                cert.failing_operator =
                    "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
                break;
            }
    if (!cert.failing_operator.empty()) return cert;
    cert.singular = true;
    const int power = level - lambda.spread() + 1;
    if (!apply_ez_power(1, m, p, z, power).is_zero()) {
        cert.failing_operator = "(ez[1," + std::to_string(m) + "])^" + std::to_string(power);
        return cert;
    }
    cert.member = true;
    return cert;
}

bool is_conformal_block(const QPoly& p, const Partition& lambda, int level, const ZValsQ& z) {
    return conformal_block_certificate(p, lambda, level, z).member;
}

bool vanishing_order_check(const QPoly& p, int N, int m, int level, const ZValsQ& z) {
    Partition lambda(std::vector<int>(m, N));
    if (!is_tensor_element(p, lambda.size()))
        throw NotTensorElement("polynomial is not multi-degree (1,...,1)");
    if (p.is_zero()) throw ZeroPolynomial("vanishing order of the zero polynomial");
    auto w = weight_of(p, m);
    if (!w || *w != lambda.parts)
        throw NotInvariant("weight is not (N,...,N)");
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i != j && !apply_e(i, j, p).is_zero())
                throw NotInvariant("not annihilated by e[" + std::to_string(i) + "," +
                                   std::to_string(j) + "]");
    require_distinct(z);
    const int n = lambda.size();
    std::vector<int> all(n);
    for (int a = 0; a < n; ++a) all[a] = a + 1;
    for (int k = 0; k <= N - level - 1; ++k) {
        for (const auto& subset : combinations(all, k)) {
            QPoly q = p;
            for (int b : subset) {
                // y^{(1)}_b d/dy^{(m)}_b on a multi-degree-1 polynomial.
                QPoly next;
                for (const auto& [mono, c] : q.terms()) {
                    int e = mono.exponent(yvar(m, b));
                    if (e == 0) continue;
                    next.add_term(
                        mono.without(yvar(m, b), 1).times(Monomial::variable(yvar(1, b))),
                        c * Rational(e));
                }
                q = std::move(next);
                if (q.is_zero()) break;
            }
            if (!restrict_to_A(q, m, z).is_zero()) return false;
        }
    }
    return true;
}

} // namespace cblock
