#include "cblock/kz.hpp"

#include "cblock/linalg.hpp"

namespace cblock {

QPoly dP_dz(const LocalizationSum& s, int i, const ZValsQ& z) {
    require_distinct(z);
    QPoly out;
    const VarKey vzi = zvar(i);
    for (const auto& term : s.terms) {
        Rational den(1);
        Rational dlog(0);
        for (auto [a, b] : resultant_pairs(term.part)) {
            Rational d = z.at(a) - z.at(b);
            den *= d;
            if (a == i) dlog += Rational(1) / d;
            else if (b == i) dlog -= Rational(1) / d;
        }
        Rational num = eval_z_only(term.numerator, z);
        Rational dnum = eval_z_only(term.numerator.derivative(vzi), z);
        Rational coeff = (dnum - num * dlog) / den;
        out.add_term(y_monomial(term.part), coeff);
    }
    return out;
}

LPoly dP_dz_symbolic(const LocalizationSum& s, int i) {
    LPoly out;
    const VarKey vzi = zvar(i);
    for (const auto& term : s.terms) {
        Lff inv_res = Lff::inverse_of_pairs(resultant_pairs(term.part));
        Lff coeff = Lff(term.numerator.derivative(vzi)) * inv_res;
        for (auto [a, b] : resultant_pairs(term.part)) {
            if (a != i && b != i) continue;
            Lff piece = Lff(term.numerator) * inv_res;
            piece.divide_linear(a, b);
            if (a == i) coeff = coeff - piece;
            else coeff = coeff + piece;
        }
        out.add_term(y_monomial(term.part), coeff);
    }
    return out;
}

QPoly casimir_apply(CasimirKind kind, int i, int j, const QPoly& p, int m) {
    if (i == j) throw Error("Casimir swap needs i != j");
    QPoly swapped = p.swap_subscript(i, j, /*in_y=*/true, /*in_z=*/false);
    if (kind == CasimirKind::Gl) return swapped;
    return swapped - p.scaled(Rational(1, static_cast<unsigned long>(m)));
}

QPoly kz_lhs(CasimirKind kind, int m, int N, int i, const ZValsQ& z) {
    Partition lambda{std::vector<int>(m, N)};
    LocalizationSum s = build_P(lambda);
    QPoly p = evaluate_sum(s, z);
    QPoly lhs = dP_dz(s, i, z);
    const Rational scale(1, static_cast<unsigned long>(m + 1));
    for (int j = 1; j <= lambda.size(); ++j) {
        if (j == i) continue;
        Rational d = z.at(i) - z.at(j);
        lhs -= casimir_apply(kind, i, j, p, m).scaled(scale / d);
    }
    return lhs;
}

namespace {

// Extracts the scalar s with lhs == s * p; throws Inconsistent otherwise.
Rational proportionality_scalar(const QPoly& lhs, const QPoly& p) {
    if (p.is_zero()) throw Inconsistent("zero reference polynomial");
    const auto& [mono, coeff] = *p.terms().begin();
    Rational s = lhs.coefficient(mono) / coeff;
    if (lhs != p.scaled(s))
        throw Inconsistent("left side is not proportional to P at this assignment");
    return s;
}

} // namespace

std::vector<Rational> solve_kz_exponents(int m, int N, int i, const ZValsQ& z,
                                         CasimirKind kind, SeededRng& rng) {
    Partition lambda{std::vector<int>(m, N)};
    const int n = lambda.size();
    if (i < 1 || i > n) throw Error("index out of range");
    require_distinct(z);

    std::vector<QRow> rows;
    QRow rhs;
    auto add_sample = [&](const ZValsQ& sample) {
        QPoly p = evaluate_sum(build_P(lambda), sample);
        QPoly lhs = kz_lhs(kind, m, N, i, sample);
        Rational s = proportionality_scalar(lhs, p);
        QRow row;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            Rational d = sample.at(i) - sample.at(j);
            row.push_back(Rational(1) / d);
        }
        rows.push_back(std::move(row));
        rhs.push_back(s);
    };

    add_sample(z);
    QRow solution;
    for (int extra = 0; extra < n + 4; ++extra) {
        SolveStatus st = solve_exact(rows, rhs, solution);
        if (st == SolveStatus::Inconsistent)
            throw Inconsistent("no constants a_{i,j} satisfy the sampled relations");
        if (st == SolveStatus::Unique) return solution;
        add_sample(rng.distinct_z(n));
    }
    throw Inconsistent("sampled system stayed underdetermined");
}

QPoly kz_residual(int m, int N, int i, const ZValsQ& z, CasimirKind kind,
                  const Rational& a) {
    Partition lambda{std::vector<int>(m, N)};
    require_distinct(z);
    QPoly p = evaluate_sum(build_P(lambda), z);
    QPoly lhs = kz_lhs(kind, m, N, i, z);
    Rational total(0);
    for (int j = 1; j <= lambda.size(); ++j) {
        if (j == i) continue;
        Rational d = z.at(i) - z.at(j);
        total += a / d;
    }
    return lhs - p.scaled(total);
}

bool verify_kz_with_constant(int m, int N, const ZValsQ& z, CasimirKind kind,
                             const Rational& a) {
    const int n = m * N;
    for (int i = 1; i <= n; ++i)
        if (!kz_residual(m, N, i, z, kind, a).is_zero()) return false;
    return true;
}

Rational kz_expected_constant(int m, CasimirKind kind) {
    Rational a = kind == CasimirKind::Gl
                     ? Rational(-m, static_cast<unsigned long>(m + 1))
                     : Rational(-(m - 1), static_cast<unsigned long>(m));
    a.canonicalize();
    return a;
}

bool verify_kz(int m, int N, const ZValsQ& z, CasimirKind kind) {
    return verify_kz_with_constant(m, N, z, kind, kz_expected_constant(m, kind));
}

bool remark52_check(int m, int N) {
    if (m < 2 || N < 1) throw Error("remark52_check needs m >= 2, N >= 1");
    // R = R(z_1..z_N | z_{N+1}..z_{2N} | ... ), consecutive N-blocks.
    IndexedPartitioning blocks;
    for (int k = 0; k < m; ++k) {
        std::vector<int> block;
        for (int t = 1; t <= N; ++t) block.push_back(k * N + t);
        blocks.blocks.push_back(std::move(block));
    }
    auto pairs = resultant_pairs(blocks);
    Lff inv_r = Lff::inverse_of_pairs(pairs);

    Lff lhs;
    for (int j = N + 1; j <= m * N; ++j) {
        Lff dd = inv_r - inv_r.swapped(1, j);
        dd.divide_linear(1, j);
        lhs = lhs + dd;
    }
    for (auto [a, b] : pairs) lhs.multiply_linear(a, b); // times R

    Lff rhs;
    for (int j = 2; j <= N; ++j) {
        Lff piece(Rational(1 - m));
        piece.divide_linear(1, j);
        rhs = rhs + piece;
    }
    for (int j = N + 1; j <= m * N; ++j) {
        Lff piece(Rational(2));
        piece.divide_linear(1, j);
        rhs = rhs + piece;
    }
    return lhs == rhs;
}

} // namespace cblock
