#include "cblock/asymptotics.hpp"

#include <algorithm>

namespace cblock {

QPoly poly_limit_at_zero(const Poly<EpsRat>& p) {
    QPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c.limit_at_zero());
    return out;
}

namespace {

AsymReport compare_up_to_sign(QPoly limit, QPoly target) {
    AsymReport rep;
    rep.limit = std::move(limit);
    rep.target = std::move(target);
    if (rep.limit == rep.target) {
        rep.match = true;
        rep.sign = 1;
    } else if (rep.limit == -rep.target) {
        rep.match = true;
        rep.sign = -1;
    }
    return rep;
}

AsymReport clustered_check(const Partition& lambda, SeededRng& rng) {
    const int m = lambda.m();
    const int N = lambda.part(1);
    for (int j = 1; j <= m; ++j)
        if (lambda.part(j) != N) throw Error("clustered asymptotics need lambda = (N,...,N)");

    // Path: z_{(k-1)m+r} = w_k + c_{k,r} eps for r < m, z_{km} = w_k.
    auto w = rng.distinct_z(N, 1000);
    ZVals<EpsRat> z;
    for (int k = 1; k <= N; ++k) {
        auto cs = rng.distinct_nonzero(m - 1, 1000);
        for (int r = 1; r < m; ++r) {
            EpsPoly path(w.at(k));
            path.add(1, cs[r - 1]);
            z.v.emplace((k - 1) * m + r, EpsRat(path, EpsPoly(Rational(1))));
        }
        z.v.emplace(k * m, EpsRat(w.at(k)));
    }

    Poly<EpsRat> checked = evaluate_sum(build_P(lambda), z);
    // Multiply by prod_k disc(z_{(k-1)m+1}, ..., z_{km}).
    EpsRat prefactor{Rational(1)};
    for (int k = 1; k <= N; ++k) {
        for (int i = (k - 1) * m + 1; i <= k * m; ++i)
            for (int j = i + 1; j <= k * m; ++j) {
                EpsRat d = z.at(i) - z.at(j);
                prefactor = prefactor * d;
            }
    }
    QPoly limit = poly_limit_at_zero(checked.scaled(prefactor));

    // Target: -prod_k det(y^{(i)}_{(k-1)m+j}) / disc(w_1,...,w_N)^{m(m-1)}.
    QPoly target = asymptotic_leading_general(lambda); // the same N dets for (N,...,N)
    Rational disc(1);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            Rational d = w.at(i) - w.at(j);
            disc *= d;
        }
    Rational denom = rat_pow(disc, m * (m - 1));
    target = target.scaled(Rational(-1) / denom);
    return compare_up_to_sign(std::move(limit), std::move(target));
}

AsymReport nested_check(const Partition& lambda, SeededRng& rng) {
    if (lambda.m() != 2) throw Error("nested asymptotics are the m = 2 statement");
    const int n = lambda.size();
    std::vector<int> alpha = alpha_exponents(lambda);

    // Exponent gaps wider than every occurring degree make the single
    // parameter limit reproduce the iterated limit z_n -> 0 ... z_1 -> 0.
    long long degree_bound = 0;
    for (int a : alpha) degree_bound += a;
    degree_bound += static_cast<long long>(lambda.part(1)) * lambda.part(2) + 2;
    std::vector<long long> beta(n + 1, 0);
    long long power = 1;
    for (int i = n; i >= 1; --i) {
        beta[i] = power;
        power *= degree_bound;
    }

    auto cs = rng.distinct_nonzero(n, 1000);
    ZVals<EpsRat> z;
    for (int i = 1; i <= n; ++i) z.v.emplace(i, EpsRat::eps(beta[i], cs[i - 1]));

    Poly<EpsRat> value = evaluate_sum(build_P(lambda), z);
    EpsRat prefactor{Rational(1)};
    for (int i = 1; i <= n; ++i)
        for (int t = 0; t < alpha[i - 1]; ++t) prefactor = prefactor * z.at(i);
    QPoly limit = poly_limit_at_zero(value.scaled(prefactor));
    return compare_up_to_sign(std::move(limit), asymptotic_leading_general(lambda));
}

} // namespace

AsymReport check_P_asymptotics(const Partition& lambda, AsymMode mode, SeededRng& rng) {
    return mode == AsymMode::Clustered ? clustered_check(lambda, rng)
                                       : nested_check(lambda, rng);
}

QPoly leading_term_along_path(const Partition& lambda, SeededRng& rng) {
    const int n = lambda.size();
    // Gaps wider than any occurring degree separate all scales.
    long long degree_bound = 2;
    for (int i = 1; i <= lambda.m(); ++i)
        for (int j = i + 1; j <= lambda.m(); ++j)
            degree_bound += static_cast<long long>(lambda.part(i)) * lambda.part(j);
    degree_bound += n;
    std::vector<long long> beta(n + 1, 0);
    long long power = 1;
    for (int i = n; i >= 1; --i) {
        beta[i] = power;
        power *= degree_bound;
    }
    auto cs = rng.distinct_nonzero(n, 1000);
    ZVals<EpsRat> z;
    for (int i = 1; i <= n; ++i) z.v.emplace(i, EpsRat::eps(beta[i], cs[i - 1]));
    Poly<EpsRat> value = evaluate_sum(build_P(lambda), z);

    long long best = 0;
    bool have = false;
    std::map<Monomial, Rational> leading;
    for (const auto& [mono, coeff] : value.terms()) {
        if (coeff.is_zero()) continue;
        long long val = coeff.num().valuation() - coeff.den().valuation();
        if (!have || val < best) {
            have = true;
            best = val;
            leading.clear();
        }
        if (val == best)
            leading.emplace(mono, coeff.num().lowest_coeff() / coeff.den().lowest_coeff());
    }
    QPoly out;
    for (const auto& [mono, c] : leading) out.add_term(mono, c);
    return out;
}

bool proportional(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [mono, coeff] = *b.terms().begin();
    Rational scale = a.coefficient(mono) / coeff;
    if (ring_is_zero(scale)) return false;
    return a == b.scaled(scale);
}

int determinant_identity_sign(int N, const ZValsQ& z) {
    require_distinct(z);
    // Entries (y^{(2)}_i - y^{(2)}_{j+N}) / (z_i - z_{j+N}) after y^{(1)} = 1.
    std::vector<std::vector<QPoly>> entries(N, std::vector<QPoly>(N));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            Rational den = z.at(i) - z.at(j + N);
            QPoly diff = QPoly::variable(yvar(2, i)) - QPoly::variable(yvar(2, j + N));
            entries[i - 1][j - 1] = diff.scaled(Rational(1) / den);
        }
    // Permutation expansion of the N x N determinant.
    std::vector<int> perm(N);
    for (int i = 0; i < N; ++i) perm[i] = i;
    QPoly det;
    do {
        int inversions = 0;
        for (int x = 0; x < N; ++x)
            for (int y2 = x + 1; y2 < N; ++y2)
                if (perm[x] > perm[y2]) ++inversions;
        QPoly prod(Rational(1));
        for (int i = 0; i < N; ++i) prod = prod * entries[i][perm[i]];
        det += inversions % 2 == 0 ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Right side: disc(z_1..z_N) * disc(z_{N+1}..z_{2N}) * P(N,N) at y^{(1)} = 1.
    Partition lambda{N, N};
    QPoly p = evaluate_sum(build_P(lambda), z);
    QPoly substituted;
    for (const auto& [mono, c] : p.terms()) {
        Monomial::Factors f;
        for (const auto& [var, e] : mono.factors())
            if (!(var_sup(var) == 1)) f.emplace_back(var, e);
        substituted.add_term(Monomial::from_factors(std::move(f)), c);
    }
    Rational disc(1);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            Rational a = z.at(i) - z.at(j);
            Rational b = z.at(i + N) - z.at(j + N);
            disc *= a * b;
        }
    QPoly rhs = substituted.scaled(disc);
    if (det == rhs) return 1;
    if (det == -rhs) return -1;
    return 0;
}

} // namespace cblock
