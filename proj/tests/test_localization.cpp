#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cblock/divided_difference.hpp"
#include "cblock/identities.hpp"
#include "cblock/localization.hpp"
#include "cblock/operators.hpp"
#include "cblock/rng.hpp"
#include "cblock/serialize.hpp"

using namespace cblock;

namespace {
QPoly yv(int j, int a) { return QPoly::variable(yvar(j, a)); }
QPoly zv(int a) { return QPoly::variable(zvar(a)); }

// Independent numeric oracle for the subset sums of the interpolation
// identity: plain rational arithmetic, no fraction machinery.
Rational lagrange_numeric(int k, int n, const QPoly& p, const QPoly& q, const ZValsQ& z) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    Rational total(0);
    for (const auto& subset : combinations(all, k)) {
        std::vector<int> complement;
        std::set_difference(all.begin(), all.end(), subset.begin(), subset.end(),
                            std::back_inserter(complement));
        auto eval_at = [&](const QPoly& poly, const std::vector<int>& targets) {
            Rational acc(0);
            for (const auto& [mono, c] : poly.terms()) {
                Rational t = c;
                for (const auto& [var, e] : mono.factors())
                    t *= rat_pow(z.at(targets[var_sub(var) - 1]), e);
                acc += t;
            }
            return acc;
        };
        Rational num = eval_at(p, subset) * eval_at(q, complement);
        Rational den(1);
        for (int a : subset)
            for (int b : complement) {
                Rational d = z.at(a) - z.at(b);
                den *= d;
            }
        total += num / den;
    }
    return total;
}
} // namespace

TEST_CASE("partitioning enumeration counts") {
    CHECK(enumerate_partitionings(Partition{2, 2}).size() == 6);
    CHECK(enumerate_partitionings(Partition{1, 1, 1}).size() == 6);
    CHECK(enumerate_partitionings(Partition{4}).size() == 1);
}

TEST_CASE("resultant values") {
    auto z01 = make_zvals<Rational>({rat(0), rat(1)});
    CHECK(resultant_value<Rational>({{1}, {2}}, z01) == rat(-1));
    auto z1234 = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4)});
    CHECK(resultant_value<Rational>({{1, 2}, {3, 4}}, z1234) == rat(12));
    auto z123 = make_zvals<Rational>({rat(1), rat(2), rat(3)});
    // direct expansion: (1-2)(1-3)(2-3) = -2
    CHECK(resultant_value<Rational>({{1}, {2}, {3}}, z123) == rat(-2));
}

TEST_CASE("the displayed P polynomials") {
    auto z01 = make_zvals<Rational>({rat(0), rat(1)});
    QPoly p11 = evaluate_sum(build_P(Partition{1, 1}), z01);
    CHECK(p11 == yv(1, 2) * yv(2, 1) - yv(1, 1) * yv(2, 2));

    // P(2,1) against the displayed three-term formula.
    SeededRng rng(3);
    for (int rep = 0; rep < 3; ++rep) {
        ZValsQ z = rng.distinct_z(3);
        QPoly got = evaluate_sum(build_P(Partition{2, 1}), z);
        auto d = [&](int a, int b) { return Rational(z.at(a) - z.at(b)); };
        QPoly expected =
            (yv(1, 1) * yv(1, 2) * yv(2, 3)).scaled(Rational(1) / (d(1, 3) * d(2, 3))) +
            (yv(1, 1) * yv(1, 3) * yv(2, 2)).scaled(Rational(1) / (d(1, 2) * d(3, 2))) +
            (yv(1, 2) * yv(1, 3) * yv(2, 1)).scaled(Rational(1) / (d(2, 1) * d(3, 1)));
        CHECK(got == expected);
    }

    // P(1,1,1) is the 3x3 determinant over the discriminant.
    for (int rep = 0; rep < 3; ++rep) {
        ZValsQ z = rng.distinct_z(3);
        QPoly got = evaluate_sum(build_P(Partition{1, 1, 1}), z);
        QPoly det;
        int perm[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
        int sign[6] = {1, -1, -1, 1, 1, -1};
        for (int t = 0; t < 6; ++t)
            det += (yv(1, perm[t][0]) * yv(2, perm[t][1]) * yv(3, perm[t][2]))
                       .scaled(Rational(sign[t]));
        Rational disc = (z.at(1) - z.at(2)) * (z.at(1) - z.at(3)) * (z.at(2) - z.at(3));
        CHECK(got == det.scaled(Rational(1) / disc));
    }

    // P(2,2): six square-free monomials, multi-degree (1,...,1).
    auto z4 = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4)});
    QPoly p22 = evaluate_sum(build_P(Partition{2, 2}), z4);
    CHECK(p22.term_count() == 6);
    CHECK(is_tensor_element(p22, 4));
}

TEST_CASE("coinciding z values are rejected") {
    auto bad = make_zvals<Rational>({rat(1), rat(1), rat(3)});
    CHECK_THROWS_AS(evaluate_sum(build_P(Partition{2, 1}), bad), ZeroDenominator);
}

TEST_CASE("multi-degree of evaluated sums") {
    SeededRng rng(17);
    for (const auto& lambda : {Partition{2, 1}, Partition{2, 2}, Partition{1, 1, 1}}) {
        ZValsQ z = rng.distinct_z(lambda.size());
        CHECK(is_tensor_element(evaluate_sum(build_P(lambda), z), lambda.size()));
    }
}

TEST_CASE("omega_lambda") {
    Permutation w11 = omega_lambda(Partition{1, 1});
    CHECK(w11.img == std::vector<int>{2, 1});
    Permutation w21 = omega_lambda(Partition{2, 1});
    CHECK(w21.img == std::vector<int>{2, 3, 1});
    // omega_{(k, n-k)}: i -> (n-k)+i for i <= k, i -> i-k otherwise.
    Permutation w32 = omega_lambda(Partition{3, 2});
    CHECK(w32.img == std::vector<int>{3, 4, 5, 1, 2});
}

TEST_CASE("divided differences") {
    CHECK(divided_difference(1, zv(1)) == QPoly(Rational(1)));
    CHECK(divided_difference(1, zv(1) * zv(2)).is_zero());
    CHECK(divided_difference(1, zv(1) * zv(1)) == zv(1) + zv(2));
}

TEST_CASE("generalized divided difference") {
    LPoly e = LPoly::term(Monomial::variable(yvar(1, 1)), Lff(Rational(1)));
    LPoly d = generalized_divided_difference(1, e);
    LPoly expected;
    Lff inv = Lff::inverse_of_pairs({{1, 2}});
    expected.add_term(Monomial::variable(yvar(1, 1)), inv);
    expected.add_term(Monomial::variable(yvar(1, 2)), -inv);
    CHECK(d == expected);

    // symmetric input collapses to zero
    LPoly sym;
    sym.add_term(Monomial::variable(yvar(1, 1)), Lff(Rational(1)));
    sym.add_term(Monomial::variable(yvar(1, 2)), Lff(Rational(1)));
    CHECK(generalized_divided_difference(1, sym).is_zero());

    // composing along a reduced word of omega_(1,1) reproduces P(1,1)
    LPoly seed = LPoly::term(
        Monomial::from_factors({{yvar(1, 1), 1}, {yvar(2, 2), 1}}), Lff(Rational(1)));
    CHECK(apply_divided_differences(omega_lambda(Partition{1, 1}), seed) ==
          evaluate_symbolic(build_P(Partition{1, 1})));
}

TEST_CASE("concise form equals the localization sum") {
    SeededRng rng(29);
    for (const auto& lambda :
         {Partition{1, 1}, Partition{2, 1}, Partition{1, 1, 1}, Partition{2, 2},
          Partition{3, 1}, Partition{2, 1, 1}, Partition{2, 0}}) {
        LPoly concise = build_P_concise(lambda);
        LPoly direct = evaluate_symbolic(build_P(lambda));
        CHECK(concise == direct);
        // agreement after evaluation at 5 independent random assignments
        for (int rep = 0; rep < 5; ++rep) {
            ZValsQ z = rng.distinct_z(lambda.size());
            QPoly via_eval = evaluate_sum(build_P(lambda), z);
            QPoly via_concise;
            for (const auto& [m, c] : concise.terms()) via_concise.add_term(m, c.eval(z));
            CHECK(via_concise == via_eval);
        }
    }
}

TEST_CASE("reduced word independence of the composite") {
    // any reduced word gives the same operator; check the two words of the
    // longest element of S_3
    LPoly seed = concise_seed(Partition{1, 1, 1});
    LPoly via_121 = generalized_divided_difference(
        1, generalized_divided_difference(2, generalized_divided_difference(1, seed)));
    LPoly via_212 = generalized_divided_difference(
        2, generalized_divided_difference(1, generalized_divided_difference(2, seed)));
    CHECK(via_121 == via_212);
}

TEST_CASE("interpolation identity") {
    QPoly one(Rational(1));
    CHECK(check_lagrange(1, 2, one, one).is_zero());
    CHECK(check_lagrange(1, 3, zv(1), one).is_zero());
    CHECK(check_lagrange(1, 2, zv(1), one) == Lff(Rational(1)));
    CHECK_THROWS_AS(check_lagrange(2, 4, zv(1), one), NotSymmetric);

    // numeric oracle agreement at 5 random assignments
    SeededRng rng(31);
    QPoly p = zv(1) + zv(2); // symmetric in 2 slots
    for (int rep = 0; rep < 5; ++rep) {
        ZValsQ z = rng.distinct_z(5);
        CHECK(lagrange_numeric(2, 5, p, QPoly(Rational(3)), z) == 0);
    }
}

TEST_CASE("lagrange threshold behavior") {
    SeededRng rng(37);
    int nonzero = 0, runs = 0;
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(rng.next_int(2, 5));
        int k = static_cast<int>(rng.next_int(1, n - 1));
        int bound = k * (n - k);
        int dp = static_cast<int>(rng.next_int(0, bound));
        QPoly p = random_symmetric_poly(rng, k, dp, true);
        QPoly q = random_symmetric_poly(rng, n - k, bound - dp, true);
        ++runs;
        if (!check_lagrange(k, n, p, q).is_zero()) ++nonzero;
    }
    // generic non-vanishing exactly at the degree threshold
    CHECK(nonzero >= runs * 95 / 100);
}

TEST_CASE("flag identity") {
    QPoly one(Rational(1));
    CHECK(check_flag_vanishing(Partition{1, 1}, {one, one}).is_zero());
    CHECK(check_flag_vanishing(Partition{1, 1, 1}, {one, one, one}).is_zero());
    CHECK(check_flag_vanishing(Partition{2, 1}, {zv(1) + zv(2), one}).is_zero());
}

TEST_CASE("flag threshold matches sum of pairwise products") {
    // at the threshold the sum is generically nonzero; below it vanishes
    SeededRng rng(41);
    for (const auto& lambda : {Partition{2, 1}, Partition{1, 1, 1}, Partition{2, 2}}) {
        int threshold = 0;
        for (int i = 1; i <= lambda.m(); ++i)
            for (int j = i + 1; j <= lambda.m(); ++j)
                threshold += lambda.part(i) * lambda.part(j);
        int nonzero_at = 0;
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<QPoly> below, at;
            int exact_total = threshold;
            for (int j = 1; j <= lambda.m(); ++j) {
                int deg = (j == lambda.m()) ? exact_total
                                            : static_cast<int>(rng.next_int(0, exact_total));
                exact_total -= deg;
                at.push_back(random_symmetric_poly(rng, lambda.part(j), deg, true));
            }
            if (!check_flag_vanishing(lambda, at).is_zero()) ++nonzero_at;
            int budget = threshold - 1;
            for (int j = 1; j <= lambda.m(); ++j) {
                int deg = static_cast<int>(rng.next_int(0, budget));
                budget -= deg;
                below.push_back(random_symmetric_poly(rng, lambda.part(j), deg, false));
            }
            CHECK(check_flag_vanishing(lambda, below).is_zero());
        }
        // the threshold is sharp: some exact-degree instances do not vanish
        // (not all: certain degree splits are structural zeros, e.g. z_1^3
        // pushes forward to zero on the full flag)
        CHECK(nonzero_at >= 1);
    }
}

TEST_CASE("fraction reduction is confluent") {
    SeededRng rng(43);
    for (int rep = 0; rep < 60; ++rep) {
        auto pick_pair = [&]() {
            int a = static_cast<int>(rng.next_int(1, 3));
            int b = static_cast<int>(rng.next_int(a + 1, 4));
            return std::make_pair(a, b);
        };
        auto [a1, b1] = pick_pair();
        auto [a2, b2] = pick_pair();
        Lff x = Lff(random_z_poly(rng, 4, 3, 2));
        x.divide_linear(a1, b1);
        Lff y = Lff(random_z_poly(rng, 4, 3, 2));
        y.divide_linear(a2, b2);
        Lff sum = x + y;
        // rebuilding from the reduced parts gives the same reduced form
        Lff rebuilt = (x + Lff(Rational(0))) + (y + Lff(Rational(0)));
        CHECK(sum == rebuilt);
        // and the defining cross-multiplied identity holds numerically
        ZValsQ z = rng.distinct_z(4);
        Rational lhs = sum.eval(z);
        Rational rhs = x.eval(z) + y.eval(z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("relabeled sums") {
    LocalizationSum s = relabel(build_P(Partition{1, 1}), {3, 5});
    LPoly sym = evaluate_symbolic(s);
    LPoly expected;
    Lff inv = Lff::inverse_of_pairs({{3, 5}});
    expected.add_term(Monomial::from_factors({{yvar(1, 3), 1}, {yvar(2, 5), 1}}), inv);
    expected.add_term(Monomial::from_factors({{yvar(1, 5), 1}, {yvar(2, 3), 1}}), -inv);
    CHECK(sym == expected);
    CHECK_THROWS_AS(relabel(build_P(Partition{1, 1}), {3, 3}), DuplicateIndex);
}
