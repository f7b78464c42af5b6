#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cblock/acceptance.hpp"
#include "cblock/blocks.hpp"
#include "cblock/identities.hpp"
#include "cblock/localization.hpp"
#include "cblock/operators.hpp"
#include "cblock/rng.hpp"

using namespace cblock;

namespace {
QPoly yv(int j, int a) { return QPoly::variable(yvar(j, a)); }

QPoly random_tensor_poly(SeededRng& rng, int m, int n, int terms) {
    QPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial::Factors f;
        for (int a = 1; a <= n; ++a)
            f.emplace_back(yvar(static_cast<int>(rng.next_int(1, m)), a), 1);
        p.add_term(Monomial::from_factors(std::move(f)), rng.rational(9));
    }
    return p;
}
} // namespace

TEST_CASE("raising and lowering operators") {
    CHECK(apply_e(1, 2, yv(2, 1)) == yv(1, 1));
    // Leibniz expansion
    CHECK(apply_e(2, 1, yv(1, 1) * yv(1, 2)) ==
          yv(2, 1) * yv(1, 2) + yv(1, 1) * yv(2, 2));
    // annihilation of P(2,1)
    auto z = make_zvals<Rational>({rat(1), rat(2), rat(3)});
    QPoly p21 = evaluate_sum(build_P(Partition{2, 1}), z);
    CHECK(apply_e(1, 2, p21).is_zero());
}

TEST_CASE("gl commutation relations") {
    SeededRng rng(101);
    const int m = 3, n = 3;
    for (int rep = 0; rep < 100; ++rep) {
        QPoly p = random_tensor_poly(rng, m, n, 3);
        int i = static_cast<int>(rng.next_int(1, m));
        int j = static_cast<int>(rng.next_int(1, m));
        int s = static_cast<int>(rng.next_int(1, m));
        int k = static_cast<int>(rng.next_int(1, m));
        QPoly lhs = apply_e(i, j, apply_e(s, k, p)) - apply_e(s, k, apply_e(i, j, p));
        QPoly rhs;
        if (j == s) rhs += apply_e(i, k, p);
        if (i == k) rhs -= apply_e(s, j, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("z-weighted operators") {
    auto z5 = make_zvals<Rational>({rat(5)});
    CHECK(apply_ez(1, 2, yv(2, 1), z5) == yv(1, 1).scaled(rat(5)));

    auto z3 = make_zvals<Rational>({rat(1), rat(2), rat(3)});
    QPoly p21 = evaluate_sum(build_P(Partition{2, 1}), z3);
    CHECK(apply_ez(1, 2, p21, z3).is_zero());

    auto z4 = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4)});
    QPoly p22 = evaluate_sum(build_P(Partition{2, 2}), z4);
    CHECK_FALSE(apply_ez(1, 2, p22, z4).is_zero());
    CHECK(apply_ez(1, 2, apply_ez(1, 2, p22, z4), z4).is_zero());
}

TEST_CASE("weights") {
    CHECK(*weight_of(yv(1, 1) * yv(2, 2), 2) == std::vector<int>{1, 1});
    SeededRng rng(7);
    ZValsQ z = rng.distinct_z(3);
    CHECK(*weight_of(evaluate_sum(build_P(Partition{2, 1}), z), 2) ==
          std::vector<int>{2, 1});
    CHECK(!weight_of(yv(1, 1) + yv(2, 1), 2).has_value());
    CHECK_THROWS_AS(weight_of(QPoly(), 2), ZeroPolynomial);
}

TEST_CASE("singular vectors") {
    auto z = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4)});
    CHECK(is_singular(evaluate_sum(build_P(Partition{2, 2}), z), Partition{2, 2}));
    CHECK_FALSE(is_singular(yv(1, 1) * yv(2, 2), Partition{1, 1}));
    CHECK(is_singular(yv(1, 1) * yv(2, 2) - yv(2, 1) * yv(1, 2), Partition{1, 1}));
    CHECK_THROWS_AS(is_singular(yv(1, 1), Partition{1, 1}), NotTensorElement);
}

TEST_CASE("conformal block membership") {
    auto z6 = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    Partition l33{3, 3};
    CHECK(is_conformal_block(evaluate_sum(build_P(l33), z6), l33, 1, z6));

    auto z3 = make_zvals<Rational>({rat(1), rat(2), rat(3)});
    Partition l21{2, 1};
    CHECK(is_conformal_block(evaluate_sum(build_P(l21), z3), l21, 1, z3));
    CHECK_THROWS_AS(is_conformal_block(evaluate_sum(build_P(l21), z3), l21, 0, z3),
                    LevelTooLow);

    // Q({1,2},{3,4,5,6}) is a level-2 block for (3,3)
    UFamily fam{{{1, 2}, {3, 4, 5, 6}}};
    QPoly q = evaluate_product(build_Q(fam, l33, 2), z6);
    CHECK(is_conformal_block(q, l33, 2, z6));
}

TEST_CASE("membership is monotone in the level") {
    SeededRng rng(301);
    Partition l33{3, 3};
    ZValsQ z = rng.distinct_z(6);
    for (const auto& fam : enumerate_U_families(l33, 2)) {
        QPoly q = evaluate_product(build_Q(fam, l33, 2), z);
        if (q.is_zero()) continue;
        bool prev = is_conformal_block(q, l33, 1, z);
        for (int level = 2; level <= 3; ++level) {
            bool now = is_conformal_block(q, l33, level, z);
            CHECK((!prev || now)); // CB^l subset CB^{l+1}
            prev = now;
        }
    }
}

TEST_CASE("restriction to the diagonal subspace") {
    auto z = make_zvals<Rational>({rat(3)});
    CHECK(restrict_to_A(yv(2, 1), 2, z) == yv(1, 1).scaled(rat(3)));
    CHECK(restrict_to_A(QPoly(Rational(1)), 2, z) == QPoly(Rational(1)));
    // P(1,1) at z=(0,1) restricts to -y11*y12 (nonzero: no vanishing is
    // required of a level-1 block at N = 1).
    auto z01 = make_zvals<Rational>({rat(0), rat(1)});
    QPoly p11 = evaluate_sum(build_P(Partition{1, 1}), z01);
    CHECK(restrict_to_A(p11, 2, z01) == -(yv(1, 1) * yv(1, 2)));
}

TEST_CASE("vanishing order checks") {
    SeededRng rng(23);
    {
        Partition l22{2, 2};
        ZValsQ z = rng.distinct_z(4);
        QPoly p = evaluate_sum(build_P(l22), z);
        CHECK(vanishing_order_check(p, 2, 2, 1, z));
        CHECK_FALSE(vanishing_order_check(p, 2, 2, 0, z));
    }
    {
        Partition l33{3, 3};
        ZValsQ z = rng.distinct_z(6);
        QPoly p = evaluate_sum(build_P(l33), z);
        CHECK(vanishing_order_check(p, 3, 2, 1, z));
    }
    CHECK_THROWS_AS(vanishing_order_check(yv(1, 1) * yv(1, 2), 1, 2, 1,
                                          make_zvals<Rational>({rat(1), rat(2)})),
                    NotInvariant);
}

TEST_CASE("operator membership equals the vanishing characterization") {
    SeededRng rng(59);
    const int N = 2;
    Partition lambda{N, N};
    auto invariants = singular_space_basis(lambda);
    CHECK(invariants.size() == 2); // dim of weight-(2,2) sl2 invariants
    for (int level = 1; level <= N; ++level) {
        for (int rep = 0; rep < 3; ++rep) {
            ZValsQ z = rng.distinct_z(4);
            for (const auto& p : invariants)
                CHECK(is_conformal_block(p, lambda, level, z) ==
                      vanishing_order_check(p, N, 2, level, z));
        }
    }
}

TEST_CASE("vanishing characterization for three superscripts") {
    SeededRng rng(61);
    Partition lambda{2, 2, 2};
    auto invariants = singular_space_basis(lambda);
    CHECK(!invariants.empty());
    for (int level = 1; level <= 2; ++level) {
        for (int rep = 0; rep < 2; ++rep) {
            ZValsQ z = rng.distinct_z(lambda.size());
            for (const auto& p : invariants)
                CHECK(is_conformal_block(p, lambda, level, z) ==
                      vanishing_order_check(p, 2, 3, level, z));
        }
    }
}

TEST_CASE("annihilation sweeps") {
    SeededRng rng(83);
    for (const auto& lambda : all_partitions(2, 4, 6)) {
        LocalizationSum sum = build_P(lambda);
        for (int rep = 0; rep < 3; ++rep) {
            ZValsQ z = rng.distinct_z(lambda.size());
            QPoly p = evaluate_sum(sum, z);
            for (int k = 1; k <= lambda.m(); ++k)
                for (int l = 1; l <= lambda.m(); ++l) {
                    if (k == l) continue;
                    if (lambda.part(k) >= lambda.part(l))
                        CHECK(apply_e(k, l, p).is_zero());
                    if (lambda.part(k) > lambda.part(l))
                        CHECK(apply_ez(k, l, p, z).is_zero());
                    if (lambda.part(k) == lambda.part(l))
                        CHECK(apply_ez(k, l, apply_ez(k, l, p, z), z).is_zero());
                }
        }
    }
}
