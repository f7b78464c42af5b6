#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cblock/eps_ratfun.hpp"
#include "cblock/identities.hpp"
#include "cblock/linalg.hpp"
#include "cblock/polynomial.hpp"
#include "cblock/rng.hpp"
#include "cblock/serialize.hpp"

using namespace cblock;

namespace {
QPoly yv(int j, int a) { return QPoly::variable(yvar(j, a)); }
QPoly zv(int a) { return QPoly::variable(zvar(a)); }
} // namespace

TEST_CASE("rationals stay canonical") {
    Rational q = rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(rat_str(q) == "-3/2");
    CHECK(rat_parse("-3/2") == q);
    CHECK(rat_parse("10/5") == rat(2));
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse("2x"), ParseError);
}

TEST_CASE("polynomial arithmetic basics") {
    // additive inverse
    CHECK(((yv(1, 1) - yv(1, 2)) + (yv(1, 2) - yv(1, 1))).is_zero());
    // difference of squares
    QPoly lhs = (zv(1) - zv(2)) * (zv(1) + zv(2));
    QPoly rhs = zv(1) * zv(1) - zv(2) * zv(2);
    CHECK(lhs == rhs);
    // monomial product
    QPoly prod = (yv(1, 1) * yv(2, 2)) * yv(1, 3);
    CHECK(prod.term_count() == 1);
    CHECK(prod == QPoly::term(Monomial::from_factors(
                                  {{yvar(1, 1), 1}, {yvar(1, 3), 1}, {yvar(2, 2), 1}}),
                              Rational(1)));
}

TEST_CASE("ring axioms on random polynomials") {
    SeededRng rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        QPoly p = random_poly(rng, 6, 2, 4, 4);
        QPoly q = random_poly(rng, 6, 2, 4, 4);
        QPoly r = random_poly(rng, 6, 2, 4, 4);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("exact linear division") {
    QPoly p = zv(1) * zv(1) - zv(2) * zv(2);
    CHECK(exact_linear_divide(p, 1, 2) == zv(1) + zv(2));
    CHECK(exact_linear_divide(zv(1) - zv(2), 1, 2) == QPoly(Rational(1)));
    CHECK_THROWS_AS(exact_linear_divide(zv(1), 1, 2), NotDivisible);
}

TEST_CASE("linear division inverts multiplication") {
    SeededRng rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        QPoly p = random_z_poly(rng, 5, 4, 3);
        int a = static_cast<int>(rng.next_int(1, 4));
        int b = static_cast<int>(rng.next_int(a + 1, 5));
        CHECK(exact_linear_divide(p * z_linear(a, b), a, b) == p);
    }
}

TEST_CASE("rank over the rationals") {
    CHECK(rank_of_polys({yv(2, 1) - yv(2, 2), yv(2, 2) - yv(2, 1)}) == 1);
    // all products (y_i - y_j)(y_k - y_l) on four distinct indices <= 5
    std::vector<QPoly> products;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k)
                for (int l = k + 1; l <= 5; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    products.push_back((yv(2, i) - yv(2, j)) * (yv(2, k) - yv(2, l)));
                }
    CHECK(rank_of_polys(products) == 5);
    // invariance under scaling and permutation
    SeededRng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<QPoly> polys;
        for (int t = 0; t < 5; ++t) polys.push_back(random_poly(rng, 4, 2, 3, 2));
        int base = rank_of_polys(polys);
        std::vector<QPoly> scaled = polys;
        for (auto& p : scaled) p = p.scaled(rng.nonzero_rational(9));
        CHECK(rank_of_polys(scaled) == base);
        std::vector<QPoly> shuffled(polys.rbegin(), polys.rend());
        CHECK(rank_of_polys(shuffled) == base);
    }
}

TEST_CASE("fraction-free and rational elimination agree") {
    SeededRng rng(53);
    for (int rep = 0; rep < 30; ++rep) {
        int nrows = static_cast<int>(rng.next_int(1, 8));
        int ncols = static_cast<int>(rng.next_int(1, 8));
        std::vector<QRow> rows;
        for (int r = 0; r < nrows; ++r) {
            QRow row;
            for (int c = 0; c < ncols; ++c)
                row.push_back(rng.next_int(0, 2) == 0 ? Rational(0)
                                                      : rat(rng.next_int(-9, 9),
                                                            rng.next_int(1, 5)));
            rows.push_back(std::move(row));
        }
        // planted dependency
        if (nrows >= 2) rows[nrows - 1] = rows[0];
        int via_bareiss = rank_rational(rows);
        int via_rref = ncols - static_cast<int>(kernel_basis(rows, ncols).size());
        CHECK(via_bareiss == via_rref);
    }
}

TEST_CASE("kernel dimension") {
    CHECK(kernel_dimension({}, 3) == 3);
    std::vector<QRow> rows = {{rat(1), rat(0), rat(-1)}};
    CHECK(kernel_dimension(rows, 3) == 2);
    auto basis = kernel_basis(rows, 3);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) CHECK(v[0] - v[2] == 0);
}

TEST_CASE("limits of univariate rational functions") {
    EpsRat f = EpsRat(EpsPoly::eps_power(2, rat(3)) + EpsPoly::eps_power(1, rat(2)),
                      EpsPoly::eps_power(1));
    CHECK(f.limit_at_zero() == rat(2));
    EpsRat g(EpsPoly(rat(5)), EpsPoly(rat(1)) + EpsPoly::eps_power(1));
    CHECK(g.limit_at_zero() == rat(5));
    EpsRat pole(EpsPoly(rat(1)), EpsPoly::eps_power(1));
    CHECK_THROWS_AS(pole.limit_at_zero(), PoleAtZero);
}

TEST_CASE("limit is multiplicative when defined") {
    SeededRng rng(19);
    for (int rep = 0; rep < 50; ++rep) {
        EpsPoly np, dp, nq, dq;
        for (int t = 0; t < 3; ++t) {
            np.add(rng.next_int(0, 3), rng.rational(9));
            nq.add(rng.next_int(0, 3), rng.rational(9));
        }
        dp.add(0, rng.nonzero_rational(9));
        dq.add(0, rng.nonzero_rational(9));
        dp.add(rng.next_int(1, 3), rng.rational(9));
        dq.add(rng.next_int(1, 3), rng.rational(9));
        EpsRat f(np, dp), g(nq, dq);
        CHECK((f * g).limit_at_zero() == f.limit_at_zero() * g.limit_at_zero());
    }
}

TEST_CASE("canonical serialization round trip") {
    QPoly p = yv(1, 2).scaled(rat(-1, 2)) * yv(2, 1) + zv(3) * zv(3) + QPoly(rat(7, 3));
    QPoly back = poly_parse(poly_str(p));
    CHECK(back == p);
    CHECK(poly_str(QPoly()) == "0");
    CHECK(poly_parse("0").is_zero());
    SeededRng rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        QPoly q = random_poly(rng, 5, 3, 5, 3);
        CHECK(poly_parse(poly_str(q)) == q);
    }
    CHECK_THROWS_AS(poly_parse("y[1"), ParseError);
    CHECK_THROWS_AS(poly_parse("q + 1"), ParseError);
}
