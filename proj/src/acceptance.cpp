#include "cblock/acceptance.hpp"

#include <functional>
#include <sstream>

#include "cblock/asymptotics.hpp"
#include "cblock/blocks.hpp"
#include "cblock/divided_difference.hpp"
#include "cblock/identities.hpp"
#include "cblock/kz.hpp"
#include "cblock/localization.hpp"
#include "cblock/operators.hpp"
#include "cblock/rng.hpp"

namespace cblock {

std::vector<Partition> all_partitions(int min_m, int max_m, int max_size) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int pos, int max_part, int sum) -> void {
        if (pos >= min_m && sum >= 1 && parts[0] >= 1)
            out.emplace_back(std::vector<int>(parts.begin(), parts.begin() + pos));
        if (pos == max_m) return;
        for (int p = std::min(max_part, max_size - sum); p >= 0; --p) {
            parts[pos] = p;
            self(self, pos + 1, p, sum + p);
        }
    };
    parts.assign(max_m, 0);
    rec(rec, 0, max_size, 0);
    return out;
}

namespace {

struct Tally {
    int checks = 0;
    int failures = 0;
    std::ostringstream why;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (failures <= 5) why << what << "; ";
        }
    }
    std::string details() const {
        std::ostringstream os;
        os << checks << " checks";
        if (failures) os << ", " << failures << " FAILED: " << why.str();
        return os.str();
    }
};

// 1. Membership sweep (Thms on e_{k,l} / e^z annihilation).
Tally membership_sweep(SeededRng& rng) {
    Tally t;
    for (const auto& lambda : all_partitions(2, 4, 6)) {
        const int level = std::max(lambda.spread(), 1);
        LocalizationSum sum = build_P(lambda);
        for (int rep = 0; rep < 3; ++rep) {
            ZValsQ z = rng.distinct_z(lambda.size());
            QPoly p = evaluate_sum(sum, z);
            t.expect(!p.is_zero(), "P vanished for " + lambda.str());
            t.expect(is_conformal_block(p, lambda, level, z),
                     "P not in CB^" + std::to_string(level) + " for " + lambda.str());
        }
    }
    return t;
}

// 2. One-dimensionality of the level-one space for spread <= 1.
Tally one_dimensionality(SeededRng& rng) {
    Tally t;
    for (const auto& lambda : all_partitions(2, 3, 6)) {
        if (lambda.spread() > 1) continue;
        for (int rep = 0; rep < 3; ++rep) {
            ZValsQ z = rng.distinct_z(lambda.size());
            t.expect(cb_dim_generic(lambda, 1, z) == 1, "dim != 1 for " + lambda.str());
            t.expect(!evaluate_sum(build_P(lambda), z).is_zero(),
                     "P vanished for " + lambda.str());
        }
    }
    return t;
}

// 3. Pascal recursion table and agreement with the kernel-rank dimension.
Tally pascal_table(SeededRng& rng) {
    Tally t;
    const std::vector<std::pair<std::pair<int, int>, long>> table = {
        {{0, 0}, 1},  {{1, 0}, 1},  {{1, 1}, 1},  {{2, 0}, 1},  {{2, 1}, 2},
        {{3, 0}, 1},  {{2, 2}, 2},  {{3, 1}, 3},  {{3, 2}, 5},  {{4, 1}, 3},
        {{3, 3}, 5},  {{4, 2}, 8},  {{4, 3}, 13}, {{5, 2}, 8},  {{4, 4}, 13},
        {{5, 3}, 21}, {{5, 4}, 34}, {{6, 3}, 21}};
    for (const auto& [ab, expected] : table) {
        Partition lambda{ab.first, ab.second};
        t.expect(cb_dim_sl2(lambda, 3) == expected,
                 "table value wrong at (" + lambda.str() + ")");
    }
    for (const auto& lambda : all_partitions(2, 2, 8)) {
        for (int level = std::max(1, lambda.spread()); level <= 3; ++level) {
            ZValsQ z = rng.distinct_z(lambda.size());
            t.expect(cb_dim_generic(lambda, level, z) == cb_dim_sl2(lambda, level),
                     "rank vs recursion mismatch at " + lambda.str() + " level " +
                         std::to_string(level));
        }
    }
    return t;
}

// 4. Q(U) spanning.
Tally q_spanning(SeededRng& rng) {
    Tally t;
    {
        Partition lambda{3, 3};
        ZValsQ z = make_zvals<Rational>({rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
        auto families = enumerate_U_families(lambda, 2);
        t.expect(families.size() == 16, "expected 16 families for (3,3) level 2");
        std::vector<QPoly> qs;
        for (const auto& fam : families)
            qs.push_back(evaluate_product(build_Q(fam, lambda, 2), z));
        t.expect(rank_of_polys(qs) == 4, "rank of the 16 Q's is not 4");

        std::vector<UFamily> listed = {
            UFamily{{{}, {1, 2, 3, 4, 5, 6}}},
            UFamily{{{1, 2}, {3, 4, 5, 6}}},
            UFamily{{{3, 4}, {1, 2, 5, 6}}},
            UFamily{{{5, 6}, {1, 2, 3, 4}}},
        };
        std::vector<QPoly> four;
        for (const auto& fam : listed)
            four.push_back(evaluate_product(build_Q(fam, lambda, 2), z));
        t.expect(rank_of_polys(four) == 4, "the four listed Q's are dependent");
    }
    for (const auto& lambda : all_partitions(2, 2, 8)) {
        for (int level = std::max(1, lambda.spread()); level <= 3; ++level) {
            ZValsQ z = rng.distinct_z(lambda.size());
            std::vector<QPoly> qs;
            for (const auto& fam : enumerate_U_families(lambda, level))
                qs.push_back(evaluate_product(build_Q(fam, lambda, level), z));
            t.expect(rank_of_polys(qs) == cb_dim_sl2(lambda, level),
                     "span rank mismatch at " + lambda.str() + " level " +
                         std::to_string(level));
        }
    }
    return t;
}

// 5. L-space dimensions, the Phi/Psi embeddings, and the sandwich.
Tally l_spaces(SeededRng& rng) {
    Tally t;
    t.expect(L_dim(Partition{3, 2}, 2) == 4, "dim L^2(3,2) != 4");
    t.expect(L_dim(Partition{3, 2}, 3) == 5, "dim L^3(3,2) != 5");

    for (const auto& lambda : all_partitions(2, 2, 7)) {
        const int a = lambda.part(1), b = lambda.part(2);
        for (int level = std::max(1, lambda.spread()); level <= 3; ++level) {
            // Sandwich with equality.
            ZValsQ z = rng.distinct_z(lambda.size());
            std::vector<QPoly> qs;
            for (const auto& fam : enumerate_U_families(lambda, level))
                qs.push_back(evaluate_product(build_Q(fam, lambda, level), z));
            const int l_dim = L_dim(lambda, level);
            const int q_rank = rank_of_polys(qs);
            const int cb_dim = cb_dim_generic(lambda, level, z);
            t.expect(l_dim == q_rank && q_rank == cb_dim,
                     "sandwich not tight at " + lambda.str() + " level " +
                         std::to_string(level));

            // Phi/Psi into (a, b) when both are defined.
            if (b > 0 && 0 < a - b && a - b < level) {
                Partition src_phi{a - 1, b};
                Partition src_psi{a, b - 1};
                std::vector<QPoly> phi_img, psi_img;
                for (const auto& g : L_generators(src_phi, level))
                    phi_img.push_back(phi_map(g, src_phi, level));
                for (const auto& g : L_generators(src_psi, level))
                    psi_img.push_back(psi_map(g, src_psi, level));
                const int rank_phi = rank_of_polys(phi_img);
                const int rank_psi = rank_of_polys(psi_img);
                t.expect(rank_phi == L_dim(src_phi, level),
                         "phi not injective into " + lambda.str());
                t.expect(rank_psi == L_dim(src_psi, level),
                         "psi not injective into " + lambda.str());
                // Images inside the target space.
                std::vector<QPoly> target = L_generators(lambda, level);
                std::vector<QPoly> with_phi = target;
                with_phi.insert(with_phi.end(), phi_img.begin(), phi_img.end());
                std::vector<QPoly> with_psi = target;
                with_psi.insert(with_psi.end(), psi_img.begin(), psi_img.end());
                t.expect(rank_of_polys(with_phi) == l_dim, "phi image escapes L-space");
                t.expect(rank_of_polys(with_psi) == l_dim, "psi image escapes L-space");
                // Zero intersection.
                std::vector<QPoly> both = phi_img;
                both.insert(both.end(), psi_img.begin(), psi_img.end());
                t.expect(rank_of_polys(both) == rank_phi + rank_psi,
                         "phi and psi images intersect at " + lambda.str());
            }
        }
    }
    return t;
}

// 6. Q_w expansion and basis rank.
Tally qw_bases(SeededRng& rng) {
    Tally t;
    Partition lambda{3, 2};
    auto fams = qw_families("++-+-", lambda, 2);
    std::vector<UFamily> expected = {
        UFamily{{{1}, {2, 3, 4, 5}}},
        UFamily{{{1, 3, 4}, {2, 5}}},
        UFamily{{{1, 3, 4, 5}, {2}}},
        UFamily{{{1, 5}, {2, 3, 4}}},
    };
    std::sort(expected.begin(), expected.end());
    t.expect(fams == expected, "S_w expansion differs from the displayed four families");

    auto words = enumerate_sign_words(lambda, 2);
    t.expect(words.size() == 4, "expected 4 sign words for (3,2) level 2");
    ZValsQ z = rng.distinct_z(lambda.size());
    std::vector<QPoly> qws;
    for (const auto& w : words) qws.push_back(evaluate_Qw(w, lambda, 2, z));
    t.expect(rank_of_polys(qws) == 4, "the four Q_w are dependent");
    return t;
}

// 7. KZ exponents, verification, and the denominator residue identity.
Tally kz_checks(SeededRng& rng) {
    Tally t;
    for (auto [m, N] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        Rational expected(-m, static_cast<unsigned long>(m + 1));
        expected.canonicalize();
        ZValsQ z = rng.distinct_z(m * N);
        auto a = solve_kz_exponents(m, N, 1, z, CasimirKind::Gl, rng);
        bool all_match = true;
        for (const auto& q : a) all_match = all_match && q == expected;
        t.expect(all_match, "gl exponent wrong for m=" + std::to_string(m) +
                                ",N=" + std::to_string(N));
        t.expect(verify_kz(m, N, z, CasimirKind::Gl),
                 "gl KZ fails for m=" + std::to_string(m) + ",N=" + std::to_string(N));
        t.expect(verify_kz(m, N, z, CasimirKind::Sl),
                 "sl KZ fails for m=" + std::to_string(m) + ",N=" + std::to_string(N));
    }
    for (auto [m, N] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}})
        t.expect(remark52_check(m, N), "residue identity fails for m=" +
                                           std::to_string(m) + ",N=" + std::to_string(N));
    return t;
}

// 8. Decorated blocks of Example 8.
Tally decorated_blocks(SeededRng& rng) {
    Tally t;
    Partition lambda{4, 2};
    std::vector<std::vector<int>> mus2 = {{0}, {1}, {1, 1}};
    std::vector<std::vector<int>> mus3 = {{0}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}};
    for (int rep = 0; rep < 2; ++rep) {
        ZValsQ z = rng.distinct_z(6);
        std::vector<QPoly> level2, level3;
        for (const auto& mu : mus3) {
            QPoly h = schur_s(4, mu);
            QPoly p = evaluate_sum(build_decorated_P(lambda, h), z);
            level3.push_back(p);
            t.expect(is_conformal_block(p, lambda, 3, z), "P[h] not in CB^3(4,2)");
        }
        for (const auto& mu : mus2) {
            QPoly h = schur_s(4, mu);
            QPoly p = evaluate_sum(build_decorated_P(lambda, h), z);
            level2.push_back(p);
            t.expect(is_conformal_block(p, lambda, 2, z), "P[h] not in CB^2(4,2)");
        }
        t.expect(rank_of_polys(level2) == 3, "rank of the three decorated blocks != 3");
        t.expect(rank_of_polys(level3) == 6, "rank of the six decorated blocks != 6");
        t.expect(cb_dim_generic(lambda, 2, z) == 4, "dim CB^2(4,2) != 4");
        t.expect(cb_dim_generic(lambda, 3, z) == 8, "dim CB^3(4,2) != 8");
    }
    return t;
}

// 9. Identity fuzzing: Lagrange, concise form, Coxeter relations, flag sums.
Tally identity_fuzz(SeededRng& rng) {
    Tally t;
    int done = 0;
    while (done < 100) {
        int n = static_cast<int>(rng.next_int(2, 6));
        int k = static_cast<int>(rng.next_int(1, n - 1));
        int bound = k * (n - k);
        if (bound < 1) continue;
        int dp = static_cast<int>(rng.next_int(0, bound - 1));
        int dq = static_cast<int>(rng.next_int(0, bound - 1 - dp));
        QPoly p = random_symmetric_poly(rng, k, dp, false);
        QPoly q = random_symmetric_poly(rng, n - k, dq, false);
        t.expect(check_lagrange(k, n, p, q).is_zero(), "Lagrange sum not zero");
        ++done;
    }
    for (const auto& lambda : all_partitions(2, 5, 5)) {
        t.expect(build_P_concise(lambda) == evaluate_symbolic(build_P(lambda)),
                 "concise form differs for " + lambda.str());
    }
    for (int rep = 0; rep < 100; ++rep) {
        QPoly p = random_z_poly(rng, 6, 4, 3);
        int i = static_cast<int>(rng.next_int(1, 4));
        t.expect(divided_difference(i, divided_difference(i, p)).is_zero(),
                 "dd_i dd_i != 0");
        QPoly braid_left =
            divided_difference(i, divided_difference(i + 1, divided_difference(i, p)));
        QPoly braid_right =
            divided_difference(i + 1, divided_difference(i, divided_difference(i + 1, p)));
        t.expect(braid_left == braid_right, "braid relation fails");
        int j = i + 2;
        t.expect(divided_difference(i, divided_difference(j, p)) ==
                     divided_difference(j, divided_difference(i, p)),
                 "distant dds do not commute");
    }
    for (const auto& lambda : all_partitions(2, 5, 5)) {
        int threshold = 0;
        for (int i = 1; i <= lambda.m(); ++i)
            for (int j = i + 1; j <= lambda.m(); ++j)
                threshold += lambda.part(i) * lambda.part(j);
        if (threshold == 0) continue;
        for (int rep = 0; rep < 2; ++rep) {
            int budget = static_cast<int>(rng.next_int(0, threshold - 1));
            std::vector<QPoly> ps;
            for (int j = 1; j <= lambda.m(); ++j) {
                int deg = lambda.part(j) == 0
                              ? 0
                              : static_cast<int>(rng.next_int(0, budget));
                budget -= deg;
                ps.push_back(random_symmetric_poly(rng, std::max(lambda.part(j), 1), deg,
                                                   false));
            }
            t.expect(check_flag_vanishing(lambda, ps).is_zero(),
                     "flag sum not zero below threshold for " + lambda.str());
        }
    }
    return t;
}

// 10. Vanishing-order characterization vs operator membership.
Tally vanishing_equivalence(SeededRng& rng) {
    Tally t;
    for (int N : {2, 3}) {
        Partition lambda{N, N};
        auto invariants = singular_space_basis(lambda);
        t.expect(!invariants.empty(), "no invariants found");
        for (int level = 1; level <= N; ++level) {
            for (int rep = 0; rep < 3; ++rep) {
                ZValsQ z = rng.distinct_z(lambda.size());
                for (const auto& p : invariants) {
                    bool via_ops = is_conformal_block(p, lambda, level, z);
                    bool via_vanishing = vanishing_order_check(p, N, 2, level, z);
                    t.expect(via_ops == via_vanishing,
                             "characterizations disagree at N=" + std::to_string(N) +
                                 " level " + std::to_string(level));
                }
            }
        }
    }
    return t;
}

// 11. Asymptotics and the determinant identity.
Tally asymptotics_checks(SeededRng& rng) {
    Tally t;
    for (const auto& lambda : {Partition{2, 2}, Partition{1, 1, 1}}) {
        auto rep = check_P_asymptotics(lambda, AsymMode::Clustered, rng);
        t.expect(rep.match, "clustered limit mismatch for " + lambda.str());
    }
    for (const auto& lambda : {Partition{2, 1}, Partition{3, 2}}) {
        auto rep = check_P_asymptotics(lambda, AsymMode::Nested, rng);
        t.expect(rep.match, "nested limit mismatch for " + lambda.str());
    }
    for (int N : {2, 3}) {
        for (int rep = 0; rep < 3; ++rep) {
            ZValsQ z = rng.distinct_z(2 * N);
            t.expect(determinant_identity_sign(N, z) != 0,
                     "determinant identity fails for N=" + std::to_string(N));
        }
    }
    return t;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::string& only) {
    struct Item {
        int id;
        const char* tag;
        const char* name;
        std::function<Tally(SeededRng&)> run;
    };
    const std::vector<Item> items = {
        {1, "membership", "membership sweep: P lies in CB^max(d,1) (m <= 4, |lambda| <= 6)",
         membership_sweep},
        {2, "onedim", "level-one spaces of spread <= 1 are one-dimensional and P spans them",
         one_dimensionality},
        {3, "pascal", "Pascal recursion table and kernel-rank agreement (m = 2, |lambda| <= 8)",
         pascal_table},
        {4, "qspan", "Q(U) families span: 16 families for (3,3) and full m = 2 sweep",
         q_spanning},
        {5, "lspace", "L-space dims, Phi/Psi embeddings, and the tight sandwich (|lambda| <= 7)",
         l_spaces},
        {6, "qw", "Q_w ballot bases: expansion of Q_{++-+-} and rank", qw_bases},
        {7, "kz", "KZ exponents -m/(m+1), gl/sl verification, residue identity", kz_checks},
        {8, "decorated", "decorated blocks of (4,2): membership, ranks 3 and 6, dims 4 and 8",
         decorated_blocks},
        {9, "identities", "identity fuzzing: Lagrange, concise form, Coxeter, flag sums",
         identity_fuzz},
        {10, "vanishing", "vanishing-order characterization matches operator membership",
         vanishing_equivalence},
        {11, "asymptotics", "limit paths match closed forms; determinant identity holds",
         asymptotics_checks},
    };
    std::vector<CriterionResult> results;
    for (const auto& item : items) {
        if (!only.empty() && std::string(item.tag).find(only) == std::string::npos) continue;
        SeededRng rng(seed + static_cast<std::uint64_t>(item.id));
        CriterionResult r;
        r.id = item.id;
        r.tag = item.tag;
        r.name = item.name;
        Tally tally = item.run(rng);
        r.passed = tally.failures == 0;
        r.details = tally.details();
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace cblock
