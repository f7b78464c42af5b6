#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cblock/acceptance.hpp"
#include "cblock/asymptotics.hpp"
#include "cblock/blocks.hpp"
#include "cblock/divided_difference.hpp"
#include "cblock/identities.hpp"
#include "cblock/kz.hpp"
#include "cblock/localization.hpp"
#include "cblock/operators.hpp"
#include "cblock/rng.hpp"
#include "cblock/serialize.hpp"

namespace py = pybind11;
using namespace cblock;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

ZValsQ to_z(const std::vector<std::string>& z) {
    std::vector<Rational> vals;
    vals.reserve(z.size());
    for (const auto& s : z) vals.push_back(rat_parse(s));
    ZValsQ out = make_zvals(vals);
    require_distinct(out);
    return out;
}

ZValsQ z_or_seeded(const std::vector<std::string>& z, int n, std::uint64_t seed) {
    if (!z.empty()) {
        ZValsQ out = to_z(z);
        if (static_cast<int>(out.v.size()) != n)
            throw UsageError("z needs exactly " + std::to_string(n) + " values");
        return out;
    }
    SeededRng rng(seed);
    return rng.distinct_z(n);
}

} // namespace

PYBIND11_MODULE(_cblock, m) {
    m.doc() = "Exact conformal-block localization toolkit (C++ core).";

    py::register_exception<Error>(m, "CblockError");

    m.def(
        "p_polynomial",
        [](const std::vector<int>& lambda, const std::vector<std::string>& z) {
            Partition lam = to_partition(lambda);
            return poly_str(evaluate_sum(build_P(lam), to_z(z)));
        },
        py::arg("lambda_"), py::arg("z"),
        "Canonical text form of P_z(lambda) at a concrete assignment.");

    m.def(
        "p_polynomial_symbolic",
        [](const std::vector<int>& lambda) {
            return lpoly_str(evaluate_symbolic(build_P(to_partition(lambda))));
        },
        py::arg("lambda_"));

    m.def(
        "decorated_p_polynomial",
        [](const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<std::string>& z) {
            Partition lam = to_partition(lambda);
            QPoly h = schur_s(lam.part(1), mu);
            return poly_str(evaluate_sum(build_decorated_P(lam, h), to_z(z)));
        },
        py::arg("lambda_"), py::arg("mu"), py::arg("z"),
        "P_z[s^{(lambda_1)}(mu)](lambda) at a concrete assignment.");

    m.def(
        "cb_dim",
        [](const std::vector<int>& lambda, int level, const std::string& method,
           std::uint64_t seed) -> long {
            Partition lam = to_partition(lambda);
            if (method == "recursion") return cb_dim_sl2(lam, level);
            if (method != "rank") throw UsageError("method must be recursion or rank");
            SeededRng rng(seed);
            return cb_dim_generic(lam, level, rng.distinct_z(lam.size()));
        },
        py::arg("lambda_"), py::arg("level"), py::arg("method") = "recursion",
        py::arg("seed") = 0);

    m.def(
        "l_dim",
        [](const std::vector<int>& lambda, int level) {
            return L_dim(to_partition(lambda), level);
        },
        py::arg("lambda_"), py::arg("level"));

    m.def(
        "is_conformal_block",
        [](const std::string& poly, const std::vector<int>& lambda, int level,
           const std::vector<std::string>& z) {
            return is_conformal_block(poly_parse(poly), to_partition(lambda), level, to_z(z));
        },
        py::arg("poly"), py::arg("lambda_"), py::arg("level"), py::arg("z"));

    m.def(
        "q_basis",
        [](const std::vector<int>& lambda, int level, const std::vector<std::string>& z,
           std::uint64_t seed) {
            Partition lam = to_partition(lambda);
            ZValsQ zz = z_or_seeded(z, lam.size(), seed);
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& fam : enumerate_U_families(lam, level))
                out.emplace_back(fam.str(),
                                 poly_str(evaluate_product(build_Q(fam, lam, level), zz)));
            return out;
        },
        py::arg("lambda_"), py::arg("level"), py::arg("z") = std::vector<std::string>{},
        py::arg("seed") = 0);

    m.def(
        "qw_basis",
        [](const std::vector<int>& lambda, int level, const std::vector<std::string>& z,
           std::uint64_t seed) {
            Partition lam = to_partition(lambda);
            ZValsQ zz = z_or_seeded(z, lam.size(), seed);
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& w : enumerate_sign_words(lam, level))
                out.emplace_back(w, poly_str(evaluate_Qw(w, lam, level, zz)));
            return out;
        },
        py::arg("lambda_"), py::arg("level"), py::arg("z") = std::vector<std::string>{},
        py::arg("seed") = 0);

    m.def(
        "schur",
        [](int k, const std::vector<int>& mu) { return poly_str(schur_s(k, mu)); },
        py::arg("k"), py::arg("mu"));

    m.def(
        "kz_exponent",
        [](int m_, int n, const std::string& casimir, std::uint64_t seed) {
            CasimirKind kind = casimir == "sl" ? CasimirKind::Sl : CasimirKind::Gl;
            SeededRng rng(seed);
            ZValsQ z = rng.distinct_z(m_ * n);
            auto a = solve_kz_exponents(m_, n, 1, z, kind, rng);
            return rat_str(a.front());
        },
        py::arg("m"), py::arg("n"), py::arg("casimir") = "gl", py::arg("seed") = 0);

    m.def(
        "kz_verify",
        [](int m_, int n, const std::string& casimir, std::uint64_t seed) {
            CasimirKind kind = casimir == "sl" ? CasimirKind::Sl : CasimirKind::Gl;
            SeededRng rng(seed);
            return verify_kz(m_, n, rng.distinct_z(m_ * n), kind);
        },
        py::arg("m"), py::arg("n"), py::arg("casimir") = "gl", py::arg("seed") = 0);

    m.def("remark52_check", &remark52_check, py::arg("m"), py::arg("n"));

    m.def(
        "lagrange_fuzz",
        [](int count, std::uint64_t seed) {
            SeededRng rng(seed);
            int pass = 0;
            for (int t = 0; t < count; ++t) {
                int n = static_cast<int>(rng.next_int(2, 6));
                int k = static_cast<int>(rng.next_int(1, n - 1));
                int bound = k * (n - k);
                int dp = static_cast<int>(rng.next_int(0, bound - 1));
                int dq = static_cast<int>(rng.next_int(0, bound - 1 - dp));
                QPoly p = random_symmetric_poly(rng, k, dp, false);
                QPoly q = random_symmetric_poly(rng, n - k, dq, false);
                if (check_lagrange(k, n, p, q).is_zero()) ++pass;
            }
            return std::make_pair(pass, count - pass);
        },
        py::arg("count") = 100, py::arg("seed") = 0);

    m.def(
        "canonical_form",
        [](const std::string& poly) { return poly_str(poly_parse(poly)); },
        py::arg("poly"));

    m.def(
        "acceptance",
        [](std::uint64_t seed, const std::string& only) {
            std::vector<py::dict> out;
            for (const auto& r : run_acceptance(seed, only)) {
                py::dict d;
                d["id"] = r.id;
                d["tag"] = r.tag;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["details"] = r.details;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("seed") = 0, py::arg("only") = "");

    m.attr("__version__") = "1.0.0";
}
