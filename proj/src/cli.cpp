#include "cblock/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
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

namespace cblock {

namespace {

Partition parse_lambda(const std::string& text) {
    if (text.empty()) throw UsageError("--lambda is required");
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            parts.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw UsageError("bad --lambda entry: " + piece);
        }
    }
    try {
        return Partition(parts);
    } catch (const Error& e) {
        throw UsageError(std::string("bad --lambda: ") + e.what());
    }
}

ZValsQ parse_z(const std::string& text) {
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) vals.push_back(rat_parse(piece));
    ZValsQ z = make_zvals(vals);
    require_distinct(z);
    return z;
}

ZValsQ z_or_random(const std::string& ztext, int n, SeededRng& rng) {
    if (ztext.empty()) return rng.distinct_z(n);
    ZValsQ z = parse_z(ztext);
    if (static_cast<int>(z.v.size()) != n)
        throw UsageError("--z needs exactly " + std::to_string(n) + " values");
    return z;
}

Json z_json(const ZValsQ& z) {
    Json arr = Json::array();
    for (const auto& [a, q] : z.v) arr.push_back(rat_str(q));
    return arr;
}

struct Options {
    std::string lambda_text;
    std::string z_text;
    int level = 1;
    std::uint64_t seed = 0;
    bool json = false;
    bool symbolic = false;
    std::string method = "recursion";
    std::string kind = "qu";
    std::string casimir = "gl";
    std::string mode = "clustered";
    std::string input;
    std::string only;
    int fuzz = 100;
    int m = 2;
    int n = 1;
    int max_size = 5;
};

RunReport cmd_pz_build(const Options& o) {
    Partition lambda = parse_lambda(o.lambda_text);
    SeededRng rng(o.seed);
    Json inputs{{"lambda", lambda.str()}, {"symbolic", o.symbolic}};
    LocalizationSum sum = build_P(lambda);
    if (o.symbolic) {
        RunReport rep("pz build", inputs, o.seed);
        rep.value("terms", static_cast<int>(sum.terms.size()));
        rep.value("P", lpoly_str(evaluate_symbolic(sum)));
        return rep;
    }
    ZValsQ z = z_or_random(o.z_text, lambda.size(), rng);
    inputs["z"] = z_json(z);
    RunReport rep("pz build", inputs, o.seed);
    rep.value("terms", static_cast<int>(sum.terms.size()));
    rep.value("P", poly_str(evaluate_sum(sum, z)));
    return rep;
}

RunReport cmd_cb_verify(const Options& o) {
    Partition lambda = parse_lambda(o.lambda_text);
    SeededRng rng(o.seed);
    ZValsQ z = z_or_random(o.z_text, lambda.size(), rng);
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open input file: " + o.input);
    std::stringstream buffer;
    buffer << in.rdbuf();
    QPoly p = poly_parse(buffer.str());
    Json inputs{{"lambda", lambda.str()}, {"level", o.level}, {"z", z_json(z)},
                {"input", o.input}};
    RunReport rep("cb verify", inputs, o.seed);
    CbCertificate cert = conformal_block_certificate(p, lambda, o.level, z);
    rep.value("singular", cert.singular);
    if (cert.weight) {
        Json w = Json::array();
        for (int x : *cert.weight) w.push_back(x);
        rep.value("weight", w);
    } else {
        rep.value("weight", "mixed");
    }
    rep.check("cb_member", cert.member,
              cert.member ? Json::object()
                          : Json{{"failing_operator", cert.failing_operator}});
    return rep;
}

RunReport cmd_cb_dim(const Options& o) {
    Partition lambda = parse_lambda(o.lambda_text);
    SeededRng rng(o.seed);
    Json inputs{{"lambda", lambda.str()}, {"level", o.level}, {"method", o.method}};
    if (o.method == "recursion") {
        RunReport rep("cb dim", inputs, o.seed);
        rep.value("dim", cb_dim_sl2(lambda, o.level));
        return rep;
    }
    if (o.method != "rank") throw UsageError("--method must be recursion or rank");
    ZValsQ z = z_or_random(o.z_text, lambda.size(), rng);
    inputs["z"] = z_json(z);
    RunReport rep("cb dim", inputs, o.seed);
    rep.value("dim", cb_dim_generic(lambda, o.level, z));
    return rep;
}

RunReport cmd_cb_basis(const Options& o) {
    Partition lambda = parse_lambda(o.lambda_text);
    SeededRng rng(o.seed);
    ZValsQ z = z_or_random(o.z_text, lambda.size(), rng);
    Json inputs{{"lambda", lambda.str()}, {"level", o.level}, {"kind", o.kind},
                {"z", z_json(z)}};
    RunReport rep("cb basis", inputs, o.seed);
    std::vector<QPoly> polys;
    Json names = Json::array();
    if (o.kind == "qu") {
        for (const auto& fam : enumerate_U_families(lambda, o.level)) {
            polys.push_back(evaluate_product(build_Q(fam, lambda, o.level), z));
            names.push_back(fam.str());
        }
    } else if (o.kind == "qw") {
        for (const auto& w : enumerate_sign_words(lambda, o.level)) {
            polys.push_back(evaluate_Qw(w, lambda, o.level, z));
            names.push_back(w);
        }
    } else if (o.kind == "decorated") {
        if (lambda.m() != 2) throw UsageError("decorated basis emission expects m = 2");
        // h = s^{(lambda_1)}(mu) over partitions mu with at most 2 rows and
        // parts <= level - 1, the pattern of the worked example.
        for (int first = 0; first <= o.level - 1; ++first) {
            for (int second = 0; second <= first; ++second) {
                std::vector<int> mu;
                if (first > 0) mu.push_back(first);
                if (second > 0) mu.push_back(second);
                if (mu.empty()) mu.push_back(0);
                QPoly h = schur_s(lambda.part(1), mu);
                polys.push_back(evaluate_sum(build_decorated_P(lambda, h), z));
                std::string nm = "s(";
                for (std::size_t t = 0; t < mu.size(); ++t)
                    nm += (t ? "," : "") + std::to_string(mu[t]);
                names.push_back(nm + ")");
            }
        }
    } else {
        throw UsageError("--kind must be qu, qw, or decorated");
    }
    Json out = Json::array();
    for (std::size_t t = 0; t < polys.size(); ++t) {
        Json entry;
        entry["name"] = names[t];
        entry["poly"] = poly_str(polys[t]);
        out.push_back(std::move(entry));
    }
    rep.value("generators", out);
    rep.value("rank", rank_of_polys(polys));
    rep.value("dim", cb_dim_generic(lambda, o.level, z));
    return rep;
}

RunReport cmd_cb_ltable(const Options& o) {
    Json inputs{{"level", o.level}, {"max_size", o.max_size}};
    RunReport rep("cb ltable", inputs, o.seed);
    Json rows = Json::array();
    for (int n = 0; n <= o.max_size; ++n) {
        Json row = Json::array();
        for (int b = 0; 2 * b <= n; ++b) {
            int a = n - b;
            if (a - b > o.level) continue;
            Json cell;
            cell["lambda"] = Partition{a, b}.str();
            cell["dim"] = cb_dim_sl2(Partition{a, b}, o.level);
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    rep.value("table", rows);
    return rep;
}

RunReport cmd_kz_check(const Options& o) {
    if (o.m < 2 || o.n < 1) throw UsageError("kz check needs --m >= 2 and --n >= 1");
    CasimirKind kind;
    if (o.casimir == "gl") kind = CasimirKind::Gl;
    else if (o.casimir == "sl") kind = CasimirKind::Sl;
    else throw UsageError("--casimir must be gl or sl");
    SeededRng rng(o.seed);
    ZValsQ z = z_or_random(o.z_text, o.m * o.n, rng);
    Json inputs{{"m", o.m}, {"n", o.n}, {"casimir", o.casimir}, {"z", z_json(z)}};
    RunReport rep("kz check", inputs, o.seed);
    auto a = solve_kz_exponents(o.m, o.n, 1, z, kind, rng);
    bool constant = true;
    for (const auto& q : a) constant = constant && q == a.front();
    rep.value("a_ij", rat_str(a.front()), Json{{"constant_across_j", constant}});
    bool verified = verify_kz(o.m, o.n, z, kind);
    if (verified) {
        rep.check("verified", true);
    } else {
        Rational c = kz_expected_constant(o.m, kind);
        QPoly residual;
        for (int i = 1; i <= o.m * o.n && residual.is_zero(); ++i)
            residual = kz_residual(o.m, o.n, i, z, kind, c);
        rep.check("verified", false, Json{{"residual", poly_str(residual)}});
    }
    return rep;
}

RunReport cmd_identity_lagrange(const Options& o) {
    SeededRng rng(o.seed);
    Json inputs{{"fuzz", o.fuzz}};
    RunReport rep("identity lagrange", inputs, o.seed);
    int pass = 0;
    Json counterexamples = Json::array();
    for (int t = 0; t < o.fuzz; ++t) {
        int n = static_cast<int>(rng.next_int(2, 6));
        int k = static_cast<int>(rng.next_int(1, n - 1));
        int bound = k * (n - k);
        int dp = static_cast<int>(rng.next_int(0, bound - 1));
        int dq = static_cast<int>(rng.next_int(0, bound - 1 - dp));
        QPoly p = random_symmetric_poly(rng, k, dp, false);
        QPoly q = random_symmetric_poly(rng, n - k, dq, false);
        if (check_lagrange(k, n, p, q).is_zero()) {
            ++pass;
        } else if (counterexamples.size() < 3) {
            counterexamples.push_back(Json{{"k", k},
                                           {"n", n},
                                           {"p", poly_str(p)},
                                           {"q", poly_str(q)}});
        }
    }
    rep.value("pass", pass);
    rep.value("fail", o.fuzz - pass);
    if (!counterexamples.empty()) rep.value("counterexamples", counterexamples);
    rep.check("all_vanish", pass == o.fuzz);
    return rep;
}

RunReport cmd_identity_flag(const Options& o) {
    SeededRng rng(o.seed);
    Json inputs{{"fuzz", o.fuzz}};
    RunReport rep("identity flag", inputs, o.seed);
    auto lambdas = all_partitions(2, 4, 5);
    int pass = 0;
    Json counterexamples = Json::array();
    for (int t = 0; t < o.fuzz; ++t) {
        const Partition& lambda = lambdas[rng.next() % lambdas.size()];
        int threshold = 0;
        for (int i = 1; i <= lambda.m(); ++i)
            for (int j = i + 1; j <= lambda.m(); ++j)
                threshold += lambda.part(i) * lambda.part(j);
        if (threshold == 0) {
            ++pass;
            continue;
        }
        int budget = static_cast<int>(rng.next_int(0, threshold - 1));
        std::vector<QPoly> ps;
        for (int j = 1; j <= lambda.m(); ++j) {
            int deg = lambda.part(j) == 0 ? 0 : static_cast<int>(rng.next_int(0, budget));
            budget -= deg;
            ps.push_back(random_symmetric_poly(rng, std::max(lambda.part(j), 1), deg, false));
        }
        if (check_flag_vanishing(lambda, ps).is_zero()) {
            ++pass;
        } else if (counterexamples.size() < 3) {
            counterexamples.push_back(Json{{"lambda", lambda.str()}});
        }
    }
    rep.value("pass", pass);
    rep.value("fail", o.fuzz - pass);
    if (!counterexamples.empty()) rep.value("counterexamples", counterexamples);
    rep.check("all_vanish", pass == o.fuzz);
    return rep;
}

RunReport cmd_identity_concise(const Options& o) {
    Json inputs{{"max_size", o.max_size}};
    RunReport rep("identity concise", inputs, o.seed);
    for (const auto& lambda : all_partitions(2, 5, o.max_size)) {
        bool equal = build_P_concise(lambda) == evaluate_symbolic(build_P(lambda));
        rep.check("concise(" + lambda.str() + ")", equal);
    }
    return rep;
}

RunReport cmd_identity_remark52(const Options& o) {
    Json inputs{{"m", o.m}, {"n", o.n}};
    RunReport rep("identity remark52", inputs, o.seed);
    rep.check("identity", remark52_check(o.m, o.n));
    return rep;
}

RunReport cmd_asym_check(const Options& o) {
    Partition lambda = parse_lambda(o.lambda_text);
    AsymMode mode;
    if (o.mode == "clustered") mode = AsymMode::Clustered;
    else if (o.mode == "nested") mode = AsymMode::Nested;
    else throw UsageError("--mode must be clustered or nested");
    SeededRng rng(o.seed);
    Json inputs{{"lambda", lambda.str()}, {"mode", o.mode}};
    RunReport rep("asym check", inputs, o.seed);
    AsymReport ar = check_P_asymptotics(lambda, mode, rng);
    rep.check("limit_matches", ar.match,
              ar.match ? Json{{"sign", ar.sign}}
                       : Json{{"limit", poly_str(ar.limit)}, {"target", poly_str(ar.target)}});
    return rep;
}

RunReport cmd_accept(const Options& o) {
    Json inputs = Json::object();
    if (!o.only.empty()) inputs["only"] = o.only;
    RunReport rep("accept", inputs, o.seed);
    for (const auto& r : run_acceptance(o.seed, o.only)) {
        rep.check(std::to_string(r.id) + ". " + r.name, r.passed,
                  Json{{"details", r.details}});
    }
    return rep;
}

} // namespace

RunReport dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact conformal-block localization toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "random seed (recorded in the report)");
        cmd->add_flag("--json", o.json, "emit the JSON report");
    };

    auto* pz = app.add_subcommand("pz", "localization polynomial construction");
    auto* pz_build = pz->add_subcommand("build", "build P_z(lambda)");
    pz_build->add_option("--lambda", o.lambda_text)->required();
    pz_build->add_option("--z", o.z_text);
    pz_build->add_flag("--symbolic", o.symbolic);
    add_common(pz_build);

    auto* cb = app.add_subcommand("cb", "conformal-block computations");
    auto* cb_verify = cb->add_subcommand("verify", "membership certificate for a polynomial");
    cb_verify->add_option("--lambda", o.lambda_text)->required();
    cb_verify->add_option("--level", o.level)->required();
    cb_verify->add_option("--z", o.z_text);
    cb_verify->add_option("--input", o.input)->required();
    add_common(cb_verify);
    auto* cb_dim = cb->add_subcommand("dim", "dimension of the block space");
    cb_dim->add_option("--lambda", o.lambda_text)->required();
    cb_dim->add_option("--level", o.level)->required();
    cb_dim->add_option("--method", o.method)->check(CLI::IsMember({"recursion", "rank"}));
    cb_dim->add_option("--z", o.z_text);
    add_common(cb_dim);
    auto* cb_basis = cb->add_subcommand("basis", "emit generating sets with a rank certificate");
    cb_basis->add_option("--lambda", o.lambda_text)->required();
    cb_basis->add_option("--level", o.level)->required();
    cb_basis->add_option("--kind", o.kind)->check(CLI::IsMember({"qu", "qw", "decorated"}));
    cb_basis->add_option("--z", o.z_text);
    add_common(cb_basis);
    auto* cb_ltable = cb->add_subcommand("ltable", "Pascal-style dimension table");
    cb_ltable->add_option("--level", o.level)->required();
    cb_ltable->add_option("--max-size", o.max_size);
    add_common(cb_ltable);

    auto* kz = app.add_subcommand("kz", "KZ-equation checks");
    auto* kz_check = kz->add_subcommand("check", "solve and verify the KZ exponents");
    kz_check->add_option("--m", o.m)->required();
    kz_check->add_option("--n", o.n)->required();
    kz_check->add_option("--casimir", o.casimir)->check(CLI::IsMember({"gl", "sl"}));
    kz_check->add_option("--z", o.z_text);
    add_common(kz_check);

    auto* identity = app.add_subcommand("identity", "rational-function identities");
    auto* id_lagrange = identity->add_subcommand("lagrange", "fuzz the interpolation identity");
    id_lagrange->add_option("--fuzz", o.fuzz);
    add_common(id_lagrange);
    auto* id_flag = identity->add_subcommand("flag", "fuzz the flag vanishing identity");
    id_flag->add_option("--fuzz", o.fuzz);
    add_common(id_flag);
    auto* id_concise = identity->add_subcommand("concise", "divided-difference form equality");
    id_concise->add_option("--max-size", o.max_size);
    add_common(id_concise);
    auto* id_remark = identity->add_subcommand("remark52", "KZ denominator residue identity");
    id_remark->add_option("--m", o.m)->required();
    id_remark->add_option("--n", o.n)->required();
    add_common(id_remark);

    auto* asym = app.add_subcommand("asym", "asymptotic limits");
    auto* asym_check = asym->add_subcommand("check", "limit path vs closed form");
    asym_check->add_option("--lambda", o.lambda_text)->required();
    asym_check->add_option("--mode", o.mode)->check(CLI::IsMember({"clustered", "nested"}));
    add_common(asym_check);

    auto* accept = app.add_subcommand("accept", "run the acceptance suite");
    accept->add_option("--only", o.only, "filter criteria by tag substring");
    add_common(accept);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    auto run_parsed = [&]() -> RunReport {
        if (pz_build->parsed()) return cmd_pz_build(o);
        if (cb_verify->parsed()) return cmd_cb_verify(o);
        if (cb_dim->parsed()) return cmd_cb_dim(o);
        if (cb_basis->parsed()) return cmd_cb_basis(o);
        if (cb_ltable->parsed()) return cmd_cb_ltable(o);
        if (kz_check->parsed()) return cmd_kz_check(o);
        if (id_lagrange->parsed()) return cmd_identity_lagrange(o);
        if (id_flag->parsed()) return cmd_identity_flag(o);
        if (id_concise->parsed()) return cmd_identity_concise(o);
        if (id_remark->parsed()) return cmd_identity_remark52(o);
        if (asym_check->parsed()) return cmd_asym_check(o);
        if (accept->parsed()) return cmd_accept(o);
        throw UsageError("missing subcommand");
    };
    try {
        return run_parsed();
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        // Domain errors become structured failing entries, not crashes.
        Json argv_echo = Json::array();
        for (const auto& a : args) argv_echo.push_back(a);
        RunReport rep("error", Json{{"argv", argv_echo}}, o.seed);
        rep.check("execution", false, Json{{"error", e.what()}});
        return rep;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool json = false;
    for (const auto& a : args)
        if (a == "--json") json = true;
    try {
        RunReport rep = dispatch(args);
        std::cout << (json ? rep.json_text() : rep.text());
        return rep.ok() ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n"
                  << "subcommands: pz build | cb verify|dim|basis|ltable | kz check |\n"
                  << "             identity lagrange|flag|concise|remark52 | asym check | accept\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cblock
