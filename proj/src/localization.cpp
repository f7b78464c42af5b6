#include "cblock/localization.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cblock {

std::vector<std::pair<int, int>> resultant_pairs(const IndexedPartitioning& part) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < part.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < part.blocks.size(); ++j)
            for (int a : part.blocks[i])
                for (int b : part.blocks[j]) pairs.emplace_back(a, b);
    return pairs;
}

Monomial y_monomial(const IndexedPartitioning& part) {
    Monomial::Factors f;
    for (std::size_t j = 0; j < part.blocks.size(); ++j)
        for (int a : part.blocks[j]) f.emplace_back(yvar(static_cast<int>(j) + 1, a), 1);
    return Monomial::from_factors(std::move(f));
}

LocalizationSum build_P(const Partition& lambda) {
    if (lambda.m() < 2) throw Error("P_z(lambda) needs at least two parts");
    LocalizationSum s;
    s.lambda = lambda;
    s.n = lambda.size();
    for (auto& part : enumerate_partitionings(lambda))
        s.terms.push_back({std::move(part), QPoly(Rational(1))});
    return s;
}

namespace {

// Slot layout of a lambda-symmetric polynomial: block j owns slots
// offset_j + 1 .. offset_j + lambda_j.
std::vector<int> block_offsets(const Partition& lambda) {
    std::vector<int> off(lambda.m() + 1, 0);
    for (int j = 1; j <= lambda.m(); ++j) off[j] = off[j - 1] + lambda.part(j);
    return off;
}

void require_lambda_symmetric(const Partition& lambda, const QPoly& h) {
    auto off = block_offsets(lambda);
    for (int j = 1; j <= lambda.m(); ++j) {
        for (int s = off[j - 1] + 1; s < off[j]; ++s) {
            if (h.swap_subscript(s, s + 1, /*in_y=*/false, /*in_z=*/true) != h)
                throw NotLambdaSymmetric("decoration not symmetric within block " +
                                         std::to_string(j));
        }
    }
    // No slot beyond |lambda| may occur.
    for (const auto& [m, c] : h.terms())
        for (const auto& [var, e] : m.factors()) {
            if (!is_z_var(var)) throw Error("decoration must be a z polynomial");
            if (var_sub(var) > lambda.size())
                throw Error("decoration uses slot beyond |lambda|");
        }
}

} // namespace

LocalizationSum build_decorated_P(const Partition& lambda, const QPoly& h) {
    if (lambda.m() < 2) throw Error("P_z[h](lambda) needs at least two parts");
    require_lambda_symmetric(lambda, h);
    auto off = block_offsets(lambda);
    LocalizationSum s;
    s.lambda = lambda;
    s.n = lambda.size();
    for (auto& part : enumerate_partitionings(lambda)) {
        std::map<int, int> slot_to_target;
        for (int j = 1; j <= lambda.m(); ++j)
            for (std::size_t t = 0; t < part.blocks[j - 1].size(); ++t)
                slot_to_target[off[j - 1] + 1 + static_cast<int>(t)] = part.blocks[j - 1][t];
        s.terms.push_back({part, h.rename_z(slot_to_target)});
    }
    return s;
}

LocalizationSum relabel(const LocalizationSum& s, const std::vector<int>& indices) {
    if (static_cast<int>(indices.size()) != s.n)
        throw Error("relabeling needs exactly |lambda| indices");
    std::set<int> seen;
    for (int k : indices)
        if (!seen.insert(k).second) throw DuplicateIndex("repeated index in relabeling");
    std::map<int, int> to;
    for (int a = 1; a <= s.n; ++a) to[a] = indices[a - 1];
    LocalizationSum out;
    out.lambda = s.lambda;
    out.n = s.n;
    for (const auto& term : s.terms) {
        IndexedPartitioning part;
        for (const auto& block : term.part.blocks) {
            std::vector<int> mapped;
            mapped.reserve(block.size());
            for (int a : block) mapped.push_back(to.at(a));
            std::sort(mapped.begin(), mapped.end());
            part.blocks.push_back(std::move(mapped));
        }
        out.terms.push_back({std::move(part), term.numerator.rename_z(to)});
    }
    return out;
}

LPoly evaluate_symbolic(const LocalizationSum& s) {
    LPoly acc;
    for (const auto& term : s.terms) {
        Lff coeff = Lff::inverse_of_pairs(resultant_pairs(term.part)) * Lff(term.numerator);
        acc.add_term(y_monomial(term.part), coeff);
    }
    return acc;
}

} // namespace cblock
