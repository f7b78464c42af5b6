#include "cblock/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cblock/localization.hpp"

namespace cblock {

QPoly elementary_symmetric(const std::vector<int>& subscripts, int k) {
    if (k < 0 || k > static_cast<int>(subscripts.size())) return QPoly();
    QPoly acc(Rational(1));
    // e_k via the combination enumeration; sizes here are tiny.
    if (k == 0) return acc;
    QPoly sum;
    for (const auto& comb : combinations(subscripts, k)) {
        Monomial::Factors f;
        for (int a : comb) f.emplace_back(zvar(a), 1);
        sum.add_term(Monomial::from_factors(std::move(f)), Rational(1));
    }
    return sum;
}

bool is_symmetric_in(const QPoly& p, const std::vector<int>& subscripts) {
    for (std::size_t t = 0; t + 1 < subscripts.size(); ++t) {
        if (p.swap_subscript(subscripts[t], subscripts[t + 1], false, true) != p) return false;
    }
    return true;
}

namespace {

// Substitutes the slot variables z_1..z_k of a symmetric polynomial by the
// target subscripts (any order; symmetry makes the choice immaterial).
QPoly substitute_slots(const QPoly& p, const std::vector<int>& targets) {
    // Two-step rename through a scratch range to keep the map injective.
    std::map<int, int> to_scratch;
    const int scratch = 1 << 20;
    for (std::size_t t = 0; t < targets.size(); ++t)
        to_scratch[static_cast<int>(t) + 1] = scratch + static_cast<int>(t);
    std::map<int, int> to_final;
    for (std::size_t t = 0; t < targets.size(); ++t)
        to_final[scratch + static_cast<int>(t)] = targets[t];
    return p.rename_z(to_scratch).rename_z(to_final);
}

std::vector<int> slots(int k) {
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

} // namespace

Lff check_lagrange(int k, int n, const QPoly& p, const QPoly& q) {
    if (k <= 0 || k >= n) throw Error("check_lagrange needs 0 < k < n");
    if (!is_symmetric_in(p, slots(k))) throw NotSymmetric("p is not symmetric");
    if (!is_symmetric_in(q, slots(n - k))) throw NotSymmetric("q is not symmetric");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    Lff acc;
    for (const auto& subset : combinations(all, k)) {
        std::vector<int> complement;
        std::set_difference(all.begin(), all.end(), subset.begin(), subset.end(),
                            std::back_inserter(complement));
        QPoly num = substitute_slots(p, subset) * substitute_slots(q, complement);
        std::vector<std::pair<int, int>> pairs;
        for (int a : subset)
            for (int b : complement) pairs.emplace_back(a, b);
        acc = acc + Lff(num) * Lff::inverse_of_pairs(pairs);
    }
    return acc;
}

Lff check_flag_vanishing(const Partition& lambda, const std::vector<QPoly>& polys) {
    if (static_cast<int>(polys.size()) != lambda.m())
        throw Error("one symmetric polynomial per block expected");
    for (int j = 1; j <= lambda.m(); ++j)
        if (!is_symmetric_in(polys[j - 1], slots(lambda.part(j))))
            throw NotSymmetric("block polynomial " + std::to_string(j) + " is not symmetric");
    Lff acc;
    for (const auto& part : enumerate_partitionings(lambda)) {
        QPoly num(Rational(1));
        for (int j = 1; j <= lambda.m(); ++j)
            num = num * substitute_slots(polys[j - 1], part.blocks[j - 1]);
        acc = acc + Lff(num) * Lff::inverse_of_pairs(resultant_pairs(part));
    }
    return acc;
}

namespace {

// Multisets of elementary-symmetric degrees summing to `degree`, parts <= nvars.
void e_degree_multisets(int degree, int max_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
    if (degree == 0) {
        out.push_back(current);
        return;
    }
    for (int k = std::min(degree, max_part); k >= 1; --k) {
        current.push_back(k);
        e_degree_multisets(degree - k, k, current, out);
        current.pop_back();
    }
}

} // namespace

QPoly random_symmetric_poly(SeededRng& rng, int nvars, int degree, bool exact_degree) {
    std::vector<int> s = slots(nvars);
    if (degree == 0) return QPoly(rng.nonzero_rational(20));
    if (exact_degree) {
        // Generic homogeneous element: random combination over the full
        // e-monomial basis of the target degree.
        std::vector<std::vector<int>> shapes;
        std::vector<int> current;
        e_degree_multisets(degree, nvars, current, shapes);
        if (shapes.empty()) throw Error("degree not reachable with this variable count");
        QPoly acc;
        bool any = false;
        for (const auto& shape : shapes) {
            Rational c = rng.rational(20);
            if (ring_is_zero(c)) continue;
            any = true;
            QPoly mono(c);
            for (int k : shape) mono = mono * elementary_symmetric(s, k);
            acc += mono;
        }
        if (!any) {
            QPoly mono(rng.nonzero_rational(20));
            for (int k : shapes.front()) mono = mono * elementary_symmetric(s, k);
            acc += mono;
        }
        return acc;
    }
    QPoly acc;
    const int pieces = static_cast<int>(rng.next_int(1, 3));
    for (int t = 0; t < pieces; ++t) {
        int remaining = static_cast<int>(rng.next_int(0, degree));
        QPoly mono(rng.nonzero_rational(20));
        while (remaining > 0) {
            int k = static_cast<int>(rng.next_int(1, std::min(remaining, nvars)));
            mono = mono * elementary_symmetric(s, k);
            remaining -= k;
        }
        acc += mono;
    }
    if (acc.is_zero()) acc = QPoly(rng.nonzero_rational(20));
    return acc;
}

QPoly random_poly(SeededRng& rng, int max_sub, int max_sup, int terms, int max_exp) {
    QPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial::Factors f;
        int nf = static_cast<int>(rng.next_int(0, 3));
        for (int u = 0; u < nf; ++u) {
            int sub = static_cast<int>(rng.next_int(1, max_sub));
            int exp = static_cast<int>(rng.next_int(1, max_exp));
            if (max_sup > 0 && rng.next_int(0, 1) == 0) {
                int sup = static_cast<int>(rng.next_int(1, max_sup));
                f.emplace_back(yvar(sup, sub), exp);
            } else {
                f.emplace_back(zvar(sub), exp);
            }
        }
        p.add_term(Monomial::from_factors(std::move(f)), rng.rational(50));
    }
    return p;
}

QPoly random_z_poly(SeededRng& rng, int nvars, int terms, int max_exp) {
    QPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial::Factors f;
        int nf = static_cast<int>(rng.next_int(0, 3));
        for (int u = 0; u < nf; ++u)
            f.emplace_back(zvar(static_cast<int>(rng.next_int(1, nvars))),
                           static_cast<int>(rng.next_int(1, max_exp)));
        p.add_term(Monomial::from_factors(std::move(f)), rng.rational(50));
    }
    return p;
}

} // namespace cblock
