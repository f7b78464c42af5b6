#include "cblock/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cblock/identities.hpp"

namespace cblock {

Partition mu_of_part(int size, int m) {
    if (m < 2) throw Error("mu_of_part needs m >= 2");
    if (size < 0) throw Error("negative part size");
    int q = size / m, r = size % m;
    std::vector<int> parts(m, q);
    for (int i = 0; i < r; ++i) parts[i] = q + 1;
    return Partition(parts);
}

std::string UFamily::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += "{";
        for (std::size_t t = 0; t < parts[i].size(); ++t) {
            if (t) s += ",";
            s += std::to_string(parts[i][t]);
        }
        s += "}";
    }
    return s + "}";
}

namespace {

// Residue class counts required by the family condition, indexed j = 0..m-1.
std::vector<int> residue_counts(const Partition& lambda, int level) {
    const int m = lambda.m();
    std::vector<int> cnt(m, 0);
    for (int j = 0; j < m; ++j) {
        int lj = (j == 0) ? level + lambda.part(m) : lambda.part(j);
        int lj1 = (j + 1 <= m) ? lambda.part(j + 1) : 0;
        cnt[j] = lj - lj1;
        if (cnt[j] < 0) throw LevelTooLow("level below spread of lambda");
    }
    return cnt;
}

UFamily canonical(std::vector<std::vector<int>> parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
    return UFamily{std::move(parts)};
}

// Enumerates multisets of part sizes (descending) matching the residue
// counts, then set partitions with those block sizes.
void size_multisets(int slots_left, int sum_left, int max_size,
                    std::vector<int>& sizes, std::vector<std::vector<int>>& out,
                    const std::vector<int>& cnt_needed, std::vector<int>& cnt_have, int m) {
    if (slots_left == 0) {
        if (sum_left == 0 && cnt_have == cnt_needed) out.push_back(sizes);
        return;
    }
    for (int s = std::min(max_size, sum_left); s >= 0; --s) {
        int r = s % m;
        if (cnt_have[r] + 1 > cnt_needed[r]) continue;
        // All later sizes are <= s; the remaining sum must be achievable.
        if (sum_left - s > s * (slots_left - 1)) continue;
        cnt_have[r]++;
        sizes.push_back(s);
        size_multisets(slots_left - 1, sum_left - s, s, sizes, out, cnt_needed, cnt_have, m);
        sizes.pop_back();
        cnt_have[r]--;
    }
}

// Unordered set partitions of `remaining` with the given nonzero block size
// multiset: the smallest remaining element always opens a block, once per
// distinct available size.
void set_partitions(std::vector<int> remaining, std::multiset<int> sizes,
                    std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (remaining.empty()) {
        out.push_back(current);
        return;
    }
    int head = remaining.front();
    std::vector<int> pool(remaining.begin() + 1, remaining.end());
    int last_size = -1;
    for (auto it = sizes.begin(); it != sizes.end(); ++it) {
        if (*it == last_size) continue;
        last_size = *it;
        std::multiset<int> rest_sizes = sizes;
        rest_sizes.erase(rest_sizes.find(*it));
        for (auto& others : combinations(pool, *it - 1)) {
            std::vector<int> block;
            block.push_back(head);
            block.insert(block.end(), others.begin(), others.end());
            std::vector<int> next_remaining;
            std::set_difference(pool.begin(), pool.end(), others.begin(), others.end(),
                                std::back_inserter(next_remaining));
            current.push_back(std::move(block));
            set_partitions(next_remaining, rest_sizes, current, out);
            current.pop_back();
        }
    }
}

} // namespace

bool validate_U_family(const std::vector<std::vector<int>>& parts, const Partition& lambda,
                       int level) {
    if (level < lambda.spread()) return false;
    if (static_cast<int>(parts.size()) != level) return false;
    const int m = lambda.m();
    const int n = lambda.size();
    std::vector<int> seen(n + 1, 0);
    std::vector<int> cnt(m, 0);
    for (const auto& p : parts) {
        for (int a : p) {
            if (a < 1 || a > n) return false;
            if (seen[a]++) return false;
        }
        cnt[static_cast<int>(p.size()) % m]++;
    }
    for (int a = 1; a <= n; ++a)
        if (!seen[a]) return false;
    std::vector<int> needed;
    try {
        needed = residue_counts(lambda, level);
    } catch (const LevelTooLow&) {
        return false;
    }
    return cnt == needed;
}

std::vector<UFamily> enumerate_U_families(const Partition& lambda, int level) {
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    const int m = lambda.m();
    const int n = lambda.size();
    std::vector<int> needed = residue_counts(lambda, level);

    std::vector<std::vector<int>> size_lists;
    std::vector<int> sizes;
    std::vector<int> have(m, 0);
    size_multisets(level, n, n, sizes, size_lists, needed, have, m);

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);

    std::set<UFamily> result;
    for (const auto& list : size_lists) {
        std::multiset<int> nonzero;
        int empties = 0;
        for (int s : list) {
            if (s == 0) ++empties;
            else nonzero.insert(s);
        }
        std::vector<std::vector<std::vector<int>>> partitions;
        std::vector<std::vector<int>> current;
        set_partitions(all, nonzero, current, partitions);
        for (auto& p : partitions) {
            for (int e = 0; e < empties; ++e) p.emplace_back();
            result.insert(canonical(std::move(p)));
        }
    }
    return std::vector<UFamily>(result.begin(), result.end());
}

BlockProduct build_Q(const UFamily& family, const Partition& lambda, int level) {
    if (!validate_U_family(family.parts, lambda, level))
        throw InvalidFamily("family violates the partitioning condition for " + lambda.str() +
                            " at level " + std::to_string(level));
    BlockProduct q;
    const int m = lambda.m();
    for (const auto& part : family.parts) {
        if (part.empty()) continue; // empty parts contribute the factor 1
        Partition mu = mu_of_part(static_cast<int>(part.size()), m);
        q.factors.push_back(relabel(build_P(mu), part));
    }
    return q;
}

QPoly R_poly(const std::vector<std::vector<int>>& parts) {
    QPoly acc(Rational(1));
    for (const auto& part : parts) {
        std::vector<int> u = part;
        std::sort(u.begin(), u.end());
        for (std::size_t t = 0; t + 1 < u.size(); t += 2) {
            QPoly diff = QPoly::variable(yvar(2, u[t])) - QPoly::variable(yvar(2, u[t + 1]));
            acc = acc * diff;
        }
    }
    return acc;
}

std::vector<QPoly> L_generators(const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("L-space generators are defined for m = 2");
    std::vector<QPoly> gens;
    for (const auto& fam : enumerate_U_families(lambda, level))
        gens.push_back(R_poly(fam.parts));
    return gens;
}

int L_dim(const Partition& lambda, int level) { return rank_of_polys(L_generators(lambda, level)); }

namespace {

long cb_dim_sl2_inner(int a, int b, int level, std::map<std::pair<int, int>, long>& memo) {
    if (b == 0) {
        if (a > level) throw LevelTooLow("dim CB(a,0) needs a <= level");
        return 1;
    }
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long value = 0;
    if (a == b) {
        value = cb_dim_sl2_inner(a, a - 1, level, memo);
    } else if (a - b == level) {
        value = cb_dim_sl2_inner(a - 1, b, level, memo);
    } else {
        value = cb_dim_sl2_inner(a - 1, b, level, memo) +
                cb_dim_sl2_inner(a, b - 1, level, memo);
    }
    memo[key] = value;
    return value;
}

} // namespace

long cb_dim_sl2(const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("the Pascal recursion is the m = 2 case");
    if (level < 1 || level < lambda.spread())
        throw LevelTooLow("level below spread of lambda");
    std::map<std::pair<int, int>, long> memo;
    return cb_dim_sl2_inner(lambda.part(1), lambda.part(2), level, memo);
}

std::vector<Monomial> weight_basis(const Partition& lambda) {
    const int n = lambda.size();
    const int m = lambda.m();
    std::vector<Monomial> basis;
    std::vector<int> remaining = lambda.parts;
    std::vector<int> assign(n + 1, 0);
    // Lexicographic enumeration of superscript assignments a -> j.
    auto rec = [&](auto&& self, int a) -> void {
        if (a > n) {
            Monomial::Factors f;
            for (int t = 1; t <= n; ++t) f.emplace_back(yvar(assign[t], t), 1);
            basis.push_back(Monomial::from_factors(std::move(f)));
            return;
        }
        for (int j = 1; j <= m; ++j) {
            if (remaining[j - 1] == 0) continue;
            remaining[j - 1]--;
            assign[a] = j;
            self(self, a + 1);
            remaining[j - 1]++;
        }
    };
    rec(rec, 1);
    return basis;
}

namespace {

// Stacked constraint matrix of the defining system on the weight basis:
// one column per basis monomial, rows indexed by (operator, image monomial).
std::vector<QRow> cb_constraint_rows(const Partition& lambda, int level, const ZValsQ& z,
                                     const std::vector<Monomial>& basis) {
    const int m = lambda.m();
    const int power = level - lambda.spread() + 1;
    std::map<std::pair<int, Monomial>, int> row_index;
    std::vector<QRow> rows;
    auto scatter = [&](int op, const QPoly& image, int col) {
        for (const auto& [mono, c] : image.terms()) {
            auto key = std::make_pair(op, mono);
            auto it = row_index.find(key);
            if (it == row_index.end()) {
                it = row_index.emplace(key, static_cast<int>(rows.size())).first;
                rows.emplace_back(basis.size(), Rational(0));
            }
            rows[it->second][col] = c;
        }
    };
    for (std::size_t col = 0; col < basis.size(); ++col) {
        QPoly v = QPoly::term(basis[col], Rational(1));
        int op = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                scatter(op++, apply_e(i, j, v), static_cast<int>(col));
        scatter(op, apply_ez_power(1, m, v, z, power), static_cast<int>(col));
    }
    return rows;
}

} // namespace

int cb_dim_generic(const Partition& lambda, int level, const ZValsQ& z) {
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    require_distinct(z);
    auto basis = weight_basis(lambda);
    auto rows = cb_constraint_rows(lambda, level, z, basis);
    return kernel_dimension(rows, static_cast<int>(basis.size()));
}

std::vector<QPoly> cb_space_basis(const Partition& lambda, int level, const ZValsQ& z) {
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    require_distinct(z);
    auto basis = weight_basis(lambda);
    auto rows = cb_constraint_rows(lambda, level, z, basis);
    std::vector<QPoly> out;
    for (const auto& vec : kernel_basis(rows, static_cast<int>(basis.size()))) {
        QPoly p;
        for (std::size_t c = 0; c < basis.size(); ++c) p.add_term(basis[c], vec[c]);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<QPoly> singular_space_basis(const Partition& lambda) {
    const int m = lambda.m();
    auto basis = weight_basis(lambda);
    std::map<std::pair<int, Monomial>, int> row_index;
    std::vector<QRow> rows;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        QPoly v = QPoly::term(basis[col], Rational(1));
        int op = 0;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                QPoly image = apply_e(i, j, v);
                for (const auto& [mono, c] : image.terms()) {
                    auto key = std::make_pair(op, mono);
                    auto it = row_index.find(key);
                    if (it == row_index.end()) {
                        it = row_index.emplace(key, static_cast<int>(rows.size())).first;
                        rows.emplace_back(basis.size(), Rational(0));
                    }
                    rows[it->second][col] = c;
                }
                ++op;
            }
    }
    std::vector<QPoly> out;
    for (const auto& vec : kernel_basis(rows, static_cast<int>(basis.size()))) {
        QPoly p;
        for (std::size_t c = 0; c < basis.size(); ++c) p.add_term(basis[c], vec[c]);
        out.push_back(std::move(p));
    }
    return out;
}

QPoly square_free_drop(const QPoly& p) {
    QPoly out;
    for (const auto& [m, c] : p.terms())
        if (!m.has_square()) out.add_term(m, c);
    return out;
}

QPoly phi_map(const QPoly& g, const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("phi is the m = 2 map");
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    if (level == lambda.spread())
        throw LevelEqualsSpread("phi needs level > spread of lambda");
    return g; // same polynomial, read in one more variable
}

QPoly psi_map(const QPoly& g, const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("psi is the m = 2 map");
    if (lambda.spread() == 0) throw SpreadZero("psi needs spread(lambda) > 0");
    (void)level;
    const int n = lambda.size();
    QPoly factor;
    for (int a = 1; a <= n; ++a) factor += QPoly::variable(yvar(2, a));
    factor -= QPoly::variable(yvar(2, n + 1)).scaled(Rational(lambda.spread()));
    return square_free_drop(g * factor);
}

std::vector<SignWord> enumerate_sign_words(const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("sign words are the m = 2 construction");
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    std::vector<SignWord> out;
    SignWord word;
    auto rec = [&](auto&& self, int plus_left, int minus_left, int height) -> void {
        if (plus_left == 0 && minus_left == 0) {
            out.push_back(word);
            return;
        }
        if (plus_left > 0 && height + 1 <= level) {
            word.push_back('+');
            self(self, plus_left - 1, minus_left, height + 1);
            word.pop_back();
        }
        if (minus_left > 0 && height - 1 >= 0) {
            word.push_back('-');
            self(self, plus_left, minus_left - 1, height - 1);
            word.pop_back();
        }
    };
    rec(rec, lambda.part(1), lambda.part(2), 0);
    return out;
}

std::vector<UFamily> qw_families(const SignWord& word, const Partition& lambda, int level) {
    if (lambda.m() != 2) throw Error("Q_w is the m = 2 construction");
    if (level < lambda.spread()) throw LevelTooLow("level below spread of lambda");
    int plus = 0, minus = 0, height = 0;
    for (char c : word) {
        if (c == '+') ++plus, ++height;
        else if (c == '-') ++minus, --height;
        else throw InvalidWord("sign word may only contain + and -");
        if (height < 0 || height > level) throw InvalidWord("prefix sums must stay in [0, level]");
    }
    if (plus != lambda.part(1) || minus != lambda.part(2))
        throw InvalidWord("sign multiset must match lambda");

    std::set<UFamily> current;
    current.insert(canonical(std::vector<std::vector<int>>(level)));
    int index = 0;
    for (char c : word) {
        ++index;
        const bool want_even = (c == '+');
        std::set<UFamily> next;
        for (const auto& fam : current) {
            for (std::size_t t = 0; t < fam.parts.size(); ++t) {
                const bool even = fam.parts[t].size() % 2 == 0;
                if (even != want_even) continue;
                auto parts = fam.parts;
                parts[t].push_back(index);
                next.insert(canonical(std::move(parts)));
            }
        }
        current = std::move(next);
    }
    return std::vector<UFamily>(current.begin(), current.end());
}

QPoly schur_s(int k, const std::vector<int>& mu) {
    if (k < 1) throw Error("schur_s needs k >= 1");
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw Error("negative partition entry");
        if (i > 0 && mu[i] > mu[i - 1]) throw Error("partition entries must be weakly decreasing");
    }
    const int r = static_cast<int>(mu.size());
    if (r == 0) return QPoly(Rational(1));
    std::vector<int> subs(k);
    std::iota(subs.begin(), subs.end(), 1);
    auto entry = [&](int i, int j) { // 1-based
        int idx = mu[i - 1] + j - i;
        if (idx < 0 || idx > k) return QPoly();
        return elementary_symmetric(subs, idx);
    };
    // Determinant by expansion along the first column (r is small).
    auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> QPoly {
        if (rows.empty()) return QPoly(Rational(1));
        QPoly acc;
        for (std::size_t t = 0; t < rows.size(); ++t) {
            QPoly e = entry(rows[t], cols[0]);
            if (e.is_zero()) continue;
            std::vector<int> sub_rows;
            for (std::size_t u = 0; u < rows.size(); ++u)
                if (u != t) sub_rows.push_back(rows[u]);
            QPoly minor = self(self, sub_rows, std::vector<int>(cols.begin() + 1, cols.end()));
            QPoly piece = e * minor;
            if (t % 2 == 1) piece = -piece;
            acc += piece;
        }
        return acc;
    };
    std::vector<int> rows(r), cols(r);
    std::iota(rows.begin(), rows.end(), 1);
    std::iota(cols.begin(), cols.end(), 1);
    return det(det, rows, cols);
}

std::vector<int> alpha_exponents(const Partition& lambda) {
    if (lambda.m() != 2) throw Error("alpha exponents are the m = 2 vector");
    const int l2 = lambda.part(2);
    const int n = lambda.size();
    std::vector<int> alpha;
    if (l2 == 0) return std::vector<int>(n, 0);
    alpha.push_back(0);
    for (int v = 1; v <= l2 - 1; ++v) {
        alpha.push_back(v);
        alpha.push_back(v);
    }
    for (int t = 0; t < lambda.spread() + 1; ++t) alpha.push_back(l2);
    if (static_cast<int>(alpha.size()) != n) throw Error("alpha length mismatch");
    return alpha;
}

QPoly asymptotic_leading_general(const Partition& lambda) {
    const int m = lambda.m();
    QPoly acc(Rational(1));
    for (int u = 1; u <= m; ++u) {
        int next = (u + 1 <= m) ? lambda.part(u + 1) : 0;
        for (int v = 1; v <= lambda.part(u) - next; ++v) {
            int base = 0;
            for (int k = u + 2; k <= m; ++k) base += lambda.part(k);
            base += (u + 1) * next + (v - 1) * u;
            // det( y^{(i)}_{base+j} )_{i,j = 1..u} by permutation expansion.
            std::vector<int> perm(u);
            std::iota(perm.begin(), perm.end(), 0);
            QPoly det;
            do {
                int inversions = 0;
                for (int x = 0; x < u; ++x)
                    for (int y2 = x + 1; y2 < u; ++y2)
                        if (perm[x] > perm[y2]) ++inversions;
                Monomial::Factors f;
                for (int i = 0; i < u; ++i) f.emplace_back(yvar(i + 1, base + perm[i] + 1), 1);
                det.add_term(Monomial::from_factors(std::move(f)),
                             inversions % 2 == 0 ? Rational(1) : Rational(-1));
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc = acc * det;
        }
    }
    return acc;
}

} // namespace cblock
