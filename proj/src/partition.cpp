#include "cblock/partition.hpp"

#include <algorithm>
#include <numeric>

namespace cblock {

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> c(k);
        for (int t = 0; t < k; ++t) c[t] = pool[idx[t]];
        out.push_back(std::move(c));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

namespace {

void fill_blocks(const Partition& lambda, int j, std::vector<int> remaining,
                 IndexedPartitioning& current, std::vector<IndexedPartitioning>& out) {
    if (j == lambda.m()) {
        out.push_back(current);
        return;
    }
    for (auto& block : combinations(remaining, lambda.part(j + 1))) {
        std::vector<int> rest;
        rest.reserve(remaining.size() - block.size());
        std::set_difference(remaining.begin(), remaining.end(), block.begin(), block.end(),
                            std::back_inserter(rest));
        current.blocks.push_back(std::move(block));
        fill_blocks(lambda, j + 1, rest, current, out);
        current.blocks.pop_back();
    }
}

} // namespace

std::vector<IndexedPartitioning> enumerate_partitionings(const Partition& lambda) {
    std::vector<int> all(lambda.size());
    std::iota(all.begin(), all.end(), 1);
    std::vector<IndexedPartitioning> out;
    IndexedPartitioning current;
    fill_blocks(lambda, 0, all, current, out);
    return out;
}

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > static_cast<int>(img.size()) || seen[v - 1])
            throw Error("not a bijection");
        seen[v - 1] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img[i] != i + 1) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img.size());
    for (int i = 0; i < n(); ++i) inv[img[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation omega_lambda(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<int> img(n);
    int offset = 0;
    for (int u = 1; u <= lambda.m(); ++u) {
        int before = 0, after = 0;
        for (int j = 1; j < u; ++j) before += lambda.part(j);
        for (int j = u + 1; j <= lambda.m(); ++j) after += lambda.part(j);
        for (int i = offset + 1; i <= offset + lambda.part(u); ++i)
            img[i - 1] = i + after - before;
        offset += lambda.part(u);
    }
    return Permutation(std::move(img));
}

std::vector<int> lex_min_reduced_word(Permutation w) {
    std::vector<int> word;
    while (!w.is_identity()) {
        Permutation winv = w.inverse();
        int chosen = -1;
        for (int i = 1; i < w.n(); ++i) {
            if (winv(i) > winv(i + 1)) { // left descent: s_i shortens w
                chosen = i;
                break;
            }
        }
        if (chosen < 0) throw Error("no descent in non-identity permutation");
        // w <- s_chosen * w: swap the values chosen, chosen+1.
        for (auto& v : w.img) {
            if (v == chosen) v = chosen + 1;
            else if (v == chosen + 1) v = chosen;
        }
        word.push_back(chosen);
    }
    return word;
}

} // namespace cblock
