#pragma once

#include <string>
#include <vector>

#include "cblock/errors.hpp"

namespace cblock {

// Weakly decreasing tuple of non-negative integers. Trailing zero parts are
// meaningful: they fix the number m of tensor factors' superscripts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }
    Partition(std::initializer_list<int> p) : parts(p) { validate(); }

    int m() const { return static_cast<int>(parts.size()); }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int spread() const { return parts.empty() ? 0 : parts.front() - parts.back(); }
    int part(int j) const { return parts.at(static_cast<std::size_t>(j) - 1); } // 1-based

    void validate() const {
        if (parts.empty()) throw Error("partition needs at least one part");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0) throw Error("negative partition part");
            if (i > 0 && parts[i] > parts[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    bool operator==(const Partition&) const = default;
};

// Ordered tuple (I_1, ..., I_m) of disjoint sorted index sets covering
// {1, ..., n} with |I_j| = lambda_j.
struct IndexedPartitioning {
    std::vector<std::vector<int>> blocks;

    bool operator==(const IndexedPartitioning&) const = default;
    auto operator<=>(const IndexedPartitioning&) const = default;
};

// All partitionings for lambda, in deterministic order (blocks filled left to
// right, each block a lexicographic combination of the remaining indices).
std::vector<IndexedPartitioning> enumerate_partitionings(const Partition& lambda);

// All k-element subsets of `pool` (sorted), lexicographic.
std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k);

// Bijection of {1, ..., n}, one-line notation.
struct Permutation {
    std::vector<int> img; // img[i-1] = w(i)

    explicit Permutation(int n) : img(n) {
        for (int i = 0; i < n; ++i) img[i] = i + 1;
    }
    explicit Permutation(std::vector<int> images);

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img.at(static_cast<std::size_t>(i) - 1); }
    bool is_identity() const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
};

// The block-reversing permutation of the divided-difference construction:
// within the u-th block of lambda, i maps to i + sum_{j>u} lambda_j -
// sum_{j<u} lambda_j.
Permutation omega_lambda(const Partition& lambda);

// Lexicographically smallest reduced word (i_1, ..., i_r) with
// w = s_{i_1} ... s_{i_r} as composition of adjacent transpositions.
std::vector<int> lex_min_reduced_word(Permutation w);

} // namespace cblock
