#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cblock/polynomial.hpp"
#include "cblock/rational.hpp"

namespace cblock {

// All randomness in the library flows through this seeded generator; the CLI
// surfaces the seed in every report so runs are replayable. mt19937_64 is
// fully specified by the standard, so streams are platform independent.
// (Distributions are hand-rolled for the same reason.)
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next() { return gen_(); }

    // Inclusive bounds; slight modulo bias is irrelevant here.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Integer-valued rational in [-bound, bound].
    Rational rational(long bound = 10000) { return Rational(next_int(-bound, bound)); }

    Rational nonzero_rational(long bound = 10000) {
        while (true) {
            Rational q = rational(bound);
            if (!ring_is_zero(q)) return q;
        }
    }

    // Pairwise distinct random z values: integer rationals, rejection sampled.
    ZValsQ distinct_z(int n, long bound = 10000) {
        std::set<long> used;
        std::vector<Rational> vals;
        while (static_cast<int>(vals.size()) < n) {
            long v = next_int(-bound, bound);
            if (used.insert(v).second) vals.emplace_back(v);
        }
        return make_zvals(vals);
    }

    // Pairwise distinct nonzero values, used for limit-path coefficients.
    std::vector<Rational> distinct_nonzero(int n, long bound = 100) {
        std::set<long> used;
        std::vector<Rational> vals;
        while (static_cast<int>(vals.size()) < n) {
            long v = next_int(-bound, bound);
            if (v == 0) continue;
            if (used.insert(v).second) vals.emplace_back(v);
        }
        return vals;
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
};

} // namespace cblock
