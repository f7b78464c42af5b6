#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cblock/errors.hpp"

namespace cblock {

// The one scalar of the whole library: an arbitrary-precision rational,
// always in lowest terms with positive denominator (gmp keeps it canonical).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool ring_is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "num" or "num/den" in base 10.
inline Rational rat_parse(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) throw ParseError("empty rational literal");
    for (char ch : text) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw ParseError("bad rational literal: " + std::string(text));
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw ParseError("bad rational literal: " + std::string(text));
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_pow(const Rational& base, int exp) {
    Rational acc(1);
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

} // namespace cblock
