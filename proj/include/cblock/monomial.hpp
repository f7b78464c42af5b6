#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cblock/errors.hpp"

namespace cblock {

// A variable is either y[j,a] (superscript j >= 1, subscript a >= 1) or z[a].
// Packed into one key so that ascending key order is the canonical variable
// order: y-variables lexicographically by (j, a), then z-variables by a.
using VarKey = std::uint64_t;

constexpr std::uint32_t kZFamily = 0xFFFFFFFFu;

inline VarKey yvar(int sup, int sub) {
    return (static_cast<VarKey>(static_cast<std::uint32_t>(sup)) << 32) |
           static_cast<std::uint32_t>(sub);
}

inline VarKey zvar(int sub) {
    return (static_cast<VarKey>(kZFamily) << 32) | static_cast<std::uint32_t>(sub);
}

inline bool is_z_var(VarKey v) { return (v >> 32) == kZFamily; }
inline int var_sup(VarKey v) { return static_cast<int>(v >> 32); }
inline int var_sub(VarKey v) { return static_cast<int>(v & 0xFFFFFFFFu); }

// Sparse monomial: factors sorted by VarKey, exponents > 0.
class Monomial {
public:
    using Factors = std::vector<std::pair<VarKey, int>>;

    Monomial() = default;

    static Monomial variable(VarKey v, int exp = 1) {
        Monomial m;
        if (exp < 0) throw Error("negative exponent");
        if (exp > 0) m.f_.emplace_back(v, exp);
        return m;
    }

    static Monomial from_factors(Factors f) {
        Monomial m;
        m.f_ = std::move(f);
        m.normalize();
        return m;
    }

    const Factors& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    int exponent(VarKey v) const {
        for (const auto& [var, e] : f_)
            if (var == v) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [var, e] : f_) d += e;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Factors out;
        out.reserve(f_.size() + o.f_.size());
        std::size_t i = 0, j = 0;
        while (i < f_.size() && j < o.f_.size()) {
            if (f_[i].first < o.f_[j].first) out.push_back(f_[i++]);
            else if (o.f_[j].first < f_[i].first) out.push_back(o.f_[j++]);
            else {
                out.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
                ++i, ++j;
            }
        }
        while (i < f_.size()) out.push_back(f_[i++]);
        while (j < o.f_.size()) out.push_back(o.f_[j++]);
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    // Removes exactly `exp` from the exponent of v (which must be present).
    Monomial without(VarKey v, int exp) const {
        Factors out;
        out.reserve(f_.size());
        bool found = false;
        for (const auto& [var, e] : f_) {
            if (var == v) {
                found = true;
                if (e < exp) throw Error("exponent underflow");
                if (e > exp) out.emplace_back(var, e - exp);
            } else {
                out.push_back({var, e});
            }
        }
        if (!found && exp > 0) throw Error("variable not present");
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    bool has_square() const {
        for (const auto& [var, e] : f_)
            if (e >= 2) return true;
        return false;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    void normalize() {
        std::sort(f_.begin(), f_.end());
        Factors out;
        for (const auto& [var, e] : f_) {
            if (e == 0) continue;
            if (e < 0) throw Error("negative exponent");
            if (!out.empty() && out.back().first == var) out.back().second += e;
            else out.emplace_back(var, e);
        }
        f_ = std::move(out);
    }

    Factors f_;
};

} // namespace cblock
