#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cblock/errors.hpp"
#include "cblock/polynomial.hpp"

namespace cblock {

// Exact rational function in the z variables whose denominator is a multiset
// of linear factors (z_a - z_b), a < b. This class is closed under every
// operation the localization sums require: products, sums, transpositions of
// indices, and multiplication/division by single linear factors.
//
// Canonical form: the numerator polynomial is not divisible by any factor
// still present in the denominator, so equality is structural.
class Lff {
public:
    using Factor = std::pair<int, int>; // (a, b) with a < b, meaning (z_a - z_b)
    using Denominator = std::map<Factor, int>;

    Lff() = default;
    explicit Lff(Rational c) : num_(QPoly(std::move(c))) {}
    explicit Lff(QPoly p) : num_(std::move(p)) {}
    Lff(QPoly num, Denominator den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static Lff z_variable(int a) { return Lff(QPoly::variable(zvar(a))); }

    // 1 / prod over ordered block pairs of (z_a - z_b); the canonical carrier
    // of localization denominators. `pairs` holds ordered (a, b) pairs which
    // may have a > b; the sign is absorbed into the numerator.
    static Lff inverse_of_pairs(const std::vector<Factor>& pairs) {
        Lff out(Rational(1));
        for (auto [a, b] : pairs) out.divide_linear(a, b);
        return out;
    }

    const QPoly& numerator() const { return num_; }
    const Denominator& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    Lff operator-() const {
        Lff out = *this;
        out.num_ = -out.num_;
        return out;
    }

    Lff operator*(const Lff& o) const {
        Lff out;
        out.num_ = num_ * o.num_;
        out.den_ = den_;
        for (const auto& [f, k] : o.den_) out.den_[f] += k;
        out.reduce();
        return out;
    }

    Lff operator+(const Lff& o) const {
        // Common denominator: factor-wise maximum of multiplicities.
        Denominator common = den_;
        for (const auto& [f, k] : o.den_) {
            auto it = common.find(f);
            if (it == common.end()) common.emplace(f, k);
            else it->second = std::max(it->second, k);
        }
        QPoly left = num_ * missing_product(common, den_);
        QPoly right = o.num_ * missing_product(common, o.den_);
        Lff out;
        out.num_ = left + right;
        out.den_ = std::move(common);
        out.reduce();
        return out;
    }

    Lff operator-(const Lff& o) const { return *this + (-o); }

    bool operator==(const Lff& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Multiplies by (z_a - z_b); cancels against the denominator when possible.
    Lff& multiply_linear(int a, int b) {
        if (a == b) throw Error("degenerate linear factor");
        Rational sign(1);
        if (a > b) { std::swap(a, b); sign = -1; }
        num_ = num_.scaled(sign);
        auto it = den_.find({a, b});
        if (it != den_.end()) {
            if (--it->second == 0) den_.erase(it);
        } else {
            num_ = num_ * z_linear(a, b);
        }
        return *this;
    }

    // Divides by (z_a - z_b); divides the numerator exactly when possible,
    // otherwise records the factor in the denominator.
    Lff& divide_linear(int a, int b) {
        if (a == b) throw ZeroDenominator("division by (z_a - z_a)");
        Rational sign(1);
        if (a > b) { std::swap(a, b); sign = -1; }
        num_ = num_.scaled(sign);
        if (num_.is_zero()) return *this;
        try {
            num_ = exact_linear_divide(num_, a, b);
        } catch (const NotDivisible&) {
            den_[{a, b}] += 1;
        }
        return *this;
    }

    // Transposition z_i <-> z_j applied to the whole fraction.
    Lff swapped(int i, int j) const {
        Lff out;
        out.num_ = num_.swap_subscript(i, j, /*in_y=*/false, /*in_z=*/true);
        for (const auto& [f, k] : den_) {
            auto [a, b] = f;
            if (a == i) a = j; else if (a == j) a = i;
            if (b == i) b = j; else if (b == j) b = i;
            if (a > b) {
                std::swap(a, b);
                if (k % 2 != 0) out.num_ = -out.num_;
            }
            out.den_[{a, b}] += k;
        }
        return out;
    }

    // Evaluation in a ring with division (Rational, EpsRat).
    template <class R>
    R eval(const ZVals<R>& z) const {
        R n = eval_z_only<R>(num_, z);
        R d{Rational(1)};
        for (const auto& [f, k] : den_) {
            R diff = z.at(f.first) - z.at(f.second);
            if (ring_is_zero(diff)) throw ZeroDenominator("linear factor vanishes at assignment");
            for (int t = 0; t < k; ++t) d = d * diff;
        }
        return n / d;
    }

private:
    static QPoly missing_product(const Denominator& common, const Denominator& have) {
        QPoly acc(Rational(1));
        for (const auto& [f, k] : common) {
            int need = k;
            auto it = have.find(f);
            if (it != have.end()) need -= it->second;
            for (int t = 0; t < need; ++t) acc = acc * z_linear(f.first, f.second);
        }
        return acc;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = den_.begin(); it != den_.end();) {
                bool divided = false;
                try {
                    QPoly q = exact_linear_divide(num_, it->first.first, it->first.second);
                    num_ = std::move(q);
                    divided = true;
                } catch (const NotDivisible&) {
                }
                if (divided) {
                    changed = true;
                    if (--it->second == 0) it = den_.erase(it);
                } else {
                    ++it;
                }
            }
        }
    }

    QPoly num_;
    Denominator den_;
};

inline bool ring_is_zero(const Lff& f) { return f.is_zero(); }

using LPoly = Poly<Lff>;

} // namespace cblock
