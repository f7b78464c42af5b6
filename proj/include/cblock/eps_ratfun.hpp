#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cblock/errors.hpp"
#include "cblock/rational.hpp"

namespace cblock {

// Sparse univariate polynomial in the limit parameter eps. Exponents may be
// large (nested limit paths use towers of exponents), hence the sparse map.
class EpsPoly {
public:
    using Terms = std::map<long long, Rational>;

    EpsPoly() = default;
    explicit EpsPoly(Rational c) { add(0, std::move(c)); }
    static EpsPoly eps_power(long long e, Rational c = Rational(1)) {
        EpsPoly p;
        p.add(e, std::move(c));
        return p;
    }

    void add(long long exp, const Rational& c) {
        if (ring_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(exp, c);
        if (!fresh) {
            it->second += c;
            if (ring_is_zero(it->second)) t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }

    long long valuation() const {
        if (t_.empty()) throw Error("valuation of zero polynomial");
        return t_.begin()->first;
    }
    const Rational& lowest_coeff() const {
        if (t_.empty()) throw Error("lowest coeff of zero polynomial");
        return t_.begin()->second;
    }

    EpsPoly operator+(const EpsPoly& o) const {
        EpsPoly out = *this;
        for (const auto& [e, c] : o.t_) out.add(e, c);
        return out;
    }
    EpsPoly operator-(const EpsPoly& o) const {
        EpsPoly out = *this;
        for (const auto& [e, c] : o.t_) out.add(e, -c);
        return out;
    }
    EpsPoly operator*(const EpsPoly& o) const {
        EpsPoly out;
        for (const auto& [ea, ca] : t_)
            for (const auto& [eb, cb] : o.t_) out.add(ea + eb, ca * cb);
        return out;
    }
    EpsPoly operator-() const {
        EpsPoly out;
        for (const auto& [e, c] : t_) out.t_.emplace(e, -c);
        return out;
    }
    EpsPoly shifted(long long delta) const {
        EpsPoly out;
        for (const auto& [e, c] : t_) out.t_.emplace(e + delta, c);
        return out;
    }
    EpsPoly scaled(const Rational& q) const {
        EpsPoly out;
        if (ring_is_zero(q)) return out;
        for (const auto& [e, c] : t_) out.t_.emplace(e, c * q);
        return out;
    }

    bool operator==(const EpsPoly&) const = default;

private:
    Terms t_;
};

// Rational function in eps, stored as numerator/denominator without full gcd
// reduction: common eps powers are cancelled and the denominator's lowest
// coefficient is normalized to 1, which is all that exact limits need.
class EpsRat {
public:
    EpsRat() : num_(), den_(Rational(1)) {}
    explicit EpsRat(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    EpsRat(EpsPoly num, EpsPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator("zero denominator in eps rational function");
        normalize();
    }

    static EpsRat eps(long long power = 1, Rational c = Rational(1)) {
        return EpsRat(EpsPoly::eps_power(power, std::move(c)), EpsPoly(Rational(1)));
    }

    const EpsPoly& num() const { return num_; }
    const EpsPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    EpsRat operator+(const EpsRat& o) const {
        return EpsRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    EpsRat operator-(const EpsRat& o) const {
        return EpsRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    EpsRat operator*(const EpsRat& o) const { return EpsRat(num_ * o.num_, den_ * o.den_); }
    EpsRat operator/(const EpsRat& o) const {
        if (o.is_zero()) throw ZeroDenominator("division by zero eps rational function");
        return EpsRat(num_ * o.den_, den_ * o.num_);
    }
    EpsRat operator-() const { return EpsRat(-num_, den_); }

    bool operator==(const EpsRat& o) const {
        return (num_ * o.den_) == (o.num_ * den_);
    }

    // f(0) after cancelling common eps powers; PoleAtZero if the denominator
    // valuation still exceeds the numerator valuation.
    Rational limit_at_zero() const {
        if (num_.is_zero()) return Rational(0);
        long long vn = num_.valuation();
        long long vd = den_.valuation();
        if (vn < vd) throw PoleAtZero("pole at eps = 0");
        if (vn > vd) return Rational(0);
        return num_.lowest_coeff() / den_.lowest_coeff();
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = EpsPoly(Rational(1));
            return;
        }
        long long strip = std::min(num_.valuation(), den_.valuation());
        if (strip != 0) {
            num_ = num_.shifted(-strip);
            den_ = den_.shifted(-strip);
        }
        Rational lead = den_.lowest_coeff();
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    EpsPoly num_;
    EpsPoly den_;
};

inline bool ring_is_zero(const EpsRat& f) { return f.is_zero(); }

inline Rational limit_at_zero(const EpsRat& f) { return f.limit_at_zero(); }

} // namespace cblock
