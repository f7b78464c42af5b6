#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cblock/errors.hpp"
#include "cblock/monomial.hpp"
#include "cblock/rational.hpp"

namespace cblock {

// Sparse multivariate polynomial over an exact coefficient ring C.
// C must provide +, -, *, unary -, ==, construction from Rational, and a
// free ring_is_zero overload. Zero coefficients are never stored, so the
// term map is a canonical form and operator== is structural equality.
template <class C>
class Poly {
public:
    using Terms = std::map<Monomial, C>;

    Poly() = default;
    explicit Poly(C c) { add_term(Monomial(), std::move(c)); }

    static Poly variable(VarKey v, int exp = 1) {
        Poly p;
        p.add_term(Monomial::variable(v, exp), C(Rational(1)));
        return p;
    }

    static Poly term(const Monomial& m, C c) {
        Poly p;
        p.add_term(m, std::move(c));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const Terms& terms() const { return t_; }

    void add_term(const Monomial& m, const C& c) {
        if (ring_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (ring_is_zero(it->second)) t_.erase(it);
        }
    }

    C coefficient(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(Rational(0)) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    Poly operator-() const {
        Poly out;
        for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
        return out;
    }

    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [ma, ca] : t_)
            for (const auto& [mb, cb] : o.t_)
                out.add_term(ma.times(mb), ca * cb);
        return out;
    }

    Poly scaled(const C& c) const {
        Poly out;
        if (ring_is_zero(c)) return out;
        for (const auto& [m, coeff] : t_) out.add_term(m, coeff * c);
        return out;
    }

    bool operator==(const Poly&) const = default;

    // Applies f to every (monomial, coefficient) pair and rebuilds; used for
    // relabelings and transpositions. f returns the new pair.
    template <class F>
    Poly map_terms(F&& f) const {
        Poly out;
        for (const auto& [m, c] : t_) {
            auto [m2, c2] = f(m, c);
            out.add_term(m2, c2);
        }
        return out;
    }

    // Transposes subscripts a <-> b in every y-family and/or in z.
    Poly swap_subscript(int a, int b, bool in_y, bool in_z) const {
        return map_terms([&](const Monomial& m, const C& c) {
            Monomial::Factors f;
            f.reserve(m.factors().size());
            for (auto [var, e] : m.factors()) {
                const bool zv = is_z_var(var);
                if ((zv && in_z) || (!zv && in_y)) {
                    int sub = var_sub(var);
                    if (sub == a) sub = b;
                    else if (sub == b) sub = a;
                    var = zv ? zvar(sub) : yvar(var_sup(var), sub);
                }
                f.emplace_back(var, e);
            }
            return std::make_pair(Monomial::from_factors(std::move(f)), c);
        });
    }

    // Simultaneous renaming of z subscripts (slot -> target). Slots absent
    // from the map are left alone.
    Poly rename_z(const std::map<int, int>& slot_to_target) const {
        return map_terms([&](const Monomial& m, const C& c) {
            Monomial::Factors f;
            f.reserve(m.factors().size());
            for (auto [var, e] : m.factors()) {
                if (is_z_var(var)) {
                    auto it = slot_to_target.find(var_sub(var));
                    if (it != slot_to_target.end()) var = zvar(it->second);
                }
                f.emplace_back(var, e);
            }
            return std::make_pair(Monomial::from_factors(std::move(f)), c);
        });
    }

    // Renaming of y subscripts across all superscript families.
    Poly rename_y_sub(const std::map<int, int>& sub_map) const {
        return map_terms([&](const Monomial& m, const C& c) {
            Monomial::Factors f;
            f.reserve(m.factors().size());
            for (auto [var, e] : m.factors()) {
                if (!is_z_var(var)) {
                    auto it = sub_map.find(var_sub(var));
                    if (it != sub_map.end()) var = yvar(var_sup(var), it->second);
                }
                f.emplace_back(var, e);
            }
            return std::make_pair(Monomial::from_factors(std::move(f)), c);
        });
    }

    Poly derivative(VarKey v) const {
        Poly out;
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v);
            if (e == 0) continue;
            out.add_term(m.without(v, 1), c * C(Rational(e)));
        }
        return out;
    }

    int max_exponent(VarKey v) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.exponent(v));
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }

private:
    Terms t_;
};

using QPoly = Poly<Rational>;

inline QPoly z_linear(int a, int b) {
    QPoly p = QPoly::variable(zvar(a));
    p -= QPoly::variable(zvar(b));
    return p;
}

// Exact division of p by (z_a - z_b). Throws NotDivisible when the remainder
// p(z_a := z_b) is nonzero; the quotient satisfies q * (z_a - z_b) == p.
inline QPoly exact_linear_divide(const QPoly& p, int a, int b) {
    const VarKey va = zvar(a), vb = zvar(b);
    // Split p = sum_k A_k * z_a^k with A_k free of z_a.
    std::map<int, QPoly> layers;
    for (const auto& [m, c] : p.terms()) {
        int k = m.exponent(va);
        layers[k].add_term(m.without(va, k), c);
    }
    QPoly remainder;
    for (const auto& [k, A] : layers)
        remainder += A * QPoly::variable(vb, k);
    if (!remainder.is_zero()) throw NotDivisible("remainder nonzero in linear division");
    // (z_a^k - z_b^k)/(z_a - z_b) = sum_{t<k} z_a^t z_b^{k-1-t}
    QPoly quotient;
    for (const auto& [k, A] : layers) {
        for (int t = 0; t < k; ++t) {
            Monomial m = Monomial::variable(va, t).times(Monomial::variable(vb, k - 1 - t));
            quotient += A * QPoly::term(m, Rational(1));
        }
    }
    return quotient;
}

// Assignment of ring values to z variables, keyed by subscript.
template <class R>
struct ZVals {
    std::map<int, R> v;

    const R& at(int a) const {
        auto it = v.find(a);
        if (it == v.end()) throw Error("z assignment missing index " + std::to_string(a));
        return it->second;
    }
    bool has(int a) const { return v.count(a) != 0; }
};

using ZValsQ = ZVals<Rational>;

template <class R>
ZVals<R> make_zvals(const std::vector<R>& values) {
    ZVals<R> z;
    for (std::size_t i = 0; i < values.size(); ++i) z.v.emplace(static_cast<int>(i + 1), values[i]);
    return z;
}

// Checks pairwise distinctness; evaluation of localization denominators is
// only meaningful on distinct points.
template <class R>
void require_distinct(const ZVals<R>& z) {
    for (auto it = z.v.begin(); it != z.v.end(); ++it) {
        auto jt = it;
        for (++jt; jt != z.v.end(); ++jt) {
            R d = it->second - jt->second;
            if (ring_is_zero(d))
                throw ZeroDenominator("coinciding z values at indices " +
                                      std::to_string(it->first) + "," + std::to_string(jt->first));
        }
    }
}

template <class R>
R ring_pow(const R& base, int exp) {
    R acc{Rational(1)};
    for (int i = 0; i < exp; ++i) acc = acc * base;
    return acc;
}

// Evaluates a pure-z polynomial in the ring R. Throws if a y variable occurs.
template <class R>
R eval_z_only(const QPoly& p, const ZVals<R>& z) {
    R acc{Rational(0)};
    for (const auto& [m, c] : p.terms()) {
        R t{c};
        for (const auto& [var, e] : m.factors()) {
            if (!is_z_var(var)) throw Error("y variable in z-only evaluation");
            t = t * ring_pow(z.at(var_sub(var)), e);
        }
        acc = acc + t;
    }
    return acc;
}

// Substitutes z values into mixed terms, leaving y variables intact and
// converting coefficients into R.
template <class R>
Poly<R> substitute_z(const QPoly& p, const ZVals<R>& z) {
    Poly<R> out;
    for (const auto& [m, c] : p.terms()) {
        R coeff{c};
        Monomial::Factors yf;
        for (const auto& [var, e] : m.factors()) {
            if (is_z_var(var)) coeff = coeff * ring_pow(z.at(var_sub(var)), e);
            else yf.emplace_back(var, e);
        }
        out.add_term(Monomial::from_factors(std::move(yf)), coeff);
    }
    return out;
}

} // namespace cblock
