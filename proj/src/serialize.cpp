#include "cblock/serialize.hpp"

#include <cctype>
#include <sstream>

#include "cblock/errors.hpp"

namespace cblock {

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [var, e] : m.factors()) {
        if (!first) os << " * ";
        first = false;
        if (is_z_var(var)) os << "z[" << var_sub(var) << "]";
        else os << "y[" << var_sup(var) << "," << var_sub(var) << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string poly_str(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            if (sgn(a) < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        first = false;
        if (m.is_one()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << monomial_str(m);
        } else {
            os << rat_str(a) << " * " << monomial_str(m);
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in polynomial text");
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in polynomial text");
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return rat_parse(s.substr(start, pos - start));
    }
};

} // namespace

QPoly poly_parse(std::string_view text) {
    Cursor cur{text};
    QPoly out;
    if (cur.done()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!cur.done()) {
        Rational sign(1);
        char c = cur.peek();
        if (c == '+' || c == '-') {
            cur.eat(c);
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;
        Rational coeff = sign;
        Monomial::Factors factors;
        bool any_factor = false;
        while (true) {
            char p = cur.peek();
            if (p == 'y' || p == 'z') {
                cur.eat(p);
                cur.expect('[');
                int sup = 0, sub = 0;
                if (p == 'y') {
                    sup = static_cast<int>(cur.integer());
                    cur.expect(',');
                    sub = static_cast<int>(cur.integer());
                } else {
                    sub = static_cast<int>(cur.integer());
                }
                cur.expect(']');
                int exp = 1;
                if (cur.eat('^')) exp = static_cast<int>(cur.integer());
                factors.emplace_back(p == 'y' ? yvar(sup, sub) : zvar(sub), exp);
                any_factor = true;
            } else if (p == '-' || p == '+' || std::isdigit(static_cast<unsigned char>(p))) {
                coeff *= cur.rational();
                any_factor = true;
            } else {
                throw ParseError("unexpected character in polynomial text");
            }
            if (!cur.eat('*')) break;
        }
        if (!any_factor) throw ParseError("empty term in polynomial text");
        out.add_term(Monomial::from_factors(std::move(factors)), coeff);
        char nxt = cur.peek();
        if (nxt != '+' && nxt != '-' && nxt != '\0')
            throw ParseError("trailing characters in polynomial text");
    }
    return out;
}

std::string lff_str(const Lff& f) {
    std::ostringstream os;
    os << "(" << poly_str(f.numerator()) << ")";
    if (!f.denominator().empty()) {
        os << "/(";
        bool first = true;
        for (const auto& [factor, k] : f.denominator()) {
            if (!first) os << "*";
            first = false;
            os << "(z[" << factor.first << "]-z[" << factor.second << "])";
            if (k != 1) os << "^" << k;
        }
        os << ")";
    }
    return os.str();
}

std::string lpoly_str(const LPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << lff_str(c);
        if (!m.is_one()) os << " * " << monomial_str(m);
    }
    return os.str();
}

} // namespace cblock
