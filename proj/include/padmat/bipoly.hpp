#pragma once

/**
 * @file bipoly.hpp
 * @brief Sparse bivariate polynomials over Z, in the two symbols a and b.
 *
 * These are the entries of the symbolic matrix sequence: the parity
 * recurrence only ever adds and multiplies by a or b, so Z[a,b] is closed
 * under everything we do. Terms live in a map ordered graded-lex (total
 * degree first, then a before b), which makes rendering and serialization
 * deterministic. No zero coefficient is ever stored.
 */

#include "padmat/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace padmat {

struct Monomial {
    unsigned deg_a = 0;
    unsigned deg_b = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// true when l renders before r: higher total degree first, then lex with a > b.
struct MonomialBefore {
    bool operator()(const Monomial& l, const Monomial& r) const noexcept {
        unsigned lt = l.deg_a + l.deg_b;
        unsigned rt = r.deg_a + r.deg_b;
        if (lt != rt) return lt > rt;
        return l.deg_a > r.deg_a;
    }
};

class BivariatePoly {
public:
    using TermMap = std::map<Monomial, Integer, MonomialBefore>;

    BivariatePoly() = default;
    BivariatePoly(int c) : BivariatePoly(Integer(c)) {}
    BivariatePoly(long long c) : BivariatePoly(Integer(c)) {}
    BivariatePoly(Integer c) {
        if (c != 0) terms_.emplace(Monomial{0, 0}, std::move(c));
    }

    static BivariatePoly sym_a() { return term(1, 0, 1); }
    static BivariatePoly sym_b() { return term(0, 1, 1); }
    static BivariatePoly term(unsigned deg_a, unsigned deg_b, Integer coef) {
        BivariatePoly p;
        if (coef != 0) p.terms_.emplace(Monomial{deg_a, deg_b}, std::move(coef));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    unsigned total_degree() const {
        // graded order: the first term has maximal total degree
        return terms_.empty() ? 0 : terms_.begin()->first.deg_a + terms_.begin()->first.deg_b;
    }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

    BivariatePoly operator-() const {
        BivariatePoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BivariatePoly operator+(BivariatePoly l, const BivariatePoly& r) { return l += r; }
    friend BivariatePoly operator-(BivariatePoly l, const BivariatePoly& r) { return l -= r; }
    friend BivariatePoly operator*(const BivariatePoly& l, const BivariatePoly& r) {
        BivariatePoly p;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_)
                p.add_term(Monomial{ml.deg_a + mr.deg_a, ml.deg_b + mr.deg_b}, cl * cr);
        return p;
    }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

    /// Substitutes a := a0, b := b0; the evaluation is a ring homomorphism.
    Rational eval(const Rational& a0, const Rational& b0) const {
        Rational acc(0);
        for (const auto& [m, c] : terms_)
            acc += Rational(c) * rat_pow(a0, m.deg_a) * rat_pow(b0, m.deg_b);
        return acc;
    }

    /// Canonical graded-lex rendering: "a^3 + 1", "a*b + a", "-a^2 + 2*b", "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string vars;
            if (m.deg_a > 0) vars += m.deg_a == 1 ? "a" : "a^" + std::to_string(m.deg_a);
            if (m.deg_b > 0) {
                if (!vars.empty()) vars += "*";
                vars += m.deg_b == 1 ? "b" : "b^" + std::to_string(m.deg_b);
            }
            if (vars.empty())
                out += padmat::to_string(mag);
            else if (mag == 1)
                out += vars;
            else
                out += padmat::to_string(mag) + "*" + vars;
        }
        return out;
    }

private:
    void add_term(const Monomial& m, Integer c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline std::string to_string(const BivariatePoly& p) { return p.to_string(); }

}  // namespace padmat
