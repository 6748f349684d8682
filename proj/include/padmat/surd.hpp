#pragma once

/**
 * @file surd.hpp
 * @brief Exact arithmetic in the quadratic field Q(sqrt(5)).
 *
 * A QuadraticSurd is rat + coef*sqrt(5) with rational components; that is
 * exactly the field the golden ratio lives in, so the closed forms
 * L_n = alpha^n + beta^n and F_n = (alpha^n - beta^n)/(alpha - beta)
 * evaluate with no rounding at all. The representation is unique: two
 * surds are equal iff both components are.
 */

#include "padmat/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace padmat {

class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(int v) : rat_(v) {}
    QuadraticSurd(Integer v) : rat_(std::move(v)) {}
    QuadraticSurd(Rational rat) : rat_(std::move(rat)) {}
    QuadraticSurd(Rational rat, Rational coef) : rat_(std::move(rat)), coef_(std::move(coef)) {}

    static QuadraticSurd sqrt5() { return {Rational(0), Rational(1)}; }
    /// alpha = (1 + sqrt(5))/2, the larger root of t^2 - t - 1.
    static QuadraticSurd golden() { return {Rational(1, 2), Rational(1, 2)}; }
    /// beta = (1 - sqrt(5))/2, the conjugate root.
    static QuadraticSurd golden_conj() { return {Rational(1, 2), Rational(-1, 2)}; }

    const Rational& rat() const { return rat_; }
    const Rational& coef() const { return coef_; }
    bool is_zero() const { return rat_ == 0 && coef_ == 0; }
    bool is_rational() const { return coef_ == 0; }

    /// Galois conjugate: sqrt(5) -> -sqrt(5).
    QuadraticSurd conj() const { return {rat_, -coef_}; }

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

    QuadraticSurd operator-() const { return {-rat_, -coef_}; }
    QuadraticSurd& operator+=(const QuadraticSurd& o) {
        rat_ += o.rat_;
        coef_ += o.coef_;
        return *this;
    }
    QuadraticSurd& operator-=(const QuadraticSurd& o) {
        rat_ -= o.rat_;
        coef_ -= o.coef_;
        return *this;
    }
    QuadraticSurd& operator*=(const QuadraticSurd& o) {
        // (x + y s)(u + v s) = xu + 5yv + (xv + yu) s,  s = sqrt(5)
        Rational r = rat_ * o.rat_ + 5 * coef_ * o.coef_;
        Rational c = rat_ * o.coef_ + coef_ * o.rat_;
        rat_ = std::move(r);
        coef_ = std::move(c);
        return *this;
    }
    friend QuadraticSurd operator+(QuadraticSurd l, const QuadraticSurd& r) { return l += r; }
    friend QuadraticSurd operator-(QuadraticSurd l, const QuadraticSurd& r) { return l -= r; }
    friend QuadraticSurd operator*(QuadraticSurd l, const QuadraticSurd& r) { return l *= r; }

    /// Field inverse (x - y s)/(x^2 - 5 y^2); the norm is nonzero for any
    /// nonzero surd because sqrt(5) is irrational.
    QuadraticSurd inverse() const {
        if (is_zero()) throw std::domain_error("QuadraticSurd: inverse of zero");
        Rational norm = rat_ * rat_ - 5 * coef_ * coef_;
        return {rat_ / norm, -coef_ / norm};
    }
    friend QuadraticSurd operator/(const QuadraticSurd& l, const QuadraticSurd& r) {
        return l * r.inverse();
    }

    /// Exact sign of the real value: -1, 0 or +1.
    int sign() const {
        int sr = rat_.sign();
        int sc = coef_.sign();
        if (sc == 0) return sr;
        if (sr == 0) return sc;
        if (sr == sc) return sr;
        // components fight: compare |rat| with sqrt(5)|coef| via squares
        Rational d = rat_ * rat_ - 5 * coef_ * coef_;
        return sr > 0 ? d.sign() : -d.sign();
    }

    friend bool operator<(const QuadraticSurd& l, const QuadraticSurd& r) {
        return (l - r).sign() < 0;
    }

    double to_double() const { return padmat::to_double(rat_) + padmat::to_double(coef_) * 2.2360679774997896964091736687747; }

private:
    Rational rat_{0};
    Rational coef_{0};
};

/// Exact n-th power by binary exponentiation.
inline QuadraticSurd surd_pow(QuadraticSurd base, unsigned long long e) {
    QuadraticSurd acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

/// Canonical rendering, e.g. "-1", "1/2 + 1/2*sqrt(5)", "3/2 - 1/2*sqrt(5)".
inline std::string to_string(const QuadraticSurd& v) {
    if (v.is_rational()) return to_string(v.rat());
    const Rational& c = v.coef();
    std::string surd_part;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (mag == 1)
        surd_part = "sqrt(5)";
    else
        surd_part = to_string(mag) + "*sqrt(5)";
    if (v.rat() == 0) return (c < 0 ? "-" : "") + surd_part;
    return to_string(v.rat()) + (c < 0 ? " - " : " + ") + surd_part;
}

}  // namespace padmat
