#pragma once

/**
 * @file mat3.hpp
 * @brief 3x3 matrices over any commutative-ring scalar.
 *
 * The same template carries integer, rational, Q(sqrt(5)), Z[a,b] and
 * double entries. Everything is a plain ring computation: products, powers
 * by repeated squaring, traces, determinants and the characteristic
 * polynomial by direct cofactor expansion (fixed size 3, no pivoting).
 */

#include "padmat/rational.hpp"

#include <array>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace padmat {

template <typename R>
concept RingScalar = requires(R x, R y) {
    { x + y } -> std::convertible_to<R>;
    { x - y } -> std::convertible_to<R>;
    { x * y } -> std::convertible_to<R>;
    { -x } -> std::convertible_to<R>;
    { x == y } -> std::convertible_to<bool>;
    R(0);
    R(1);
};

template <RingScalar R>
class Mat3 {
public:
    Mat3() { e_.fill(R(0)); }
    explicit Mat3(std::array<R, 9> entries) : e_(std::move(entries)) {}

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = R(1);
        return m;
    }

    R& operator()(std::size_t i, std::size_t j) { return e_[3 * i + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return e_[3 * i + j]; }

    friend bool operator==(const Mat3&, const Mat3&) = default;

    friend Mat3 operator+(const Mat3& l, const Mat3& r) {
        Mat3 m;
        for (std::size_t k = 0; k < 9; ++k) m.e_[k] = l.e_[k] + r.e_[k];
        return m;
    }
    friend Mat3 operator-(const Mat3& l, const Mat3& r) {
        Mat3 m;
        for (std::size_t k = 0; k < 9; ++k) m.e_[k] = l.e_[k] - r.e_[k];
        return m;
    }
    friend Mat3 operator*(const Mat3& l, const Mat3& r) {
        Mat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                R acc = l(i, 0) * r(0, j);
                acc = acc + l(i, 1) * r(1, j);
                acc = acc + l(i, 2) * r(2, j);
                m(i, j) = std::move(acc);
            }
        return m;
    }
    friend Mat3 operator*(const R& s, const Mat3& a) {
        Mat3 m;
        for (std::size_t k = 0; k < 9; ++k) m.e_[k] = s * a.e_[k];
        return m;
    }

    R trace() const { return e_[0] + e_[4] + e_[8]; }

    R det() const {
        const Mat3& a = *this;
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }

private:
    std::array<R, 9> e_;
};

/// A^n by square-and-multiply; A^0 = I. `mults` counts ring-level matrix
/// products actually performed (the benchmark asserts the O(log n) bound).
template <RingScalar R>
Mat3<R> mat_pow_counted(const Mat3<R>& base_in, unsigned long long n, std::size_t& mults) {
    mults = 0;
    if (n == 0) return Mat3<R>::identity();
    Mat3<R> base = base_in;
    Mat3<R> result;
    bool have_result = false;
    while (n > 0) {
        if (n & 1) {
            if (have_result) {
                result = result * base;
                ++mults;
            } else {
                result = base;
                have_result = true;
            }
        }
        n >>= 1;
        if (n) {
            base = base * base;
            ++mults;
        }
    }
    return result;
}

template <RingScalar R>
Mat3<R> mat_pow(const Mat3<R>& base, unsigned long long n) {
    std::size_t mults = 0;
    return mat_pow_counted(base, n, mults);
}

/// Whether A.B - B.A is the zero matrix, exactly.
template <RingScalar R>
bool commutes(const Mat3<R>& a, const Mat3<R>& b) {
    return a * b == b * a;
}

/// c3 x^3 + c2 x^2 + c1 x + c0.
template <RingScalar R>
struct CubicPoly {
    R c3, c2, c1, c0;
    R eval(const R& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
    friend bool operator==(const CubicPoly&, const CubicPoly&) = default;
};

/// det(xI - A), monic, so the roots are the eigenvalues with no sign flip.
template <RingScalar R>
CubicPoly<R> char_poly(const Mat3<R>& a) {
    // sum of principal 2x2 minors
    R minors = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) +
               (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
               (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    return {R(1), -a.trace(), std::move(minors), -a.det()};
}

/// Inverse over a field-like scalar (adjugate over determinant).
template <RingScalar R>
    requires requires(R x, R y) { x / y; }
Mat3<R> inverse(const Mat3<R>& a) {
    R d = a.det();
    if (d == R(0)) throw std::domain_error("Mat3: inverse of a singular matrix");
    Mat3<R> inv;
    inv(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
    inv(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
    inv(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
    inv(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
    inv(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
    inv(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
    inv(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
    inv(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
    inv(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
    return inv;
}

/// Canonical row-major rendering: "[[0, 1, 1], [1, 0, 0], [0, 1, 0]]".
/// Entry rendering comes from the scalar type's to_string via ADL.
template <RingScalar R>
std::string to_string(const Mat3<R>& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < 3; ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < 3; ++j) {
            if (j) out += ", ";
            out += to_string(a(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace padmat
