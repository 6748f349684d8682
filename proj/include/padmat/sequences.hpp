#pragma once

/**
 * @file sequences.hpp
 * @brief The scalar sequences: Padovan (both conventions, negative indices
 * allowed), Fibonacci and Lucas (recurrence and closed forms), and the
 * bi-periodic generalization P_n whose recurrence coefficient alternates
 * between a (even index) and b (odd index):
 *
 *   P_n = a*P_{n-2} + P_{n-3}  (n even),   P_n = b*P_{n-2} + P_{n-3}  (n odd),
 *   P_0 = 1, P_1 = 0, P_2 = a.
 *
 * The index convention for the plain Padovan numbers matters: the matrix
 * power identity in padovan_matrices.hpp only holds with the (1,1,1) seed,
 * which is why Classic is the default here. The definition never fixes the
 * seed explicitly; the n = 1..5 power identity settles it empirically.
 */

#include "padmat/bipoly.hpp"
#include "padmat/rational.hpp"
#include "padmat/surd.hpp"

#include <stdexcept>
#include <utility>

namespace padmat {

/// Raised when a bi-periodic parameter that must be nonzero is zero.
class ParamZero : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class PadovanConvention {
    Classic,  // p0 = p1 = p2 = 1
    Shifted,  // p0 = 1, p1 = 0, p2 = 1
};

/// p_n = p_{n-2} + p_{n-3}; negative n follows the backward extension
/// p_{n-3} = p_n - p_{n-2} (Classic extends to ..., 0, 0, 1, 0, 1, 1, 1).
inline Integer padovan(long long n, PadovanConvention conv = PadovanConvention::Classic) {
    Integer p0(1), p1(conv == PadovanConvention::Classic ? 1 : 0), p2(1);
    if (n >= 0 && n <= 2) return n == 0 ? p0 : n == 1 ? p1 : p2;
    if (n > 2) {
        // window [p_{k-2}, p_{k-1}, p_k]
        Integer a = std::move(p0), b = std::move(p1), c = std::move(p2);
        for (long long k = 3; k <= n; ++k) {
            Integer next = b + a;  // p_k = p_{k-2} + p_{k-3}
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }
    // window [p_k, p_{k+1}, p_{k+2}] marching down
    Integer a = std::move(p0), b = std::move(p1), c = std::move(p2);
    for (long long k = -1; k >= n; --k) {
        Integer prev = c - a;  // p_k = p_{k+3} - p_{k+1}
        c = std::move(b);
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

inline Integer fibonacci(unsigned long long n) {
    Integer a(0), b(1);
    for (unsigned long long k = 0; k < n; ++k) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

inline Integer lucas(unsigned long long n) {
    Integer a(2), b(1);
    for (unsigned long long k = 0; k < n; ++k) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

namespace detail {
/// A surd that must be a plain integer; anything else is an arithmetic bug.
inline Integer expect_integer(const QuadraticSurd& v, const char* what) {
    if (!v.is_rational()) throw std::logic_error(std::string(what) + ": sqrt(5) component failed to cancel");
    if (denominator(v.rat()) != 1) throw std::logic_error(std::string(what) + ": non-integer result");
    return numerator(v.rat());
}
}  // namespace detail

/// F_n = (alpha^n - beta^n)/(alpha - beta), evaluated exactly in Q(sqrt(5)).
inline Integer binet_fibonacci(unsigned long long n) {
    QuadraticSurd diff = surd_pow(QuadraticSurd::golden(), n) - surd_pow(QuadraticSurd::golden_conj(), n);
    // alpha - beta = sqrt(5): the difference must be a pure sqrt(5) multiple
    // and the quotient is exactly its coefficient
    if (diff.rat() != 0) throw std::logic_error("binet_fibonacci: rational component failed to cancel");
    return detail::expect_integer(QuadraticSurd(diff.coef()), "binet_fibonacci");
}

/// L_n = alpha^n + beta^n, evaluated exactly in Q(sqrt(5)).
inline Integer binet_lucas(unsigned long long n) {
    QuadraticSurd sum = surd_pow(QuadraticSurd::golden(), n) + surd_pow(QuadraticSurd::golden_conj(), n);
    return detail::expect_integer(sum, "binet_lucas");
}

/// The nonzero pair (a, b); construction rejects zeroes.
struct BiPeriodicParams {
    Rational a;
    Rational b;
    BiPeriodicParams(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 || b == 0) throw ParamZero("bi-periodic parameters must be nonzero");
    }
};

inline Rational biperiodic_padovan(unsigned long long n, const BiPeriodicParams& params) {
    Rational p0(1), p1(0), p2(params.a);
    if (n == 0) return p0;
    if (n == 1) return p1;
    if (n == 2) return p2;
    for (unsigned long long k = 3; k <= n; ++k) {
        Rational next = (k % 2 == 0 ? params.a : params.b) * p1 + p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
        p2 = std::move(next);
    }
    return p2;
}

/// Same recurrence run in Z[a,b]; evaluating the result at (a0, b0) must
/// reproduce the numeric value, which the tests exercise.
inline BivariatePoly biperiodic_padovan_symbolic(unsigned long long n) {
    BivariatePoly p0(1), p1(0), p2 = BivariatePoly::sym_a();
    if (n == 0) return p0;
    if (n == 1) return p1;
    if (n == 2) return p2;
    const BivariatePoly a = BivariatePoly::sym_a();
    const BivariatePoly b = BivariatePoly::sym_b();
    for (unsigned long long k = 3; k <= n; ++k) {
        BivariatePoly next = (k % 2 == 0 ? a : b) * p1 + p0;
        p0 = std::move(p1);
        p1 = std::move(p2);
        p2 = std::move(next);
    }
    return p2;
}

}  // namespace padmat
