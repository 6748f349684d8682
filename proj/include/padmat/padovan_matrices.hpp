#pragma once

/**
 * @file padovan_matrices.hpp
 * @brief The concrete matrix objects and their identities.
 *
 * Q is the Padovan generating matrix: its n-th power carries plain Padovan
 * numbers in every entry. M_{p_n} is the bi-periodic matrix sequence seeded
 * by I, M_{p_1}, M_{p_2} and driven by the same parity recurrence as P_n.
 * B = Q*M_{p_1} is unipotent; its integer powers form an abelian group with
 * the closed form B^n = [[1, n*a, n], [0,1,0], [0,0,1]].
 *
 * Verification entry points return Reports rather than asserting: the CLI
 * and the acceptance suite decide what a failure means.
 */

#include "padmat/bipoly.hpp"
#include "padmat/mat3.hpp"
#include "padmat/rational.hpp"
#include "padmat/report.hpp"
#include "padmat/sequences.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace padmat {

/// Q = [[0,1,1],[1,0,0],[0,1,0]].
inline Mat3<Integer> q_matrix() {
    return Mat3<Integer>({Integer(0), Integer(1), Integer(1),
                          Integer(1), Integer(0), Integer(0),
                          Integer(0), Integer(1), Integer(0)});
}

/// Q^n assembled entrywise from Padovan numbers (Classic seed, backward
/// extension for the small indices), with no matrix multiplication:
///
///   Q^n = [[p_{n-2}, p_{n-1}, p_{n-3}],
///          [p_{n-3}, p_{n-2}, p_{n-4}],
///          [p_{n-4}, p_{n-3}, p_{n-5}]]
///
/// Only n >= 1 is accepted; n = 0 would reach below the values the
/// identity is anchored on, so it is rejected rather than extrapolated.
inline Mat3<Integer> q_power_formula(long long n) {
    if (n < 1) throw std::invalid_argument("q_power_formula: n must be >= 1");
    auto p = [&](long long k) { return padovan(k, PadovanConvention::Classic); };
    return Mat3<Integer>({p(n - 2), p(n - 1), p(n - 3),
                          p(n - 3), p(n - 2), p(n - 4),
                          p(n - 4), p(n - 3), p(n - 5)});
}

/// M_{p_1} = [[0,1,0],[0,0,1],[1,a,0]] over any scalar ring.
template <RingScalar R>
Mat3<R> mp1_matrix(const R& a) {
    return Mat3<R>({R(0), R(1), R(0),
                    R(0), R(0), R(1),
                    R(1), a, R(0)});
}

/// M_{p_2} = [[0,0,1],[1,a,0],[0,1,a]]; equals M_{p_1}^2 for every a.
template <RingScalar R>
Mat3<R> mp2_matrix(const R& a) {
    return Mat3<R>({R(0), R(0), R(1),
                    R(1), a, R(0),
                    R(0), R(1), a});
}

/// The cached sequence M_{p_0..n} for one (a, b) pair. Growth is
/// append-only; readers of already-built entries are safe, growth itself
/// must stay confined to one task.
template <RingScalar R>
class MpSequence {
public:
    MpSequence(R a, R b) : a_(std::move(a)), b_(std::move(b)) {
        cache_.push_back(Mat3<R>::identity());
        cache_.push_back(mp1_matrix(a_));
        cache_.push_back(mp2_matrix(a_));
    }

    const R& a() const { return a_; }
    const R& b() const { return b_; }

    /// M_{p_n}, building through the parity recurrence as needed:
    /// M_{p_n} = a*M_{p_{n-2}} + M_{p_{n-3}} (n even), b*... (n odd).
    const Mat3<R>& at(std::size_t n) {
        while (cache_.size() <= n) {
            std::size_t k = cache_.size();
            const R& coef = (k % 2 == 0) ? a_ : b_;
            cache_.push_back(coef * cache_[k - 2] + cache_[k - 3]);
        }
        return cache_[n];
    }

private:
    R a_, b_;
    std::vector<Mat3<R>> cache_;
};

inline MpSequence<Rational> mp_sequence(const BiPeriodicParams& params) {
    return MpSequence<Rational>(params.a, params.b);
}
inline MpSequence<BivariatePoly> mp_sequence_symbolic() {
    return MpSequence<BivariatePoly>(BivariatePoly::sym_a(), BivariatePoly::sym_b());
}

inline Mat3<Rational> mp(std::size_t n, const BiPeriodicParams& params) {
    return mp_sequence(params).at(n);
}
inline Mat3<BivariatePoly> mp_symbolic(std::size_t n) {
    return mp_sequence_symbolic().at(n);
}

/// B = Q*M_{p_1} = [[1,a,1],[0,1,0],[0,0,1]].
template <RingScalar R>
Mat3<R> b_matrix(const R& a) {
    return Mat3<R>({R(1), a, R(1),
                    R(0), R(1), R(0),
                    R(0), R(0), R(1)});
}

/// Closed form B^n = [[1, n*a, n],[0,1,0],[0,0,1]], valid for any integer n
/// (n = -1 gives the inverse [[1,-a,-1],[0,1,0],[0,0,1]]).
template <RingScalar R>
Mat3<R> b_power_closed(long long n, const R& a) {
    return Mat3<R>({R(1), R(n) * a, R(n),
                    R(0), R(1), R(0),
                    R(0), R(0), R(1)});
}

// --- verification entry points ----------------------------------------

/// Adjacent commutation M_{p_n} M_{p_{n+1}} = M_{p_{n+1}} M_{p_n} for all
/// n <= N, checked exactly over the given scalar ring.
template <RingScalar R>
Report verify_adjacent_commutation_over(long long N, MpSequence<R> seq, const std::string& tag) {
    Report report;
    report.proposition = "2.1";
    report.max_n = N;
    for (long long n = 0; n <= N; ++n) {
        const Mat3<R> lhs = seq.at(n) * seq.at(n + 1);
        const Mat3<R> rhs = seq.at(n + 1) * seq.at(n);
        if (!(lhs == rhs))
            report.fail(n, to_string(rhs), to_string(lhs),
                        tag + ": M_n*M_{n+1} != M_{n+1}*M_n");
    }
    return report;
}

inline Report verify_adjacent_commutation(long long N) {
    return verify_adjacent_commutation_over(N, mp_sequence_symbolic(), "symbolic");
}
inline Report verify_adjacent_commutation(long long N, const BiPeriodicParams& params) {
    Report r = verify_adjacent_commutation_over(N, mp_sequence(params), "numeric");
    r.param_a = to_string(params.a);
    r.param_b = to_string(params.b);
    return r;
}

/// All-pairs commutation for n, m <= N. The symbolic run is strictly
/// stronger than the a = 2 statement: every M_{p_n} is a polynomial in
/// M_{p_1} over Z[a,b], so the check closes the general case too.
template <RingScalar R>
Report verify_all_pairs_commutation_over(long long N, MpSequence<R> seq, const std::string& tag) {
    Report report;
    report.proposition = "2.3";
    report.max_n = N;
    for (long long n = 0; n <= N; ++n)
        for (long long m = n + 1; m <= N; ++m) {
            const Mat3<R> lhs = seq.at(n) * seq.at(m);
            const Mat3<R> rhs = seq.at(m) * seq.at(n);
            if (!(lhs == rhs))
                report.fail_pair(n, m, to_string(rhs), to_string(lhs),
                                 tag + ": M_n*M_m != M_m*M_n");
        }
    return report;
}

inline Report verify_all_pairs_commutation(long long N) {
    return verify_all_pairs_commutation_over(N, mp_sequence_symbolic(), "symbolic");
}
inline Report verify_all_pairs_commutation(long long N, const BiPeriodicParams& params) {
    Report r = verify_all_pairs_commutation_over(N, mp_sequence(params), "numeric");
    r.param_a = to_string(params.a);
    r.param_b = to_string(params.b);
    return r;
}

/// Power identities of M_{p_1} over Z[a,b]: the square is M_{p_2}, the
/// fourth power is M_{p_4}, and the cube collapses to a*M_{p_1} + I (the
/// matrix satisfies its own characteristic polynomial x^3 - a*x - 1).
inline Report verify_mp1_power_identities() {
    Report report;
    report.proposition = "2.6";
    report.max_n = 4;
    auto seq = mp_sequence_symbolic();
    const Mat3<BivariatePoly>& m1 = seq.at(1);
    const Mat3<BivariatePoly> m1_sq = m1 * m1;
    if (!(m1_sq == seq.at(2)))
        report.fail(2, to_string(seq.at(2)), to_string(m1_sq), "M_1^2 != M_2");
    const Mat3<BivariatePoly> m1_4 = m1_sq * m1_sq;
    if (!(m1_4 == seq.at(4)))
        report.fail(4, to_string(seq.at(4)), to_string(m1_4), "M_1^4 != M_4");
    const Mat3<BivariatePoly> cayley = BivariatePoly::sym_a() * m1 + Mat3<BivariatePoly>::identity();
    const Mat3<BivariatePoly> m1_cube = m1_sq * m1;
    if (!(m1_cube == cayley))
        report.fail(3, to_string(cayley), to_string(m1_cube), "M_1^3 != a*M_1 + I");
    return report;
}

/// mat_pow(Q, n) == q_power_formula(n) for 1 <= n <= N, exactly.
inline Report verify_q_power(long long N) {
    Report report;
    report.proposition = "qn";
    report.max_n = N;
    report.param_a = "-";
    report.param_b = "-";
    const Mat3<Integer> q = q_matrix();
    Mat3<Integer> power = q;
    for (long long n = 1; n <= N; ++n) {
        if (n > 1) power = power * q;
        const Mat3<Integer> direct = mat_pow(q, static_cast<unsigned long long>(n));
        const Mat3<Integer> formula = q_power_formula(n);
        if (!(formula == direct) || !(formula == power))
            report.fail(n, to_string(power), to_string(formula), "q_power_formula != Q^n");
    }
    return report;
}

/// Group laws for G = {B^n : n in Z}, symbolically in a: closure with index
/// addition, identity, inverses and commutativity for |n|, |m| <= N.
inline Report group_check(long long N) {
    Report report;
    report.proposition = "2.9";
    report.max_n = N;
    const BivariatePoly a = BivariatePoly::sym_a();
    auto power = [&](long long k) { return b_power_closed(k, a); };
    if (!(power(0) == Mat3<BivariatePoly>::identity()))
        report.fail(0, to_string(Mat3<BivariatePoly>::identity()), to_string(power(0)), "B^0 != I");
    for (long long n = -N; n <= N; ++n) {
        const Mat3<BivariatePoly> bn = power(n);
        const Mat3<BivariatePoly> bneg = power(-n);
        if (!(bn * bneg == Mat3<BivariatePoly>::identity()))
            report.fail(n, "I", to_string(bn * bneg), "B^n * B^{-n} != I");
        for (long long m = -N; m <= N; ++m) {
            const Mat3<BivariatePoly> bm = power(m);
            const Mat3<BivariatePoly> product = bn * bm;
            if (!(product == power(n + m)))
                report.fail_pair(n, m, to_string(power(n + m)), to_string(product), "B^n * B^m != B^{n+m}");
            if (!(product == bm * bn))
                report.fail_pair(n, m, to_string(bm * bn), to_string(product), "B^n * B^m != B^m * B^n");
        }
    }
    return report;
}

/// Closed form against repeated multiplication: B^n for |n| <= N,
/// symbolically in a (negative powers multiply out B^{-1}).
inline Report verify_b_power_closed(long long N) {
    Report report;
    report.proposition = "2.9";
    report.max_n = N;
    const BivariatePoly a = BivariatePoly::sym_a();
    const Mat3<BivariatePoly> b = b_matrix(a);
    const Mat3<BivariatePoly> b_inv = b_power_closed(-1, a);
    if (!(b * b_inv == Mat3<BivariatePoly>::identity()))
        report.fail(-1, "I", to_string(b * b_inv), "B * B^{-1} != I");
    for (long long n = -N; n <= N; ++n) {
        const Mat3<BivariatePoly> closed = b_power_closed(n, a);
        const Mat3<BivariatePoly> direct =
            n >= 0 ? mat_pow(b, static_cast<unsigned long long>(n))
                   : mat_pow(b_inv, static_cast<unsigned long long>(-n));
        if (!(closed == direct))
            report.fail(n, to_string(direct), to_string(closed), "closed form != repeated product");
    }
    return report;
}

}  // namespace padmat
