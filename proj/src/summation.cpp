#include "basel/summation.hpp"

#include <algorithm>
#include <cmath>

namespace basel {
namespace {

void check_sum_digits(int digits) {
    if (digits < 1) throw DomainError("digits must be >= 1");
    if (digits > kMaxSumDigits) {
        throw ResourceError("summation supports at most " + std::to_string(kMaxSumDigits) +
                            " digits");
    }
}

Rational pow10_rational(int digits) {
    BigInt d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return Rational(BigInt(1), d);
}

const Rational& bernoulli_at(int k) {
    thread_local std::vector<Rational> memo{Rational(1)};
    while (static_cast<int>(memo.size()) <= k) {
        int m = static_cast<int>(memo.size());
        Rational acc(0);
        for (int j = 0; j < m; ++j) {
            BigInt binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += Rational(binom) * memo[static_cast<size_t>(j)];
        }
        memo.push_back(-acc / Rational(m + 1));
    }
    return memo[static_cast<size_t>(k)];
}

// Rising factorial n (n+1) ... (n+m-1).
BigInt rising_factorial(long n, long m) {
    BigInt r(1);
    for (long i = 0; i < m; ++i) r *= (n + i);
    return r;
}

// Tail machinery for sum_{j >= N} (s j + t)^(-n), by the Euler-Maclaurin
// expansion about M = s N + t:
//
//   T = M^(1-n)/(s(n-1)) + M^(-n)/2
//       + sum_{r=1..J} B_2r/(2r)! s^(2r-1) (n)_{2r-1} M^(-(n+2r-1)) + R,
//
//   |R| <= |B_{2J+2}|/(2J+2)! s^(2J+1) (n)_{2J+1} M^(-(n+2J+1)).
//
// Every quantity is an exact rational, and (sx+t)^(-n) is completely
// monotone, so the remainder really is bounded by the first omitted term.
Rational correction_weight(const LinearForm& form, int n, int r) {
    BigInt s_pow;
    mpz_ui_pow_ui(s_pow.get_mpz_t(), static_cast<unsigned long>(form.stride),
                  static_cast<unsigned long>(2 * r - 1));
    return bernoulli_at(2 * r) * Rational(s_pow * rising_factorial(n, 2 * r - 1),
                                          factorial(static_cast<unsigned long>(2 * r)));
}

Rational tail_bound(const LinearForm& form, int n, long N, int order) {
    const BigInt m = BigInt(form.stride) * N + form.offset;
    BigInt m_pow;
    mpz_pow_ui(m_pow.get_mpz_t(), m.get_mpz_t(),
               static_cast<unsigned long>(n + 2 * order + 1));
    return abs(correction_weight(form, n, order + 1)) * Rational(BigInt(1), m_pow);
}

Rational tail_value(const LinearForm& form, int n, long N, int order) {
    const BigInt m = BigInt(form.stride) * N + form.offset;
    BigInt m_pow;  // M^(n-1)
    mpz_pow_ui(m_pow.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(n - 1));
    Rational tail(BigInt(1), m_pow * (form.stride * static_cast<long>(n - 1)));
    m_pow *= m;  // M^n
    tail += Rational(BigInt(1), m_pow * 2);
    const BigInt m_sq = m * m;
    m_pow *= m;  // M^(n+1), the first odd correction power
    for (int r = 1; r <= order; ++r) {
        tail += correction_weight(form, n, r) * Rational(BigInt(1), m_pow);
        m_pow *= m_sq;
    }
    return tail;
}

// One pass of the alternating transform with Chebyshev weights:
//
//   d = ((3+sqrt 8)^n + (3+sqrt 8)^-n)/2, b_0 = -1, c_0 = -d,
//   c_k = b_{k-1} - c_{k-1}, s = sum c_k a_k,
//   b_k = b_{k-1} 2(k^2-n^2)/((2k+1)(k+1)),  estimate = s/d.
//
// For totally monotone a_k the error decays like (3+sqrt 8)^-n.
BigFloat alternating_pass(const SeriesTerms& terms, long iterations, long prec) {
    BigFloat d(prec);
    mpfr_sqrt_ui(d.raw(), 8, MPFR_RNDN);
    mpfr_add_ui(d.raw(), d.raw(), 3, MPFR_RNDN);
    mpfr_pow_ui(d.raw(), d.raw(), static_cast<unsigned long>(iterations), MPFR_RNDN);
    BigFloat inv = BigFloat(1, prec) / d;
    d = (d + inv) * BigFloat(Rational(1, 2), prec);

    BigFloat b(-1, prec);
    BigFloat c = -d;
    BigFloat s(prec);
    BigFloat a(prec), t(prec);
    const unsigned long n = static_cast<unsigned long>(terms.exponent);
    for (long k = 0; k < iterations; ++k) {
        c = b - c;
        mpfr_set_zero(a.raw(), 1);
        for (const LinearForm& form : terms.forms) {
            unsigned long base = static_cast<unsigned long>(form.stride * k + form.offset);
            mpfr_ui_pow_ui(t.raw(), base, n, MPFR_RNDN);
            mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
            mpfr_add(a.raw(), a.raw(), t.raw(), MPFR_RNDN);
        }
        s += c * a;
        mpfr_mul_si(b.raw(), b.raw(), 2 * (k * k - iterations * iterations), MPFR_RNDN);
        mpfr_div_si(b.raw(), b.raw(), (2 * k + 1) * (k + 1), MPFR_RNDN);
    }
    return s / d;
}

} // namespace

std::vector<Rational> bernoulli_numbers(int m) {
    std::vector<Rational> b;
    b.reserve(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) b.push_back(bernoulli_at(k));
    return b;
}

std::pair<BigFloat, SummationReport> sum_even_power_series(const SeriesId& id, int digits) {
    check_sum_digits(digits);
    SeriesTerms terms = series_terms(id);
    if (terms.alternating) {
        throw DomainError(id.name() + " is not a constant-sign even-power series");
    }
    const int n = terms.exponent;
    const Rational target = pow10_rational(digits + 2);
    const long max_terms = 80000;
    const int max_order = 80;
    const long forms = static_cast<long>(terms.forms.size());

    long N = std::clamp<long>(50L * digits, 64, max_terms / forms);
    for (;; N *= 4) {
        if (N * forms > max_terms) {
            throw ResourceError("tail correction cannot reach " + std::to_string(digits) +
                                " digits within the term budget");
        }
        Rational best_bound(-1);
        int best_order = 0;
        Rational prev(-1);
        for (int order = 1; order <= max_order; ++order) {
            Rational bound(0);
            for (const LinearForm& form : terms.forms) {
                bound += tail_bound(form, n, N, order);
            }
            if (best_bound.sign() < 0 || bound < best_bound) {
                best_bound = bound;
                best_order = order;
            }
            if (bound <= target) break;
            if (prev.sign() >= 0 && bound > prev) break;  // corrections diverging
            prev = bound;
        }
        if (best_bound > target) continue;  // need a later tail point

        const long prec = bits_for_digits(digits) + 64;
        BigFloat direct(prec);
        BigFloat term(prec);
        BigInt den;
        for (long j = 0; j < N; ++j) {
            for (const LinearForm& form : terms.forms) {
                mpz_ui_pow_ui(den.get_mpz_t(),
                              static_cast<unsigned long>(form.stride * j + form.offset),
                              static_cast<unsigned long>(n));
                mpfr_set_z(term.raw(), den.get_mpz_t(), MPFR_RNDN);
                mpfr_ui_div(term.raw(), 1, term.raw(), MPFR_RNDN);
                mpfr_add(direct.raw(), direct.raw(), term.raw(), MPFR_RNDN);
            }
        }
        Rational tail(0);
        for (const LinearForm& form : terms.forms) {
            tail += tail_value(form, n, N, best_order);
        }
        BigFloat total = direct + BigFloat(tail, prec);

        // Rounding slack: every partial stays below 8, so each of the
        // roughly N*forms+8 roundings errs below 2^(4-prec).
        BigFloat slack(96);
        mpfr_set_ui_2exp(slack.raw(), static_cast<unsigned long>(N * forms + 8),
                         static_cast<mpfr_exp_t>(4 - prec), MPFR_RNDN);

        SummationReport report;
        report.terms_used = N * forms;
        report.acceleration = Acceleration::tail_correction;
        report.correction_order = best_order;
        report.residual_bound = BigFloat(best_bound, 96) + slack;
        report.residual_is_rigorous = true;
        return {total, report};
    }
}

std::pair<BigFloat, SummationReport> sum_alternating_series(const SeriesId& id, int digits) {
    check_sum_digits(digits);
    SeriesTerms terms = series_terms(id);
    if (!terms.alternating) {
        throw DomainError(id.name() + " is not an alternating series");
    }
    const long prec = bits_for_digits(digits) + 64;
    const BigFloat tolerance = pow10(-digits, 96);
    long iterations =
        static_cast<long>(std::ceil(digits * 1.3066)) + 8;  // log 10 / log(3+sqrt 8)
    const long max_iterations = 100000;

    while (true) {
        BigFloat coarse = alternating_pass(terms, iterations, prec);
        BigFloat fine = alternating_pass(terms, 2 * iterations, prec);
        BigFloat diff = abs(fine - coarse);
        if (diff < tolerance) {
            SummationReport report;
            report.terms_used = 3 * iterations;
            report.acceleration = Acceleration::alternating_transform;
            report.correction_order = static_cast<int>(2 * iterations);
            report.residual_bound = diff;
            report.residual_is_rigorous = false;
            return {fine, report};
        }
        iterations *= 2;
        if (3 * iterations > max_iterations) {
            throw ResourceError("alternating transform did not stabilize at " +
                                std::to_string(digits) + " digits");
        }
    }
}

std::pair<BigFloat, SummationReport> sum_series(const SeriesId& id, int digits) {
    return series_terms(id).alternating ? sum_alternating_series(id, digits)
                                        : sum_even_power_series(id, digits);
}

BigFloat verify_identity(const ClosedConstant& closed, const SeriesId& series, int digits) {
    BigFloat lhs = closed_eval(closed, digits);
    BigFloat rhs = sum_series(series, digits).first;
    return abs(lhs - rhs);
}

} // namespace basel
