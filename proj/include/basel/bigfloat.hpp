#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "basel/rational.hpp"

namespace basel {

/// Arbitrary-precision binary float: sign, normalized mantissa, binary
/// exponent, and an explicit per-value precision. Every arithmetic
/// operation is correctly rounded (error <= 1/2 ulp at the result's
/// precision). Binary operations adopt the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(long precision_bits = 64) {
        mpfr_init2(v_, clamp_prec(precision_bits));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const Rational& x, long precision_bits) {
        mpfr_init2(v_, clamp_prec(precision_bits));
        mpfr_set_q(v_, x.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(long x, long precision_bits) {
        mpfr_init2(v_, clamp_prec(precision_bits));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long precision_bits() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_zero_p(v_) ? 0 : (mpfr_signbit(v_) ? -1 : 1); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw DomainError("bigfloat division by zero");
        BigFloat r(join_prec(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision_bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    /// Result rounded to `precision_bits`; keeps the value, changes the grid.
    BigFloat round_to(long precision_bits) const {
        BigFloat r(precision_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat pow_ui(unsigned long k) const {
        BigFloat r(precision_bits());
        mpfr_pow_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal rendering with `digits` significant digits, round-half-even,
    /// period as the decimal separator. Deterministic for equal inputs.
    std::string to_decimal_string(int digits) const;

    /// Compact scientific rendering, e.g. "2.13e-21"; "0" for zero.
    std::string to_scientific_string(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static long clamp_prec(long p) { return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p; }
    static long join_prec(const BigFloat& a, const BigFloat& b) {
        return std::max(a.precision_bits(), b.precision_bits());
    }

    mpfr_t v_;
};

BigFloat abs(const BigFloat& a);

/// Working precision in bits for `digits` correct decimal digits, with
/// guard bits for rounding accumulation.
long bits_for_digits(int digits);

/// 10^(-digits) at a small fixed precision, for tolerance comparisons.
BigFloat pow10(int exponent, long precision_bits = 96);

/// Digits ceiling for all numeric operations; beyond it a ResourceError is
/// raised rather than an open-ended computation attempted.
inline constexpr int kMaxDigits = 10000;

/// pi to absolute error < 10^(-digits), via a Machin arctangent formula
/// evaluated with guarded precision.
BigFloat compute_pi(int digits);

/// pi at a raw bit precision (internal building block for evaluators).
BigFloat compute_pi_bits(long precision_bits);

/// Square root with absolute error < 10^(-digits); negative input is a
/// domain error.
BigFloat sqrt(const BigFloat& x, int digits);

/// The sine values whose least arc is a rational multiple of pi. Only
/// these admit exact arc families, so arcsin is table-driven.
enum class SineTag { one, inv_sqrt2, half_sqrt3 };

/// A/pi for the least arc A with the given sine: 1/2, 1/4, 1/3.
Rational least_arc_over_pi(SineTag tag);

/// The least arc itself: least_arc_over_pi(tag) * pi at the given digits.
BigFloat arcsin_of_special(SineTag tag, int digits);

} // namespace basel
