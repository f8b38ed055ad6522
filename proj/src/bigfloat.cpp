#include "basel/bigfloat.hpp"

#include <cmath>

namespace basel {
namespace {

void check_digits(int digits) {
    if (digits < 1) throw DomainError("digits must be >= 1");
    if (digits > kMaxDigits) {
        throw ResourceError("requested digits exceed the precision ceiling of " +
                            std::to_string(kMaxDigits));
    }
}

// arctan(1/m) by the Taylor series, summed until the next term falls below
// the working precision. m >= 2 keeps the series geometric.
BigFloat atan_reciprocal(unsigned long m, long prec) {
    BigFloat power(1, prec);
    mpfr_div_ui(power.raw(), power.raw(), m, MPFR_RNDN);  // 1/m
    BigFloat sum = power;
    BigFloat term(prec);
    const unsigned long m2 = m * m;
    const mpfr_exp_t cutoff = -(prec + 8);
    for (unsigned long k = 1;; ++k) {
        mpfr_div_ui(power.raw(), power.raw(), m2, MPFR_RNDN);
        if (mpfr_zero_p(power.raw()) || mpfr_get_exp(power.raw()) < cutoff) break;
        mpfr_div_ui(term.raw(), power.raw(), 2 * k + 1, MPFR_RNDN);
        if (k % 2 == 1) {
            mpfr_sub(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        } else {
            mpfr_add(sum.raw(), sum.raw(), term.raw(), MPFR_RNDN);
        }
    }
    return sum;
}

} // namespace

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision_bits());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

long bits_for_digits(int digits) {
    return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 48;
}

BigFloat pow10(int exponent, long precision_bits) {
    BigFloat r(precision_bits);
    unsigned long e = exponent < 0 ? -static_cast<long>(exponent) : exponent;
    mpfr_ui_pow_ui(r.raw(), 10, e, MPFR_RNDN);
    if (exponent < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

std::string BigFloat::to_decimal_string(int digits) const {
    if (digits < 1) throw DomainError("decimal rendering needs digits >= 1");
    if (mpfr_zero_p(v_)) {
        return digits == 1 ? "0" : "0." + std::string(digits - 1, '0');
    }
    // mpfr_get_str wants at least two digits; render one extra and re-round
    // half-even by hand for the single-digit case.
    size_t want = digits < 2 ? 2 : static_cast<size_t>(digits);
    mpfr_exp_t exp = 0;
    char* cs = mpfr_get_str(nullptr, &exp, 10, want, v_, MPFR_RNDN);
    std::string mant(cs);
    mpfr_free_str(cs);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    if (digits == 1) {
        int lead = d[0] - '0';
        int next = d[1] - '0';
        if (next > 5 || (next == 5 && lead % 2 == 1)) ++lead;
        if (lead == 10) {
            d = "1";
            ++exp;
        } else {
            d = std::string(1, static_cast<char>('0' + lead));
        }
    }
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + d;
    } else if (static_cast<size_t>(exp) >= d.size()) {
        out = d + std::string(static_cast<size_t>(exp) - d.size(), '0') + ".0";
    } else {
        out = d.substr(0, static_cast<size_t>(exp)) + "." + d.substr(static_cast<size_t>(exp));
    }
    return neg ? "-" + out : out;
}

std::string BigFloat::to_scientific_string(int digits) const {
    if (digits < 1) throw DomainError("scientific rendering needs digits >= 1");
    if (mpfr_zero_p(v_)) return "0";
    size_t want = digits < 2 ? 2 : static_cast<size_t>(digits);
    mpfr_exp_t exp = 0;
    char* cs = mpfr_get_str(nullptr, &exp, 10, want, v_, MPFR_RNDN);
    std::string mant(cs);
    mpfr_free_str(cs);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    d = d.substr(0, static_cast<size_t>(digits));
    std::string out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
    return neg ? "-" + out : out;
}

BigFloat compute_pi_bits(long precision_bits) {
    const long work = precision_bits + 32;
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    BigFloat a5 = atan_reciprocal(5, work);
    BigFloat a239 = atan_reciprocal(239, work);
    BigFloat pi(work);
    mpfr_mul_ui(a5.raw(), a5.raw(), 16, MPFR_RNDN);
    mpfr_mul_ui(a239.raw(), a239.raw(), 4, MPFR_RNDN);
    mpfr_sub(pi.raw(), a5.raw(), a239.raw(), MPFR_RNDN);
    return pi.round_to(precision_bits);
}

BigFloat compute_pi(int digits) {
    check_digits(digits);
    return compute_pi_bits(bits_for_digits(digits));
}

BigFloat sqrt(const BigFloat& x, int digits) {
    check_digits(digits);
    if (x.sign() < 0) throw DomainError("square root of a negative value");
    long prec = bits_for_digits(digits);
    if (!x.is_zero()) {
        mpfr_exp_t e = mpfr_get_exp(x.raw());
        if (e > 0) prec += e / 2 + 2;
    }
    BigFloat r(prec);
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Rational least_arc_over_pi(SineTag tag) {
    switch (tag) {
        case SineTag::one: return Rational(1, 2);
        case SineTag::inv_sqrt2: return Rational(1, 4);
        case SineTag::half_sqrt3: return Rational(1, 3);
    }
    throw DomainError("unknown sine tag");
}

BigFloat arcsin_of_special(SineTag tag, int digits) {
    check_digits(digits);
    long prec = bits_for_digits(digits) + 8;
    return BigFloat(least_arc_over_pi(tag), prec) * compute_pi_bits(prec);
}

} // namespace basel
