#include "basel/series_roots.hpp"

#include <cstdlib>

namespace basel {
namespace {

// Numerator sign pattern (-1)^i of the fundamental-series coefficients: the
// odd elementary orders 1, 3, 5, ... carry 1/1!, -1/3!, +1/5!, ...
Rational odd_coefficient(int j) {
    Rational c = factorial_reciprocal(static_cast<unsigned long>(j));
    return ((j - 1) / 2) % 2 == 1 ? -c : c;
}

} // namespace

QuadExt::QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 1 || d_ > 3) throw DomainError("sqrt discriminant must be 1, 2 or 3");
    if (d_ == 1) {
        a_ += b_;
        b_ = Rational(0);
    }
    if (b_.is_zero()) d_ = 1;
}

BigFloat QuadExt::eval(int digits) const {
    long prec = bits_for_digits(digits) + 16;
    BigFloat value(a_, prec);
    if (!b_.is_zero()) {
        BigFloat root(prec);
        mpfr_sqrt_ui(root.raw(), static_cast<unsigned long>(d_), MPFR_RNDN);
        value += BigFloat(b_, prec) * root;
    }
    return value;
}

std::string QuadExt::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string rad;
    const BigInt num = b_.numerator();
    const BigInt den = b_.denominator();
    if (num == 1) {
        rad = root;
    } else if (num == -1) {
        rad = "-" + root;
    } else {
        rad = num.get_str() + "*" + root;
    }
    if (den != 1) rad += "/" + den.get_str();
    if (a_.is_zero()) return rad;
    if (b_.sign() > 0) return a_.to_string() + " + " + rad;
    return a_.to_string() + " - " + (rad[0] == '-' ? rad.substr(1) : rad);
}

SineValue SineValue::from_rational(Rational y) {
    if (y.sign() <= 0 || y > Rational(1)) {
        throw DomainError("sine value must lie in (0, 1]");
    }
    return SineValue(Kind::rational, std::move(y));
}

SineValue SineValue::from_tag(SineTag tag) {
    switch (tag) {
        case SineTag::one: return one();
        case SineTag::inv_sqrt2: return inv_sqrt2();
        case SineTag::half_sqrt3: return half_sqrt3();
    }
    throw DomainError("unknown sine tag");
}

const Rational& SineValue::rational_value() const {
    if (!is_rational()) throw DomainError("sine value is not rational");
    return rational_;
}

QuadExt SineValue::reciprocal() const {
    switch (kind_) {
        case Kind::rational: return QuadExt(rational_.reciprocal());
        case Kind::inv_sqrt2: return QuadExt::sqrt_of(2);
        case Kind::half_sqrt3: return QuadExt(Rational(0), Rational(2, 3), 3);
    }
    throw DomainError("unknown sine value");
}

BigFloat SineValue::eval(int digits) const {
    long prec = bits_for_digits(digits) + 8;
    switch (kind_) {
        case Kind::rational: return BigFloat(rational_, prec);
        case Kind::inv_sqrt2: {
            BigFloat r(prec);
            mpfr_sqrt_ui(r.raw(), 2, MPFR_RNDN);
            mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
            return r;
        }
        case Kind::half_sqrt3: {
            BigFloat r(prec);
            mpfr_sqrt_ui(r.raw(), 3, MPFR_RNDN);
            mpfr_div_ui(r.raw(), r.raw(), 2, MPFR_RNDN);
            return r;
        }
    }
    throw DomainError("unknown sine value");
}

std::string SineValue::to_string() const {
    switch (kind_) {
        case Kind::rational: return rational_.to_string();
        case Kind::inv_sqrt2: return "1/sqrt(2)";
        case Kind::half_sqrt3: return "sqrt(3)/2";
    }
    return "?";
}

SineCase SineCase::from_tag(SineTag tag) {
    return SineCase{SineValue::from_tag(tag), basel::least_arc_over_pi(tag)};
}

Rational ArcFamily::arc_over_pi(long index) const {
    if (index < 0) throw DomainError("arc index must be nonnegative");
    const Rational& a = case_.least_arc_over_pi;
    if (index == 0) return a;
    long m = (index + 1) / 2;
    Rational offset = m % 2 == 0 ? a : -a;
    return index % 2 == 1 ? Rational(m) + offset : Rational(-m) + offset;
}

long ArcFamily::arc_den_cache() const {
    return case_.least_arc_over_pi.denominator().get_si();
}

long ArcFamily::arc_numerator(long index) const {
    const long den = arc_den_cache();
    const long num = case_.least_arc_over_pi.numerator().get_si();
    if (index == 0) return num;
    long m = (index + 1) / 2;
    long offset = m % 2 == 0 ? num : -num;
    return index % 2 == 1 ? m * den + offset : -m * den + offset;
}

ElementarySeq elementary_for_sine(const Rational& y, int m) {
    if (m < 1) throw DomainError("need at least one elementary value");
    if (y.is_zero()) {
        throw DomainError(
            "sine 0 has no reciprocal-arc series (y sits in the denominator); "
            "use elementary_for_sinc_roots for that family");
    }
    Rational inv_y = y.reciprocal();
    std::vector<Rational> e;
    e.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        e.push_back(j % 2 == 1 ? odd_coefficient(j) * inv_y : Rational(0));
    }
    return ElementarySeq{std::move(e)};
}

std::vector<QuadExt> elementary_for_sine_exact(const SineValue& y, int m) {
    if (m < 1) throw DomainError("need at least one elementary value");
    QuadExt inv_y = y.reciprocal();
    std::vector<QuadExt> e;
    e.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        e.push_back(j % 2 == 1 ? QuadExt(odd_coefficient(j)) * inv_y : QuadExt());
    }
    return e;
}

ElementarySeq elementary_for_sinc_roots(int m) {
    if (m < 1) throw DomainError("need at least one elementary value");
    std::vector<Rational> e;
    e.reserve(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) {
        e.push_back(factorial_reciprocal(2 * static_cast<unsigned long>(j) + 1));
    }
    return ElementarySeq{std::move(e)};
}

PowerSumSeq zigzag_power_sums(int k_max) {
    return power_sums_from_elementary(elementary_for_sine(Rational(1), k_max), k_max);
}

std::vector<QuadExt> sine_power_sums(const SineValue& y, int k_max) {
    std::vector<QuadExt> e = elementary_for_sine_exact(y, k_max);
    auto provider = [&e](int j) { return e[static_cast<size_t>(j - 1)]; };
    return power_sums_generic<QuadExt>(provider, k_max);
}

std::vector<BigFloat> arc_family_enumerate(const SineCase& c, int n_terms, int digits) {
    if (n_terms < 1) throw DomainError("need at least one arc");
    if (digits < 1) throw DomainError("digits must be >= 1");
    ArcFamily family(c);
    long prec = bits_for_digits(digits) + 8;
    BigFloat pi = compute_pi_bits(prec);
    std::vector<BigFloat> arcs;
    arcs.reserve(static_cast<size_t>(n_terms));
    for (long i = 0; i < n_terms; ++i) {
        arcs.push_back(BigFloat(family.arc_over_pi(i), prec) * pi);
    }
    return arcs;
}

std::pair<BigFloat, SummationReport> arc_power_sum_partial(const SineCase& c, int k,
                                                           long n_pairs, int digits) {
    if (k < 1) throw DomainError("power must be >= 1");
    if (n_pairs < 1) throw DomainError("need at least one pair");
    if (digits < 1) throw DomainError("digits must be >= 1");
    if (digits > kMaxDigits) throw ResourceError("digits exceed the precision ceiling");

    ArcFamily family(c);
    const long den = family.arc_denominator();
    const long prec = std::max<long>(64, bits_for_digits(digits)) + 32;
    const unsigned long uk = static_cast<unsigned long>(k);

    // Arcs are (N/den) * pi, so sum 1/N^k over the enumeration and scale by
    // (den/pi)^k once at the end. Strictly serial, in pair order.
    BigFloat acc(prec);
    BigFloat base(prec), power(prec), term(prec);
    BigFloat last_pair(prec);
    for (long m = 0; m < n_pairs; ++m) {
        if (m == n_pairs - 1) mpfr_set_zero(last_pair.raw(), 1);
        for (long i = 2 * m; i <= 2 * m + 1; ++i) {
            mpfr_set_si(base.raw(), family.arc_numerator(i), MPFR_RNDN);
            mpfr_pow_ui(power.raw(), base.raw(), uk, MPFR_RNDN);
            mpfr_ui_div(term.raw(), 1, power.raw(), MPFR_RNDN);
            mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
            if (m == n_pairs - 1) {
                mpfr_add(last_pair.raw(), last_pair.raw(), term.raw(), MPFR_RNDN);
            }
        }
    }
    BigFloat scale = (BigFloat(den, prec) / compute_pi_bits(prec)).pow_ui(uk);
    BigFloat total = acc * scale;

    SummationReport report;
    report.terms_used = 2 * n_pairs;
    report.acceleration = Acceleration::pair_telescoping;
    report.correction_order = 0;
    report.residual_bound = abs(last_pair * scale) * BigFloat(n_pairs, 64);
    report.residual_is_rigorous = false;
    return {total, report};
}

} // namespace basel
