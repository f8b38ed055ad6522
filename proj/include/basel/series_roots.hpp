#pragma once

#include <utility>
#include <vector>

#include "basel/bigfloat.hpp"
#include "basel/newton_girard.hpp"
#include "basel/summation_report.hpp"

namespace basel {

/// Exact element a + b*sqrt(d) of Q(sqrt(d)), d in {1, 2, 3}. Large enough
/// to carry the 1/y factor of the radical sine values through the power-sum
/// recurrence without losing exactness.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(long v) : a_(v), b_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(1) {}  // NOLINT
    QuadExt(Rational a, Rational b, int d);

    static QuadExt sqrt_of(int d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    int disc() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        int d = join_disc(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        int d = join_disc(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        int d = join_disc(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                       x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || y.is_rational() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    BigFloat eval(int digits) const;

    /// "a", "b*sqrt(d)", or "a + b*sqrt(d)" with rationals reduced.
    std::string to_string() const;

private:
    static int join_disc(const QuadExt& x, const QuadExt& y) {
        if (x.is_rational()) return y.d_;
        if (y.is_rational()) return x.d_;
        if (x.d_ != y.d_) throw DomainError("mixing sqrt(2) and sqrt(3) values");
        return x.d_;
    }

    Rational a_, b_;
    int d_;
};

/// Exact sine value: a rational in (0, 1], or one of the two radical values
/// the arc families use.
class SineValue {
public:
    static SineValue from_rational(Rational y);
    static SineValue inv_sqrt2() { return SineValue(Kind::inv_sqrt2, Rational(0)); }
    static SineValue half_sqrt3() { return SineValue(Kind::half_sqrt3, Rational(0)); }
    static SineValue one() { return from_rational(Rational(1)); }
    static SineValue from_tag(SineTag tag);

    bool is_rational() const { return kind_ == Kind::rational; }
    const Rational& rational_value() const;

    /// 1/y as an exact quadratic-field value: 1/r, sqrt(2), or 2*sqrt(3)/3.
    QuadExt reciprocal() const;

    BigFloat eval(int digits) const;
    std::string to_string() const;

private:
    enum class Kind { rational, inv_sqrt2, half_sqrt3 };
    SineValue(Kind kind, Rational r) : kind_(kind), rational_(std::move(r)) {}

    Kind kind_;
    Rational rational_;
};

/// One of the arc families with a common sine: the sine value plus the least
/// arc as an exact fraction of pi (1/2, 1/4, 1/3 for the three cases).
struct SineCase {
    SineValue y;
    Rational least_arc_over_pi;

    static SineCase from_tag(SineTag tag);
};

/// The family of all arcs sharing the case's sine, in the interleaved
/// enumeration A, p-A, -p-A, 2p+A, -2p+A, 3p-A, -3p-A, 4p+A, ... (p = pi).
/// Every arc is an exact rational multiple of pi.
class ArcFamily {
public:
    explicit ArcFamily(SineCase c) : case_(std::move(c)) {}

    const SineCase& sine_case() const { return case_; }

    /// Arc at 0-based position `index`, as a multiple of pi.
    Rational arc_over_pi(long index) const;

    /// Integer numerator of arc_over_pi(index) over the fixed denominator
    /// of the least arc (den = 2, 4 or 3).
    long arc_numerator(long index) const;

    long arc_denominator() const { return arc_den_cache(); }

private:
    long arc_den_cache() const;

    SineCase case_;
};

/// Elementary symmetric values of the reciprocal-arc family for sine y:
/// e_{2i+1} = (-1)^i / ((2i+1)! y), even orders vanish. Rational y only;
/// y = 0 has no such family (the defining series would divide by y) and is
/// redirected to elementary_for_sinc_roots.
ElementarySeq elementary_for_sine(const Rational& y, int m);

/// Same values with the 1/y factor kept exact for radical sine values.
std::vector<QuadExt> elementary_for_sine_exact(const SineValue& y, int m);

/// Elementary symmetric values of the family {1/(n^2 pi^2)}:
/// e_j = 1/(2j+1)!.
ElementarySeq elementary_for_sinc_roots(int m);

/// Power sums for the y = 1 family: 1, 1, 1/2, 1/3, 5/24, 2/15, 61/720,
/// 17/315, ... ((k-1)! p_k are the zigzag integers 1, 1, 1, 2, 5, 16, ...).
PowerSumSeq zigzag_power_sums(int k_max);

/// Power sums for any sine case, exact in Q(sqrt(d)).
std::vector<QuadExt> sine_power_sums(const SineValue& y, int k_max);

/// First n_terms arcs of the family, numerically, each with absolute error
/// below 10^(-digits).
std::vector<BigFloat> arc_family_enumerate(const SineCase& c, int n_terms, int digits);

/// Partial sum of 1/arc^k over the first n_pairs consecutive pairs of the
/// enumeration. Pairing makes the conditionally convergent k = 1 case
/// converge at O(1/n); the summation order is fixed and serial. The report
/// carries an empirical residual estimated from the last pair.
std::pair<BigFloat, SummationReport> arc_power_sum_partial(const SineCase& c, int k,
                                                           long n_pairs, int digits);

} // namespace basel
