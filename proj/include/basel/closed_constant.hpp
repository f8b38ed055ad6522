#pragma once

#include <string>

#include "basel/bigfloat.hpp"
#include "basel/rational.hpp"

namespace basel {

/// A closed-form constant coeff * pi^pi_power / sqrt(inv_sqrt), with
/// inv_sqrt restricted to the square-free values 1, 2, 3. Radicals only
/// ever appear in the denominator position; that shape covers every
/// constant this library produces. The zero constant is (0, 0, 1).
class ClosedConstant {
public:
    ClosedConstant() : coeff_(0), pi_power_(0), inv_sqrt_(1) {}
    ClosedConstant(Rational coeff, int pi_power, int inv_sqrt = 1);

    const Rational& coeff() const { return coeff_; }
    int pi_power() const { return pi_power_; }
    int inv_sqrt() const { return inv_sqrt_; }
    bool is_zero() const { return coeff_.is_zero(); }

    friend bool operator==(const ClosedConstant& a, const ClosedConstant& b) {
        return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_ &&
               a.inv_sqrt_ == b.inv_sqrt_;
    }
    friend bool operator!=(const ClosedConstant& a, const ClosedConstant& b) {
        return !(a == b);
    }

    friend ClosedConstant operator*(const Rational& s, const ClosedConstant& c) {
        return ClosedConstant(s * c.coeff_, c.pi_power_, c.inv_sqrt_);
    }

    /// Rendering in the style "p^2/6", "691p^12/638512875", "p/(2*sqrt(2))",
    /// with `symbol` standing for pi. `scale` rewrites the constant in terms
    /// of symbol' = symbol/scale (used for quarter-perimeter forms).
    std::string to_string(const std::string& symbol = "p") const;

private:
    Rational coeff_;
    int pi_power_;
    int inv_sqrt_;
};

/// Exact ratio a/b. sqrt factors combine by sqrt(d)*sqrt(d) = d; mixing
/// sqrt(2) with sqrt(3) leaves the representable family and is a domain
/// error, as is a negative resulting pi power or a zero divisor.
ClosedConstant closed_ratio(const ClosedConstant& a, const ClosedConstant& b);

/// Numeric value with absolute error < 10^(-digits).
BigFloat closed_eval(const ClosedConstant& c, int digits);

} // namespace basel
