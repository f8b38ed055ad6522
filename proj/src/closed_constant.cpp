#include "basel/closed_constant.hpp"

namespace basel {

ClosedConstant::ClosedConstant(Rational coeff, int pi_power, int inv_sqrt)
    : coeff_(std::move(coeff)), pi_power_(pi_power), inv_sqrt_(inv_sqrt) {
    if (inv_sqrt_ < 1 || inv_sqrt_ > 3) {
        throw DomainError("inv_sqrt must be one of 1, 2, 3");
    }
    if (pi_power_ < 0) throw DomainError("pi power must be nonnegative");
    if (coeff_.is_zero()) {
        pi_power_ = 0;
        inv_sqrt_ = 1;
    }
}

std::string ClosedConstant::to_string(const std::string& symbol) const {
    if (is_zero()) return "0";
    const BigInt num = coeff_.numerator();
    const BigInt den = coeff_.denominator();

    std::string pi_part;
    if (pi_power_ == 1) {
        pi_part = symbol;
    } else if (pi_power_ > 1) {
        pi_part = symbol + "^" + std::to_string(pi_power_);
    }

    std::string top;
    if (pi_part.empty()) {
        top = num.get_str();
    } else if (num == 1) {
        top = pi_part;
    } else if (num == -1) {
        top = "-" + pi_part;
    } else {
        top = num.get_str() + pi_part;
    }

    std::string bottom;
    if (inv_sqrt_ != 1) {
        std::string root = "sqrt(" + std::to_string(inv_sqrt_) + ")";
        bottom = den == 1 ? root : "(" + den.get_str() + "*" + root + ")";
    } else if (den != 1) {
        bottom = den.get_str();
    }
    return bottom.empty() ? top : top + "/" + bottom;
}

ClosedConstant closed_ratio(const ClosedConstant& a, const ClosedConstant& b) {
    if (b.is_zero()) throw DomainError("ratio against the zero constant");
    if (a.is_zero()) return ClosedConstant();
    int pi_power = a.pi_power() - b.pi_power();
    if (pi_power < 0) throw DomainError("ratio would have a negative pi power");

    // value = (ca/cb) * pi^power * sqrt(db)/sqrt(da)
    Rational coeff = a.coeff() / b.coeff();
    int da = a.inv_sqrt();
    int db = b.inv_sqrt();
    if (da == db) return ClosedConstant(coeff, pi_power, 1);
    if (da == 1) {
        // sqrt(db) = db / sqrt(db)
        return ClosedConstant(Rational(db) * coeff, pi_power, db);
    }
    if (db == 1) return ClosedConstant(coeff, pi_power, da);
    throw DomainError("ratio would mix sqrt(2) and sqrt(3)");
}

BigFloat closed_eval(const ClosedConstant& c, int digits) {
    if (digits < 1) throw DomainError("digits must be >= 1");
    if (c.is_zero()) return BigFloat(0, bits_for_digits(digits));
    // pi^a contributes about a/2 leading decimal digits; pad the working
    // precision so the absolute error target still holds.
    long prec = bits_for_digits(digits + c.pi_power() / 2 + 8) + 16;
    BigFloat value(c.coeff(), prec);
    if (c.pi_power() > 0) {
        value *= compute_pi_bits(prec).pow_ui(static_cast<unsigned long>(c.pi_power()));
    }
    if (c.inv_sqrt() != 1) {
        BigFloat root(prec);
        mpfr_sqrt_ui(root.raw(), static_cast<unsigned long>(c.inv_sqrt()), MPFR_RNDN);
        value /= root;
    }
    return value;
}

} // namespace basel
