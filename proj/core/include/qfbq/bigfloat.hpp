#pragma once

#include <mpfr.h>

#include <string>

#include "qfbq/quadext.hpp"
#include "qfbq/rational.hpp"

namespace qfbq {

/// Arbitrary-precision binary float. RAII wrapper over mpfr_t.
///
/// Every operation rounds to nearest; a binary operation carries the larger
/// of the two operand precisions. Conversions from exact scalars are
/// correctly rounded at the requested precision (for quadratic irrationals
/// via interval refinement, so the half-ulp contract holds there too).
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision_bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(BigFloat other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static BigFloat of_long(long v, mpfr_prec_t precision_bits);
    static BigFloat of_rational(const Rational& v, mpfr_prec_t precision_bits);
    static BigFloat of_quadext(const QuadExt& v, mpfr_prec_t precision_bits);

    /// Re-round to a new precision.
    BigFloat round_to(mpfr_prec_t precision_bits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat operator-() const;
    BigFloat abs() const;
    BigFloat inv() const;
    /// e^x, correctly rounded at this value's precision.
    BigFloat exp() const;

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y);

    friend bool operator==(const BigFloat& x, const BigFloat& y) {
        return mpfr_equal_p(x.v_, y.v_) != 0;
    }
    friend bool operator!=(const BigFloat& x, const BigFloat& y) { return !(x == y); }
    friend bool operator<(const BigFloat& x, const BigFloat& y) {
        return mpfr_less_p(x.v_, y.v_) != 0;
    }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) {
        return mpfr_lessequal_p(x.v_, y.v_) != 0;
    }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return y < x; }
    friend bool operator>=(const BigFloat& x, const BigFloat& y) { return y <= x; }

    /// Decimal scientific notation with enough digits to identify the value
    /// at this precision, e.g. "1.6180339887498948482e+00".
    std::string str() const;

    const mpfr_t& raw() const { return v_; }

private:
    mpfr_t v_;
};

}  // namespace qfbq
