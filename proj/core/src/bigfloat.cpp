#include "qfbq/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qfbq/errors.hpp"

namespace qfbq {

namespace {

mpfr_prec_t checked_prec(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN)
        throw InvalidParams("float precision below the library minimum");
    return bits;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision_bits) {
    mpfr_init2(v_, checked_prec(precision_bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of_long(long v, mpfr_prec_t precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of_rational(const Rational& v, mpfr_prec_t precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, v.mpq().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of_quadext(const QuadExt& v, mpfr_prec_t precision_bits) {
    if (v.b().is_zero()) return of_rational(v.a(), precision_bits);
    mpfr_prec_t target = checked_prec(precision_bits);

    // Interval refinement: bracket a + b*sqrt(d) with directed roundings at a
    // working precision, and accept once both endpoints round to the same
    // target-precision value. The value is irrational (b != 0, d square-free),
    // so the loop terminates and the result is correctly rounded.
    for (mpfr_prec_t work = target + 32;; work *= 2) {
        mpfr_t sd_lo, sd_hi, b_lo, b_hi, lo, hi, t;
        mpfr_inits2(work, sd_lo, sd_hi, b_lo, b_hi, lo, hi, t, (mpfr_ptr) nullptr);

        mpfr_set_si(t, v.radicand(), MPFR_RNDN);  // exact: radicand fits well below 2^work
        mpfr_sqrt(sd_lo, t, MPFR_RNDD);
        mpfr_sqrt(sd_hi, t, MPFR_RNDU);

        mpfr_set_q(b_lo, v.b().mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(b_hi, v.b().mpq().get_mpq_t(), MPFR_RNDU);

        // [b_lo, b_hi] * [sd_lo, sd_hi] with sd > 0.
        if (v.b().sign() > 0) {
            mpfr_mul(lo, b_lo, sd_lo, MPFR_RNDD);
            mpfr_mul(hi, b_hi, sd_hi, MPFR_RNDU);
        } else {
            mpfr_mul(lo, b_lo, sd_hi, MPFR_RNDD);
            mpfr_mul(hi, b_hi, sd_lo, MPFR_RNDU);
        }

        mpfr_set_q(t, v.a().mpq().get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo, lo, t, MPFR_RNDD);
        mpfr_set_q(t, v.a().mpq().get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi, hi, t, MPFR_RNDU);

        BigFloat from_lo(target), from_hi(target);
        mpfr_set(from_lo.v_, lo, MPFR_RNDN);
        mpfr_set(from_hi.v_, hi, MPFR_RNDN);

        mpfr_clears(sd_lo, sd_hi, b_lo, b_hi, lo, hi, t, (mpfr_ptr) nullptr);

        if (mpfr_equal_p(from_lo.v_, from_hi.v_)) return from_lo;
    }
}

BigFloat BigFloat::round_to(mpfr_prec_t precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero float");
    BigFloat r(precision());
    mpfr_si_div(r.v_, 1, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

BigFloat binary_op(const BigFloat& x, const BigFloat& y,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigFloat r(std::max(x.precision(), y.precision()));
    op(const_cast<mpfr_ptr>(r.raw()), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat operator+(const BigFloat& x, const BigFloat& y) { return binary_op(x, y, mpfr_add); }
BigFloat operator-(const BigFloat& x, const BigFloat& y) { return binary_op(x, y, mpfr_sub); }
BigFloat operator*(const BigFloat& x, const BigFloat& y) { return binary_op(x, y, mpfr_mul); }

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
    if (y.is_zero()) throw DivisionByZero("division of float by zero");
    return binary_op(x, y, mpfr_div);
}

std::string BigFloat::str() const {
    // ceil(prec * log10(2)) + 2 digits pin the value down at this precision.
    auto digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 2;
    int needed = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data());
}

}  // namespace qfbq
