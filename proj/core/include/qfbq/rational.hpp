#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "qfbq/errors.hpp"

namespace qfbq {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper over GMP's mpq_class that enforces
/// canonicalization at every construction point; arithmetic then preserves it.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        r.v_.canonicalize();
        return r;
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    const mpq_class& mpq() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_raw(-v_); }

    friend Rational operator+(const Rational& x, const Rational& y) { return from_raw(x.v_ + y.v_); }
    friend Rational operator-(const Rational& x, const Rational& y) { return from_raw(x.v_ - y.v_); }
    friend Rational operator*(const Rational& x, const Rational& y) { return from_raw(x.v_ * y.v_); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw DivisionByZero("division of rational by zero");
        return from_raw(x.v_ / y.v_);
    }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational");
        return from_raw(1 / v_);
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return mpq_equal(x.v_.get_mpq_t(), y.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) < 0; }

    /// Canonical text: "n" for integers, "n/d" otherwise, sign on the numerator.
    std::string str() const { return v_.get_str(); }

private:
    // GMP canonicalizes results of arithmetic on canonical operands.
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

}  // namespace qfbq
