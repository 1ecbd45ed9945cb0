#pragma once

#include <string>

#include "qfbq/errors.hpp"
#include "qfbq/rational.hpp"

namespace qfbq {

/// True iff d is admissible as a radicand: d >= 2 and square-free.
bool is_valid_radicand(long d);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// Invariant: d >= 2 and square-free, so sqrt(d) is irrational and the
/// representation (a, b) is unique. Arithmetic requires equal radicands;
/// mixing radicands throws MixedRadicand. The zero element keeps its
/// radicand so later promotions stay well defined.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, long d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// True iff the sqrt part vanishes, i.e. the value lies in Q.
    bool is_rational() const { return b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    /// Field conjugate a - b*sqrt(d).
    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        require_same_radicand(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        require_same_radicand(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.d_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        require_same_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.d_),
                       x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    }

    /// Field norm a^2 - d*b^2; zero only for the zero element.
    Rational field_norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadExt inv() const;

    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

    /// Mathematical equality. Elements of different radicands are equal only
    /// when both are rational-valued with equal rational parts.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == y.d_) return x.a_ == y.a_ && x.b_ == y.b_;
        return x.b_.is_zero() && y.b_.is_zero() && x.a_ == y.a_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Canonical text per the scalar grammar, e.g. "1/2+1/2*sqrt5",
    /// "-3/2+1/2*sqrt5", "2-1*sqrt2". Rational-valued elements print as
    /// plain rationals.
    std::string str() const;

private:
    static void require_same_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_)
            throw MixedRadicand("arithmetic over different radicands: sqrt" +
                                std::to_string(x.d_) + " vs sqrt" + std::to_string(y.d_));
    }

    Rational a_, b_;
    long d_;
};

}  // namespace qfbq
