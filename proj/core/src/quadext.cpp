#include "qfbq/quadext.hpp"

namespace qfbq {

bool is_valid_radicand(long d) {
    if (d < 2) return false;
    for (long k = 2; k * k <= d; ++k) {
        if (d % (k * k) == 0) return false;
    }
    return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_valid_radicand(d))
        throw InvalidParams("radicand must be a square-free integer >= 2, got " +
                            std::to_string(d));
}

QuadExt QuadExt::inv() const {
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - d*b^2). The denominator is
    // the field norm, nonzero for nonzero elements since sqrt(d) is irrational.
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt" + std::to_string(d_) + ")");
    Rational n = field_norm();
    return QuadExt(a_ / n, -b_ / n, d_);
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string out = a_.str();
    if (b_.sign() >= 0) {
        out += "+" + b_.str();
    } else {
        out += "-" + (-b_).str();
    }
    out += "*sqrt" + std::to_string(d_);
    return out;
}

}  // namespace qfbq
