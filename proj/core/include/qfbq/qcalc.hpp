#pragma once

#include "qfbq/scalar.hpp"

namespace qfbq {

/// Parameter pair (alpha, q) for the q-deformed sequences. Both must be
/// exact (rational or quadratic extension), q != 1 so the Binet denominator
/// alpha - alpha*q never vanishes, and alpha != 0 so alpha^-1 exists.
class QParams {
public:
    QParams(ExactScalar alpha, ExactScalar q);

    const ExactScalar& alpha() const { return alpha_; }
    const ExactScalar& q() const { return q_; }
    /// alpha * q, the second Binet base.
    ExactScalar alpha_q() const { return alpha_ * q_; }

private:
    ExactScalar alpha_, q_;
};

/// q-integer [n]_q = 1 + q + ... + q^(n-1). Evaluated in closed form
/// (1 - q^n)/(1 - q) for q != 1 and as n for q = 1; n >= 0.
ExactScalar q_integer(long n, const ExactScalar& q);

/// Exact check of the index-addition law [m+n]_q = [m]_q + q^m [n]_q.
bool q_index_add_holds(long m, long n, const ExactScalar& q);

/// [2n]_q / [n]_q for n >= 1, which simplifies to 1 + q^n. Evaluated in the
/// simplified form; throws ZeroDenominator when [n]_q = 0 (q = -1 with even
/// n, and other root-of-unity patterns), where the ratio is undefined.
ExactScalar q_lucas_ratio(long n, const ExactScalar& q);

}  // namespace qfbq
