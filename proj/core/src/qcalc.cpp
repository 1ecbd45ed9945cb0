#include "qfbq/qcalc.hpp"

#include "qfbq/errors.hpp"

namespace qfbq {

QParams::QParams(ExactScalar alpha, ExactScalar q)
    : alpha_(std::move(alpha)), q_(std::move(q)) {
    if (!alpha_.is_exact() || !q_.is_exact())
        throw InvalidParams("sequence parameters must be exact scalars");
    if (alpha_.is_zero()) throw InvalidParams("alpha must be nonzero");
    if (q_ == ExactScalar(1)) throw InvalidParams("q must differ from 1");
}

ExactScalar q_integer(long n, const ExactScalar& q) {
    if (n < 0) throw NegativeIndex("q-integer index must be >= 0");
    ExactScalar one = one_like(q);
    if (q == one) return ExactScalar(n) * one;
    return (one - pow(q, n)) / (one - q);
}

bool q_index_add_holds(long m, long n, const ExactScalar& q) {
    return q_integer(m + n, q) == q_integer(m, q) + pow(q, m) * q_integer(n, q);
}

ExactScalar q_lucas_ratio(long n, const ExactScalar& q) {
    if (n < 1) throw NegativeIndex("q-Lucas ratio needs n >= 1");
    if (q_integer(n, q).is_zero())
        throw ZeroDenominator("[n]_q vanishes; the ratio [2n]_q/[n]_q is undefined");
    return one_like(q) + pow(q, n);
}

}  // namespace qfbq
