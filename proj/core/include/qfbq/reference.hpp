#pragma once

#include "qfbq/bicomplex.hpp"
#include "qfbq/qcalc.hpp"

namespace qfbq::ref {

/// Definitional evaluators, deliberately independent of the production code
/// paths: q-integers by summation instead of the closed form, powers by
/// repeated multiplication instead of binary exponentiation, bicomplex
/// products by a basis multiplication table instead of the expanded
/// component formula. Tests pit the production implementations against
/// these.

/// [n]_q = 1 + q + ... + q^(n-1), accumulated term by term.
ExactScalar q_integer_by_sum(long n, const ExactScalar& q);

/// x^e by |e| successive multiplications (inverted once for e < 0).
ExactScalar pow_by_mul(const ExactScalar& x, long e);

/// Bicomplex product via the 16 basis products of {1, i, j, ij}.
Bicomplex mul_by_table(const Bicomplex& x, const Bicomplex& y);

/// q-Fibonacci term from the raw definition.
Bicomplex qfib_by_definition(long n, const QParams& p);

/// q-Lucas term with coefficient k carrying the literal ratio
/// [2(n+k)]_q / [(n+k)]_q (the value 2 at n+k = 0).
Bicomplex qlucas_by_definition(long n, const QParams& p);

/// Left-hand sides of the product identities, expanded from definitional
/// terms and table products:
///   honsberger: qfib(n)qfib(m) + qfib(n+1)qfib(m+1)
///   docagne:    qfib(m)qfib(n+1) - qfib(n)qfib(m+1)
///   cassini:    qfib(n-1)qfib(n+1) - qfib(n)^2          (n >= 1)
///   catalan:    qfib(n-r)qfib(n+r) - qfib(n)^2          (0 <= r <= n)
Bicomplex honsberger_lhs_by_definition(long n, long m, const QParams& p);
Bicomplex docagne_lhs_by_definition(long n, long m, const QParams& p);
Bicomplex cassini_lhs_by_definition(long n, const QParams& p);
Bicomplex catalan_lhs_by_definition(long n, long r, const QParams& p);

/// Ordinary Fibonacci and Lucas numbers by the integer recurrence.
Integer fibonacci(long n);
Integer lucas(long n);

}  // namespace qfbq::ref
