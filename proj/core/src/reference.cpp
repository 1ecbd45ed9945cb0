#include "qfbq/reference.hpp"

#include "qfbq/errors.hpp"

namespace qfbq::ref {

ExactScalar q_integer_by_sum(long n, const ExactScalar& q) {
    if (n < 0) throw NegativeIndex("q-integer index must be >= 0");
    ExactScalar sum = zero_like(q);
    ExactScalar q_pow = one_like(q);
    for (long k = 0; k < n; ++k) {
        sum = sum + q_pow;
        q_pow = q_pow * q;
    }
    return sum;
}

ExactScalar pow_by_mul(const ExactScalar& x, long e) {
    if (e < 0) return pow_by_mul(inv(x), -e);
    ExactScalar acc = one_like(x);
    for (long k = 0; k < e; ++k) acc = acc * x;
    return acc;
}

Bicomplex mul_by_table(const Bicomplex& x, const Bicomplex& y) {
    // sign[a][b], index[a][b] describe e_a * e_b over the basis (1, i, j, ij).
    static constexpr int sign[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, +1, -1, -1},
                                       {+1, -1, -1, +1}};
    static constexpr int index[4][4] = {{0, 1, 2, 3},
                                        {1, 0, 3, 2},
                                        {2, 3, 0, 1},
                                        {3, 2, 1, 0}};
    Vec4 acc{ExactScalar(0), ExactScalar(0), ExactScalar(0), ExactScalar(0)};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            ExactScalar term = x.c(a) * y.c(b);
            auto k = static_cast<std::size_t>(index[a][b]);
            acc[k] = sign[a][b] > 0 ? acc[k] + term : acc[k] - term;
        }
    }
    return Bicomplex(std::move(acc));
}

Bicomplex qfib_by_definition(long n, const QParams& p) {
    if (n < 0) throw NegativeIndex("q-Fibonacci term needs n >= 0");
    Vec4 c;
    for (long k = 0; k < 4; ++k) {
        c[static_cast<std::size_t>(k)] =
            pow_by_mul(p.alpha(), n + k - 1) * q_integer_by_sum(n + k, p.q());
    }
    return Bicomplex(std::move(c));
}

Bicomplex qlucas_by_definition(long n, const QParams& p) {
    if (n < 0) throw NegativeIndex("q-Lucas term needs n >= 0");
    Vec4 c;
    for (long k = 0; k < 4; ++k) {
        long m = n + k;
        ExactScalar ratio =
            m == 0 ? ExactScalar(2) * one_like(p.q())
                   : q_integer_by_sum(2 * m, p.q()) / q_integer_by_sum(m, p.q());
        c[static_cast<std::size_t>(k)] = pow_by_mul(p.alpha(), m) * ratio;
    }
    return Bicomplex(std::move(c));
}

Bicomplex honsberger_lhs_by_definition(long n, long m, const QParams& p) {
    return mul_by_table(qfib_by_definition(n, p), qfib_by_definition(m, p)) +
           mul_by_table(qfib_by_definition(n + 1, p), qfib_by_definition(m + 1, p));
}

Bicomplex docagne_lhs_by_definition(long n, long m, const QParams& p) {
    return mul_by_table(qfib_by_definition(m, p), qfib_by_definition(n + 1, p)) -
           mul_by_table(qfib_by_definition(n, p), qfib_by_definition(m + 1, p));
}

Bicomplex cassini_lhs_by_definition(long n, const QParams& p) {
    if (n < 1) throw NegativeIndex("Cassini needs n >= 1");
    Bicomplex mid = qfib_by_definition(n, p);
    return mul_by_table(qfib_by_definition(n - 1, p), qfib_by_definition(n + 1, p)) -
           mul_by_table(mid, mid);
}

Bicomplex catalan_lhs_by_definition(long n, long r, const QParams& p) {
    if (n < 0 || r < 0 || r > n) throw IndexRange("Catalan needs 0 <= r <= n");
    Bicomplex mid = qfib_by_definition(n, p);
    return mul_by_table(qfib_by_definition(n - r, p), qfib_by_definition(n + r, p)) -
           mul_by_table(mid, mid);
}

Integer fibonacci(long n) {
    if (n < 0) throw NegativeIndex("Fibonacci index must be >= 0");
    Integer a = 0, b = 1;
    for (long k = 0; k < n; ++k) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Integer lucas(long n) {
    if (n < 0) throw NegativeIndex("Lucas index must be >= 0");
    Integer a = 2, b = 1;
    for (long k = 0; k < n; ++k) {
        Integer next = a + b;
        a = b;
        b = next;
    }
    return a;
}

}  // namespace qfbq::ref
