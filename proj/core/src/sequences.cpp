#include "qfbq/sequences.hpp"

#include "qfbq/errors.hpp"

namespace qfbq {

namespace {

void require_index(long n, const char* what) {
    if (n < 0) throw NegativeIndex(std::string(what) + " needs n >= 0");
}

Rational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

BigFloat abs_bigfloat(const ExactScalar& x, mpfr_prec_t bits) {
    return to_bigfloat(x, bits).bigfloat().abs();
}

}  // namespace

Bicomplex qfib(long n, const QParams& p) {
    require_index(n, "q-Fibonacci term");
    Vec4 c;
    for (long k = 0; k < 4; ++k) {
        c[static_cast<std::size_t>(k)] =
            pow(p.alpha(), n + k - 1) * q_integer(n + k, p.q());
    }
    return Bicomplex(std::move(c));
}

Bicomplex qlucas(long n, const QParams& p) {
    require_index(n, "q-Lucas term");
    ExactScalar one = one_like(p.q());
    Vec4 c;
    for (long k = 0; k < 4; ++k) {
        c[static_cast<std::size_t>(k)] =
            pow(p.alpha(), n + k) * (one + pow(p.q(), n + k));
    }
    return Bicomplex(std::move(c));
}

BinetConstants binet_constants(const QParams& p) {
    const ExactScalar& a = p.alpha();
    ExactScalar aq = p.alpha_q();
    return BinetConstants{
        Bicomplex{one_like(a), a, a * a, a * a * a},
        Bicomplex{one_like(aq), aq, aq * aq, aq * aq * aq},
    };
}

Bicomplex qfib_binet(long n, const QParams& p) {
    require_index(n, "q-Fibonacci Binet form");
    auto [gamma, delta] = binet_constants(p);
    ExactScalar aq = p.alpha_q();
    ExactScalar denom = p.alpha() - aq;  // nonzero: alpha != 0 and q != 1
    return inv(denom) * (pow(p.alpha(), n) * gamma - pow(aq, n) * delta);
}

Bicomplex qlucas_binet(long n, const QParams& p) {
    require_index(n, "q-Lucas Binet form");
    auto [gamma, delta] = binet_constants(p);
    return pow(p.alpha(), n) * gamma + pow(p.alpha_q(), n) * delta;
}

Bicomplex egf_partial(long N, const ExactScalar& t, const QParams& p) {
    require_index(N, "EGF partial sum");
    if (t.is_exact()) {
        ExactScalar factor = one_like(t);  // t^n / n!, advanced per term
        Bicomplex sum = factor * qfib(0, p);
        for (long n = 1; n <= N; ++n) {
            factor = factor * t / ExactScalar(n);
            sum = sum + factor * qfib(n, p);
        }
        return sum;
    }
    mpfr_prec_t bits = t.bigfloat().precision();
    ExactScalar factor = one_like(t);
    Bicomplex sum = factor * to_bigfloat(qfib(0, p), bits);
    for (long n = 1; n <= N; ++n) {
        factor = factor * t / to_bigfloat(ExactScalar(n), bits);
        sum = sum + factor * to_bigfloat(qfib(n, p), bits);
    }
    return sum;
}

Bicomplex egf_closed(const ExactScalar& t, const QParams& p, mpfr_prec_t precision_bits) {
    if (precision_bits < 64)
        throw InvalidParams("EGF closed form needs precision >= 64 bits");
    ExactScalar a = to_bigfloat(p.alpha(), precision_bits);
    ExactScalar aq = to_bigfloat(p.alpha_q(), precision_bits);
    ExactScalar tf = to_bigfloat(t, precision_bits);
    auto [gamma, delta] = binet_constants(p);
    ExactScalar u = ExactScalar((a * tf).bigfloat().exp());
    ExactScalar v = ExactScalar((aq * tf).bigfloat().exp());
    Bicomplex num = u * to_bigfloat(gamma, precision_bits) -
                    v * to_bigfloat(delta, precision_bits);
    return inv(a - aq) * num;
}

BigFloat egf_tail_bound(long N, const ExactScalar& t, const QParams& p,
                        mpfr_prec_t precision_bits) {
    require_index(N, "EGF tail bound");
    BigFloat am = abs_bigfloat(p.alpha(), precision_bits);
    BigFloat aqm = abs_bigfloat(p.alpha_q(), precision_bits);
    BigFloat m = am < aqm ? aqm : am;
    BigFloat one = BigFloat::of_long(1, precision_bits);
    BigFloat cap = m * m * m;
    if (cap < one) cap = one;
    BigFloat x = m * abs_bigfloat(t, precision_bits);

    BigFloat x_pow = BigFloat::of_long(1, precision_bits);
    for (long k = 0; k <= N; ++k) x_pow = x_pow * x;
    BigFloat denom_gap = abs_bigfloat(p.alpha() - p.alpha_q(), precision_bits);
    BigFloat fact = BigFloat::of_rational(factorial(N + 1), precision_bits);

    return BigFloat::of_long(2, precision_bits) * cap / denom_gap * x_pow / fact * x.exp();
}

Bicomplex to_bigfloat(const Bicomplex& x, mpfr_prec_t precision_bits) {
    return Bicomplex{to_bigfloat(x.c(0), precision_bits), to_bigfloat(x.c(1), precision_bits),
                     to_bigfloat(x.c(2), precision_bits), to_bigfloat(x.c(3), precision_bits)};
}

QParams classical_params() {
    QuadExt alpha(Rational(1, 2), Rational(1, 2), 5);
    QuadExt q(Rational(-3, 2), Rational(1, 2), 5);
    return QParams(ExactScalar(alpha), ExactScalar(q));
}

}  // namespace qfbq
