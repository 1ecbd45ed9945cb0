#include "qfbq/sequences.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "qfbq/reference.hpp"
#include "support.hpp"

namespace qfbq {
namespace {

using testsupport::bc4;

std::vector<QParams> sample_params() {
    std::vector<QParams> out;
    for (const ExactScalar& a :
         {ExactScalar(1), ExactScalar(2), ExactScalar(Rational(3, 2)),
          ExactScalar(Rational(-2, 3))}) {
        for (const ExactScalar& q :
             {ExactScalar(2), ExactScalar(Rational(1, 2)), ExactScalar(Rational(-1, 3)),
              ExactScalar(3)}) {
            out.emplace_back(a, q);
        }
    }
    return out;
}

TEST(QFib, FrozenValuesAtAlpha1Q2) {
    QParams p(ExactScalar(1), ExactScalar(2));
    EXPECT_EQ(qfib(0, p), bc4(0, 1, 3, 7));
    EXPECT_EQ(qfib(1, p), bc4(1, 3, 7, 15));
    EXPECT_EQ(qfib(2, p), bc4(3, 7, 15, 31));
    EXPECT_THROW(qfib(-1, p), NegativeIndex);
}

TEST(QLucas, FrozenValuesAtAlpha1Q2) {
    QParams p(ExactScalar(1), ExactScalar(2));
    EXPECT_EQ(qlucas(0, p), bc4(2, 3, 5, 9));
    EXPECT_EQ(qlucas(1, p), bc4(3, 5, 9, 17));
    EXPECT_THROW(qlucas(-1, p), NegativeIndex);
}

TEST(QFib, ScalarPartVanishesAtZero) {
    QParams p(ExactScalar(2), ExactScalar(3));
    EXPECT_TRUE(scalar_part(qfib(0, p)).is_zero());  // [0]_q = 0
}

TEST(Sequences, AgreeWithDefinitionalOracle) {
    for (const QParams& p : sample_params()) {
        for (long n = 0; n <= 16; ++n) {
            EXPECT_EQ(qfib(n, p), ref::qfib_by_definition(n, p));
            EXPECT_EQ(qlucas(n, p), ref::qlucas_by_definition(n, p));
        }
    }
}

TEST(Binet, ConstantsAtFrozenPoints) {
    QParams p(ExactScalar(1), ExactScalar(2));
    auto [gamma, delta] = binet_constants(p);
    EXPECT_EQ(gamma, bc4(1, 1, 1, 1));
    EXPECT_EQ(delta, bc4(1, 2, 4, 8));
    EXPECT_EQ(gamma * delta, bc4(3, -9, -5, 15));
    EXPECT_EQ(gamma * delta, delta * gamma);

    // alpha*q = 1 is allowed (only q = 1 is excluded).
    QParams p2(ExactScalar(2), ExactScalar(Rational(1, 2)));
    EXPECT_EQ(binet_constants(p2).delta, bc4(1, 1, 1, 1));
}

TEST(Binet, FormulasMatchDefinitions) {
    for (const QParams& p : sample_params()) {
        for (long n = 0; n <= 16; ++n) {
            EXPECT_EQ(qfib_binet(n, p), qfib(n, p));
            EXPECT_EQ(qlucas_binet(n, p), qlucas(n, p));
        }
    }
}

// The Lucas closed form takes a plus sign between the two Binet terms; the
// minus variant is a different object: it collapses to (alpha - alpha*q)
// times the Fibonacci term.
TEST(Binet, LucasMinusVariantIsNotLucas) {
    QParams p(ExactScalar(1), ExactScalar(2));
    long n = 1;
    auto [gamma, delta] = binet_constants(p);
    Bicomplex minus_variant = pow(p.alpha(), n) * gamma - pow(p.alpha_q(), n) * delta;
    EXPECT_NE(minus_variant, qlucas(n, p));
    EXPECT_EQ(minus_variant, scale(p.alpha() - p.alpha_q(), qfib(n, p)));
}

// Term addition in Binet form: qfib(n) + qfib(m) equals
// [(alpha^n + alpha^m) gamma - ((alpha q)^n + (alpha q)^m) delta] / (alpha - alpha q),
// with the minus sign in front of the delta group.
TEST(Binet, AdditionLawKeepsMinusSign) {
    for (const QParams& p : sample_params()) {
        auto [gamma, delta] = binet_constants(p);
        ExactScalar aq = p.alpha_q();
        for (long n = 0; n <= 6; ++n) {
            for (long m = 0; m <= 6; ++m) {
                Bicomplex expected =
                    inv(p.alpha() - aq) *
                    ((pow(p.alpha(), n) + pow(p.alpha(), m)) * gamma -
                     (pow(aq, n) + pow(aq, m)) * delta);
                EXPECT_EQ(qfib(n, p) + qfib(m, p), expected);
            }
        }
    }
}

TEST(Classical, ParametersSatisfyGoldenRelations) {
    QParams p = classical_params();
    ExactScalar alpha = p.alpha();
    EXPECT_TRUE(p.alpha_q() == -inv(alpha));
    EXPECT_TRUE(p.q() == -inv(alpha * alpha));
    EXPECT_TRUE(alpha * alpha == alpha + one_like(alpha));
}

TEST(Classical, CollapsesToFibonacciAndLucas) {
    QParams p = classical_params();
    for (long n = 0; n <= 30; ++n) {
        Bicomplex f = qfib(n, p);
        Bicomplex l = qlucas(n, p);
        for (long k = 0; k < 4; ++k) {
            ExactScalar fc = f.c(static_cast<int>(k));
            ExactScalar lc = l.c(static_cast<int>(k));
            // sqrt5 components cancel exactly; values are plain integers.
            ASSERT_EQ(fc.kind(), ScalarKind::QuadExt);
            EXPECT_TRUE(fc.quadext().b().is_zero());
            EXPECT_TRUE(fc.quadext().a().is_integer());
            EXPECT_TRUE(fc == ExactScalar(Rational(ref::fibonacci(n + k))));
            EXPECT_TRUE(lc == ExactScalar(Rational(ref::lucas(n + k))));
        }
    }
    EXPECT_EQ(ref::fibonacci(30), Integer(832040));
    EXPECT_EQ(ref::lucas(30), Integer(1860498));
    EXPECT_TRUE(scalar_part(qfib(10, p)) == ExactScalar(55));
}

TEST(Classical, IntegersFollowRecurrences) {
    QParams p = classical_params();
    for (long n = 0; n <= 28; ++n) {
        EXPECT_EQ(qfib(n, p) + qfib(n + 1, p), qfib(n + 2, p));
        EXPECT_EQ(qlucas(n, p) + qlucas(n + 1, p), qlucas(n + 2, p));
    }
}

TEST(Egf, PartialSumExactCases) {
    QParams p(ExactScalar(1), ExactScalar(2));
    EXPECT_EQ(egf_partial(0, ExactScalar(1), p), qfib(0, p));
    EXPECT_EQ(egf_partial(7, ExactScalar(0), p), qfib(0, p));

    Bicomplex expected = qfib(0, p) + qfib(1, p) +
                         ExactScalar(Rational(1, 2)) * qfib(2, p) +
                         ExactScalar(Rational(1, 6)) * qfib(3, p);
    EXPECT_EQ(egf_partial(3, ExactScalar(1), p), expected);
    EXPECT_THROW(egf_partial(-1, ExactScalar(1), p), NegativeIndex);
}

TEST(Egf, PartialSumFloatTracksExact) {
    QParams p(ExactScalar(1), ExactScalar(Rational(1, 2)));
    ExactScalar t_exact(Rational(1, 10));
    Bicomplex exact = egf_partial(12, t_exact, p);
    Bicomplex approx = egf_partial(12, to_bigfloat(t_exact, 128), p);
    Bicomplex exact_f = to_bigfloat(exact, 128);
    BigFloat tol = BigFloat::of_rational(
        Rational(Integer(1), Integer("10000000000000000000000000000000")), 128);
    for (int k = 0; k < 4; ++k) {
        BigFloat err = (approx.c(k).bigfloat() - exact_f.c(k).bigfloat()).abs();
        EXPECT_TRUE(err < tol) << err.str();
    }
}

TEST(Egf, ClosedFormAtZeroEqualsFirstTerm) {
    QParams p(ExactScalar(1), ExactScalar(2));
    Bicomplex closed = egf_closed(ExactScalar(0), p, 128);
    Bicomplex expected = to_bigfloat(qfib(0, p), 128);
    EXPECT_EQ(closed, expected);  // exact float equality: e^0 = 1, gap = -1
    EXPECT_THROW(egf_closed(ExactScalar(0), p, 32), InvalidParams);
}

TEST(Egf, PartialSumConvergesWithinTailBound) {
    QParams p(ExactScalar(1), ExactScalar(Rational(1, 2)));
    ExactScalar t(Rational(1, 10));
    const mpfr_prec_t kProbe = 768;  // evaluation error far below the tail bound

    Bicomplex closed = egf_closed(t, p, kProbe);
    BigFloat prev_diff = BigFloat::of_long(1, kProbe);
    for (long n_terms : {20L, 40L, 60L}) {
        Bicomplex partial = to_bigfloat(egf_partial(n_terms, t, p), kProbe);
        BigFloat bound = egf_tail_bound(n_terms, t, p, kProbe);
        BigFloat worst(kProbe);
        for (int k = 0; k < 4; ++k) {
            BigFloat err = (partial.c(k).bigfloat() - closed.c(k).bigfloat()).abs();
            if (worst < err) worst = err;
        }
        EXPECT_TRUE(worst <= bound) << "N=" << n_terms << " err=" << worst.str()
                                    << " bound=" << bound.str();
        EXPECT_TRUE(worst < prev_diff);
        prev_diff = worst;
    }
}

TEST(Egf, TailBoundShrinksWithN) {
    QParams p(ExactScalar(1), ExactScalar(Rational(1, 2)));
    ExactScalar t(Rational(1, 10));
    BigFloat b20 = egf_tail_bound(20, t, p, 256);
    BigFloat b40 = egf_tail_bound(40, t, p, 256);
    EXPECT_TRUE(b40 < b20);
    EXPECT_TRUE(BigFloat(256) < b40);
}

}  // namespace
}  // namespace qfbq
