#include "qfbq/identities.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "qfbq/reference.hpp"
#include "qfbq/serialize.hpp"
#include "support.hpp"

namespace qfbq {
namespace {

using testsupport::bc4;

TEST(Cassini, WorkedConstantAtAlpha1Q2N1) {
    QParams p(ExactScalar(1), ExactScalar(2));
    Bicomplex expected = bc4(-3, 9, 5, -15);
    EXPECT_EQ(cassini_lhs(1, p), expected);
    EXPECT_EQ(cassini_rhs(1, p), expected);
    auto [gamma, delta] = binet_constants(p);
    EXPECT_EQ(expected, -(gamma * delta));
}

TEST(Cassini, DomainRequirements) {
    QParams p(ExactScalar(1), ExactScalar(2));
    EXPECT_THROW(cassini_lhs(0, p), NegativeIndex);
    EXPECT_THROW(cassini_rhs(0, p), NegativeIndex);
    QParams zero_q(ExactScalar(1), ExactScalar(0));
    EXPECT_THROW(cassini_rhs(2, zero_q), ZeroQ);
    EXPECT_NO_THROW(cassini_lhs(2, zero_q));
}

TEST(DOcagne, StructureAndFrozenCase) {
    QParams p(ExactScalar(1), ExactScalar(2));
    EXPECT_EQ(docagne_lhs(1, 0, p), bc4(-3, 9, 5, -15));
    EXPECT_EQ(docagne_rhs(1, 0, p), bc4(-3, 9, 5, -15));
    for (long n = 0; n <= 5; ++n) {
        EXPECT_TRUE(docagne_lhs(n, n, p).is_zero());
        EXPECT_TRUE(docagne_rhs(n, n, p).is_zero());
        for (long m = 0; m <= 5; ++m) {
            EXPECT_EQ(docagne_lhs(n, m, p), -docagne_lhs(m, n, p));
            EXPECT_EQ(docagne_rhs(n, m, p), -docagne_rhs(m, n, p));
        }
    }
}

TEST(Honsberger, SymmetricInIndices) {
    QParams p(ExactScalar(Rational(3, 2)), ExactScalar(Rational(-1, 3)));
    for (long n = 0; n <= 4; ++n) {
        for (long m = 0; m <= 4; ++m) {
            EXPECT_EQ(honsberger_lhs(n, m, p), honsberger_lhs(m, n, p));
            EXPECT_EQ(honsberger_rhs(n, m, p), honsberger_rhs(m, n, p));
        }
    }
}

TEST(Catalan, EdgeCases) {
    QParams p(ExactScalar(2), ExactScalar(Rational(1, 2)));
    for (long n = 0; n <= 6; ++n) {
        EXPECT_TRUE(catalan_lhs(n, 0, p).is_zero());
        EXPECT_TRUE(catalan_rhs(n, 0, p).is_zero());
    }
    for (long n = 1; n <= 6; ++n) {
        EXPECT_EQ(catalan_lhs(n, 1, p), cassini_lhs(n, p));
        EXPECT_EQ(catalan_rhs(n, 1, p), cassini_rhs(n, p));
    }
    EXPECT_THROW(catalan_lhs(2, 3, p), IndexRange);
    EXPECT_THROW(catalan_rhs(2, -1, p), IndexRange);
}

TEST(Identities, HoldAcrossParameterGrid) {
    std::vector<QParams> params;
    for (const ExactScalar& a : {ExactScalar(1), ExactScalar(Rational(3, 2))}) {
        for (const ExactScalar& q : {ExactScalar(2), ExactScalar(Rational(-1, 3))}) {
            params.emplace_back(a, q);
        }
    }
    for (const QParams& p : params) {
        for (long n = 0; n <= 6; ++n) {
            for (long m = 0; m <= 6; ++m) {
                EXPECT_EQ(honsberger_lhs(n, m, p), honsberger_rhs(n, m, p));
                EXPECT_EQ(honsberger_lhs(n, m, p),
                          ref::honsberger_lhs_by_definition(n, m, p));
                EXPECT_EQ(docagne_lhs(n, m, p), docagne_rhs(n, m, p));
                EXPECT_EQ(docagne_lhs(n, m, p), ref::docagne_lhs_by_definition(n, m, p));
            }
            if (n >= 1) {
                EXPECT_EQ(cassini_lhs(n, p), cassini_rhs(n, p));
                EXPECT_EQ(cassini_lhs(n, p), ref::cassini_lhs_by_definition(n, p));
            }
            for (long r = 0; r <= n; ++r) {
                EXPECT_EQ(catalan_lhs(n, r, p), catalan_rhs(n, r, p));
                EXPECT_EQ(catalan_lhs(n, r, p), ref::catalan_lhs_by_definition(n, r, p));
            }
        }
    }
}

TEST(Identities, HoldAtClassicalParameters) {
    QParams p = classical_params();
    for (long n = 1; n <= 6; ++n) {
        for (long m = 0; m <= 6; ++m) {
            EXPECT_EQ(honsberger_lhs(n, m, p), honsberger_rhs(n, m, p));
            EXPECT_EQ(docagne_lhs(n, m, p), docagne_rhs(n, m, p));
        }
        EXPECT_EQ(cassini_lhs(n, p), cassini_rhs(n, p));
        EXPECT_EQ(catalan_lhs(n, 1, p), catalan_rhs(n, 1, p));
    }
}

// A plausible-looking Honsberger variant divides by (alpha - alpha*q) only
// once and leaves the first Binet constant unsquared. It is not the closed
// form: the definitional evaluation refutes it at generic points.
TEST(Honsberger, UnsquaredVariantIsRejected) {
    QParams p(ExactScalar(1), ExactScalar(2));
    long n = 0, m = 0;
    auto [gamma, delta] = binet_constants(p);
    ExactScalar aq = p.alpha_q();
    ExactScalar one = one_like(p.alpha());
    ExactScalar front = pow(p.alpha(), n + m) * inv(p.alpha() - aq);
    Bicomplex variant =
        front * ((one + p.alpha() * p.alpha()) * gamma -
                 ((one + p.alpha() * aq) * (pow(p.q(), n) + pow(p.q(), m))) *
                     (gamma * delta) +
                 ((one + aq * aq) * pow(p.q(), n + m)) * (delta * delta));
    EXPECT_EQ(variant, bc4(-209, 244, 88, -72));
    Bicomplex truth = ref::honsberger_lhs_by_definition(n, m, p);
    EXPECT_EQ(truth, bc4(207, -246, -90, 78));
    EXPECT_NE(variant, truth);
    EXPECT_EQ(honsberger_rhs(n, m, p), truth);
}

TEST(VerifyGrid, CountsAndOrderAreDeterministic) {
    std::vector<QParams> params{QParams(ExactScalar(1), ExactScalar(2))};
    auto reports = verify_grid(params, IndexSpan{0, 2}, IndexSpan{0, 2});
    // Honsberger 9 + DOcagne 9 + Cassini 2 + Catalan (1+2+3) = 26.
    ASSERT_EQ(reports.size(), 26u);
    EXPECT_EQ(reports.front().name, IdentityKind::Honsberger);
    EXPECT_EQ(reports.front().n, 0);
    EXPECT_EQ(reports.front().second, std::optional<long>(0));
    EXPECT_EQ(reports.back().name, IdentityKind::Catalan);
    EXPECT_EQ(reports.back().n, 2);
    EXPECT_EQ(reports.back().second, std::optional<long>(2));

    GridSummary s = summarize(reports);
    EXPECT_EQ(s.checked, 26);
    EXPECT_EQ(s.matched, 26);
    EXPECT_EQ(s.mismatched, 0);
    EXPECT_EQ(s.skipped, 0);

    auto again = verify_grid(params, IndexSpan{0, 2}, IndexSpan{0, 2});
    for (std::size_t k = 0; k < reports.size(); ++k) {
        EXPECT_EQ(to_json(reports[k]), to_json(again[k]));
    }
}

TEST(VerifyGrid, ZeroQSkipsIdentitiesNeedingInverseQ) {
    std::vector<QParams> params{QParams(ExactScalar(1), ExactScalar(0))};
    auto reports = verify_grid(params, IndexSpan{0, 3}, IndexSpan{0, 3});
    GridSummary s = summarize(reports);
    EXPECT_EQ(s.mismatched, 0);
    // Cassini n in 1..3 plus Catalan r in [0,n] for n in 0..3: 3 + 10 skipped.
    EXPECT_EQ(s.skipped, 13);
    EXPECT_EQ(s.checked, 32);  // Honsberger 16 + DOcagne 16
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Skipped) {
            EXPECT_TRUE(r.name == IdentityKind::Cassini || r.name == IdentityKind::Catalan);
            EXPECT_FALSE(r.reason.empty());
            EXPECT_FALSE(r.lhs.has_value());
        }
    }
}

TEST(VerifyGrid, ExplicitRSpanSkipsOutOfRangeCases) {
    std::vector<QParams> params{QParams(ExactScalar(1), ExactScalar(2))};
    auto reports = verify_grid(params, IndexSpan{0, 1}, IndexSpan{0, 0},
                               IndexSpan{2, 3});
    long catalan_skipped = 0;
    for (const auto& r : reports) {
        if (r.name == IdentityKind::Catalan) {
            EXPECT_EQ(r.verdict, Verdict::Skipped);
            ++catalan_skipped;
        }
    }
    EXPECT_EQ(catalan_skipped, 4);  // r in {2,3} x n in {0,1}, all with r > n
}

TEST(VerifyGrid, EmptyParamsYieldEmptyReport) {
    auto reports = verify_grid({}, IndexSpan{0, 5}, IndexSpan{0, 5});
    EXPECT_TRUE(reports.empty());
    GridSummary s = summarize(reports);
    EXPECT_EQ(s.checked + s.matched + s.mismatched + s.skipped, 0);
}

TEST(Serialize, ReportAndSummaryShapes) {
    std::vector<QParams> params{QParams(ExactScalar(1), ExactScalar(2))};
    auto reports = verify_grid(params, IndexSpan{1, 1}, IndexSpan{0, 0});
    ASSERT_FALSE(reports.empty());

    std::string line = to_json(reports.front());
    EXPECT_NE(line.find("\"identity\":\"Honsberger\""), std::string::npos);
    EXPECT_NE(line.find("\"alpha\":\"1\""), std::string::npos);
    EXPECT_NE(line.find("\"m\":0"), std::string::npos);
    EXPECT_NE(line.find("\"verdict\":\"ExactMatch\""), std::string::npos);
    EXPECT_NE(line.find("\"rhs_oracle\""), std::string::npos);

    const IdentityReport& cassini = *std::find_if(
        reports.begin(), reports.end(),
        [](const IdentityReport& r) { return r.name == IdentityKind::Cassini; });
    std::string cassini_line = to_json(cassini);
    EXPECT_EQ(cassini_line.find("\"m\":"), std::string::npos);
    EXPECT_EQ(cassini_line.find("\"r\":"), std::string::npos);

    EXPECT_EQ(to_json(summarize(reports)),
              R"({"checked":5,"matched":5,"mismatched":0,"skipped":0})");

    SequenceTerm term{1, SequenceKind::QFib, qfib(1, params.front())};
    EXPECT_EQ(to_json(term),
              R"({"n":1,"kind":"BF","value":{"c0":"1","c1":"3","c2":"7","c3":"15"}})");
    EXPECT_EQ(to_csv_row(term), "1,1,3,7,15");
    EXPECT_EQ(csv_header(), "n,c0,c1,c2,c3");
}

}  // namespace
}  // namespace qfbq
