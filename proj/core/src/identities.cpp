#include "qfbq/identities.hpp"

#include <algorithm>

#include "qfbq/errors.hpp"
#include "qfbq/reference.hpp"

namespace qfbq {

namespace {

void require_cassini_index(long n) {
    if (n < 1) throw NegativeIndex("Cassini needs n >= 1");
}

void require_catalan_indices(long n, long r) {
    if (n < 0 || r < 0 || r > n) throw IndexRange("Catalan needs 0 <= r <= n");
}

void require_nonzero_q(const QParams& p) {
    if (p.q().is_zero())
        throw ZeroQ("identity right-hand side needs negative powers of q");
}

}  // namespace

Bicomplex honsberger_lhs(long n, long m, const QParams& p) {
    return qfib(n, p) * qfib(m, p) + qfib(n + 1, p) * qfib(m + 1, p);
}

Bicomplex docagne_lhs(long n, long m, const QParams& p) {
    return qfib(m, p) * qfib(n + 1, p) - qfib(n, p) * qfib(m + 1, p);
}

Bicomplex cassini_lhs(long n, const QParams& p) {
    require_cassini_index(n);
    Bicomplex mid = qfib(n, p);
    return qfib(n - 1, p) * qfib(n + 1, p) - mid * mid;
}

Bicomplex catalan_lhs(long n, long r, const QParams& p) {
    require_catalan_indices(n, r);
    Bicomplex mid = qfib(n, p);
    return qfib(n - r, p) * qfib(n + r, p) - mid * mid;
}

Bicomplex honsberger_rhs(long n, long m, const QParams& p) {
    auto [gamma, delta] = binet_constants(p);
    const ExactScalar& a = p.alpha();
    ExactScalar aq = p.alpha_q();
    ExactScalar one = one_like(a);
    ExactScalar front = pow(a, n + m) * inv(pow(a - aq, 2));
    ExactScalar mid = (one + a * aq) * (pow(p.q(), n) + pow(p.q(), m));
    ExactScalar back = (one + aq * aq) * pow(p.q(), n + m);
    return front * ((one + a * a) * (gamma * gamma) - mid * (gamma * delta) +
                    back * (delta * delta));
}

Bicomplex docagne_rhs(long n, long m, const QParams& p) {
    auto [gamma, delta] = binet_constants(p);
    ExactScalar one = one_like(p.q());
    ExactScalar front =
        pow(p.alpha(), n + m - 1) * (pow(p.q(), n) - pow(p.q(), m)) * inv(one - p.q());
    return front * (gamma * delta);
}

Bicomplex cassini_rhs(long n, const QParams& p) {
    require_cassini_index(n);
    require_nonzero_q(p);
    auto [gamma, delta] = binet_constants(p);
    ExactScalar one = one_like(p.q());
    ExactScalar front = pow(p.alpha(), 2 * n - 2) * pow(p.q(), n) *
                        (one - inv(p.q())) * inv(one - p.q());
    return front * (gamma * delta);
}

Bicomplex catalan_rhs(long n, long r, const QParams& p) {
    require_catalan_indices(n, r);
    require_nonzero_q(p);
    auto [gamma, delta] = binet_constants(p);
    ExactScalar one = one_like(p.q());
    ExactScalar front = pow(p.alpha(), 2 * n - 2) * pow(p.q(), n) *
                        (one - pow(p.q(), r)) * (one - pow(p.q(), -r)) *
                        inv(pow(one - p.q(), 2));
    return front * (gamma * delta);
}

namespace {

using CaseEval = Bicomplex (*)(long, long, const QParams&);

IdentityReport run_case(IdentityKind kind, const QParams& p, long n,
                        std::optional<long> second, CaseEval lhs_fn, CaseEval rhs_fn,
                        CaseEval oracle_fn) {
    IdentityReport report;
    report.name = kind;
    report.alpha = p.alpha();
    report.q = p.q();
    report.n = n;
    report.second = second;
    long s = second.value_or(0);
    try {
        report.lhs = lhs_fn(n, s, p);
        report.rhs_closed = rhs_fn(n, s, p);
        report.rhs_oracle = oracle_fn(n, s, p);
        bool match = *report.lhs == *report.rhs_closed && *report.lhs == *report.rhs_oracle;
        report.verdict = match ? Verdict::ExactMatch : Verdict::Mismatch;
    } catch (const Error& e) {
        report.lhs.reset();
        report.rhs_closed.reset();
        report.rhs_oracle.reset();
        report.verdict = Verdict::Skipped;
        report.reason = e.what();
    }
    return report;
}

}  // namespace

std::vector<IdentityReport> verify_grid(const std::vector<QParams>& params,
                                        IndexSpan n_span, IndexSpan m_span,
                                        std::optional<IndexSpan> r_span) {
    std::vector<IdentityReport> out;

    for (const QParams& p : params) {
        for (long n = n_span.lo; n <= n_span.hi; ++n) {
            for (long m = m_span.lo; m <= m_span.hi; ++m) {
                out.push_back(run_case(
                    IdentityKind::Honsberger, p, n, m,
                    [](long a, long b, const QParams& pp) { return honsberger_lhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) { return honsberger_rhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) {
                        return ref::honsberger_lhs_by_definition(a, b, pp);
                    }));
            }
        }
    }

    for (const QParams& p : params) {
        for (long n = n_span.lo; n <= n_span.hi; ++n) {
            for (long m = m_span.lo; m <= m_span.hi; ++m) {
                out.push_back(run_case(
                    IdentityKind::DOcagne, p, n, m,
                    [](long a, long b, const QParams& pp) { return docagne_lhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) { return docagne_rhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) {
                        return ref::docagne_lhs_by_definition(a, b, pp);
                    }));
            }
        }
    }

    for (const QParams& p : params) {
        for (long n = std::max(n_span.lo, 1L); n <= n_span.hi; ++n) {
            out.push_back(run_case(
                IdentityKind::Cassini, p, n, std::nullopt,
                [](long a, long, const QParams& pp) { return cassini_lhs(a, pp); },
                [](long a, long, const QParams& pp) { return cassini_rhs(a, pp); },
                [](long a, long, const QParams& pp) {
                    return ref::cassini_lhs_by_definition(a, pp);
                }));
        }
    }

    for (const QParams& p : params) {
        for (long n = std::max(n_span.lo, 0L); n <= n_span.hi; ++n) {
            long r_lo = r_span ? r_span->lo : 0;
            long r_hi = r_span ? r_span->hi : n;
            for (long r = r_lo; r <= r_hi; ++r) {
                out.push_back(run_case(
                    IdentityKind::Catalan, p, n, r,
                    [](long a, long b, const QParams& pp) { return catalan_lhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) { return catalan_rhs(a, b, pp); },
                    [](long a, long b, const QParams& pp) {
                        return ref::catalan_lhs_by_definition(a, b, pp);
                    }));
            }
        }
    }

    return out;
}

GridSummary summarize(const std::vector<IdentityReport>& reports) {
    GridSummary s;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::ExactMatch:
                ++s.checked;
                ++s.matched;
                break;
            case Verdict::Mismatch:
                ++s.checked;
                ++s.mismatched;
                break;
            case Verdict::Skipped: ++s.skipped; break;
        }
    }
    return s;
}

std::string to_string(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::Honsberger: return "Honsberger";
        case IdentityKind::DOcagne: return "DOcagne";
        case IdentityKind::Cassini: return "Cassini";
        case IdentityKind::Catalan: return "Catalan";
    }
    return {};
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::ExactMatch: return "ExactMatch";
        case Verdict::Mismatch: return "Mismatch";
        case Verdict::Skipped: return "Skipped";
    }
    return {};
}

}  // namespace qfbq
