#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfbq/sequences.hpp"

namespace qfbq {

enum class IdentityKind { Honsberger, DOcagne, Cassini, Catalan };

enum class Verdict { ExactMatch, Mismatch, Skipped };

/// One verified grid case. For checked cases all three evaluations are
/// present: the production left-hand side, the closed-form right-hand side,
/// and an independent definitional evaluation of the left-hand side.
/// ExactMatch means the three coincide bit-exactly. Skipped cases carry a
/// reason and no values.
struct IdentityReport {
    IdentityKind name;
    ExactScalar alpha;
    ExactScalar q;
    long n = 0;
    /// Second index: m for Honsberger and d'Ocagne, r for Catalan,
    /// absent for Cassini.
    std::optional<long> second;
    std::optional<Bicomplex> lhs;
    std::optional<Bicomplex> rhs_closed;
    std::optional<Bicomplex> rhs_oracle;
    Verdict verdict = Verdict::Skipped;
    std::string reason;
};

/// Product identities, left-hand sides (production arithmetic):
///   honsberger: qfib(n)qfib(m) + qfib(n+1)qfib(m+1)
///   docagne:    qfib(m)qfib(n+1) - qfib(n)qfib(m+1)
///   cassini:    qfib(n-1)qfib(n+1) - qfib(n)^2          (n >= 1)
///   catalan:    qfib(n-r)qfib(n+r) - qfib(n)^2          (0 <= r <= n)
Bicomplex honsberger_lhs(long n, long m, const QParams& p);
Bicomplex docagne_lhs(long n, long m, const QParams& p);
Bicomplex cassini_lhs(long n, const QParams& p);
Bicomplex catalan_lhs(long n, long r, const QParams& p);

/// Closed-form right-hand sides, with gamma/delta the Binet constants:
///   honsberger: alpha^(n+m)/(alpha-alpha q)^2 * [ (1+alpha^2) gamma^2
///               - (1+alpha^2 q)(q^n+q^m) gamma delta
///               + (1+(alpha q)^2) q^(n+m) delta^2 ]
///   docagne:    alpha^(n+m-1) (q^n - q^m)/(1-q) * gamma delta
///   cassini:    alpha^(2n-2) q^n (1-q^-1)/(1-q) * gamma delta
///   catalan:    alpha^(2n-2) q^n (1-q^r)(1-q^-r)/(1-q)^2 * gamma delta
/// Cassini and Catalan need q != 0 (ZeroQ otherwise).
Bicomplex honsberger_rhs(long n, long m, const QParams& p);
Bicomplex docagne_rhs(long n, long m, const QParams& p);
Bicomplex cassini_rhs(long n, const QParams& p);
Bicomplex catalan_rhs(long n, long r, const QParams& p);

/// Inclusive index range.
struct IndexSpan {
    long lo;
    long hi;
};

/// Checks every identity over the cartesian grid: Honsberger and d'Ocagne
/// over n_span x m_span, Cassini over n_span clamped to n >= 1, Catalan over
/// n_span with r from r_span when given (cases with r > n are skipped) and
/// r in [0, n] otherwise. Cases whose evaluation raises a library error
/// (e.g. q = 0 with Cassini) become Skipped entries instead of failures.
///
/// Report order is deterministic: identity (Honsberger, DOcagne, Cassini,
/// Catalan), then parameter set in the given order, then n, then the second
/// index, ascending.
std::vector<IdentityReport> verify_grid(const std::vector<QParams>& params,
                                        IndexSpan n_span, IndexSpan m_span,
                                        std::optional<IndexSpan> r_span = std::nullopt);

struct GridSummary {
    long checked = 0;
    long matched = 0;
    long mismatched = 0;
    long skipped = 0;
};

GridSummary summarize(const std::vector<IdentityReport>& reports);

std::string to_string(IdentityKind kind);
std::string to_string(Verdict verdict);

}  // namespace qfbq
