#pragma once

#include "qfbq/bicomplex.hpp"
#include "qfbq/qcalc.hpp"

namespace qfbq {

enum class SequenceKind { QFib, QLucas };

struct SequenceTerm {
    long n;
    SequenceKind kind;
    Bicomplex value;
};

/// n-th q-Fibonacci bicomplex quaternion: coefficient of the k-th basis
/// element is alpha^(n+k-1) * [n+k]_q for k = 0..3. Exact; n >= 0.
Bicomplex qfib(long n, const QParams& p);

/// n-th q-Lucas bicomplex quaternion: coefficient k is
/// alpha^(n+k) * (1 + q^(n+k)), the simplified [2m]_q/[m]_q ratio carried
/// by alpha^m, well defined for all n >= 0 (at m = 0 the ratio is 2).
Bicomplex qlucas(long n, const QParams& p);

/// Binet constants: gamma = 1 + alpha*i + alpha^2*j + alpha^3*ij and
/// delta the same with alpha*q in place of alpha.
struct BinetConstants {
    Bicomplex gamma;
    Bicomplex delta;
};

BinetConstants binet_constants(const QParams& p);

/// Binet evaluation (alpha^n*gamma - (alpha*q)^n*delta) / (alpha - alpha*q);
/// equals qfib(n, p) exactly.
Bicomplex qfib_binet(long n, const QParams& p);

/// Binet evaluation alpha^n*gamma + (alpha*q)^n*delta; equals qlucas(n, p).
Bicomplex qlucas_binet(long n, const QParams& p);

/// Partial sum sum_{n=0}^{N} qfib(n, p) * t^n / n! of the exponential
/// generating function. Exact when t is exact; evaluated at t's precision
/// when t is a float.
Bicomplex egf_partial(long N, const ExactScalar& t, const QParams& p);

/// Closed form (gamma*e^(alpha*t) - delta*e^(alpha*q*t)) / (alpha - alpha*q)
/// of the EGF, evaluated in floats at precision_bits (>= 64). The
/// exponentials are correctly rounded, so their truncation error stays below
/// half an ulp at the target precision.
Bicomplex egf_closed(const ExactScalar& t, const QParams& p, mpfr_prec_t precision_bits);

/// Componentwise bound on |EGF - egf_partial(N, t, p)| for exact t:
/// with M = max(|alpha|, |alpha*q|) and C = max(1, M^3),
///
///   2*C / |alpha - alpha*q| * (M*|t|)^(N+1) / (N+1)! * e^(M*|t|).
///
/// Every tail coefficient of qfib is at most 2*C*M^n / |alpha - alpha*q|.
BigFloat egf_tail_bound(long N, const ExactScalar& t, const QParams& p,
                        mpfr_prec_t precision_bits);

/// Componentwise float conversion of a bicomplex element.
Bicomplex to_bigfloat(const Bicomplex& x, mpfr_prec_t precision_bits);

/// The parameter point where the q-deformation collapses to the ordinary
/// Fibonacci and Lucas numbers: alpha = (1+sqrt5)/2, q = (-3+sqrt5)/2
/// (that is, q = -1/alpha^2, alpha*q = -1/alpha). At these values
/// alpha^(n-1)*[n]_q = F_n and alpha^n*(1+q^n) = L_n, so every qfib/qlucas
/// coefficient is a plain integer despite living in Q(sqrt5).
QParams classical_params();

}  // namespace qfbq
