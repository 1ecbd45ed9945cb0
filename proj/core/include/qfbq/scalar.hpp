#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qfbq/bigfloat.hpp"
#include "qfbq/errors.hpp"
#include "qfbq/quadext.hpp"
#include "qfbq/rational.hpp"

namespace qfbq {

enum class ScalarKind { Rational, QuadExt, BigFloat };

/// Exact-first scalar: a rational, an element of Q(sqrt(d)), or an
/// arbitrary-precision float.
///
/// Arithmetic closes over each kind. Rationals promote to Q(sqrt(d)) when
/// mixed with a quadratic-extension operand; elements over different
/// radicands throw MixedRadicand; mixing exact values with floats throws
/// MixedExactness unless converted explicitly via to_bigfloat. Exact results
/// are always canonical, so equality is bit-exact representation equality.
class ExactScalar {
public:
    ExactScalar() : v_(Rational(0)) {}
    ExactScalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit, mirrors integer literals
    ExactScalar(Rational r) : v_(std::move(r)) {}  // NOLINT
    ExactScalar(QuadExt q) : v_(std::move(q)) {}   // NOLINT
    ExactScalar(BigFloat f) : v_(std::move(f)) {}  // NOLINT

    ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
    bool is_exact() const { return kind() != ScalarKind::BigFloat; }
    bool is_zero() const;

    /// Radicand when this value is a quadratic-extension element.
    std::optional<long> radicand() const;

    const Rational& rational() const { return std::get<Rational>(v_); }
    const QuadExt& quadext() const { return std::get<QuadExt>(v_); }
    const BigFloat& bigfloat() const { return std::get<BigFloat>(v_); }

    ExactScalar operator-() const;

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);

    /// Mathematical equality within the exact world and within the float
    /// world. Comparing exact against float throws MixedExactness.
    friend bool operator==(const ExactScalar& x, const ExactScalar& y);
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

private:
    std::variant<Rational, QuadExt, BigFloat> v_;
};

/// Multiplicative inverse; DivisionByZero on zero.
ExactScalar inv(const ExactScalar& x);

/// x^e for any machine-integer exponent, with x^0 = 1. Negative exponents
/// invert first, so they throw DivisionByZero on zero.
ExactScalar pow(const ExactScalar& x, long e);

/// Multiplicative identity (resp. zero) carried in the same kind as x:
/// same radicand for quadratic extensions, same precision for floats.
ExactScalar one_like(const ExactScalar& x);
ExactScalar zero_like(const ExactScalar& x);

/// Explicit conversion to a float of the given precision (>= 64 bits),
/// correctly rounded. Floats re-round to the new precision.
ExactScalar to_bigfloat(const ExactScalar& x, mpfr_prec_t precision_bits);

/// Canonical text. Exact kinds follow the grammar parsed by parse_scalar
/// ("3", "-7/2", "1/2+1/2*sqrt5"); floats print in decimal scientific form.
std::string to_string(const ExactScalar& x);

/// Parse an exact scalar:
///
///   scalar := RAT | RAT ('+'|'-') RAT "*sqrt" INT
///   RAT    := sign? digits ('/' digits)?
///
/// Whitespace is permitted around tokens. Malformed input throws ParseError
/// carrying the byte offset; a radicand argument that conflicts with an
/// embedded radicand throws MixedRadicand.
ExactScalar parse_scalar(std::string_view text,
                         std::optional<long> radicand = std::nullopt);

}  // namespace qfbq
