#include "qfbq/scalar.hpp"

#include <cctype>
#include <utility>

namespace qfbq {

namespace {

QuadExt widen(const ExactScalar& x, long d) {
    if (x.kind() == ScalarKind::QuadExt) return x.quadext();
    return QuadExt(x.rational(), Rational(0), d);
}

// Applies f to both operands after promoting them to a common kind.
template <typename F>
ExactScalar combine(const ExactScalar& x, const ExactScalar& y, F&& f) {
    const bool xf = x.kind() == ScalarKind::BigFloat;
    const bool yf = y.kind() == ScalarKind::BigFloat;
    if (xf != yf)
        throw MixedExactness("arithmetic mixing exact scalars with floats; use to_bigfloat");
    if (xf) return ExactScalar(f(x.bigfloat(), y.bigfloat()));
    if (x.kind() == ScalarKind::Rational && y.kind() == ScalarKind::Rational)
        return ExactScalar(f(x.rational(), y.rational()));
    long d = x.kind() == ScalarKind::QuadExt ? x.quadext().radicand()
                                             : y.quadext().radicand();
    return ExactScalar(f(widen(x, d), widen(y, d)));
}

}  // namespace

bool ExactScalar::is_zero() const {
    switch (kind()) {
        case ScalarKind::Rational: return rational().is_zero();
        case ScalarKind::QuadExt: return quadext().is_zero();
        case ScalarKind::BigFloat: return bigfloat().is_zero();
    }
    return false;
}

std::optional<long> ExactScalar::radicand() const {
    if (kind() == ScalarKind::QuadExt) return quadext().radicand();
    return std::nullopt;
}

ExactScalar ExactScalar::operator-() const {
    switch (kind()) {
        case ScalarKind::Rational: return ExactScalar(-rational());
        case ScalarKind::QuadExt: return ExactScalar(-quadext());
        case ScalarKind::BigFloat: return ExactScalar(-bigfloat());
    }
    return {};
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    return combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
    return combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    return combine(x, y, [](const auto& a, const auto& b) { return a * b; });
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
    return x * inv(y);
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
    const bool xf = x.kind() == ScalarKind::BigFloat;
    const bool yf = y.kind() == ScalarKind::BigFloat;
    if (xf != yf)
        throw MixedExactness("comparing an exact scalar with a float; use to_bigfloat");
    if (xf) return x.bigfloat() == y.bigfloat();
    if (x.kind() == ScalarKind::Rational && y.kind() == ScalarKind::Rational)
        return x.rational() == y.rational();
    long d = x.kind() == ScalarKind::QuadExt ? x.quadext().radicand()
                                             : y.quadext().radicand();
    return widen(x, d) == widen(y, d);
}

ExactScalar inv(const ExactScalar& x) {
    switch (x.kind()) {
        case ScalarKind::Rational: return ExactScalar(x.rational().inv());
        case ScalarKind::QuadExt: return ExactScalar(x.quadext().inv());
        case ScalarKind::BigFloat: return ExactScalar(x.bigfloat().inv());
    }
    return {};
}

ExactScalar one_like(const ExactScalar& x) {
    switch (x.kind()) {
        case ScalarKind::Rational: return ExactScalar(Rational(1));
        case ScalarKind::QuadExt:
            return ExactScalar(QuadExt(Rational(1), Rational(0), x.quadext().radicand()));
        case ScalarKind::BigFloat:
            return ExactScalar(BigFloat::of_long(1, x.bigfloat().precision()));
    }
    return {};
}

ExactScalar zero_like(const ExactScalar& x) {
    switch (x.kind()) {
        case ScalarKind::Rational: return ExactScalar(Rational(0));
        case ScalarKind::QuadExt:
            return ExactScalar(QuadExt(Rational(0), Rational(0), x.quadext().radicand()));
        case ScalarKind::BigFloat: return ExactScalar(BigFloat(x.bigfloat().precision()));
    }
    return {};
}

ExactScalar pow(const ExactScalar& x, long e) {
    if (e < 0) return pow(inv(x), -e);
    ExactScalar acc = one_like(x);
    ExactScalar base = x;
    // Binary exponentiation; exponents here are small but coefficients are not.
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ExactScalar to_bigfloat(const ExactScalar& x, mpfr_prec_t precision_bits) {
    if (precision_bits < 64)
        throw InvalidParams("float precision must be at least 64 bits");
    switch (x.kind()) {
        case ScalarKind::Rational:
            return ExactScalar(BigFloat::of_rational(x.rational(), precision_bits));
        case ScalarKind::QuadExt:
            return ExactScalar(BigFloat::of_quadext(x.quadext(), precision_bits));
        case ScalarKind::BigFloat:
            return ExactScalar(x.bigfloat().round_to(precision_bits));
    }
    return {};
}

std::string to_string(const ExactScalar& x) {
    switch (x.kind()) {
        case ScalarKind::Rational: return x.rational().str();
        case ScalarKind::QuadExt: return x.quadext().str();
        case ScalarKind::BigFloat: return x.bigfloat().str();
    }
    return {};
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
};

Integer parse_digits(Cursor& c, const char* what) {
    std::size_t start = c.pos;
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) throw ParseError(std::string("expected ") + what, start);
    return Integer(std::string(c.s.substr(start, c.pos - start)), 10);
}

Rational parse_rat(Cursor& c) {
    c.skip_ws();
    if (c.eof()) throw ParseError("expected a rational", c.pos);
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -1;
        ++c.pos;
    }
    Integer num = parse_digits(c, "digits");
    Integer den = 1;
    if (!c.eof() && c.peek() == '/') {
        ++c.pos;
        std::size_t dpos = c.pos;
        den = parse_digits(c, "denominator digits");
        if (den == 0) throw ParseError("zero denominator", dpos);
    }
    return Rational(sign < 0 ? Integer(-num) : num, den);
}

}  // namespace

ExactScalar parse_scalar(std::string_view text, std::optional<long> radicand) {
    Cursor c{text};
    Rational first = parse_rat(c);
    c.skip_ws();
    if (c.eof()) return ExactScalar(first);

    char op = c.peek();
    if (op != '+' && op != '-')
        throw ParseError("expected '+', '-', or end of input", c.pos);
    ++c.pos;

    Rational second = parse_rat(c);
    c.skip_ws();
    if (c.eof() || c.peek() != '*') throw ParseError("expected '*sqrt'", c.pos);
    ++c.pos;
    c.skip_ws();
    if (c.s.substr(c.pos, 4) != "sqrt") throw ParseError("expected 'sqrt'", c.pos);
    c.pos += 4;

    std::size_t dpos = c.pos;
    Integer d_raw = parse_digits(c, "radicand digits");
    c.skip_ws();
    if (!c.eof()) throw ParseError("unexpected trailing characters", c.pos);
    if (!d_raw.fits_slong_p()) throw ParseError("radicand out of range", dpos);
    long d = d_raw.get_si();
    if (!is_valid_radicand(d))
        throw ParseError("radicand must be a square-free integer >= 2", dpos);
    if (radicand && d != *radicand)
        throw MixedRadicand("scalar text uses sqrt" + std::to_string(d) +
                            " but sqrt" + std::to_string(*radicand) + " was required");

    Rational b = op == '-' ? -second : second;
    return ExactScalar(QuadExt(first, b, d));
}

}  // namespace qfbq
