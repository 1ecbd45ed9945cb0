#include "qfbq/bicomplex.hpp"

#include <utility>

#include "qfbq/errors.hpp"

namespace qfbq {

namespace {

// Establishes the shared-kind invariant: if any coefficient is a quadratic
// extension, the rational ones widen to its radicand; exact and float
// coefficients must not meet.
Vec4 normalized(Vec4 c) {
    int floats = 0;
    std::optional<long> d;
    for (const auto& s : c) {
        if (s.kind() == ScalarKind::BigFloat) {
            ++floats;
        } else if (auto rd = s.radicand()) {
            if (d && *d != *rd)
                throw MixedRadicand("bicomplex coefficients over different radicands");
            d = *rd;
        }
    }
    if (floats != 0 && floats != 4)
        throw MixedExactness("bicomplex mixing exact and float coefficients");
    if (d) {
        for (auto& s : c) {
            if (s.kind() == ScalarKind::Rational)
                s = ExactScalar(QuadExt(s.rational(), Rational(0), *d));
        }
    }
    return c;
}

}  // namespace

Bicomplex::Bicomplex(ExactScalar c0, ExactScalar c1, ExactScalar c2, ExactScalar c3)
    : c_(normalized({std::move(c0), std::move(c1), std::move(c2), std::move(c3)})) {}

Bicomplex::Bicomplex(Vec4 coeffs) : c_(normalized(std::move(coeffs))) {}

bool Bicomplex::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Bicomplex Bicomplex::operator-() const {
    return Bicomplex{-c_[0], -c_[1], -c_[2], -c_[3]};
}

Bicomplex operator+(const Bicomplex& x, const Bicomplex& y) {
    return Bicomplex{x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                     x.c_[3] + y.c_[3]};
}

Bicomplex operator-(const Bicomplex& x, const Bicomplex& y) {
    return Bicomplex{x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                     x.c_[3] - y.c_[3]};
}

Bicomplex operator*(const Bicomplex& x, const Bicomplex& y) {
    const ExactScalar &a = x.c_[0], &b = x.c_[1], &c = x.c_[2], &d = x.c_[3];
    const ExactScalar &e = y.c_[0], &f = y.c_[1], &g = y.c_[2], &h = y.c_[3];
    return Bicomplex{a * e - b * f - c * g + d * h,
                     a * f + b * e - c * h - d * g,
                     a * g + c * e - b * h - d * f,
                     a * h + d * e + b * g + c * f};
}

bool operator==(const Bicomplex& x, const Bicomplex& y) {
    return x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] && x.c_[2] == y.c_[2] &&
           x.c_[3] == y.c_[3];
}

Bicomplex scale(const ExactScalar& lambda, const Bicomplex& x) {
    return Bicomplex{lambda * x.c(0), lambda * x.c(1), lambda * x.c(2), lambda * x.c(3)};
}

Bicomplex conjugate(const Bicomplex& x, ConjKind kind) {
    switch (kind) {
        case ConjKind::Star1: return Bicomplex{x.c(0), -x.c(1), x.c(2), -x.c(3)};
        case ConjKind::Star2: return Bicomplex{x.c(0), x.c(1), -x.c(2), -x.c(3)};
        case ConjKind::Star3: return Bicomplex{x.c(0), -x.c(1), -x.c(2), x.c(3)};
    }
    return x;
}

Bicomplex norm_product(const Bicomplex& x, ConjKind kind) {
    return x * conjugate(x, kind);
}

ExactScalar euclid_sq(const Bicomplex& x) {
    return x.c(0) * x.c(0) + x.c(1) * x.c(1) + x.c(2) * x.c(2) + x.c(3) * x.c(3);
}

ExactScalar norm_value(const Bicomplex& x, ConjKind kind) {
    return euclid_sq(norm_product(x, kind));
}

const ExactScalar& scalar_part(const Bicomplex& x) { return x.c(0); }

Bicomplex vector_part(const Bicomplex& x) {
    return Bicomplex{zero_like(x.c(0)), x.c(1), x.c(2), x.c(3)};
}

Vec4 to_vec(const Bicomplex& x) { return x.coeffs(); }

Bicomplex from_vec(const Vec4& v) { return Bicomplex(v); }

Vec4 MulMatrix::apply(const Vec4& v) const {
    Vec4 out;
    for (std::size_t r = 0; r < 4; ++r) {
        ExactScalar acc = rows_[r][0] * v[0];
        for (std::size_t k = 1; k < 4; ++k) acc = acc + rows_[r][k] * v[k];
        out[r] = std::move(acc);
    }
    return out;
}

MulMatrix operator*(const MulMatrix& x, const MulMatrix& y) {
    std::array<Vec4, 4> rows;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            ExactScalar acc = x.at(r, 0) * y.at(0, c);
            for (int k = 1; k < 4; ++k) acc = acc + x.at(r, k) * y.at(k, c);
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::move(acc);
        }
    }
    return MulMatrix(rows);
}

bool operator==(const MulMatrix& x, const MulMatrix& y) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (x.at(r, c) != y.at(r, c)) return false;
        }
    }
    return true;
}

MulMatrix mul_matrix(const Bicomplex& x) {
    const ExactScalar &a = x.c(0), &b = x.c(1), &c = x.c(2), &d = x.c(3);
    return MulMatrix({Vec4{a, -b, -c, d},
                      Vec4{b, a, -d, -c},
                      Vec4{c, -d, a, -b},
                      Vec4{d, c, b, a}});
}

}  // namespace qfbq
