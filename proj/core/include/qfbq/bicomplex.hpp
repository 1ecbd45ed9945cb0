#pragma once

#include <array>

#include "qfbq/scalar.hpp"

namespace qfbq {

/// The three conjugations of a bicomplex number: Star1 negates the i-part,
/// Star2 the j-part, Star3 both. Each is an involutive algebra morphism and
/// Star1 followed by Star2 equals Star3.
enum class ConjKind { Star1, Star2, Star3 };

using Vec4 = std::array<ExactScalar, 4>;

/// Element c0 + c1*i + c2*j + c3*ij of the commutative bicomplex algebra:
/// i^2 = j^2 = -1, ij = ji, (ij)^2 = +1. The algebra has zero divisors
/// (e.g. (1+ij)(1-ij) = 0), so no inverse is provided.
///
/// Invariant: all four coefficients hold the same scalar kind (rationals
/// promote to a quadratic extension when one is present); exact and float
/// coefficients never mix within one element.
class Bicomplex {
public:
    /// Zero with rational coefficients.
    Bicomplex() : c_{ExactScalar(0), ExactScalar(0), ExactScalar(0), ExactScalar(0)} {}

    Bicomplex(ExactScalar c0, ExactScalar c1, ExactScalar c2, ExactScalar c3);
    explicit Bicomplex(Vec4 coeffs);

    const Vec4& coeffs() const { return c_; }
    const ExactScalar& c(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;

    Bicomplex operator-() const;

    friend Bicomplex operator+(const Bicomplex& x, const Bicomplex& y);
    friend Bicomplex operator-(const Bicomplex& x, const Bicomplex& y);
    /// Bicomplex product; commutative.
    friend Bicomplex operator*(const Bicomplex& x, const Bicomplex& y);

    friend bool operator==(const Bicomplex& x, const Bicomplex& y);
    friend bool operator!=(const Bicomplex& x, const Bicomplex& y) { return !(x == y); }

private:
    Vec4 c_;
};

/// Scalar multiple, componentwise.
Bicomplex scale(const ExactScalar& lambda, const Bicomplex& x);
inline Bicomplex operator*(const ExactScalar& lambda, const Bicomplex& x) {
    return scale(lambda, x);
}

Bicomplex conjugate(const Bicomplex& x, ConjKind kind);

/// x * conjugate(x, kind). Lands in span{1, j} for Star1, span{1, i} for
/// Star2, span{1, ij} for Star3; generally not a real scalar.
Bicomplex norm_product(const Bicomplex& x, ConjKind kind);

/// Sum of squared coefficients (the squared Euclidean norm of the
/// coefficient vector; exact, and distinct from norm_product).
ExactScalar euclid_sq(const Bicomplex& x);

/// euclid_sq of the norm product: the scalar usually quoted as |x *_k x|^2.
ExactScalar norm_value(const Bicomplex& x, ConjKind kind);

/// Coefficient of 1.
const ExactScalar& scalar_part(const Bicomplex& x);
/// x minus its scalar part: the i, j, ij component.
Bicomplex vector_part(const Bicomplex& x);

Vec4 to_vec(const Bicomplex& x);
Bicomplex from_vec(const Vec4& v);

/// 4x4 matrix over ExactScalar; the representation of multiplication by a
/// fixed bicomplex element in the basis (1, i, j, ij).
class MulMatrix {
public:
    MulMatrix() = default;
    explicit MulMatrix(std::array<Vec4, 4> rows) : rows_(std::move(rows)) {}

    const Vec4& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
    const ExactScalar& at(int r, int c) const {
        return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    Vec4 apply(const Vec4& v) const;

    friend MulMatrix operator*(const MulMatrix& x, const MulMatrix& y);
    friend bool operator==(const MulMatrix& x, const MulMatrix& y);
    friend bool operator!=(const MulMatrix& x, const MulMatrix& y) { return !(x == y); }

private:
    std::array<Vec4, 4> rows_;
};

/// Matrix M with M * vec(y) = vec(x * y) for all y; consequently
/// mul_matrix(x * y) = mul_matrix(x) * mul_matrix(y).
MulMatrix mul_matrix(const Bicomplex& x);

}  // namespace qfbq
