#pragma once

// Shared helpers for the test binaries: deterministic random generators for
// exact scalars and bicomplex values, and short literal builders.

#include <random>

#include "qfbq/bicomplex.hpp"

namespace qfbq::testsupport {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) return r;
    }
}

inline QuadExt random_quadext(Rng& rng, long d = 5) {
    return QuadExt(random_rational(rng), random_rational(rng), d);
}

/// Random bicomplex value over one coefficient field: rationals when
/// use_quadext is false, Q(sqrt5) otherwise.
inline Bicomplex random_bicomplex(Rng& rng, bool use_quadext) {
    auto coeff = [&]() -> ExactScalar {
        if (use_quadext) return ExactScalar(random_quadext(rng));
        return ExactScalar(random_rational(rng));
    };
    return Bicomplex{coeff(), coeff(), coeff(), coeff()};
}

/// Bicomplex with small integer coefficients.
inline Bicomplex bc4(long c0, long c1, long c2, long c3) {
    return Bicomplex{ExactScalar(c0), ExactScalar(c1), ExactScalar(c2), ExactScalar(c3)};
}

}  // namespace qfbq::testsupport
