#include <doctest.h>

#include "lrs2mc/matrix.hpp"
#include "lrs2mc/selftest.hpp"
#include "oracles.hpp"

using lrs2mc::Matrix;
using lrs2mc::Polynomial;
using lrs2mc::Rational;

namespace {
const Matrix kFib{{Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
}

TEST_CASE("mat_pow matches the iterated-multiplication oracle") {
    const Matrix expected{{Rational(3), Rational(5)}, {Rational(5), Rational(8)}};
    CHECK(mat_pow(kFib, 5) == expected);
    CHECK(mat_pow(kFib, 5) == oracle::mat_pow_iterated(kFib, 5));
    for (unsigned long n = 0; n <= 12; ++n)
        CHECK(mat_pow(kFib, n) == oracle::mat_pow_iterated(kFib, n));
}

TEST_CASE("mat_pow edge cases") {
    CHECK(mat_pow(kFib, 0) == Matrix::identity(2));
    const Matrix scalar{{Rational(1, 2)}};
    CHECK(mat_pow(scalar, 3) == Matrix{{Rational(1, 8)}});
    const Matrix rect(2, 3);
    CHECK_THROWS_AS(mat_pow(rect, 2), std::invalid_argument);
}

TEST_CASE("mat_pow is additive in the exponent") {
    lrs2mc::TestRng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t dim = 1 + rng.below(4);
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.rational(5, 5, false);
        const unsigned long a = rng.below(7), b = rng.below(7);
        CHECK(mat_pow(m, a + b) == mat_pow(m, a) * mat_pow(m, b));
    }
}

TEST_CASE("matrix arithmetic basics") {
    const Matrix i2 = Matrix::identity(2);
    CHECK(kFib + i2 - i2 == kFib);
    CHECK(Rational(2) * i2 == Matrix{{Rational(2), Rational(0)}, {Rational(0), Rational(2)}});
    CHECK(kFib.transpose().transpose() == kFib);
    CHECK(kFib.trace() == Rational(1));
    CHECK(kFib.column_sums() == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(kFib.max_abs_entry() == Rational(1));
    CHECK(kFib.min_entry() == Rational(0));
    CHECK_THROWS_AS(kFib + Matrix(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(kFib * Matrix(3, 3), std::invalid_argument);
}

TEST_CASE("char_poly matches the cofactor oracle") {
    CHECK(char_poly(kFib) == Polynomial({Rational(-1), Rational(-1), Rational(1)}));
    CHECK(char_poly(kFib) == oracle::char_poly_cofactor(kFib));

    // (x - 1)^2
    CHECK(char_poly(Matrix::identity(2)) ==
          Polynomial({Rational(1), Rational(-2), Rational(1)}));

    const Matrix sym{{Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)}};
    CHECK(char_poly(sym) == Polynomial({Rational(1, 2), Rational(-3, 2), Rational(1)}));
    CHECK(char_poly(sym) == oracle::char_poly_cofactor(sym));

    CHECK_THROWS_AS(char_poly(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly agrees with the oracle on random matrices") {
    lrs2mc::TestRng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t dim = 1 + rng.below(4);
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.rational(4, 4, false);
        CHECK(char_poly(m) == oracle::char_poly_cofactor(m));
    }
}
