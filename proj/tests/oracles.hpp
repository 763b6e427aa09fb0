#pragma once

// Independent oracles for the unit and acceptance suites. Deliberately naive:
// they share no code path with the implementations they check.

#include <vector>

#include "lrs2mc/matrix.hpp"
#include "lrs2mc/polynomial.hpp"
#include "lrs2mc/rational.hpp"

namespace oracle {

using lrs2mc::Matrix;
using lrs2mc::Polynomial;
using lrs2mc::Rational;

// n-1 plain multiplications, no squaring.
inline Matrix mat_pow_iterated(const Matrix& m, unsigned long n) {
    Matrix acc = Matrix::identity(m.rows());
    for (unsigned long i = 0; i < n; ++i) acc = acc * m;
    return acc;
}

// Laplace cofactor expansion of a matrix of polynomials along the first row.
inline Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial::constant(Rational(1));
    if (n == 1) return a[0][0];
    Polynomial det;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) minor[r - 1].push_back(a[r][cc]);
        Polynomial term = a[0][c] * det_cofactor(minor);
        if (c % 2) term = -term;
        det += term;
    }
    return det;
}

// det(xI - m) by cofactor expansion over the polynomial ring.
inline Polynomial char_poly_cofactor(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial({-m.at(i, j)});
            if (i == j) a[i][j] += Polynomial({Rational(0), Rational(1)});
        }
    return det_cofactor(a);
}

}  // namespace oracle
