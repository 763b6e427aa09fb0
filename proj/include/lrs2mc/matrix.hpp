#pragma once

#include <initializer_list>
#include <vector>

#include "lrs2mc/polynomial.hpp"
#include "lrs2mc/rational.hpp"

namespace lrs2mc {

// Dense matrix of Rational, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return e_; }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix m);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    std::vector<Rational> column_sums() const;
    Rational max_abs_entry() const;
    Rational min_entry() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

// Exact n-th power by repeated squaring; n = 0 gives the identity.
// Throws on non-square input.
Matrix mat_pow(const Matrix& m, unsigned long n);

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v);

// Monic characteristic polynomial det(xI - m), computed by the
// Faddeev-LeVerrier trace recursion (exact over the rationals).
// Throws on non-square input.
Polynomial char_poly(const Matrix& m);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace lrs2mc
