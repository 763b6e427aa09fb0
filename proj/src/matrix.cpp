#include "lrs2mc/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace lrs2mc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    e_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        e_.insert(e_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (Rational& x : r.e_) x = -x;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: dimension mismatch in addition");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix: dimension mismatch in subtraction");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix: dimension mismatch in multiplication");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Matrix operator*(const Rational& s, Matrix m) {
    for (Rational& x : m.e_) x *= s;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Matrix::trace() const {
    if (!is_square()) throw std::invalid_argument("Matrix: trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const Rational& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Rational> Matrix::column_sums() const {
    std::vector<Rational> sums(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) sums[j] += at(i, j);
    return sums;
}

Rational Matrix::max_abs_entry() const {
    Rational best(0);
    for (const Rational& x : e_) {
        Rational a = abs(x);
        if (a > best) best = a;
    }
    return best;
}

Rational Matrix::min_entry() const {
    if (e_.empty()) throw std::invalid_argument("Matrix: min entry of empty matrix");
    Rational best = e_[0];
    for (const Rational& x : e_)
        if (x < best) best = x;
    return best;
}

Matrix mat_pow(const Matrix& m, unsigned long n) {
    if (!m.is_square()) throw std::invalid_argument("mat_pow: non-square matrix");
    Matrix acc = Matrix::identity(m.rows());
    Matrix sq = m;
    while (n > 0) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n > 0) sq = sq * sq;
    }
    return acc;
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Rational> r(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t d = m.rows();
    std::vector<Rational> c(d + 1, Rational(0));
    c[d] = Rational(1);
    if (d == 0) return Polynomial(std::move(c));
    Matrix n = m;
    c[d - 1] = -n.trace();
    for (std::size_t i = 2; i <= d; ++i) {
        Matrix shifted = n;
        for (std::size_t r = 0; r < d; ++r) shifted.at(r, r) += c[d - i + 1];
        n = m * shifted;
        c[d - i] = -(n.trace() / Rational(static_cast<long>(i)));
    }
    return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << m.at(i, j);
        }
    }
    return os << "]";
}

}  // namespace lrs2mc
