#pragma once

#include <vector>

#include "lrs2mc/matrix.hpp"
#include "lrs2mc/rational.hpp"

namespace lrs2mc {

// Linear recurrence sequence over the rationals:
//   u_{n+k} = a_{k-1} u_{n+k-1} + ... + a_0 u_n,   a_0 != 0,
// specified by the k coefficients a_0..a_{k-1} and the k initial terms
// u_0..u_{k-1}. Zero initial terms are legal here; stages that need nonzero
// windows establish them first.
class Lrs {
  public:
    Lrs(std::vector<Rational> coefficients, std::vector<Rational> initial_terms);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const std::vector<Rational>& initial_terms() const { return initial_; }

    // x^k - a_{k-1} x^{k-1} - ... - a_0
    Polynomial characteristic() const;

    // An order-k recurrence is determined by k consecutive terms, so the
    // sequence is identically zero exactly when its initial window is.
    bool is_identically_zero() const;

  private:
    std::vector<Rational> coeffs_;
    std::vector<Rational> initial_;
};

// k x k matrix A with ones on the superdiagonal and the coefficients along the
// bottom row, so that u_n equals the first entry of A^n u.
Matrix companion_matrix(const Lrs& l);

// u_0 .. u_n_max by direct iteration, exact.
std::vector<Rational> eval_range(const Lrs& l, std::size_t n_max);

// Same recurrence, initial window moved to u_t..u_{t+k-1}: term n of the
// result is term n+t of the input.
Lrs shift(const Lrs& l, std::size_t t);

// The subsequence u_{nL+c} as an LRS of order <= k, with coefficients read
// from the characteristic polynomial of A^L. Low-order zero coefficients
// (impossible while a_0 != 0, handled defensively) are stripped, and the
// initial window shifts by the stripped count to keep a_0 != 0.
Lrs stride_subsequence(const Lrs& l, std::size_t stride, std::size_t offset);

}  // namespace lrs2mc
