#include <doctest.h>

#include "lrs2mc/lrs.hpp"
#include "oracles.hpp"

using lrs2mc::Lrs;
using lrs2mc::Matrix;
using lrs2mc::Polynomial;
using lrs2mc::Rational;

namespace {

Lrs make(std::initializer_list<long> coeffs, std::initializer_list<long> initial) {
    std::vector<Rational> a, u;
    for (long c : coeffs) a.emplace_back(c);
    for (long v : initial) u.emplace_back(v);
    return Lrs(std::move(a), std::move(u));
}

const Lrs kFib = make({1, 1}, {1, 1});
// u_{n+2} = 2 u_{n+1} - u_n with u = (-2, -1): the line u_n = n - 2.
const Lrs kLine = make({-1, 2}, {-2, -1});
// u_{n+2} = -u_n: alternating stride-2 progressions.
const Lrs kAlternating = make({-1, 0}, {1, 2});

std::vector<Rational> terms(std::initializer_list<long> values) {
    std::vector<Rational> v;
    for (long x : values) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("constructor enforces the recurrence shape") {
    CHECK_THROWS_AS(Lrs({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make({0, 1}, {1, 1}), std::invalid_argument);      // a_0 = 0
    CHECK_THROWS_AS(Lrs({Rational(1)}, {Rational(1), Rational(2)}), std::invalid_argument);
    CHECK(make({1}, {0}).is_identically_zero());
    CHECK(!kFib.is_identically_zero());
}

TEST_CASE("companion matrix shape and action") {
    CHECK(companion_matrix(kFib) == Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK(companion_matrix(Lrs({Rational(1, 2)}, {Rational(1)})) == Matrix{{Rational(1, 2)}});

    const Lrs cubic = make({2, 0, 1}, {1, 1, 1});
    CHECK(companion_matrix(cubic) == Matrix{{Rational(0), Rational(1), Rational(0)},
                                            {Rational(0), Rational(0), Rational(1)},
                                            {Rational(2), Rational(0), Rational(1)}});
    // e_1^T A^n u reproduces the recurrence terms
    const Matrix a = companion_matrix(cubic);
    const std::vector<Rational> u = eval_range(cubic, 10);
    for (unsigned long n = 0; n <= 10; ++n) {
        Rational first(0);
        const Matrix p = mat_pow(a, n);
        for (std::size_t c = 0; c < 3; ++c) first += p.at(0, c) * cubic.initial_terms()[c];
        CHECK(first == u[n]);
    }
}

TEST_CASE("characteristic polynomial of the companion matrix") {
    CHECK(char_poly(companion_matrix(kFib)) == kFib.characteristic());
    CHECK(kFib.characteristic() == Polynomial({Rational(-1), Rational(-1), Rational(1)}));
    const Lrs cubic = make({2, 0, 1}, {1, 1, 1});
    CHECK(char_poly(companion_matrix(cubic)) == cubic.characteristic());
    CHECK(oracle::char_poly_cofactor(companion_matrix(cubic)) == cubic.characteristic());
}

TEST_CASE("eval_range") {
    CHECK(eval_range(kFib, 5) == terms({1, 1, 2, 3, 5, 8}));
    CHECK(eval_range(kLine, 4) == terms({-2, -1, 0, 1, 2}));
    CHECK(eval_range(make({1}, {0}), 3) == terms({0, 0, 0, 0}));
    CHECK(eval_range(kFib, 0) == terms({1}));
    const Lrs half({Rational(1, 2)}, {Rational(1)});
    CHECK(eval_range(half, 3) ==
          std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)});
}

TEST_CASE("shift moves the initial window") {
    CHECK(shift(kFib, 2).initial_terms() == terms({2, 3}));
    CHECK(shift(kFib, 0).initial_terms() == kFib.initial_terms());
    CHECK(shift(kLine, 3).initial_terms() == terms({1, 2}));
    // term n of the result is term n + t of the input
    const std::vector<Rational> u = eval_range(kFib, 12);
    const std::vector<Rational> v = eval_range(shift(kFib, 4), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(v[n] == u[n + 4]);
    // composition adds
    CHECK(eval_range(shift(shift(kLine, 2), 3), 6) == eval_range(shift(kLine, 5), 6));
}

TEST_CASE("stride_subsequence agrees with strided evaluation") {
    const Lrs even = stride_subsequence(kAlternating, 2, 0);
    const Lrs odd = stride_subsequence(kAlternating, 2, 1);
    // char_poly(A^2) = (x+1)^2 gives an order-2 recurrence
    CHECK(even.order() == 2);
    CHECK(even.coefficients() == terms({-1, -2}));
    CHECK(eval_range(even, 5) == terms({1, -1, 1, -1, 1, -1}));
    CHECK(eval_range(odd, 5) == terms({2, -2, 2, -2, 2, -2}));

    CHECK(eval_range(stride_subsequence(kFib, 1, 0), 8) == eval_range(kFib, 8));

    for (std::size_t stride = 1; stride <= 4; ++stride)
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const Lrs sub = stride_subsequence(kFib, stride, offset);
            const std::vector<Rational> u = eval_range(kFib, 20 * stride + offset);
            const std::vector<Rational> v = eval_range(sub, 20);
            for (std::size_t n = 0; n <= 20; ++n) CHECK(v[n] == u[n * stride + offset]);
        }

    CHECK_THROWS_AS(stride_subsequence(kFib, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(stride_subsequence(kFib, 2, 2), std::invalid_argument);
}
