#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "lrs2mc/rational.hpp"

namespace lrs2mc {

// Univariate polynomial over Rational, coefficients stored in ascending
// degree. Always normalized: the zero polynomial is the empty coefficient
// sequence, otherwise the leading coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { normalize(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    // x^k
    static Polynomial monomial(std::size_t k, const Rational& coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Zero beyond the stored degree.
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, Polynomial p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    Polynomial derivative() const;
    Polynomial monic() const;

    // Quotient and remainder over the rationals; throws on zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    // Quotient when the division is exact; throws std::domain_error otherwise.
    Polynomial divide_exact(const Polynomial& divisor) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();

    std::vector<Rational> c_;
};

Polynomial pow(const Polynomial& base, unsigned long n);

// Monic gcd over the rationals, computed with a primitive-part pseudo-remainder
// sequence over the integers to contain coefficient growth. gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Res(p, q) = lc(p)^deg(q) * prod of q over the roots of p, computed exactly as
// the Sylvester determinant via fraction-free (Bareiss) elimination over the
// integers after clearing denominators. Throws if both inputs are zero.
Rational resultant(const Polynomial& p, const Polynomial& q);

// m-th cyclotomic polynomial, via the exact division
// x^m - 1 = prod over d | m of cyclotomic(d). Throws on m = 0.
Polynomial cyclotomic(unsigned long m);

// p / gcd(p, p'), normalized monic: same root set as p, all roots simple.
// Throws on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace lrs2mc
