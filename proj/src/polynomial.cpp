#include "lrs2mc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lrs2mc {

namespace {

// ---- integer-coefficient helpers for gcd / resultant ----------------------

using ZPoly = std::vector<mpz_class>;  // ascending, may carry trailing zeros

int zdeg(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators: p = result / scale with scale > 0.
ZPoly clear_denominators(const Polynomial& p, mpz_class& scale) {
    scale = 1;
    for (const Rational& c : p.coefficients()) scale = lcm(scale, c.denominator());
    ZPoly out;
    out.reserve(p.coefficients().size());
    for (const Rational& c : p.coefficients())
        out.push_back(mpz_class(c.numerator() * (scale / c.denominator())));
    return out;
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& c : p) g = gcd(g, c);
    return g;  // zero for the zero polynomial
}

// Divides by the content and makes the leading coefficient positive.
void zprimitive(ZPoly& p) {
    ztrim(p);
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;
    for (mpz_class& c : p) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
}

// Pseudo-remainder of u by v (deg v >= 0), up to a scalar factor; callers take
// primitive parts so the factor does not matter.
ZPoly zprem(ZPoly u, const ZPoly& v) {
    const int dv = zdeg(v);
    const mpz_class& lv = v[static_cast<std::size_t>(dv)];
    int du = zdeg(u);
    while (du >= dv && du >= 0) {
        const mpz_class lu = u[static_cast<std::size_t>(du)];
        for (int i = 0; i <= du; ++i) u[static_cast<std::size_t>(i)] *= lv;
        const int shift = du - dv;
        for (int i = 0; i <= dv; ++i)
            u[static_cast<std::size_t>(i + shift)] -= lu * v[static_cast<std::size_t>(i)];
        ztrim(u);
        du = zdeg(u);
    }
    return u;
}

// Fraction-free determinant (Bareiss). Consumes its argument.
mpz_class det_bareiss(std::vector<ZPoly>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = q;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

std::vector<unsigned long> divisors_of(unsigned long m) {
    std::vector<unsigned long> divs;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) divs.push_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

Polynomial Polynomial::monomial(std::size_t k, const Rational& coeff) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Rational& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, Polynomial p) {
    for (Rational& c : p.c_) c *= s;
    p.normalize();
    return p;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
    const Rational inv_lead = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        const Rational factor = rem.leading() * inv_lead;
        q[shift] = factor;
        rem -= Polynomial::monomial(shift, factor) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::domain_error("Polynomial: inexact division, remainder " + r.to_string());
    return q;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        const Rational a = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a == Rational(1);
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!unit) os << a.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Polynomial pow(const Polynomial& base, unsigned long n) {
    Polynomial acc = Polynomial::constant(Rational(1));
    Polynomial sq = base;
    while (n > 0) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n > 0) sq = sq * sq;
    }
    return acc;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    mpz_class ignore;
    ZPoly u = clear_denominators(a, ignore);
    ZPoly v = clear_denominators(b, ignore);
    zprimitive(u);
    zprimitive(v);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = zprem(u, v);
        zprimitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(u.size());
    for (const mpz_class& z : u) c.emplace_back(z);
    return Polynomial(std::move(c)).monic();
}

Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("resultant: both polynomials are zero");
    if (p.is_zero() || q.is_zero()) return Rational(0);
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return Rational(1);

    mpz_class sp, sq;
    const ZPoly P = clear_denominators(p, sp);
    const ZPoly Q = clear_denominators(q, sq);

    // Sylvester matrix: n rows of P followed by m rows of Q, descending
    // coefficients, each row shifted one column right of the previous.
    const std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<ZPoly> syl(dim, ZPoly(dim, mpz_class(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                P[static_cast<std::size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] =
                Q[static_cast<std::size_t>(n - i)];

    const mpz_class det = det_bareiss(syl);
    // Res(P, Q) = sp^n * sq^m * Res(p, q).
    mpz_class denom = 1;
    for (int i = 0; i < n; ++i) denom *= sp;
    for (int i = 0; i < m; ++i) denom *= sq;
    return Rational(det, denom);
}

Polynomial cyclotomic(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: order must be positive");
    // Build the tower bottom-up over the divisors of m; every divisor of a
    // divisor of m is again a divisor of m, so the map is always complete.
    std::map<unsigned long, Polynomial> phi;
    for (unsigned long e : divisors_of(m)) {
        std::vector<Rational> xe_minus_1(e + 1, Rational(0));
        xe_minus_1[0] = Rational(-1);
        xe_minus_1[e] = Rational(1);
        Polynomial acc(std::move(xe_minus_1));
        for (unsigned long d : divisors_of(e))
            if (d != e) acc = acc.divide_exact(phi.at(d));
        phi.emplace(e, std::move(acc));
    }
    return phi.at(m);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(Rational(1));
    const Polynomial g = poly_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace lrs2mc
