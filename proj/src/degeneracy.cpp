#include "lrs2mc/degeneracy.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace lrs2mc {

namespace {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Lagrange interpolation through distinct sample points, exact.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial term = Polynomial::constant(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            const Rational scale = (points[i].first - points[j].first).inverse();
            term = term * Polynomial({-points[j].first * scale, scale});
        }
        result += term;
    }
    return result;
}

}  // namespace

Polynomial ratio_polynomial(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("ratio_polynomial: zero polynomial");
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("ratio_polynomial: degree must be at least 1");
    if (p.coeff(0).is_zero())
        throw std::invalid_argument("ratio_polynomial: zero is a root, root ratios undefined");

    // Res_y(p(y), p(x*y)) has degree exactly d^2 in x (its leading coefficient
    // is lc(p)^{2d} times the d-th power of the root product, nonzero since
    // p(0) != 0), so d^2 + 1 samples pin it down. At any nonzero sample t the
    // y-degree of p(t*y) stays d and evaluation commutes with the determinant.
    const std::size_t samples = static_cast<std::size_t>(d) * static_cast<std::size_t>(d) + 1;
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(samples);
    long t = 1;
    while (points.size() < samples) {
        for (long sgn : {1L, -1L}) {
            if (points.size() == samples) break;
            const Rational x(sgn * t);
            std::vector<Rational> scaled(p.coefficients());
            Rational power(1);
            for (std::size_t i = 0; i < scaled.size(); ++i) {
                scaled[i] *= power;
                power *= x;
            }
            points.emplace_back(x, resultant(p, Polynomial(std::move(scaled))));
        }
        ++t;
    }
    return interpolate(points);
}

std::set<unsigned long> degeneracy_orders(const Lrs& l) {
    const Polynomial reduced = squarefree_part(l.characteristic());
    const int d = reduced.degree();
    std::set<unsigned long> orders;
    if (d <= 1) return orders;  // no pair of distinct roots

    // Divide out the d self-ratio factors (x - 1)^d; with simple roots no
    // cross ratio equals 1, so exactly d roots of the ratio polynomial are 1.
    Polynomial ratios = ratio_polynomial(reduced);
    const Polynomial x_minus_1({Rational(-1), Rational(1)});
    for (int i = 0; i < d; ++i) ratios = ratios.divide_exact(x_minus_1);

    // A ratio of two roots lies in a field of degree at most d^2, so a ratio
    // that is a primitive m-th root of unity forces phi(m) <= d^2, and
    // phi(m) >= sqrt(m/2) bounds the enumeration at 2 d^4.
    const unsigned long phi_cap = static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
    const unsigned long m_cap = 2 * phi_cap * phi_cap;
    for (unsigned long m = 2; m <= m_cap; ++m) {
        if (euler_phi(m) > phi_cap) continue;
        if (poly_gcd(ratios, cyclotomic(m)).degree() >= 1) orders.insert(m);
    }
    return orders;
}

std::vector<SmlComponent> sml_decompose(const Lrs& l) {
    const std::set<unsigned long> orders = degeneracy_orders(l);
    unsigned long stride = 1;
    for (unsigned long m : orders) {
        const unsigned long g = std::gcd(stride, m);
        if (stride / g > 1000000UL / m)
            throw std::runtime_error("sml_decompose: decomposition period exceeds 10^6");
        stride = stride / g * m;
    }

    std::vector<SmlComponent> components;
    components.reserve(stride);
    for (std::size_t c = 0; c < stride; ++c) {
        Lrs sub = stride_subsequence(l, stride, c);
        const bool zero = sub.is_identically_zero();
        const bool nondeg = degeneracy_orders(sub).empty();
        if (!nondeg)
            throw std::logic_error("sml_decompose: component at offset " + std::to_string(c) +
                                   " is still degenerate (internal bug)");
        components.push_back(SmlComponent{c, stride, std::move(sub), zero, nondeg});
    }
    return components;
}

std::size_t find_nonzero_window(const Lrs& l, std::size_t cap) {
    const std::size_t k = l.order();
    const std::vector<Rational> u = eval_range(l, cap + k - 1);
    std::size_t run = 0;  // nonzero terms ending at the current index
    for (std::size_t n = 0; n < u.size(); ++n) {
        run = u[n].is_zero() ? 0 : run + 1;
        if (run >= k && n + 1 - k <= cap) return n + 1 - k;
    }
    throw std::runtime_error("find_nonzero_window: no window of " + std::to_string(k) +
                             " consecutive nonzero terms with start <= " + std::to_string(cap) +
                             " (scanned u_0..u_" + std::to_string(cap + k - 1) +
                             "); raise the cap to search further");
}

}  // namespace lrs2mc
