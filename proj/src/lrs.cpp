#include "lrs2mc/lrs.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lrs2mc {

Lrs::Lrs(std::vector<Rational> coefficients, std::vector<Rational> initial_terms)
    : coeffs_(std::move(coefficients)), initial_(std::move(initial_terms)) {
    if (coeffs_.empty()) throw std::invalid_argument("Lrs: order must be at least 1");
    if (coeffs_.size() != initial_.size())
        throw std::invalid_argument("Lrs: need exactly one initial term per coefficient");
    if (coeffs_[0].is_zero())
        throw std::invalid_argument("Lrs: the lowest coefficient a_0 must be nonzero");
}

Polynomial Lrs::characteristic() const {
    const std::size_t k = order();
    std::vector<Rational> c(k + 1);
    c[k] = Rational(1);
    for (std::size_t i = 0; i < k; ++i) c[i] = -coeffs_[i];
    return Polynomial(std::move(c));
}

bool Lrs::is_identically_zero() const {
    for (const Rational& u : initial_)
        if (!u.is_zero()) return false;
    return true;
}

Matrix companion_matrix(const Lrs& l) {
    const std::size_t k = l.order();
    Matrix a(k, k);
    for (std::size_t r = 0; r + 1 < k; ++r) a.at(r, r + 1) = Rational(1);
    for (std::size_t c = 0; c < k; ++c) a.at(k - 1, c) = l.coefficients()[c];
    return a;
}

std::vector<Rational> eval_range(const Lrs& l, std::size_t n_max) {
    const std::size_t k = l.order();
    std::vector<Rational> u;
    u.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max && n < k; ++n) u.push_back(l.initial_terms()[n]);
    for (std::size_t n = u.size(); n <= n_max; ++n) {
        Rational next(0);
        for (std::size_t i = 0; i < k; ++i) next += l.coefficients()[i] * u[n - k + i];
        u.push_back(next);
    }
    return u;
}

Lrs shift(const Lrs& l, std::size_t t) {
    if (t == 0) return l;
    const std::size_t k = l.order();
    const std::vector<Rational> u = eval_range(l, t + k - 1);
    return Lrs(l.coefficients(),
               std::vector<Rational>(u.begin() + static_cast<std::ptrdiff_t>(t), u.end()));
}

Lrs stride_subsequence(const Lrs& l, std::size_t stride, std::size_t offset) {
    if (stride == 0) throw std::invalid_argument("stride_subsequence: stride must be positive");
    if (offset >= stride)
        throw std::invalid_argument("stride_subsequence: offset must be below the stride");
    const std::size_t k = l.order();

    // Cayley-Hamilton on A^stride: the strided sequence satisfies the
    // recurrence read off the characteristic polynomial of A^stride.
    const Polynomial cp = char_poly(mat_pow(companion_matrix(l), stride));

    std::size_t strip = 0;
    while (strip < k && cp.coeff(strip).is_zero()) ++strip;
    if (strip == k)
        throw std::runtime_error(
            "stride_subsequence: every recurrence coefficient vanished (nilpotent power); "
            "unreachable while a_0 != 0");

    const std::size_t ord = k - strip;
    std::vector<Rational> coeffs(ord);
    for (std::size_t i = 0; i < ord; ++i) coeffs[i] = -cp.coeff(strip + i);

    const std::size_t last_index = (strip + ord - 1) * stride + offset;
    const std::vector<Rational> u = eval_range(l, last_index);
    std::vector<Rational> initial(ord);
    for (std::size_t n = 0; n < ord; ++n) initial[n] = u[(strip + n) * stride + offset];
    return Lrs(std::move(coeffs), std::move(initial));
}

}  // namespace lrs2mc
