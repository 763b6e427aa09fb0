#include "lrs2mc/reduction.hpp"

#include <stdexcept>
#include <string>

namespace lrs2mc {

namespace {

ReductionCertificate certificate_from_anchor(const Lrs& l, const AnchorChoice& choice) {
    const std::size_t k = l.order();
    const std::size_t dim = k + 1;
    const std::vector<Rational>& u = l.initial_terms();
    const Rational s_entry(1, static_cast<long>(dim));

    ReductionCertificate cert;
    cert.stationary.assign(dim, s_entry);
    cert.S = Matrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) cert.S.at(i, j) = s_entry;

    cert.anchor = choice.anchor;
    cert.eta = choice.eta;

    // F = diag(1, eta u_1 / mu_2, ..., eta u_{k-1} / mu_k) maps the anchor
    // column onto eta * u while leaving the first coordinate untouched.
    cert.F = Matrix(k, k);
    cert.F.at(0, 0) = Rational(1);
    for (std::size_t t = 1; t < k; ++t) cert.F.at(t, t) = cert.eta * u[t] / cert.anchor[t];
    for (std::size_t t = 0; t < k; ++t)
        if (cert.F.at(t, t) * cert.anchor[t] != cert.eta * u[t])
            throw std::logic_error("build_certificate: F does not map the anchor onto eta*u");

    // B = F^{-1} A F, entrywise since F is diagonal.
    const Matrix a = companion_matrix(l);
    cert.B = Matrix(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            cert.B.at(r, c) = a.at(r, c) * cert.F.at(c, c) / cert.F.at(r, r);

    // C embeds B with a zero last column; the bottom row balances every
    // column sum to zero.
    cert.C = Matrix(dim, dim);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) cert.C.at(r, c) = cert.B.at(r, c);
    for (std::size_t c = 0; c < k; ++c) {
        Rational sum(0);
        for (std::size_t r = 0; r < k; ++r) sum += cert.B.at(r, c);
        cert.C.at(k, c) = -sum;
    }

    const Matrix deviation = cert.C - cert.C * cert.S;
    cert.gamma = deviation.max_abs_entry();
    if (cert.gamma.is_zero())
        throw std::logic_error(
            "build_certificate: C - CS vanished, impossible while a_0 != 0 (internal bug)");
    cert.sigma = s_entry;
    cert.rho = Rational(2) * cert.gamma / cert.sigma;
    cert.D = cert.rho.inverse() * deviation;
    return cert;
}

}  // namespace

AnchorChoice choose_anchor(const Lrs& l) {
    const std::size_t k = l.order();
    const std::vector<Rational>& u = l.initial_terms();
    for (std::size_t t = 0; t < k; ++t)
        if (u[t].is_zero())
            throw std::invalid_argument("choose_anchor: initial term u_" + std::to_string(t) +
                                        " is zero; shift past zero terms first");

    const Rational s1(1, static_cast<long>(k + 1));
    AnchorChoice choice;
    if (u[0].sign() > 0) {
        choice.source = 0;
        choice.eta = (Rational(1) - s1) / u[0];
    } else {
        choice.source = 1;
        choice.eta = -s1 / u[0];
    }

    // First k entries of (I - S) e_j: 1 - s at the source coordinate
    // (if it falls within the first k), -s elsewhere. All nonzero.
    choice.anchor.assign(k, -s1);
    if (choice.source < k) choice.anchor[choice.source] = Rational(1) - s1;

    if (!(choice.eta > Rational(0)) || choice.eta * u[0] != choice.anchor[0])
        throw std::logic_error("choose_anchor: scale normalization failed (internal bug)");
    return choice;
}

ReductionCertificate build_certificate(const Lrs& l) {
    return certificate_from_anchor(l, choose_anchor(l));
}

std::pair<MarkovInstance, ReductionCertificate> build_instance(const Lrs& l, QueryKind query) {
    if (query != QueryKind::Equal) {
        const std::vector<Rational>& u = l.initial_terms();
        for (std::size_t t = 0; t < u.size(); ++t)
            if (u[t].sign() <= 0)
                throw std::invalid_argument(
                    "build_instance: initial term u_" + std::to_string(t) + " = " +
                    u[t].to_string() +
                    " is not strictly positive; a non-positive term settles the underlying "
                    "positivity question directly, so the below-threshold reduction refuses it");
    }

    const AnchorChoice choice = choose_anchor(l);
    ReductionCertificate cert = certificate_from_anchor(l, choice);
    const std::size_t dim = l.order() + 1;

    MarkovInstance inst;
    inst.matrix = cert.S + cert.D;
    inst.source = choice.source;
    inst.target = 0;
    inst.threshold = Rational(1, static_cast<long>(dim));
    inst.query = query;

    // |d_pq| <= gamma/rho = sigma/2 keeps every entry of S + D above sigma/2.
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (!(inst.matrix.at(i, j) > Rational(0)))
                throw std::logic_error("build_instance: non-positive chain entry (internal bug)");
    for (const Rational& sum : inst.matrix.column_sums())
        if (sum != Rational(1))
            throw std::logic_error("build_instance: column sum differs from 1 (internal bug)");

    return {std::move(inst), std::move(cert)};
}

}  // namespace lrs2mc
