#include "lrs2mc/analysis.hpp"

#include <sstream>
#include <stdexcept>

#include "lrs2mc/degeneracy.hpp"

namespace lrs2mc {

namespace {

void require_stochastic(const Matrix& m, const char* who) {
    if (!m.is_square() || m.rows() == 0)
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j).sign() < 0)
                throw std::invalid_argument(std::string(who) + ": negative entry at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
    for (const Rational& sum : m.column_sums())
        if (sum != Rational(1))
            throw std::invalid_argument(std::string(who) +
                                        ": column sums must equal 1 (column-stochastic)");
}

std::string zero_pattern(const std::vector<std::vector<bool>>& pat) {
    std::string s;
    for (std::size_t i = 0; i < pat.size(); ++i) {
        if (i) s += '|';
        for (bool b : pat[i]) s += b ? '+' : '0';
    }
    return s;
}

}  // namespace

VerificationReport verify_certificate(const Lrs& l, const MarkovInstance& inst,
                                      const ReductionCertificate& cert, std::size_t horizon) {
    const std::size_t k = l.order();
    const std::size_t dim = k + 1;
    const Matrix& m = inst.matrix;

    if (!m.is_square() || m.rows() != dim)
        throw std::invalid_argument("verify_certificate: instance dimension " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                    " does not match order " + std::to_string(k) + " + 1");
    if (cert.S.rows() != dim || cert.S.cols() != dim || cert.C.rows() != dim ||
        cert.C.cols() != dim || cert.D.rows() != dim || cert.D.cols() != dim ||
        cert.B.rows() != k || cert.B.cols() != k || cert.F.rows() != k || cert.F.cols() != k ||
        cert.stationary.size() != dim || cert.anchor.size() != k)
        throw std::invalid_argument("verify_certificate: certificate dimensions are inconsistent");
    if (inst.source >= dim || inst.target >= dim)
        throw std::invalid_argument("verify_certificate: state index out of range");

    VerificationReport report;
    report.horizon = horizon;
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    // --- structural checks -------------------------------------------------
    {
        bool ok = true;
        for (const Rational& sum : m.column_sums()) ok = ok && sum == Rational(1);
        add("column-sums-one", ok, ok ? "every column of M sums to 1" : "a column sum differs from 1");
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i)
            for (std::size_t j = 0; j < dim && ok; ++j) ok = m.at(i, j) > Rational(0);
        add("entrywise-positive", ok,
            ok ? "every entry of M is strictly positive (ergodic with witness 1)"
               : "M has a non-positive entry");
    }
    {
        const Rational expected(1, static_cast<long>(dim));
        const bool ok = inst.threshold == cert.stationary[inst.target] &&
                        inst.threshold == expected && inst.threshold > Rational(0) &&
                        inst.threshold < Rational(1);
        add("threshold", ok,
            ok ? "r = " + inst.threshold.to_string() + " matches the stationary entry"
               : "threshold r = " + inst.threshold.to_string() + " differs from s_i = " +
                     expected.to_string());
    }
    {
        const Rational expected(1, static_cast<long>(dim));
        bool ok = true;
        for (const Rational& s : cert.stationary) ok = ok && s == expected;
        for (std::size_t i = 0; i < dim && ok; ++i)
            for (std::size_t j = 0; j < dim && ok; ++j)
                ok = cert.S.at(i, j) == cert.stationary[i];
        add("stationary-uniform", ok,
            ok ? "S = s 1^T with every entry of s equal to " + expected.to_string()
               : "S is not the uniform rank-one stochastic matrix");
    }
    {
        bool ok = cert.eta > Rational(0);
        for (std::size_t t = 0; t < k && ok; ++t) {
            const Rational expected = (t == inst.source ? Rational(1) : Rational(0)) -
                                      cert.stationary[t];
            ok = cert.anchor[t] == expected;
        }
        ok = ok && cert.eta * l.initial_terms()[0] == cert.anchor[0];
        add("anchor", ok,
            ok ? "anchor = first " + std::to_string(k) + " entries of (I - S) e_j, eta = " +
                     cert.eta.to_string() + " > 0, eta*u_0 = mu_1"
               : "anchor column or eta inconsistent with the source choice");
    }
    {
        bool ok = cert.F.at(0, 0) == Rational(1);
        for (std::size_t r = 0; r < k && ok; ++r)
            for (std::size_t c = 0; c < k && ok; ++c)
                ok = (r == c) ? !cert.F.at(r, c).is_zero() : cert.F.at(r, c).is_zero();
        if (ok) {
            const std::vector<Rational> mapped = mat_vec(cert.F, cert.anchor);
            for (std::size_t t = 0; t < k && ok; ++t)
                ok = mapped[t] == cert.eta * l.initial_terms()[t];
        }
        add("scaling", ok,
            ok ? "F diagonal, invertible, f_11 = 1, F*anchor = eta*u"
               : "F is not the required diagonal rescaling");
    }
    {
        const Matrix a = companion_matrix(l);
        const bool ok = cert.F * cert.B == a * cert.F;
        add("similarity", ok,
            ok ? "F B = A F, so B = F^{-1} A F" : "B is not similar to the companion matrix via F");
    }
    {
        bool ok = true;
        for (std::size_t r = 0; r < k && ok; ++r)
            for (std::size_t c = 0; c < k && ok; ++c) ok = cert.C.at(r, c) == cert.B.at(r, c);
        for (std::size_t r = 0; r < dim && ok; ++r) ok = cert.C.at(r, k).is_zero();
        for (std::size_t c = 0; c < k && ok; ++c) {
            Rational sum(0);
            for (std::size_t r = 0; r < k; ++r) sum += cert.B.at(r, c);
            ok = cert.C.at(k, c) == -sum;
        }
        if (ok)
            for (const Rational& sum : cert.C.column_sums()) ok = ok && sum.is_zero();
        ok = ok && (cert.S * cert.C).is_zero();
        add("embedding", ok,
            ok ? "C = [[B, 0], [-1^T B, 0]], 1^T C = 0^T, SC = O"
               : "C does not embed B with vanishing column sums");
    }
    {
        const Matrix deviation = cert.C - cert.C * cert.S;
        bool ok = cert.sigma == cert.S.min_entry() && cert.gamma == deviation.max_abs_entry() &&
                  cert.gamma > Rational(0) &&
                  cert.rho == Rational(2) * cert.gamma / cert.sigma &&
                  cert.D == cert.rho.inverse() * deviation;
        add("disturbance", ok,
            ok ? "gamma = " + cert.gamma.to_string() + ", sigma = " + cert.sigma.to_string() +
                     ", rho = 2*gamma/sigma = " + cert.rho.to_string() + ", D = (C - CS)/rho"
               : "gamma/sigma/rho/D are inconsistent with C and S");
    }
    {
        const bool ok = m == cert.S + cert.D;
        add("assembly", ok, ok ? "M = S + D" : "M differs from S + D");
    }
    {
        const bool ok = (cert.D * cert.S).is_zero() && (cert.S * cert.D).is_zero();
        add("annihilation", ok, ok ? "DS = SD = O" : "D and S do not annihilate each other");
    }
    {
        const bool ok = mat_vec(m, cert.stationary) == cert.stationary;
        add("stationarity", ok, ok ? "M s = s" : "s is not stationary for M");
    }

    // --- per-step identities up to the horizon ------------------------------
    const std::vector<Rational> terms = eval_range(l, horizon);
    bool power_split_ok = true, disturbance_power_ok = true, block_power_ok = true,
         correspondence_ok = true;
    std::size_t first_bad_n = 0;
    std::string sample;
    {
        const Matrix i_minus_s = Matrix::identity(dim) - cert.S;
        Matrix m_n = m, d_n = cert.D, c_n = cert.C, b_n = cert.B;
        Rational rho_n = cert.rho;
        for (std::size_t n = 1; n <= horizon; ++n) {
            if (n > 1) {
                m_n = m_n * m;
                d_n = d_n * cert.D;
                c_n = c_n * cert.C;
                b_n = b_n * cert.B;
                rho_n *= cert.rho;
            }
            bool step_ok = true;
            if (m_n != cert.S + d_n) power_split_ok = step_ok = false;
            if (rho_n * d_n != c_n * i_minus_s) disturbance_power_ok = step_ok = false;
            {
                bool block = true;
                for (std::size_t r = 0; r < k && block; ++r)
                    for (std::size_t c = 0; c < k && block; ++c)
                        block = c_n.at(r, c) == b_n.at(r, c);
                for (std::size_t r = 0; r < dim && block; ++r) block = c_n.at(r, k).is_zero();
                for (std::size_t c = 0; c < k && block; ++c) {
                    Rational sum(0);
                    for (std::size_t r = 0; r < k; ++r) sum += b_n.at(r, c);
                    block = block && c_n.at(k, c) == -sum;
                }
                if (!block) block_power_ok = step_ok = false;
            }
            {
                Rational row_dot(0);
                for (std::size_t c = 0; c < k; ++c) row_dot += b_n.at(0, c) * cert.anchor[c];
                const Rational lhs = m_n.at(inst.target, inst.source) - inst.threshold;
                const Rational rhs = cert.eta * terms[n] / rho_n;
                if (lhs != rhs || row_dot != cert.eta * terms[n])
                    correspondence_ok = step_ok = false;
            }
            if (!step_ok && first_bad_n == 0) first_bad_n = n;
            if (n == 1)
                sample = "n=1: m_ij - r = " +
                         (m_n.at(inst.target, inst.source) - inst.threshold).to_string() +
                         ", eta*u_1/rho = " + (cert.eta * terms[1] / cert.rho).to_string();
        }
    }
    const std::string range = "1 <= n <= " + std::to_string(horizon);
    add("power-split", power_split_ok,
        power_split_ok ? "M^n = S + D^n for " + range
                       : "M^n != S + D^n first fails at n = " + std::to_string(first_bad_n));
    add("disturbance-power", disturbance_power_ok,
        disturbance_power_ok ? "rho^n D^n = C^n (I - S) for " + range
                             : "rho^n D^n = C^n (I - S) fails by n = " + std::to_string(first_bad_n));
    add("block-power", block_power_ok,
        block_power_ok ? "C^n = [[B^n, 0], [-1^T B^n, 0]] for " + range
                       : "block power structure fails by n = " + std::to_string(first_bad_n));
    add("correspondence", correspondence_ok,
        correspondence_ok
            ? "m_ij^(n) - r = eta*u_n/rho^n and e_1^T B^n anchor = eta*u_n for " + range + "; " +
                  sample
            : "correspondence with the sequence fails by n = " + std::to_string(first_bad_n) +
                  "; " + sample);

    // --- step-0 edge facts ---------------------------------------------------
    {
        const Rational m0 = inst.target == inst.source ? Rational(1) : Rational(0);
        bool ok = m0 != inst.threshold;
        std::string detail = "m_ij^(0) = " + m0.to_string() + " != r";
        if (inst.query != QueryKind::Equal) {
            ok = ok && inst.source == 0 && inst.target == 0 && m0 > inst.threshold;
            detail += "; below-threshold query pins j = 1 and m_11^(0) = 1 > r";
        }
        add("step-zero", ok, ok ? detail : "a spurious step-0 witness exists: " + detail);
    }

    report.overall = true;
    for (const CheckResult& c : report.checks) report.overall = report.overall && c.pass;
    return report;
}

std::size_t wielandt_bound(std::size_t dim) {
    return dim <= 1 ? 1 : (dim - 1) * (dim - 1) + 1;
}

ErgodicityReport check_ergodicity(const Matrix& m, std::size_t budget) {
    require_stochastic(m, "check_ergodicity");
    const std::size_t dim = m.rows();

    std::vector<std::vector<bool>> base(dim, std::vector<bool>(dim, false));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) base[i][j] = m.at(i, j).sign() > 0;

    std::vector<std::vector<bool>> pat = base;
    for (std::size_t n = 1; n <= budget; ++n) {
        if (n > 1) {
            std::vector<std::vector<bool>> next(dim, std::vector<bool>(dim, false));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t l = 0; l < dim; ++l)
                    if (pat[i][l])
                        for (std::size_t j = 0; j < dim; ++j)
                            next[i][j] = next[i][j] || base[l][j];
            pat = std::move(next);
        }
        bool all = true;
        for (std::size_t i = 0; i < dim && all; ++i)
            for (std::size_t j = 0; j < dim && all; ++j) all = pat[i][j];
        if (all) return {true, n, ""};
    }
    std::ostringstream why;
    why << "no entrywise positive power up to N = " << budget;
    if (budget >= wielandt_bound(dim))
        why << " (past the primitivity bound " << wielandt_bound(dim)
            << ", so the chain is not ergodic)";
    why << "; positivity pattern of M^" << budget << ": " << zero_pattern(pat);
    return {false, 0, why.str()};
}

std::pair<Lrs, std::size_t> reverse_reduce(const Matrix& m, std::size_t target,
                                           std::size_t source, const Rational& threshold) {
    require_stochastic(m, "reverse_reduce");
    const std::size_t dim = m.rows();
    if (target >= dim || source >= dim)
        throw std::invalid_argument("reverse_reduce: state index out of range");

    // v_n = m_ij^(n) - r is annihilated by (x - 1) char_poly(M): the char-poly
    // factor kills the matrix powers (Cayley-Hamilton), the x - 1 factor the
    // constant. Low-order zero coefficients appear only for singular M and
    // are stripped, shifting the start of the represented window.
    const Polynomial annihilator =
        Polynomial({Rational(-1), Rational(1)}) * char_poly(m);
    const std::size_t full = static_cast<std::size_t>(annihilator.degree());

    std::size_t strip = 0;
    while (strip < full && annihilator.coeff(strip).is_zero()) ++strip;
    const std::size_t ord = full - strip;

    std::vector<Rational> coeffs(ord);
    for (std::size_t i = 0; i < ord; ++i) coeffs[i] = -annihilator.coeff(strip + i);

    std::vector<Rational> initial(ord);
    Matrix power = Matrix::identity(dim);
    for (std::size_t n = 0; n < strip + ord; ++n) {
        if (n > 0) power = power * m;
        if (n >= strip) initial[n - strip] = power.at(target, source) - threshold;
    }
    return {Lrs(std::move(coeffs), std::move(initial)), strip};
}

bool decide_infinite_equality(const Matrix& m, std::size_t target, std::size_t source,
                              const Rational& threshold) {
    const auto [difference, shift] = reverse_reduce(m, target, source, threshold);
    (void)shift;  // finitely many skipped terms cannot affect an infinitary property
    for (const SmlComponent& comp : sml_decompose(difference))
        if (comp.identically_zero) return true;
    return false;
}

QueryScanResult query_scan(const MarkovInstance& inst, std::size_t horizon) {
    const Matrix& m = inst.matrix;
    if (!m.is_square() || inst.source >= m.rows() || inst.target >= m.rows())
        throw std::invalid_argument("query_scan: malformed instance");

    QueryScanResult result;
    Matrix power = m;
    for (std::size_t n = 1; n <= horizon; ++n) {
        if (n > 1) power = power * m;
        const Rational& value = power.at(inst.target, inst.source);
        const bool hit = inst.query == QueryKind::Equal ? value == inst.threshold
                                                        : value < inst.threshold;
        if (hit) {
            if (!result.witness) result.witness = n;
            if (inst.query == QueryKind::InfinitelyOftenLess) result.hits.push_back(n);
            else break;  // least witness found
        }
    }
    return result;
}

}  // namespace lrs2mc
