#include "lrs2mc/selftest.hpp"

#include <functional>
#include <limits>

#include "lrs2mc/analysis.hpp"
#include "lrs2mc/degeneracy.hpp"
#include "lrs2mc/polynomial.hpp"
#include "lrs2mc/reduction.hpp"

namespace lrs2mc {

std::uint64_t TestRng::below(std::uint64_t bound) {
    // Rejection keeps the draw unbiased; bound is tiny next to 2^64 so the
    // loop essentially never repeats.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % bound;
}

long TestRng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational TestRng::rational(long max_abs_num, long max_den, bool nonzero) {
    for (;;) {
        const Rational r(range(-max_abs_num, max_abs_num), range(1, max_den));
        if (!nonzero || !r.is_zero()) return r;
    }
}

Lrs random_lrs(TestRng& rng, std::size_t order, long bound, bool nonzero_initials) {
    std::vector<Rational> coeffs(order), initial(order);
    coeffs[0] = rng.rational(bound, bound, true);
    for (std::size_t i = 1; i < order; ++i) coeffs[i] = rng.rational(bound, bound, false);
    for (std::size_t i = 0; i < order; ++i)
        initial[i] = rng.rational(bound, bound, nonzero_initials);
    return Lrs(std::move(coeffs), std::move(initial));
}

Lrs random_nondegenerate_lrs(TestRng& rng, std::size_t order, long bound) {
    for (;;) {
        Lrs candidate = random_lrs(rng, order, bound, true);
        if (degeneracy_orders(candidate).empty()) return candidate;
    }
}

Matrix random_stochastic(TestRng& rng, std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> col(dim);
        Rational sum(0);
        for (std::size_t i = 0; i < dim; ++i) {
            col[i] = Rational(rng.range(0, 9), rng.range(1, 4));
            sum += col[i];
        }
        if (sum.is_zero()) {  // redraw a column of zeros as a point mass
            col[rng.below(dim)] = Rational(1);
            sum = Rational(1);
        }
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = col[i] / sum;
    }
    return m;
}

namespace {

struct SuiteRunner {
    std::vector<SuiteResult>& out;

    void run(const std::string& name, std::size_t cases,
             const std::function<std::string(std::size_t)>& body) {
        SuiteResult result{name, cases, true, ""};
        for (std::size_t i = 0; i < cases; ++i) {
            std::string failure;
            try {
                failure = body(i);
            } catch (const std::exception& e) {
                failure = std::string("exception: ") + e.what();
            }
            if (!failure.empty()) {
                result.pass = false;
                result.detail = "case " + std::to_string(i) + ": " + failure;
                break;
            }
        }
        out.push_back(std::move(result));
    }
};

Matrix mat_pow_iterative(const Matrix& m, unsigned long n) {
    Matrix acc = Matrix::identity(m.rows());
    for (unsigned long i = 0; i < n; ++i) acc = acc * m;
    return acc;
}

Matrix random_square(TestRng& rng, std::size_t dim, long bound) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rng.rational(bound, bound, false);
    return m;
}

Polynomial substitute_matrix_trace_check(const Polynomial& p, const Matrix& m) {
    // Evaluates p at m; returns the zero polynomial sentinel by encoding the
    // max |entry| as a degree-0 polynomial (zero iff p(m) = O).
    Matrix acc(m.rows(), m.rows());
    Matrix power = Matrix::identity(m.rows());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        if (i > 0) power = power * m;
        acc += p.coeff(i) * power;
    }
    return Polynomial({acc.max_abs_entry()});
}

std::string check(bool ok, const std::string& msg) { return ok ? "" : msg; }

}  // namespace

SelftestSummary run_selftest(std::uint64_t seed) {
    SelftestSummary summary;
    SuiteRunner runner{summary.suites};

    {
        TestRng rng(seed ^ 0x6d61747065ULL);
        runner.run("matrix-power-laws", 40, [&](std::size_t) {
            const std::size_t dim = 1 + rng.below(4);
            const Matrix m = random_square(rng, dim, 5);
            const unsigned long a = rng.below(6), b = rng.below(6);
            if (mat_pow(m, a + b) != mat_pow(m, a) * mat_pow(m, b))
                return std::string("mat_pow(a+b) != mat_pow(a)*mat_pow(b)");
            return check(mat_pow(m, a) == mat_pow_iterative(m, a),
                         "repeated squaring disagrees with iterated multiplication");
        });
    }
    {
        TestRng rng(seed ^ 0x636179686dULL);
        runner.run("cayley-hamilton", 30, [&](std::size_t) {
            const std::size_t dim = 1 + rng.below(5);
            const Matrix m = random_square(rng, dim, 4);
            const Polynomial residue = substitute_matrix_trace_check(char_poly(m), m);
            return check(residue.is_zero(), "char_poly(m) evaluated at m is not the zero matrix");
        });
    }
    {
        TestRng rng(seed ^ 0x726573ULL);
        runner.run("resultant-vs-gcd", 60, [&](std::size_t) {
            std::vector<Rational> pc(1 + rng.below(5) + 1), qc(1 + rng.below(5) + 1);
            for (auto& c : pc) c = Rational(rng.range(-4, 4));
            for (auto& c : qc) c = Rational(rng.range(-4, 4));
            const Polynomial p(std::move(pc)), q(std::move(qc));
            if (p.is_zero() || q.is_zero()) return std::string();
            const bool res_zero = resultant(p, q).is_zero();
            const bool common = poly_gcd(p, q).degree() >= 1;
            return check(res_zero == common, "resultant zero iff gcd nonconstant violated");
        });
    }
    {
        runner.run("cyclotomic-product", 50, [&](std::size_t i) {
            const unsigned long m = static_cast<unsigned long>(i + 1);
            Polynomial prod = Polynomial::constant(Rational(1));
            for (unsigned long d = 1; d <= m; ++d)
                if (m % d == 0) prod = prod * cyclotomic(d);
            std::vector<Rational> expect(m + 1, Rational(0));
            expect[0] = Rational(-1);
            expect[m] = Rational(1);
            return check(prod == Polynomial(std::move(expect)),
                         "product of cyclotomics differs from x^m - 1 at m = " + std::to_string(m));
        });
    }
    {
        TestRng rng(seed ^ 0x736672ULL);
        runner.run("squarefree-part", 40, [&](std::size_t) {
            // Product of small linear factors with multiplicities.
            Polynomial p = Polynomial::constant(Rational(rng.range(1, 3)));
            for (int f = 0; f < 3; ++f) {
                const Polynomial lin({Rational(rng.range(-3, 3)), Rational(rng.range(1, 2))});
                p = p * pow(lin, rng.below(3));
            }
            if (p.degree() < 1) return std::string();
            const Polynomial sf = squarefree_part(p);
            if (!p.divmod(sf).second.is_zero())
                return std::string("squarefree part does not divide the input");
            return check(poly_gcd(sf, sf.derivative()).degree() == 0,
                         "squarefree part still has a repeated root");
        });
    }
    {
        TestRng rng(seed ^ 0x6c7273ULL);
        runner.run("companion-evaluation", 30, [&](std::size_t) {
            const Lrs l = random_lrs(rng, 1 + rng.below(4), 5, false);
            const Matrix a = companion_matrix(l);
            if (char_poly(a) != l.characteristic())
                return std::string("companion characteristic polynomial mismatch");
            const std::vector<Rational> u = eval_range(l, 30);
            Matrix power = Matrix::identity(l.order());
            for (std::size_t n = 0; n <= 30; ++n) {
                if (n > 0) power = power * a;
                Rational via_matrix(0);
                for (std::size_t c = 0; c < l.order(); ++c)
                    via_matrix += power.at(0, c) * l.initial_terms()[c];
                if (via_matrix != u[n])
                    return "matrix evaluation differs at n = " + std::to_string(n);
            }
            return std::string();
        });
    }
    {
        TestRng rng(seed ^ 0x7368696674ULL);
        runner.run("shift-and-stride", 25, [&](std::size_t) {
            const Lrs l = random_lrs(rng, 1 + rng.below(3), 4, false);
            const std::size_t a = rng.below(4), b = rng.below(4);
            const Lrs lhs = shift(shift(l, a), b), rhs = shift(l, a + b);
            if (eval_range(lhs, 12) != eval_range(rhs, 12))
                return std::string("shift composition mismatch");
            const std::size_t stride = 1 + rng.below(3);
            const std::size_t offset = rng.below(stride);
            const Lrs sub = stride_subsequence(l, stride, offset);
            const std::vector<Rational> u = eval_range(l, stride * 20 + offset);
            const std::vector<Rational> v = eval_range(sub, 20);
            for (std::size_t n = 0; n <= 20; ++n)
                if (v[n] != u[n * stride + offset])
                    return "stride subsequence differs at n = " + std::to_string(n);
            return std::string();
        });
    }
    {
        TestRng rng(seed ^ 0x64656765ULL);
        runner.run("decomposition", 25, [&](std::size_t) {
            const Lrs l = random_lrs(rng, 1 + rng.below(4), 4, false);
            const auto orders = degeneracy_orders(l);
            // Depends only on the coefficients: scaling the terms is inert.
            Lrs scaled(l.coefficients(), [&] {
                std::vector<Rational> u = l.initial_terms();
                const Rational s = rng.rational(5, 5, true);
                for (Rational& x : u) x *= s;
                return u;
            }());
            if (degeneracy_orders(scaled) != orders)
                return std::string("degeneracy orders changed under term scaling");
            for (const SmlComponent& comp : sml_decompose(l)) {
                if (!comp.nondegenerate) return std::string("degenerate component emitted");
                const std::vector<Rational> u = eval_range(l, comp.stride * 20 + comp.offset);
                const std::vector<Rational> v = eval_range(comp.component, 20);
                for (std::size_t n = 0; n <= 20; ++n)
                    if (v[n] != u[n * comp.stride + comp.offset])
                        return std::string("component terms differ from the strided source");
                bool zero = true;
                for (std::size_t n = 0; n <= 20; ++n) zero = zero && v[n].is_zero();
                if (comp.identically_zero != zero)
                    return std::string("identically-zero flag disagrees with the terms");
            }
            return std::string();
        });
    }
    {
        TestRng rng(seed ^ 0x726564756365ULL);
        runner.run("reduction-roundtrip", 15, [&](std::size_t) {
            const Lrs l = random_nondegenerate_lrs(rng, 1 + rng.below(4), 5);
            const auto [inst, cert] = build_instance(l, QueryKind::Equal);
            if (inst.matrix.rows() != l.order() + 1)
                return std::string("chain dimension is not order + 1");
            const VerificationReport report = verify_certificate(l, inst, cert, 15);
            if (!report.overall) {
                for (const CheckResult& c : report.checks)
                    if (!c.pass) return "verification failed at " + c.name + ": " + c.detail;
            }
            const ErgodicityReport erg = check_ergodicity(inst.matrix, 3);
            if (!erg.ergodic || erg.witness != 1)
                return std::string("built chain is not ergodic with witness 1");
            // Positive scaling of the terms leaves the instance unchanged.
            std::vector<Rational> u = l.initial_terms();
            const Rational s(rng.range(1, 9), rng.range(1, 9));
            for (Rational& x : u) x *= s;
            const auto [inst2, cert2] = build_instance(Lrs(l.coefficients(), u), QueryKind::Equal);
            if (inst2.matrix != inst.matrix || inst2.source != inst.source ||
                inst2.threshold != inst.threshold)
                return std::string("instance changed under positive term scaling");
            return std::string();
        });
    }
    {
        TestRng rng(seed ^ 0x72657665727365ULL);
        runner.run("reverse-reduction", 25, [&](std::size_t) {
            const std::size_t dim = 1 + rng.below(4);
            const Matrix m = random_stochastic(rng, dim);
            const std::size_t i = rng.below(dim), j = rng.below(dim);
            const Rational r(rng.range(0, 4), rng.range(1, 4));
            const auto [l, start] = reverse_reduce(m, i, j, r);
            const std::vector<Rational> v = eval_range(l, 25);
            Matrix power = mat_pow(m, start);
            for (std::size_t n = 0; n <= 25; ++n) {
                if (n > 0) power = power * m;
                if (v[n] != power.at(i, j) - r)
                    return "reverse-reduced sequence differs at n = " +
                           std::to_string(start + n);
            }
            return std::string();
        });
    }

    summary.all_pass = true;
    for (const SuiteResult& s : summary.suites) summary.all_pass = summary.all_pass && s.pass;
    return summary;
}

}  // namespace lrs2mc
