#include <doctest.h>

#include <algorithm>

#include "lrs2mc/analysis.hpp"
#include "lrs2mc/selftest.hpp"

using lrs2mc::ErgodicityReport;
using lrs2mc::Lrs;
using lrs2mc::MarkovInstance;
using lrs2mc::Matrix;
using lrs2mc::QueryKind;
using lrs2mc::Rational;
using lrs2mc::VerificationReport;

namespace {

Lrs make(std::initializer_list<long> coeffs, std::initializer_list<long> initial) {
    std::vector<Rational> a, u;
    for (long c : coeffs) a.emplace_back(c);
    for (long v : initial) u.emplace_back(v);
    return Lrs(std::move(a), std::move(u));
}

const Lrs kFib = make({1, 1}, {1, 1});
const Lrs kLine = make({-1, 2}, {-2, -1});  // u_n = n - 2
const Lrs kHalf = Lrs({Rational(1, 2)}, {Rational(1)});

const Matrix kSym{{Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)}};
const Matrix kSwap{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
const Matrix kAveraging{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};

bool check_failed(const VerificationReport& r, const std::string& name) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [&](const auto& c) { return c.name == name && !c.pass; });
}

}  // namespace

TEST_CASE("verify_certificate passes on built instances") {
    {
        const auto [inst, cert] = build_instance(kHalf, QueryKind::Less);
        const VerificationReport report = verify_certificate(kHalf, inst, cert, 10);
        CHECK(report.overall);
        CHECK(report.horizon == 10);
        bool found = false;
        for (const auto& c : report.checks)
            if (c.name == "correspondence") {
                found = true;
                CHECK(c.detail.find("1/4") != std::string::npos);  // m_11 - r at n = 1
            }
        CHECK(found);
    }
    {
        const auto [inst, cert] = build_instance(kFib, QueryKind::Equal);
        CHECK(verify_certificate(kFib, inst, cert, 20).overall);
    }
    {
        const auto [inst, cert] = build_instance(kLine, QueryKind::Equal);
        CHECK(verify_certificate(kLine, inst, cert, 30).overall);
    }
}

TEST_CASE("verify_certificate catches a tampered threshold") {
    auto [inst, cert] = build_instance(kHalf, QueryKind::Less);
    inst.threshold = Rational(1, 3);
    const VerificationReport report = verify_certificate(kHalf, inst, cert, 10);
    CHECK(!report.overall);
    CHECK(check_failed(report, "correspondence"));
    CHECK(check_failed(report, "threshold"));
}

TEST_CASE("verify_certificate catches a tampered matrix entry") {
    auto [inst, cert] = build_instance(kFib, QueryKind::Equal);
    std::swap(inst.matrix.at(0, 0), inst.matrix.at(1, 0));
    const VerificationReport report = verify_certificate(kFib, inst, cert, 5);
    CHECK(!report.overall);
    CHECK(check_failed(report, "assembly"));
}

TEST_CASE("verify_certificate rejects dimension mismatches") {
    const auto [inst, cert] = build_instance(kFib, QueryKind::Equal);
    CHECK_THROWS_AS(verify_certificate(kHalf, inst, cert, 5), std::invalid_argument);
}

TEST_CASE("check_ergodicity") {
    const ErgodicityReport pos = check_ergodicity(kSym, 5);
    CHECK(pos.ergodic);
    CHECK(pos.witness == 1);

    const ErgodicityReport id = check_ergodicity(Matrix::identity(2), 10);
    CHECK(!id.ergodic);
    CHECK(id.failure.find("not ergodic") != std::string::npos);

    const ErgodicityReport swap2 = check_ergodicity(kSwap, 10);
    CHECK(!swap2.ergodic);

    // positive only from the second power on
    const Matrix lazy{{Rational(1, 2), Rational(1)}, {Rational(1, 2), Rational(0)}};
    const ErgodicityReport two = check_ergodicity(lazy, 10);
    CHECK(two.ergodic);
    CHECK(two.witness == 2);

    CHECK_THROWS_AS(check_ergodicity(Matrix(2, 3), 5), std::invalid_argument);
    const Matrix bad{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(1, 2)}};
    CHECK_THROWS_AS(check_ergodicity(bad, 5), std::invalid_argument);
    const Matrix negative{{Rational(3, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(1, 2)}};
    CHECK_THROWS_AS(check_ergodicity(negative, 5), std::invalid_argument);
}

TEST_CASE("wielandt bound") {
    CHECK(lrs2mc::wielandt_bound(1) == 1);
    CHECK(lrs2mc::wielandt_bound(2) == 2);
    CHECK(lrs2mc::wielandt_bound(3) == 5);
    CHECK(lrs2mc::wielandt_bound(7) == 37);
}

TEST_CASE("reverse_reduce recovers the difference sequence") {
    const auto [l, start] = reverse_reduce(kSym, 0, 0, Rational(1, 2));
    CHECK(start == 0);
    CHECK(l.order() == 3);  // (x - 1)(x^2 - 3/2 x + 1/2)
    const std::vector<Rational> v = eval_range(l, 15);
    for (unsigned long n = 0; n <= 15; ++n) {
        CHECK(v[n] == mat_pow(kSym, n).at(0, 0) - Rational(1, 2));
        CHECK(v[n] == lrs2mc::pow(Rational(1, 2), n + 1));
    }
}

TEST_CASE("reverse_reduce with zero threshold") {
    const auto [l, start] = reverse_reduce(kSym, 1, 0, Rational(0));
    CHECK(start == 0);  // kSym is invertible
    const std::vector<Rational> v = eval_range(l, 12);
    for (unsigned long n = 0; n <= 12; ++n) CHECK(v[n] == mat_pow(kSym, n).at(1, 0));
}

TEST_CASE("reverse_reduce strips the singular factor") {
    const auto [l, start] = reverse_reduce(kAveraging, 0, 1, Rational(1, 2));
    CHECK(start >= 1);
    const std::vector<Rational> v = eval_range(l, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(v[n] == mat_pow(kAveraging, n + start).at(0, 1) - Rational(1, 2));
        CHECK(v[n].is_zero());  // m_12^(n) = 1/2 for every n >= 1
    }
    CHECK_THROWS_AS(reverse_reduce(kSym, 2, 0, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(reverse_reduce(Matrix(2, 3), 0, 0, Rational(0)), std::invalid_argument);
}

TEST_CASE("decide_infinite_equality") {
    CHECK(decide_infinite_equality(kSwap, 0, 0, Rational(0)));   // zero at every odd step
    CHECK(!decide_infinite_equality(kSym, 0, 0, Rational(1, 2)));
    CHECK(decide_infinite_equality(Matrix::identity(2), 0, 0, Rational(1)));
    CHECK(decide_infinite_equality(kAveraging, 0, 1, Rational(1, 2)));
    CHECK(!decide_infinite_equality(kSwap, 0, 0, Rational(1, 3)));
    // 3-cycle: m_11^(n) = 1 iff 3 | n, = 0 otherwise
    const Matrix cycle3{{Rational(0), Rational(0), Rational(1)},
                        {Rational(1), Rational(0), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)}};
    CHECK(decide_infinite_equality(cycle3, 0, 0, Rational(0)));
    CHECK(decide_infinite_equality(cycle3, 0, 0, Rational(1)));
    CHECK(!decide_infinite_equality(cycle3, 0, 0, Rational(1, 2)));
}

TEST_CASE("query_scan") {
    {
        const auto [inst, cert] = build_instance(kLine, QueryKind::Equal);
        const auto result = query_scan(inst, 100);
        REQUIRE(result.witness.has_value());
        CHECK(*result.witness == 2);  // u_2 = 0
    }
    {
        const auto [inst, cert] = build_instance(kHalf, QueryKind::Less);
        CHECK(!query_scan(inst, 100).witness.has_value());
    }
    {
        const auto [inst, cert] = build_instance(kFib, QueryKind::Equal);
        CHECK(!query_scan(inst, 100).witness.has_value());
    }
    {
        // u_n = n - 2 is negative at n = 1 (and the scan sees every hit)
        auto [inst, cert] = build_instance(kLine, QueryKind::Equal);
        inst.query = QueryKind::InfinitelyOftenLess;
        const auto result = query_scan(inst, 20);
        REQUIRE(result.witness.has_value());
        CHECK(*result.witness == 1);
        CHECK(result.hits == std::vector<std::size_t>{1});
    }
}

TEST_CASE("query_scan matches the term pattern on built instances") {
    for (const Lrs& l : {kFib, kLine, kHalf}) {
        const auto [inst, cert] = build_instance(l, QueryKind::Equal);
        const std::vector<Rational> u = eval_range(l, 100);
        Matrix power = inst.matrix;
        for (std::size_t n = 1; n <= 100; ++n) {
            if (n > 1) power = power * inst.matrix;
            const Rational diff = power.at(inst.target, inst.source) - inst.threshold;
            CHECK((diff.is_zero()) == u[n].is_zero());
            CHECK(diff.sign() == u[n].sign());
        }
    }
}

TEST_CASE("deviation from the stationary projector decays") {
    for (const Lrs& l : {kFib, kLine, kHalf}) {
        const auto [inst, cert] = build_instance(l, QueryKind::Equal);
        const Matrix m10 = mat_pow(inst.matrix, 10) - cert.S;
        const Matrix m20 = mat_pow(inst.matrix, 20) - cert.S;
        CHECK(m20.max_abs_entry() < m10.max_abs_entry());
    }
}
