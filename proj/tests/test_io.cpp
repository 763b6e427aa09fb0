#include <doctest.h>

#include <nlohmann/json.hpp>

#include "lrs2mc/io.hpp"
#include "lrs2mc/reduction.hpp"
#include "lrs2mc/selftest.hpp"

using lrs2mc::input_error;
using lrs2mc::Lrs;
using lrs2mc::Matrix;
using lrs2mc::QueryKind;
using lrs2mc::Rational;
using nlohmann::json;

TEST_CASE("query kind tokens") {
    for (QueryKind q :
         {QueryKind::Equal, QueryKind::Less, QueryKind::InfinitelyOftenLess})
        CHECK(lrs2mc::query_kind_from_string(lrs2mc::query_kind_to_string(q)) == q);
    CHECK_THROWS_AS(lrs2mc::query_kind_from_string("sometimes"), input_error);
}

TEST_CASE("rational json accepts tokens and integers") {
    CHECK(lrs2mc::rational_from_json(json("3/4"), "t") == Rational(3, 4));
    CHECK(lrs2mc::rational_from_json(json(-7), "t") == Rational(-7));
    CHECK_THROWS_AS(lrs2mc::rational_from_json(json("1/0"), "t"), input_error);
    CHECK_THROWS_AS(lrs2mc::rational_from_json(json(0.5), "t"), input_error);
    CHECK_THROWS_AS(lrs2mc::rational_from_json(json::array(), "t"), input_error);
}

TEST_CASE("lrs json round trip and validation") {
    const json good = {{"order", 2},
                       {"coefficients", {"1", "1"}},
                       {"initial", {"1", "1"}}};
    const Lrs l = lrs2mc::lrs_from_json(good);
    CHECK(l.order() == 2);
    CHECK(lrs2mc::lrs_from_json(lrs2mc::lrs_to_json(l)).coefficients() == l.coefficients());

    json bad = good;
    bad["order"] = 3;
    CHECK_THROWS_AS(lrs2mc::lrs_from_json(bad), input_error);
    bad = good;
    bad["coefficients"] = {"0", "1"};
    CHECK_THROWS_AS(lrs2mc::lrs_from_json(bad), input_error);  // a_0 = 0
    bad = good;
    bad.erase("initial");
    CHECK_THROWS_AS(lrs2mc::lrs_from_json(bad), input_error);
    bad = good;
    bad["order"] = 0;
    CHECK_THROWS_AS(lrs2mc::lrs_from_json(bad), input_error);
}

TEST_CASE("matrix and instance round trips") {
    lrs2mc::TestRng rng(23);
    const Matrix m = random_stochastic(rng, 3);
    CHECK(lrs2mc::matrix_from_json(lrs2mc::matrix_to_json(m), "m") == m);

    const Lrs fib({Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    const auto [inst, cert] = build_instance(fib, QueryKind::Equal);
    const json j = lrs2mc::instance_to_json(inst);
    CHECK(j.at("dimension") == 3);
    CHECK(j.at("source") == 1);  // 1-based on disk
    CHECK(j.at("target") == 1);
    const lrs2mc::MarkovInstance back = lrs2mc::instance_from_json(j);
    CHECK(back.matrix == inst.matrix);
    CHECK(back.source == inst.source);
    CHECK(back.target == inst.target);
    CHECK(back.threshold == inst.threshold);
    CHECK(back.query == inst.query);

    json bad = j;
    bad["source"] = 4;
    CHECK_THROWS_AS(lrs2mc::instance_from_json(bad), input_error);
    bad = j;
    bad["source"] = 0;
    CHECK_THROWS_AS(lrs2mc::instance_from_json(bad), input_error);
    bad = j;
    bad["dimension"] = 2;
    CHECK_THROWS_AS(lrs2mc::instance_from_json(bad), input_error);
}

TEST_CASE("certificate round trip keeps every field") {
    const Lrs fib({Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    const auto [inst, cert] = build_instance(fib, QueryKind::Equal);
    const json j = lrs2mc::certificate_to_json(cert, fib);
    const auto [back, source] = lrs2mc::certificate_from_json(j);
    CHECK(back.stationary == cert.stationary);
    CHECK(back.S == cert.S);
    CHECK(back.anchor == cert.anchor);
    CHECK(back.eta == cert.eta);
    CHECK(back.F == cert.F);
    CHECK(back.B == cert.B);
    CHECK(back.C == cert.C);
    CHECK(back.gamma == cert.gamma);
    CHECK(back.sigma == cert.sigma);
    CHECK(back.rho == cert.rho);
    CHECK(back.D == cert.D);
    CHECK(source.coefficients() == fib.coefficients());
    CHECK(source.initial_terms() == fib.initial_terms());
    // the round-tripped pair still verifies
    CHECK(verify_certificate(source, inst, back, 10).overall);
}

TEST_CASE("serialization is deterministic") {
    const Lrs fib({Rational(1), Rational(1)}, {Rational(1), Rational(1)});
    const auto [inst, cert] = build_instance(fib, QueryKind::Equal);
    CHECK(lrs2mc::instance_to_json(inst).dump(2) == lrs2mc::instance_to_json(inst).dump(2));
    const auto [inst2, cert2] = build_instance(fib, QueryKind::Equal);
    CHECK(lrs2mc::certificate_to_json(cert, fib).dump(2) ==
          lrs2mc::certificate_to_json(cert2, fib).dump(2));
}
