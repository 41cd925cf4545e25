#include <doctest.h>

#include "dops/errors.hpp"
#include "dops/families.hpp"
#include "dops/specfun.hpp"
#include "support.hpp"

using dops::PowerSeries;
using dops::Rational;
using dops::Scalar;
using support::sc;

namespace {

PowerSeries exp_of(std::vector<Scalar> poly, std::size_t order) {
    return dops::exp_series(PowerSeries::from_polynomial(poly, order), order);
}

PowerSeries exp_t(std::size_t order) { return exp_of({0, 1}, order); }

} // namespace

TEST_CASE("build_polynomials examples") {
    const auto monomials = dops::build_polynomials(PowerSeries::one(6), exp_t(6), 6);
    CHECK(monomials.poly(2) == dops::Polynomial{0, 0, sc(1, 2)});
    const auto s = dops::build_polynomials(exp_of({0, 0, 1, 1}, 6), exp_t(6), 6);
    CHECK(s.poly(3) == dops::Polynomial{1, 1, 0, sc(1, 6)});
    CHECK(s.evaluate(3, sc(2)) == sc(1) + sc(2) + sc(8, 6));
}

TEST_CASE("build_polynomials errors") {
    CHECK_THROWS_AS(dops::build_polynomials(support::series({2, 1, 1}), exp_t(2), 2), dops::NotNormalized);
    CHECK_THROWS_AS(dops::build_polynomials(PowerSeries::one(3), support::series({1, 1, 0, 1}), 3),
                    dops::VanishingB);
    CHECK_THROWS_AS(dops::build_polynomials(PowerSeries::one(3), exp_t(5), 5), dops::OrderExceeded);
    try {
        (void)dops::build_polynomials(PowerSeries::one(3), support::series({1, 1, 0, 1}), 3);
    } catch (const dops::VanishingB &e) {
        CHECK(e.index == 2);
    }
}

TEST_CASE("delta_sequence examples") {
    const auto seq = dops::delta_sequence(exp_t(12), 12);
    REQUIRE(seq.r.size() == 12);
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(seq.r[n] == sc(static_cast<long>(n) + 1));
        CHECK(seq.delta[n] == sc(1));
    }
    const Scalar q = sc(1, 3);
    const Scalar beta = sc(5, 2);
    const auto qseq = dops::delta_sequence(dops::q_exponential_stream(q, (sc(1) - q) / beta).series(12), 12);
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(qseq.delta[n] == beta * q.pow(static_cast<long>(n)));
    }
    const Scalar alpha = sc(-4, 7);
    const auto aseq = dops::delta_sequence(exp_of({0, alpha.inverse()}, 10), 10);
    for (const auto &d : aseq.delta) {
        CHECK(d == alpha);
    }
    CHECK(qseq.delta[0] == qseq.r[0]);
}

TEST_CASE("symmetry_order examples") {
    const std::size_t n = 12;
    CHECK(dops::symmetry_order(dops::build_polynomials(exp_of({0, 0, 0, 1}, n), exp_t(n), n)) == 3U);
    CHECK_FALSE(dops::symmetry_order(dops::build_polynomials(exp_of({0, 0, 1, 1}, n), exp_t(n), n)).has_value());
    CHECK(dops::symmetry_order(dops::build_polynomials(exp_of({0, 0, 1}, n), exp_t(n), n)) == 2U);
}

TEST_CASE("generating function consistency") {
    support::Rng rng(8);
    const std::size_t order = 14;
    for (int i = 0; i < 20; ++i) {
        const PowerSeries a = rng.normalized(order, false);
        const PowerSeries b = rng.normalized(order, true);
        const auto s = dops::build_polynomials(a, b, order);
        const Scalar x0 = i % 2 == 0 ? Scalar(rng.rational()) : rng.scalar();
        const PowerSeries gf = dops::mul(a, dops::transform_arg(b, x0, 1, order), order);
        for (std::size_t n = 0; n <= order; ++n) {
            CHECK(s.evaluate(n, x0) == gf[n]);
        }
    }
}

TEST_CASE("degree and leading coefficient") {
    support::Rng rng(9);
    const std::size_t order = 16;
    for (int i = 0; i < 10; ++i) {
        const PowerSeries b = rng.normalized(order, true);
        const auto s = dops::build_polynomials(rng.normalized(order, false), b, order);
        for (std::size_t n = 0; n <= order; ++n) {
            REQUIRE(s.poly(n).size() == n + 1);
            CHECK(s.poly(n).back() == b[n]);
            CHECK_FALSE(s.poly(n).back().is_zero());
        }
    }
}

TEST_CASE("symmetry pattern agrees with vanishing a on the catalog") {
    for (const auto &entry : dops::catalog()) {
        CAPTURE(entry.name);
        const auto s = dops::build_family(entry.spec, 20);
        const bool pattern = dops::symmetry_order(s) == 3U;
        CHECK(pattern == dops::leading_a_vanish(s, 2));
    }
}
