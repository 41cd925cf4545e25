#include <doctest.h>

#include "dops/errors.hpp"
#include "dops/specfun.hpp"
#include "support.hpp"

using dops::PowerSeries;
using dops::Rational;
using dops::Scalar;
using support::sc;
using support::sw;

TEST_CASE("pochhammer") {
    CHECK(dops::pochhammer(sc(2), 3) == sc(24));
    CHECK(dops::pochhammer(sw(3, 7), 0) == sc(1));
    CHECK(dops::pochhammer(sc(-1), 3) == sc(0));
    CHECK(dops::pochhammer(sc(1, 2), 2) == sc(3, 4));
}

TEST_CASE("q_shifted") {
    CHECK(dops::q_shifted(sc(1, 2), sc(1, 2), 2) == sc(3, 8));
    CHECK(dops::q_shifted(sc(5), sc(1, 3), 0) == sc(1));
    for (std::size_t n = 1; n < 6; ++n) {
        CHECK(dops::q_shifted(sc(1), sc(2, 3), n) == sc(0));
    }
    CHECK(dops::factorial(5) == Rational(120));
}

TEST_CASE("pfq examples") {
    const auto exp0 = dops::pfq_stream({{}, {}}, sc(1));
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(exp0.coeff(n) == Scalar(dops::factorial(n).inverse()));
    }
    const auto f02 = dops::pfq_stream({{}, {sc(1), sc(2)}}, sc(1));
    CHECK(f02.coeff(2) == sc(1, 24));
    const Scalar a = sw(2, -1);
    const auto f11 = dops::pfq_stream({{a}, {a}}, sc(1));
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(f11.coeff(n) == Scalar(dops::factorial(n).inverse()));
    }
    CHECK_THROWS_AS(dops::pfq_stream({{}, {sc(-2)}}, sc(1)), dops::InvalidLowerParameter);
}

TEST_CASE("0F0 equals exp") {
    const PowerSeries t = support::series({0, 1});
    CHECK(dops::pfq_stream({{}, {}}, sc(1)).series(20) ==
          dops::exp_series(PowerSeries::from_polynomial(t.coeffs(), 20), 20));
}

TEST_CASE("q-hypergeometric examples") {
    const Scalar q = sc(1, 3);
    const auto eq = dops::rphis_stream({{sc(0)}, {}, q}, sc(1));
    const auto prod = dops::rphis_stream({{}, {}, q}, sc(-1));
    for (std::size_t n = 0; n < 12; ++n) {
        CHECK(eq.coeff(n) == dops::q_shifted(q, q, n).inverse());
        const long c2 = static_cast<long>(n * (n - (n > 0 ? 1 : 0)) / 2);
        CHECK(prod.coeff(n) == q.pow(c2) / dops::q_shifted(q, q, n));
    }
    CHECK(dops::rphis_stream({{sc(2), sc(3)}, {sc(5)}, q}, sw(1, 1)).coeff(0) == sc(1));
    CHECK(dops::pfq_stream({{sc(2)}, {sc(5), sc(7)}}, sc(3)).coeff(0) == sc(1));
    CHECK(dops::q_exponential_stream(q, sc(1)).series(12) == eq.series(12));
    CHECK_THROWS_AS(dops::rphis_stream({{}, {}, sc(0)}, sc(1)), dops::InvalidLowerParameter);
    CHECK_THROWS_AS(dops::rphis_stream({{}, {sc(9)}, q}, sc(1)), dops::InvalidLowerParameter);
}

TEST_CASE("q-exponential inverts the infinite product") {
    for (const Scalar &q : {sc(1, 2), sc(-2, 5), sw(1, 2), sc(3)}) {
        const PowerSeries e = dops::q_exponential_stream(q, sc(1)).series(30);
        const PowerSeries p = dops::q_product_stream(q, sc(1)).series(30);
        CHECK(dops::mul(e, p, 30) == PowerSeries::one(30));
    }
}

TEST_CASE("infinite product splits off finitely many factors") {
    support::Rng rng(404);
    const std::size_t order = 20;
    for (int i = 0; i < 8; ++i) {
        const Scalar q = rng.nonzero_scalar();
        const Scalar x = rng.nonzero_scalar();
        if (q.pow(6).is_one()) {
            continue;
        }
        const auto k = static_cast<std::size_t>(rng.integer(1, 6));
        PowerSeries finite = PowerSeries::one(order);
        for (std::size_t j = 0; j < k; ++j) {
            const PowerSeries factor = PowerSeries::from_polynomial({1, -(x * q.pow(static_cast<long>(j)))}, order);
            finite = dops::mul(finite, factor, order);
        }
        const PowerSeries tail = dops::q_product_stream(q, x * q.pow(static_cast<long>(k))).series(order);
        CHECK(dops::mul(finite, tail, order) == dops::q_product_stream(q, x).series(order));
    }
}
