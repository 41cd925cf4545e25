#include <atomic>
#include <thread>

#include <doctest.h>

#include "dops/errors.hpp"
#include "dops/specfun.hpp"
#include "support.hpp"

using dops::PowerSeries;
using dops::Rational;
using dops::Scalar;
using support::sc;
using support::series;

namespace {

PowerSeries exp_prefix(std::size_t order) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k <= order; ++k) {
        c.emplace_back(dops::factorial(k).inverse());
    }
    return PowerSeries(std::move(c));
}

PowerSeries poly(std::initializer_list<Scalar> c, std::size_t order) {
    return PowerSeries::from_polynomial(std::vector<Scalar>(c), order);
}

} // namespace

TEST_CASE("mul examples") {
    CHECK(dops::mul(poly({1, 1}, 2), poly({1, -1}, 2), 2) == series({1, 0, -1}));
    CHECK(dops::mul(poly({1, 1, 1}, 3), poly({1, -1}, 3), 3) == series({1, 0, 0, -1}));
    const PowerSeries e = series({1, 1, sc(1, 2)});
    CHECK(dops::mul(e, e, 2) == series({1, 2, 2}));
    CHECK_THROWS_AS(dops::mul(series({1, 1}), series({1, 1}), 3), dops::OrderExceeded);
}

TEST_CASE("reciprocal examples") {
    CHECK(dops::reciprocal(poly({1, 1}, 4), 4) == series({1, -1, 1, -1, 1}));
    const PowerSeries inv = dops::reciprocal(series({1, 1, 1, 0, 0, 0, 0}), 6);
    CHECK(inv == series({1, -1, 0, 1, -1, 0, 1}));
    CHECK(dops::mul(inv, series({1, 1, 1, 0, 0, 0, 0}), 6) == PowerSeries::one(6));
    CHECK(dops::reciprocal(series({2}), 0) == series({sc(1, 2)}));
    CHECK_THROWS_AS(dops::reciprocal(series({0, 1}), 1), dops::NonUnitConstantTerm);
}

TEST_CASE("exp_series examples") {
    CHECK(dops::exp_series(series({0, 1, 0, 0, 0, 0}), 5) == exp_prefix(5));
    CHECK(dops::exp_series(series({0, 1, 1, 0}), 3) == series({1, 1, sc(3, 2), sc(7, 6)}));
    CHECK(dops::exp_series(PowerSeries::zero(4), 4) == PowerSeries::one(4));
    CHECK_THROWS_AS(dops::exp_series(series({1, 1}), 1), dops::NonzeroConstantTerm);
}

TEST_CASE("transform_arg examples") {
    CHECK(dops::transform_arg(series({1, 1}), sc(2), 3, 4) == series({1, 0, 0, 2, 0}));
    support::Rng rng(3);
    const PowerSeries f = rng.series(7);
    CHECK(dops::transform_arg(f, sc(1), 1, 7) == f);
    const PowerSeries alt = dops::transform_arg(exp_prefix(6), sc(-1), 1, 6);
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(alt[k] == (k % 2 == 0 ? exp_prefix(6)[k] : -exp_prefix(6)[k]));
    }
}

TEST_CASE("exp_series agrees with the power expansion") {
    support::Rng rng(91);
    for (int i = 0; i < 10; ++i) {
        const PowerSeries f = rng.series(10, Scalar());
        CHECK(dops::exp_series(f, 10) == support::naive_exp(f, 10));
    }
}

TEST_CASE("mul is a commutative monoid") {
    support::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        const PowerSeries f = rng.series(12);
        const PowerSeries g = rng.series(12);
        const PowerSeries h = rng.series(12);
        CHECK(dops::mul(f, g, 12) == dops::mul(g, f, 12));
        CHECK(dops::mul(dops::mul(f, g, 12), h, 12) == dops::mul(f, dops::mul(g, h, 12), 12));
        CHECK(dops::mul(f, PowerSeries::one(12), 12) == f);
    }
}

TEST_CASE("reciprocal is an involution") {
    support::Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const PowerSeries f = rng.series(12, rng.nonzero_scalar());
        CHECK(dops::reciprocal(dops::reciprocal(f, 12), 12) == f);
        CHECK(dops::mul(f, dops::reciprocal(f, 12), 12) == PowerSeries::one(12));
    }
}

TEST_CASE("exp turns sums into products") {
    support::Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        const PowerSeries f = rng.series(20, Scalar());
        const PowerSeries g = rng.series(20, Scalar());
        CHECK(dops::exp_series(f + g, 20) == dops::mul(dops::exp_series(f, 20), dops::exp_series(g, 20), 20));
    }
}

TEST_CASE("transform_arg composes") {
    support::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const PowerSeries f = rng.series(24);
        const Scalar c = rng.nonzero_scalar();
        const Scalar c2 = rng.nonzero_scalar();
        const auto m = static_cast<std::size_t>(rng.integer(1, 3));
        const auto m2 = static_cast<std::size_t>(rng.integer(1, 3));
        // f(c2 t^m2) evaluated at c t^m is f(c2 c^m2 t^(m m2)).
        const PowerSeries inner = dops::transform_arg(f, c2, m2, 24);
        const PowerSeries lhs = dops::transform_arg(inner, c, m, 24);
        const PowerSeries rhs = dops::transform_arg(f, c2 * c.pow(static_cast<long>(m2)), m * m2, 24);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("truncation and order checks") {
    const PowerSeries f = series({1, 2, 3});
    CHECK(f.truncated(1) == series({1, 2}));
    CHECK_THROWS_AS((void)f.truncated(5), dops::OrderExceeded);
    CHECK(PowerSeries::from_polynomial({1, 2}, 3) == series({1, 2, 0, 0}));
}

TEST_CASE("coefficient streams are shared and thread safe") {
    std::atomic<int> calls{0};
    dops::CoeffStream stream([&calls](std::size_t n) {
        ++calls;
        return Scalar(Rational(1, static_cast<long>(n) + 1));
    });
    const dops::CoeffStream copy = stream;
    std::vector<std::vector<Scalar>> seen(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t n = 0; n < 200; ++n) {
                seen[t].push_back((t % 2 == 0 ? stream : copy).coeff(n));
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (const auto &row : seen) {
        CHECK(row == seen.front());
    }
    CHECK(seen.front()[9] == sc(1, 10));
    CHECK(calls.load() == 200);
    CHECK(stream.computed() == 200);
    CHECK(stream.series(3) == series({1, sc(1, 2), sc(1, 3), sc(1, 4)}));
}
