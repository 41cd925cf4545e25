#include <doctest.h>

#include "dops/errors.hpp"
#include "support.hpp"

using dops::Rational;
using dops::Scalar;
using support::sc;
using support::sw;

TEST_CASE("rational canonical form") {
    Rational x(6, -4);
    CHECK(x.to_string() == "-3/2");
    CHECK(x.denominator() == 2);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), dops::DivisionByZero);
    CHECK_THROWS_AS((void)Rational(0).inverse(), dops::DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("1/x"), dops::ParseError);
}

TEST_CASE("omega arithmetic") {
    const Scalar w = Scalar::omega();
    CHECK(dops::mul(w, w) == sw(-1, -1));
    CHECK(dops::mul(sw(1, 1), sw(1, 1)) == w);
    CHECK(dops::mul(sc(2), sw(0, 3)) == sw(0, 6));
    CHECK(w.pow(3) == sc(1));
    CHECK(w * w + w + sc(1) == sc(0));
}

TEST_CASE("inverse") {
    CHECK(dops::inverse(Scalar::omega()) == sw(-1, -1));
    CHECK(dops::inverse(sc(2)) == sc(1, 2));
    const Scalar inv = dops::inverse(sw(1, 1));
    CHECK(inv == sw(0, -1));
    CHECK(dops::mul(sw(1, 1), inv) == sc(1));
    CHECK_THROWS_AS(dops::inverse(Scalar()), dops::DivisionByZero);
}

TEST_CASE("conj") {
    CHECK(dops::conj(Scalar::omega()) == sw(-1, -1));
    CHECK(dops::conj(sc(5)) == sc(5));
    CHECK(dops::conj(sw(1, 2)) == sw(-1, -2));
    CHECK(Scalar::omega_bar() == dops::conj(Scalar::omega()));
}

TEST_CASE("parse and print") {
    CHECK(Scalar::parse("w") == Scalar::omega());
    CHECK(Scalar::parse("1-2/3w") == Scalar(Rational(1), Rational(-2, 3)));
    CHECK(Scalar::parse("3/4") == sc(3, 4));
    support::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Scalar x = rng.scalar();
        CHECK(Scalar::parse(x.to_string()) == x);
    }
    CHECK_THROWS_AS(Scalar::parse("1+"), dops::ParseError);
}

TEST_CASE("field axioms on random samples") {
    support::Rng rng(2024);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        const Scalar x = rng.scalar();
        const Scalar y = rng.scalar();
        const Scalar z = rng.scalar();
        bool ok = (x * y) * z == x * (y * z);
        ok = ok && (x + y) + z == x + (y + z);
        ok = ok && x * (y + z) == x * y + x * z;
        ok = ok && x * y == y * x;
        ok = ok && x + Scalar() == x && x * Scalar(1) == x;
        if (!x.is_zero()) {
            ok = ok && x * x.inverse() == Scalar(1);
        }
        if (!ok) {
            ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("norm is multiplicative and conj is an automorphism") {
    support::Rng rng(77);
    for (int i = 0; i < 2000; ++i) {
        const Scalar x = rng.scalar();
        const Scalar y = rng.scalar();
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(dops::conj(x * y) == dops::conj(x) * dops::conj(y));
        CHECK(dops::conj(x + y) == dops::conj(x) + dops::conj(y));
        CHECK(x * dops::conj(x) == Scalar(x.norm()));
    }
}

TEST_CASE("square roots in the field") {
    support::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const Scalar x = rng.scalar();
        Scalar root;
        REQUIRE(dops::sqrt_in_field(x * x, root));
        CHECK(root * root == x * x);
    }
    Scalar root;
    CHECK_FALSE(dops::sqrt_in_field(sc(2), root));
    // -3 = (1 + 2w)^2
    REQUIRE(dops::sqrt_in_field(sc(-3), root));
    CHECK(root * root == sc(-3));
    Rational rr;
    CHECK(dops::rational_sqrt(Rational(9, 4), rr));
    CHECK(rr * rr == Rational(9, 4));
    CHECK_FALSE(dops::rational_sqrt(Rational(-1), rr));
}
