#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "dops/brenke.hpp"
#include "dops/scalar.hpp"
#include "dops/series.hpp"

namespace doctest {
template <>
struct StringMaker<dops::Scalar> {
    static String convert(const dops::Scalar &x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<dops::Rational> {
    static String convert(const dops::Rational &x) { return x.to_string().c_str(); }
};
} // namespace doctest

namespace support {

using dops::PowerSeries;
using dops::Rational;
using dops::Scalar;

inline Scalar sc(long p, long q = 1) { return Scalar(Rational(p, q)); }

inline Scalar sw(long u, long v) { return {Rational(u), Rational(v)}; }

inline PowerSeries series(std::initializer_list<Scalar> c) { return PowerSeries(std::vector<Scalar>(c)); }

class Rng {
public:
    explicit Rng(unsigned long long seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long span = 9, long max_den = 6) {
        return Rational(integer(-span, span), integer(1, max_den));
    }

    Rational nonzero_rational(long span = 9, long max_den = 6) {
        for (;;) {
            Rational r = rational(span, max_den);
            if (!r.is_zero()) {
                return r;
            }
        }
    }

    Scalar scalar() { return {rational(), rational()}; }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar x = scalar();
            if (!x.is_zero()) {
                return x;
            }
        }
    }

    /// Coefficients in Q(w) (or Q only) with the constant term forced.
    PowerSeries series(std::size_t order, std::optional<Scalar> constant = std::nullopt, bool rational_only = false) {
        std::vector<Scalar> c(order + 1);
        for (auto &x : c) {
            x = rational_only ? Scalar(rational()) : scalar();
        }
        if (constant) {
            c[0] = *constant;
        }
        return PowerSeries(std::move(c));
    }

    /// a_0 = 1 and (for B) every coefficient nonzero.
    PowerSeries normalized(std::size_t order, bool nonvanishing) {
        std::vector<Scalar> c(order + 1);
        c[0] = Scalar(1);
        for (std::size_t k = 1; k <= order; ++k) {
            c[k] = nonvanishing ? Scalar(nonzero_rational()) : Scalar(rational());
        }
        return PowerSeries(std::move(c));
    }

private:
    std::mt19937_64 gen_;
};

/// exp(f) = sum_k f^k / k! by repeated multiplication.
inline PowerSeries naive_exp(const PowerSeries &f, std::size_t order) {
    PowerSeries total = PowerSeries::one(order);
    PowerSeries term = PowerSeries::one(order);
    for (std::size_t k = 1; k <= order; ++k) {
        term = dops::mul(term, f, order) * Scalar(Rational(1, static_cast<long>(k)));
        total += term;
    }
    return total;
}

/// Plain polynomial product.
inline std::vector<Scalar> poly_mul(const std::vector<Scalar> &x, const std::vector<Scalar> &y) {
    std::vector<Scalar> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return out;
}

inline bool all_zero(const std::vector<Scalar> &p) {
    for (const auto &c : p) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace support
