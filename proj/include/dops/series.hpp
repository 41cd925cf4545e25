#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <vector>

#include "dops/scalar.hpp"

namespace dops {

/// Formal power series truncated at an explicit, inclusive order N (N+1 coefficients).
class PowerSeries {
public:
    /// The zero series of order 0.
    PowerSeries() : coeffs_(1) {}
    explicit PowerSeries(std::vector<Scalar> coeffs);
    PowerSeries(std::initializer_list<Scalar> coeffs) : PowerSeries(std::vector<Scalar>(coeffs)) {}

    static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<Scalar>(order + 1)); }
    static PowerSeries one(std::size_t order);
    /// Polynomial coefficients padded with zeros (or cut) to the given order.
    static PowerSeries from_polynomial(const std::vector<Scalar> &poly, std::size_t order);

    [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Scalar &operator[](std::size_t k) const { return coeffs_.at(k); }
    [[nodiscard]] const std::vector<Scalar> &coeffs() const { return coeffs_; }

    void set(std::size_t k, Scalar value) { coeffs_.at(k) = std::move(value); }

    [[nodiscard]] PowerSeries truncated(std::size_t order) const;

    PowerSeries &operator+=(const PowerSeries &o);
    PowerSeries &operator-=(const PowerSeries &o);
    PowerSeries &operator*=(const Scalar &c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const Scalar &c) { return a *= c; }
    friend bool operator==(const PowerSeries &a, const PowerSeries &b) = default;

private:
    std::vector<Scalar> coeffs_;
};

/// Cauchy product truncated at `order`.
PowerSeries mul(const PowerSeries &f, const PowerSeries &g, std::size_t order);
/// 1/f by the triangular recursion sum_k h_k f_{n-k} = [n = 0].
PowerSeries reciprocal(const PowerSeries &f, std::size_t order);
/// exp(f) for f(0) = 0, via n g_n = sum_k k f_k g_{n-k}.
PowerSeries exp_series(const PowerSeries &f, std::size_t order);
/// f(c t^m): coefficient c^k f_k at t^{mk}.
PowerSeries transform_arg(const PowerSeries &f, const Scalar &c, std::size_t m, std::size_t order);

/// Lazily evaluated coefficient family n -> rule(n).
///
/// Copies share one memo. Reads are serialized by an internal mutex, so concurrent
/// readers observe the same values.
class CoeffStream {
public:
    using Rule = std::function<Scalar(std::size_t)>;

    explicit CoeffStream(Rule rule);

    [[nodiscard]] Scalar coeff(std::size_t n) const;
    [[nodiscard]] PowerSeries series(std::size_t order) const;
    /// Number of memoized coefficients.
    [[nodiscard]] std::size_t computed() const;

private:
    struct State {
        Rule rule;
        std::mutex mutex;
        std::vector<Scalar> memo;
    };
    std::shared_ptr<State> state_;
};

} // namespace dops
