#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dops/scalar.hpp"
#include "dops/series.hpp"

namespace dops {

/// Coefficient vector of a polynomial, lowest degree first.
using Polynomial = std::vector<Scalar>;

/// Brenke polynomials P_n(x) = sum_k a_{n-k} b_k x^k for 0 <= n <= N, generated by A(t)B(xt).
///
/// Immutable after construction.
class BrenkeSet {
public:
    [[nodiscard]] const PowerSeries &a() const { return a_; }
    [[nodiscard]] const PowerSeries &b() const { return b_; }
    [[nodiscard]] std::size_t order() const { return order_; }
    /// Coefficients of P_n (length n + 1).
    [[nodiscard]] const Polynomial &poly(std::size_t n) const { return table_.at(n); }
    [[nodiscard]] const std::vector<Polynomial> &table() const { return table_; }

    /// P_n(x0).
    [[nodiscard]] Scalar evaluate(std::size_t n, const Scalar &x0) const;

private:
    friend BrenkeSet build_polynomials(const PowerSeries &a, const PowerSeries &b, std::size_t order);

    PowerSeries a_;
    PowerSeries b_;
    std::size_t order_ = 0;
    std::vector<Polynomial> table_;
};

/// r_n = b_n / b_{n+1} for 0 <= n < N and Delta_n = r_n - r_{n-1} with r_{-1} = 0.
struct DeltaSeq {
    std::vector<Scalar> r;
    std::vector<Scalar> delta;
};

/// Throws NotNormalized unless a_0 = b_0 = 1, VanishingB(k) if some b_k = 0 (k <= N),
/// OrderExceeded if A or B is truncated below N.
BrenkeSet build_polynomials(const PowerSeries &a, const PowerSeries &b, std::size_t order);

DeltaSeq delta_sequence(const PowerSeries &b, std::size_t order);

/// Largest period p = m + 1 (2 <= p <= N) such that every P_n with n <= N only carries
/// exponents k = n (mod p). Read off the coefficient table.
std::optional<std::size_t> symmetry_order(const BrenkeSet &s);

/// a_1 = ... = a_m = 0. For a d-OPS this is equivalent to (d+1)-fold symmetry when m = d.
bool leading_a_vanish(const BrenkeSet &s, std::size_t m);

} // namespace dops
