#include "dops/brenke.hpp"

#include <numeric>

#include "dops/errors.hpp"

namespace dops {

Scalar BrenkeSet::evaluate(std::size_t n, const Scalar &x0) const {
    const Polynomial &p = poly(n);
    Scalar acc;
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * x0 + p[k];
    }
    return acc;
}

BrenkeSet build_polynomials(const PowerSeries &a, const PowerSeries &b, std::size_t order) {
    if (a.order() < order) {
        throw OrderExceeded(order, a.order());
    }
    if (b.order() < order) {
        throw OrderExceeded(order, b.order());
    }
    if (!a[0].is_one() || !b[0].is_one()) {
        throw NotNormalized();
    }
    for (std::size_t k = 0; k <= order; ++k) {
        if (b[k].is_zero()) {
            throw VanishingB(k);
        }
    }
    BrenkeSet s;
    s.a_ = a.truncated(order);
    s.b_ = b.truncated(order);
    s.order_ = order;
    s.table_.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Polynomial p(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            p[k] = a[n - k] * b[k];
        }
        s.table_.push_back(std::move(p));
    }
    return s;
}

DeltaSeq delta_sequence(const PowerSeries &b, std::size_t order) {
    if (b.order() < order) {
        throw OrderExceeded(order, b.order());
    }
    for (std::size_t k = 0; k <= order; ++k) {
        if (b[k].is_zero()) {
            throw VanishingB(k);
        }
    }
    DeltaSeq seq;
    seq.r.reserve(order);
    seq.delta.reserve(order);
    for (std::size_t n = 0; n < order; ++n) {
        seq.r.push_back(b[n] / b[n + 1]);
        seq.delta.push_back(n == 0 ? seq.r[0] : seq.r[n] - seq.r[n - 1]);
    }
    return seq;
}

std::optional<std::size_t> symmetry_order(const BrenkeSet &s) {
    // P[n][k] = a_{n-k} b_k with b_k != 0, so the admissible periods are the divisors of the
    // gcd of the exponents j with a_j != 0; we still scan the table itself.
    const std::size_t order = s.order();
    std::size_t best = 0;
    for (std::size_t period = 2; period <= order; ++period) {
        bool ok = true;
        for (std::size_t n = 0; n <= order && ok; ++n) {
            const Polynomial &p = s.poly(n);
            for (std::size_t k = 0; k <= n; ++k) {
                if ((n - k) % period != 0 && !p[k].is_zero()) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            best = period;
        }
    }
    if (best == 0) {
        return std::nullopt;
    }
    return best;
}

bool leading_a_vanish(const BrenkeSet &s, std::size_t m) {
    for (std::size_t j = 1; j <= m && j <= s.order(); ++j) {
        if (!s.a()[j].is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace dops
