#include "dops/series.hpp"

#include <algorithm>

#include "dops/errors.hpp"

namespace dops {

PowerSeries::PowerSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.emplace_back();
    }
}

PowerSeries PowerSeries::one(std::size_t order) {
    PowerSeries s = zero(order);
    s.coeffs_[0] = Scalar(1);
    return s;
}

PowerSeries PowerSeries::from_polynomial(const std::vector<Scalar> &poly, std::size_t order) {
    std::vector<Scalar> c(order + 1);
    for (std::size_t k = 0; k < poly.size() && k <= order; ++k) {
        c[k] = poly[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw OrderExceeded(order, this->order());
    }
    return PowerSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

PowerSeries &PowerSeries::operator+=(const PowerSeries &o) {
    const std::size_t n = std::min(order(), o.order());
    coeffs_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

PowerSeries &PowerSeries::operator-=(const PowerSeries &o) {
    const std::size_t n = std::min(order(), o.order());
    coeffs_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

PowerSeries &PowerSeries::operator*=(const Scalar &c) {
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

PowerSeries mul(const PowerSeries &f, const PowerSeries &g, std::size_t order) {
    const std::size_t available = std::min(f.order(), g.order());
    if (order > available) {
        throw OrderExceeded(order, available);
    }
    std::vector<Scalar> h(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (f[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (!g[j].is_zero()) {
                h[i + j] += f[i] * g[j];
            }
        }
    }
    return PowerSeries(std::move(h));
}

PowerSeries reciprocal(const PowerSeries &f, std::size_t order) {
    if (order > f.order()) {
        throw OrderExceeded(order, f.order());
    }
    if (f[0].is_zero()) {
        throw NonUnitConstantTerm();
    }
    const Scalar inv0 = f[0].inverse();
    std::vector<Scalar> h(order + 1);
    h[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar s;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                s += f[k] * h[n - k];
            }
        }
        h[n] = -(s * inv0);
    }
    return PowerSeries(std::move(h));
}

PowerSeries exp_series(const PowerSeries &f, std::size_t order) {
    if (order > f.order()) {
        throw OrderExceeded(order, f.order());
    }
    if (!f[0].is_zero()) {
        throw NonzeroConstantTerm();
    }
    std::vector<Scalar> g(order + 1);
    g[0] = Scalar(1);
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar s;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!f[k].is_zero()) {
                s += Scalar(static_cast<long>(k)) * f[k] * g[n - k];
            }
        }
        g[n] = s / Scalar(static_cast<long>(n));
    }
    return PowerSeries(std::move(g));
}

PowerSeries transform_arg(const PowerSeries &f, const Scalar &c, std::size_t m, std::size_t order) {
    if (m == 0) {
        throw InvalidParams("transform_arg needs a positive exponent");
    }
    if (order / m > f.order()) {
        throw OrderExceeded(order / m, f.order());
    }
    std::vector<Scalar> h(order + 1);
    Scalar ck(1);
    for (std::size_t k = 0; k * m <= order; ++k) {
        h[k * m] = ck * f[k];
        ck *= c;
    }
    return PowerSeries(std::move(h));
}

CoeffStream::CoeffStream(Rule rule) : state_(std::make_shared<State>()) { state_->rule = std::move(rule); }

Scalar CoeffStream::coeff(std::size_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto &memo = state_->memo;
    while (memo.size() <= n) {
        memo.push_back(state_->rule(memo.size()));
    }
    return memo[n];
}

PowerSeries CoeffStream::series(std::size_t order) const {
    std::vector<Scalar> c;
    c.reserve(order + 1);
    (void)coeff(order); // fills the memo up to order
    std::lock_guard<std::mutex> lock(state_->mutex);
    c.assign(state_->memo.begin(), state_->memo.begin() + static_cast<long>(order) + 1);
    return PowerSeries(std::move(c));
}

std::size_t CoeffStream::computed() const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->memo.size();
}

} // namespace dops
