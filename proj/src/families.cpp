#include "dops/families.hpp"

#include <array>
#include <functional>
#include <memory>
#include <type_traits>

#include "dops/errors.hpp"
#include "dops/specfun.hpp"

namespace dops {

namespace {

using RFunc = std::function<Scalar(std::size_t)>;

constexpr std::array<std::pair<CaseLabel, std::string_view>, 13> kLabelNames{{
    {CaseLabel::Sym3Fold_G1, "Sym3Fold_G1"},
    {CaseLabel::Sym3Fold_G2, "Sym3Fold_G2"},
    {CaseLabel::A2_Hermite, "A2_Hermite"},
    {CaseLabel::A3_QAppell, "A3_QAppell"},
    {CaseLabel::B111_Chihara, "B111_Chihara"},
    {CaseLabel::B1311_Chihara, "B1311_Chihara"},
    {CaseLabel::B1312_i, "B1312_i"},
    {CaseLabel::B1312_ii, "B1312_ii"},
    {CaseLabel::B1313_LittleQLaguerre, "B1313_LittleQLaguerre"},
    {CaseLabel::B133_AlSalamCarlitz, "B133_AlSalamCarlitz"},
    {CaseLabel::B133_Appell, "B133_Appell"},
    {CaseLabel::B32_Laguerre, "B32_Laguerre"},
    {CaseLabel::Unclassified, "Unclassified"},
}};

Scalar one() { return Scalar(1); }

Scalar from_size(std::size_t n) { return Scalar(static_cast<long>(n)); }

/// q = 0 or q a root of unity of (q;q)_n-relevant order; in Q(w) these are the sixth roots.
bool degenerate_q(const Scalar &q) { return q.is_zero() || q.pow(6).is_one(); }

bool nonpositive_integer(const Scalar &x) {
    return x.is_rational() && x.u().is_integer() && x.u().sign() <= 0;
}

PowerSeries product_route(const RFunc &r, std::size_t order) {
    PowerSeries b = PowerSeries::zero(order);
    b.set(0, one());
    for (std::size_t n = 0; n < order; ++n) {
        b.set(n + 1, b[n] / r(n));
    }
    return b;
}

/// r_n = Delta_0 + ... + Delta_n.
std::vector<Scalar> cumulative(const RFunc &delta, std::size_t count) {
    std::vector<Scalar> r;
    r.reserve(count);
    Scalar acc;
    for (std::size_t n = 0; n < count; ++n) {
        acc += delta(n);
        r.push_back(acc);
    }
    return r;
}

/// A(t) = Q(t) A(xt) with Q = 1 + d1 t + d2 t^2 + d3 t^3 fixed by a1, a2, a3.
PowerSeries q_difference_route(const Scalar &a1, const Scalar &a2, const Scalar &a3, const Scalar &x,
                               std::size_t order) {
    const Scalar x2 = x * x;
    const Scalar x3 = x2 * x;
    const std::array<Scalar, 4> d{
        one(),
        a1 * (one() - x),
        a1 * a1 * (x2 - x) + a2 * (one() - x2),
        a1 * a1 * a1 * (x2 - x3) - a1 * a2 * (x2 + x - Scalar(2) * x3) + a3 * (one() - x3),
    };
    PowerSeries a = PowerSeries::zero(order);
    a.set(0, one());
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar s;
        for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
            s += d[k] * x.pow(static_cast<long>(n - k)) * a[n - k];
        }
        const Scalar den = one() - x.pow(static_cast<long>(n));
        if (den.is_zero()) {
            throw InvalidParams("q-difference route: x^" + std::to_string(n) + " = 1");
        }
        a.set(n, s / den);
    }
    return a;
}

/// a_n (1 - q^n) = sum_k e_k q^{n-k} a_{n-k}, with sum_k e_k t^k = (1 - rho t)(1 - lambda t)(1 - mu t).
PowerSeries q_appell_recursion(const QAppellProduct &f, std::size_t order) {
    const std::array<Scalar, 4> e{one(), -(f.rho + f.lambda + f.mu),
                                  f.rho * f.lambda + f.rho * f.mu + f.lambda * f.mu, -(f.rho * f.lambda * f.mu)};
    PowerSeries a = PowerSeries::zero(order);
    a.set(0, one());
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar s;
        for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
            s += e[k] * f.q.pow(static_cast<long>(n - k)) * a[n - k];
        }
        a.set(n, s / (one() - f.q.pow(static_cast<long>(n))));
    }
    return a;
}

PowerSeries interleave(const std::array<Scalar, 3> &pref, const std::array<CoeffStream, 3> &streams,
                       std::size_t order) {
    PowerSeries b = PowerSeries::zero(order);
    for (std::size_t k = 0; k <= order; ++k) {
        b.set(k, pref[k % 3] * streams[k % 3].coeff(k / 3));
    }
    return b;
}

// Per-variant data: r-sequence, violations, routes.

std::vector<Scalar> chihara_d(const ChiharaTypeQ3 &f) {
    const Scalar w = Scalar::omega();
    const Scalar wb = Scalar::omega_bar();
    return {f.alpha + f.beta + f.gamma, f.alpha + f.beta * w + f.gamma * wb, f.alpha + f.beta * wb + f.gamma * w};
}

struct ChiharaK {
    Scalar k1, k2, k3;
};

ChiharaK chihara_k(const ChiharaTypeQ3 &f) {
    const auto d = chihara_d(f);
    const Scalar q2 = f.q * f.q;
    ChiharaK k;
    k.k3 = d[0] + d[1] * f.q + d[2] * q2;
    k.k1 = (d[1] + d[2] * f.q + d[0] * q2) / k.k3;
    k.k2 = (d[2] + d[0] * f.q + d[1] * q2) / k.k3;
    return k;
}

Scalar b1312_k0(const B1312Family &f) {
    return f.alpha / (one() + f.q) + f.beta / (one() + f.q + f.q * f.q);
}

Scalar lql_k0(const LittleQLaguerreType &f) { return f.alpha + f.beta / (one() + f.q + f.q * f.q); }

RFunc r_rule(const HermiteType &f) {
    return [f](std::size_t n) { return from_size(n + 1) * f.alpha; };
}

RFunc r_rule(const QAppellProduct &f) {
    return [f](std::size_t n) {
        return f.beta * (one() - f.q.pow(static_cast<long>(n + 1))) / (one() - f.q);
    };
}

RFunc delta_rule(const ChiharaTypeQ3 &f) {
    const auto d = chihara_d(f);
    return [f, d](std::size_t n) { return d[n % 3] * f.q.pow(static_cast<long>(n)); };
}

RFunc delta_rule(const B1312Family &f) {
    return [f](std::size_t n) {
        const auto m = static_cast<long>(n);
        return f.alpha * f.q.pow(2 * m) + f.beta * f.q.pow(3 * m);
    };
}

RFunc delta_rule(const LittleQLaguerreType &f) {
    return [f](std::size_t n) {
        const auto m = static_cast<long>(n);
        return f.alpha * f.q.pow(m) + f.beta * f.q.pow(3 * m);
    };
}

RFunc r_rule(const LaguerreType &f) {
    return [f](std::size_t n) {
        const Scalar x = from_size(n);
        return f.gamma / Scalar(3) * (x + one()) * (x + f.lambda) * (x + f.mu);
    };
}

RFunc r_rule(const SymmetricG1 &f) {
    return [f](std::size_t k) {
        const Scalar n = from_size(k / 3);
        switch (k % 3) {
        case 0:
            return f.r0 + f.v0 * n;
        case 1:
            return f.r1 + f.v1 * n;
        default:
            return f.v2 * (n + one());
        }
    };
}

RFunc r_rule(const SymmetricG2 &f) {
    return [f](std::size_t k) {
        const auto n = static_cast<long>(k / 3);
        switch (k % 3) {
        case 0:
            return f.s0 * (f.t0 * f.q.pow(n) - one()) * f.q.pow(-n);
        case 1:
            return f.s1 * (f.t1 * f.q.pow(n) - one()) * f.q.pow(-n);
        default:
            return f.s2 * (f.q.pow(n + 1) - one()) * f.q.pow(-(n + 1));
        }
    };
}

template <class F>
RFunc cumulative_rule(const F &f, std::size_t count) {
    auto r = std::make_shared<std::vector<Scalar>>(cumulative(delta_rule(f), count));
    return [r](std::size_t n) { return r->at(n); };
}

RFunc r_rule_any(const FamilySpec &spec, std::size_t count) {
    return std::visit(
        [count](const auto &f) -> RFunc {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ChiharaTypeQ3> || std::is_same_v<T, B1312Family> ||
                          std::is_same_v<T, LittleQLaguerreType>) {
                return cumulative_rule(f, count);
            } else {
                return r_rule(f);
            }
        },
        spec);
}

void require(std::vector<std::string> &out, bool ok, std::string message) {
    if (!ok) {
        out.push_back(std::move(message));
    }
}

std::vector<std::string> violations(const HermiteType &f) {
    std::vector<std::string> v;
    require(v, !f.c3.is_zero(), "c3 = 0");
    require(v, !f.alpha.is_zero(), "alpha = 0");
    return v;
}

std::vector<std::string> violations(const QAppellProduct &f) {
    std::vector<std::string> v;
    require(v, !(f.rho * f.lambda * f.mu).is_zero(), "rho*lambda*mu = 0");
    require(v, !f.beta.is_zero(), "beta = 0");
    require(v, !degenerate_q(f.q), "q is 0 or a root of unity");
    return v;
}

std::vector<std::string> violations(const ChiharaTypeQ3 &f) {
    std::vector<std::string> v;
    require(v, !f.a1.is_zero(), "a1 = 0");
    require(v, !degenerate_q(f.q), "q is 0 or a root of unity");
    require(v, !f.alpha.is_zero(), "alpha = 0");
    require(v, !f.beta.is_zero(), "beta = 0");
    if (!v.empty()) {
        return v;
    }
    const auto d = chihara_d(f);
    for (std::size_t i = 0; i < 3; ++i) {
        require(v, !d[i].is_zero(), "D" + std::to_string(i) + " = 0");
    }
    if (!v.empty()) {
        return v;
    }
    const Scalar k3 = d[0] + d[1] * f.q + d[2] * f.q * f.q;
    if (k3.is_zero()) {
        v.emplace_back("k3 = 0");
        return v;
    }
    const ChiharaK k = chihara_k(f);
    require(v, !k.k1.is_zero(), "k1 = 0");
    require(v, !k.k2.is_zero(), "k2 = 0");
    require(v, !(one() - k.k1 * f.q).is_zero(), "k1 q = 1");
    require(v, !(k.k2 - f.q).is_zero(), "k2 = q");
    return v;
}

std::vector<std::string> violations(const B1312Family &f) {
    std::vector<std::string> v;
    require(v, !f.a1.is_zero(), "a1 = 0");
    require(v, !degenerate_q(f.q), "q is 0 or a root of unity");
    require(v, !f.alpha.is_zero(), "alpha = 0");
    require(v, !f.beta.is_zero(), "beta = 0");
    if (v.empty()) {
        require(v, !(one() + f.q + f.q * f.q).is_zero(), "1 + q + q^2 = 0");
        require(v, !(one() - f.q + f.q * f.q).is_zero(), "1 - q + q^2 = 0");
    }
    return v;
}

std::vector<std::string> violations(const LittleQLaguerreType &f) {
    std::vector<std::string> v;
    require(v, !f.a1.is_zero(), "a1 = 0");
    require(v, !degenerate_q(f.q), "q is 0 or a root of unity");
    require(v, !f.alpha.is_zero(), "alpha = 0");
    require(v, !f.beta.is_zero(), "beta = 0");
    return v;
}

std::vector<std::string> violations(const LaguerreType &f) {
    std::vector<std::string> v;
    require(v, !f.a1.is_zero(), "a1 = 0");
    require(v, !f.gamma.is_zero(), "gamma = 0");
    require(v, !nonpositive_integer(f.lambda), "lambda is a non-positive integer");
    require(v, !nonpositive_integer(f.mu), "mu is a non-positive integer");
    return v;
}

std::vector<std::string> violations(const SymmetricG1 &f) {
    std::vector<std::string> v;
    require(v, !f.a11.is_zero(), "a11 = 0");
    require(v, !f.v0.is_zero(), "v0 = 0");
    require(v, !f.v1.is_zero(), "v1 = 0");
    require(v, !f.v2.is_zero(), "v2 = 0");
    if (v.empty()) {
        require(v, !nonpositive_integer(f.r0 / f.v0), "r0/v0 is a non-positive integer");
        require(v, !nonpositive_integer(f.r1 / f.v1), "r1/v1 is a non-positive integer");
    }
    return v;
}

std::vector<std::string> violations(const SymmetricG2 &f) {
    std::vector<std::string> v;
    require(v, !f.a11.is_zero(), "a11 = 0");
    require(v, !degenerate_q(f.q), "q is 0 or a root of unity");
    require(v, !f.s0.is_zero(), "s0 = 0");
    require(v, !f.s1.is_zero(), "s1 = 0");
    require(v, !f.s2.is_zero(), "s2 = 0");
    require(v, !f.t0.is_one(), "t0 = 1");
    require(v, !f.t1.is_one(), "t1 = 1");
    return v;
}

// Routes.

FamilyRoutes routes(const HermiteType &f, std::size_t order) {
    const PowerSeries e = pfq_stream({}, one()).series(order);
    PowerSeries a1 = transform_arg(e, f.c1, 1, order);
    a1 = mul(a1, transform_arg(e, f.c2, 2, order), order);
    a1 = mul(a1, transform_arg(e, f.c3, 3, order), order);

    PowerSeries a2 = PowerSeries::zero(order);
    a2.set(0, one());
    const std::array<Scalar, 4> w{Scalar(0), f.c1, Scalar(2) * f.c2, Scalar(3) * f.c3};
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar s;
        for (std::size_t k = 1; k <= 3 && k <= n; ++k) {
            s += w[k] * a2[n - k];
        }
        a2.set(n, s / from_size(n));
    }
    return {{{"exp_product", a1}, {"exp_ode", a2}},
            {{"exponential", pfq_stream({}, one() / f.alpha).series(order)},
             {"r_product", product_route(r_rule(f), order)}}};
}

FamilyRoutes routes(const QAppellProduct &f, std::size_t order) {
    PowerSeries a = q_product_stream(f.q, f.rho).series(order);
    a = mul(a, q_product_stream(f.q, f.lambda).series(order), order);
    a = mul(a, q_product_stream(f.q, f.mu).series(order), order);
    return {{{"q_products", a}, {"q_difference", q_appell_recursion(f, order)}},
            {{"q_exponential", q_exponential_stream(f.q, (one() - f.q) / f.beta).series(order)},
             {"r_product", product_route(r_rule(f), order)}}};
}

FamilyRoutes routes(const ChiharaTypeQ3 &f, std::size_t order) {
    const Scalar &q = f.q;
    const Scalar q3 = q.pow(3);
    const Scalar a1c = f.a1.pow(3);
    const bool a2_zero = f.sub == ChiharaSub::A2Zero;

    // (1 + a1 t [+ a1^2 t^2]) (-+ a1^3 q^3 t^3; q^3)_inf
    const PowerSeries inner = q_product_stream(q3, (a2_zero ? -a1c : a1c) * q3).series(order / 3);
    std::vector<Scalar> head{one(), f.a1};
    if (!a2_zero) {
        head.push_back(f.a1 * f.a1);
    }
    const PowerSeries a_closed =
        mul(PowerSeries::from_polynomial(head, order), transform_arg(inner, one(), 3, order), order);
    const Scalar a2 = a2_zero ? Scalar(0) : f.a1 * f.a1;
    const Scalar a3 = a2_zero ? q3 * a1c / (one() - q3) : q3 * a1c / (q3 - one());

    const auto d = chihara_d(f);
    const ChiharaK k = chihara_k(f);
    const Scalar u = (one() - k.k1 * q) / d[0];
    const Scalar v = (k.k2 - q) / d[2];
    PowerSeries b_closed = PowerSeries::zero(order);
    for (std::size_t idx = 0; idx <= order; ++idx) {
        const std::size_t n = idx / 3;
        const auto ln = static_cast<long>(n);
        const Scalar base = (one() - q3).pow(ln) / (k.k3.pow(ln) * q_shifted(q3, q3, n));
        Scalar val;
        switch (idx % 3) {
        case 0:
            val = (u * v).pow(ln) * base / (q_shifted(k.k1 * q, q3, n) * q_shifted(k.k2 * q * q, q3, n));
            break;
        case 1:
            val = u.pow(ln + 1) * v.pow(ln) * base /
                  (q_shifted(k.k1 * q, q3, n + 1) * q_shifted(k.k2 * q * q, q3, n));
            break;
        default:
            val = (u * v).pow(ln + 1) * base /
                  (q_shifted(k.k1 * q, q3, n + 1) * q_shifted(k.k2 * q * q, q3, n + 1));
            break;
        }
        b_closed.set(idx, val);
    }
    const RFunc r_display = [f, d, k, q3](std::size_t idx) {
        const auto n = static_cast<long>(idx / 3);
        const Scalar &q = f.q;
        switch (idx % 3) {
        case 0:
            return d[0] / (one() - k.k1 * q) * (one() - k.k1 * q.pow(3 * n + 1));
        case 1:
            return d[2] / (k.k2 - q) * (one() - k.k2 * q.pow(3 * n + 2));
        default:
            return k.k3 * (one() - q.pow(3 * n + 3)) / (one() - q3);
        }
    };
    return {{{"closed_form", a_closed}, {"q_difference", q_difference_route(f.a1, a2, a3, q, order)}},
            {{"phi_display", b_closed},
             {"r_display", product_route(r_display, order)},
             {"r_product", product_route(cumulative_rule(f, order), order)}}};
}

FamilyRoutes routes(const B1312Family &f, std::size_t order) {
    const Scalar &q = f.q;
    const Scalar q2 = q * q;
    const Scalar q3 = q2 * q;
    const Scalar a1sq = f.a1 * f.a1;
    PowerSeries a_closed;
    Scalar a2;
    Scalar a3;
    if (f.sub == B1312Sub::I) {
        a_closed = q_product_stream(q, -(one() - q) * f.a1).series(order);
        a2 = q / (q + one()) * a1sq;
        a3 = q3 * (one() - q) / ((one() - q3) * (one() + q)) * a1sq * f.a1;
    } else {
        const Scalar nu = (one() - q2) * f.a1 / (one() + q3);
        const PowerSeries den = PowerSeries::from_polynomial({one(), nu * q}, order);
        a_closed = mul(q_product_stream(q, -nu).series(order), reciprocal(den, order), order);
        const Scalar q4 = q2 * q2;
        a2 = (one() - q2 + q3) * q2 / ((one() - q + q2) * (one() + q3)) * a1sq;
        a3 = (one() - q3 + q4) * q4 * q / ((one() - q + q2) * (one() + q2 + q4) * (one() + q3)) * a1sq * f.a1;
    }

    const Scalar k0 = b1312_k0(f);
    PowerSeries b_closed = PowerSeries::zero(order);
    if (k0.is_zero()) {
        const Scalar z = (q2 - one()) / f.alpha;
        for (std::size_t n = 0; n <= order; ++n) {
            const auto ln = static_cast<long>(n);
            b_closed.set(n, z.pow(ln) * q.pow(-ln * (ln + 1)) / q_shifted(q, q, n));
        }
    } else {
        const Scalar c = (k0 - f.alpha / (one() + q)) / k0;
        Scalar prod = one();
        for (std::size_t n = 0; n <= order; ++n) {
            const auto ln = static_cast<long>(n);
            if (n > 0) {
                prod *= one() + q.pow(ln) + c * q.pow(2 * ln);
            }
            b_closed.set(n, (one() - q).pow(ln) / (k0.pow(ln) * q_shifted(q, q, n) * prod));
        }
    }
    const RFunc r_display = [f, k0](std::size_t n) {
        const auto ln = static_cast<long>(n);
        const Scalar &q = f.q;
        return (one() - q.pow(ln + 1)) / (one() - q) *
               (k0 + k0 * q.pow(ln + 1) + (k0 - f.alpha / (one() + q)) * q.pow(2 * ln + 2));
    };
    return {{{"closed_form", a_closed},
             {"q2_difference", q_difference_route(f.a1, a2, a3, q2, order)},
             {"q3_difference", q_difference_route(f.a1, a2, a3, q3, order)}},
            {{"closed_form", b_closed},
             {"r_display", product_route(r_display, order)},
             {"r_product", product_route(cumulative_rule(f, order), order)}}};
}

FamilyRoutes routes(const LittleQLaguerreType &f, std::size_t order) {
    const Scalar &q = f.q;
    const Scalar q3 = q.pow(3);
    const Scalar a1sq = f.a1 * f.a1;
    const PowerSeries a_closed = q_product_stream(q, -(one() - q) * f.a1).series(order);
    const Scalar a2 = q / (one() + q) * a1sq;
    const Scalar a3 = q3 * (one() - q) / ((one() + q) * (one() - q3)) * a1sq * f.a1;

    const Scalar k0 = lql_k0(f);
    PowerSeries b_closed = PowerSeries::zero(order);
    if (k0.is_zero()) {
        for (std::size_t n = 0; n <= order; ++n) {
            const auto ln = static_cast<long>(n);
            const Scalar sign = n % 2 == 0 ? one() : Scalar(-1);
            b_closed.set(n, (one() - q).pow(ln) * sign * q.pow(-ln * (ln - 1) / 2) /
                                ((f.alpha * q).pow(ln) * q_shifted(q, q, n) * q_shifted(-q, q, n)));
        }
    } else {
        const Scalar c = (k0 - f.alpha) / k0;
        Scalar prod = one();
        for (std::size_t n = 0; n <= order; ++n) {
            const auto ln = static_cast<long>(n);
            if (n > 0) {
                prod *= one() + c * q.pow(ln) + c * q.pow(2 * ln);
            }
            b_closed.set(n, (one() - q).pow(ln) / (k0.pow(ln) * q_shifted(q, q, n) * prod));
        }
    }
    const RFunc r_display = [f, k0](std::size_t n) {
        const auto ln = static_cast<long>(n);
        const Scalar &q = f.q;
        return (one() - q.pow(ln + 1)) / (one() - q) *
               (k0 + (k0 - f.alpha) * q.pow(ln + 1) + (k0 - f.alpha) * q.pow(2 * ln + 2));
    };
    return {{{"closed_form", a_closed},
             {"q_difference", q_difference_route(f.a1, a2, a3, q, order)},
             {"q3_difference", q_difference_route(f.a1, a2, a3, q3, order)}},
            {{"closed_form", b_closed},
             {"r_display", product_route(r_display, order)},
             {"r_product", product_route(cumulative_rule(f, order), order)}}};
}

FamilyRoutes routes(const LaguerreType &f, std::size_t order) {
    PowerSeries a2 = PowerSeries::zero(order);
    a2.set(0, one());
    for (std::size_t n = 1; n <= order; ++n) {
        a2.set(n, f.a1 * a2[n - 1] / from_size(n));
    }
    return {{{"exponential", pfq_stream({}, f.a1).series(order)}, {"exp_ode", a2}},
            {{"hypergeometric", pfq_stream({{}, {f.lambda, f.mu}}, Scalar(3) / f.gamma).series(order)},
             {"r_product", product_route(r_rule(f), order)}}};
}

PowerSeries g1_b(const SymmetricG1 &f, bool display, std::size_t order) {
    const Scalar p = f.r0 / f.v0;
    const Scalar s = f.r1 / f.v1;
    const Scalar x = one() / (f.v0 * f.v1 * f.v2);
    const std::array<std::array<Scalar, 2>, 3> params =
        display ? std::array<std::array<Scalar, 2>, 3>{{{p + one(), s + one()}, {p + one(), s}, {p, s}}}
                : std::array<std::array<Scalar, 2>, 3>{{{p, s}, {p + one(), s}, {p + one(), s + one()}}};
    const std::array<Scalar, 3> pref{one(), one() / f.r0, one() / (f.r0 * f.r1)};
    const std::array<CoeffStream, 3> streams{pfq_stream({{}, {params[0][0], params[0][1]}}, x),
                                             pfq_stream({{}, {params[1][0], params[1][1]}}, x),
                                             pfq_stream({{}, {params[2][0], params[2][1]}}, x)};
    return interleave(pref, streams, order);
}

PowerSeries g2_b(const SymmetricG2 &f, bool display, std::size_t order) {
    const Scalar &q = f.q;
    const Scalar y = one() / (f.s0 * f.s1 * f.s2);
    const std::array<std::array<Scalar, 2>, 3> params =
        display ? std::array<std::array<Scalar, 2>, 3>{{{q * f.t0, q * f.t1}, {q * f.t0, f.t1}, {q, f.t1}}}
                : std::array<std::array<Scalar, 2>, 3>{{{f.t0, f.t1}, {q * f.t0, f.t1}, {q * f.t0, q * f.t1}}};
    const std::array<Scalar, 3> pref{one(), one() / (f.s0 * (f.t0 - one())),
                                     one() / (f.s0 * f.s1 * (f.t0 - one()) * (f.t1 - one()))};
    const std::array<CoeffStream, 3> streams{rphis_stream({{}, {params[0][0], params[0][1]}, q}, q * y),
                                             rphis_stream({{}, {params[1][0], params[1][1]}, q}, q.pow(2) * y),
                                             rphis_stream({{}, {params[2][0], params[2][1]}, q}, q.pow(3) * y)};
    return interleave(pref, streams, order);
}

FamilyRoutes routes(const SymmetricG1 &f, std::size_t order) {
    const PowerSeries e = pfq_stream({}, f.a11).series(order / 3);
    PowerSeries a2 = PowerSeries::zero(order);
    a2.set(0, one());
    for (std::size_t n = 3; n <= order; n += 3) {
        a2.set(n, Scalar(3) * f.a11 * a2[n - 3] / from_size(n));
    }
    return {{{"exponential", transform_arg(e, one(), 3, order)}, {"exp_ode", a2}},
            {{"interleaved_0F2", g1_b(f, false, order)}, {"r_product", product_route(r_rule(f), order)}}};
}

FamilyRoutes routes(const SymmetricG2 &f, std::size_t order) {
    const Scalar &q = f.q;
    const PowerSeries e = q_exponential_stream(q, f.a11 * (one() - q)).series(order / 3);
    PowerSeries a2 = PowerSeries::zero(order);
    a2.set(0, one());
    for (std::size_t n = 3; n <= order; n += 3) {
        const auto m = static_cast<long>(n / 3);
        a2.set(n, f.a11 * (one() - q) * a2[n - 3] / (one() - q.pow(m)));
    }
    return {{{"q_exponential", transform_arg(e, one(), 3, order)}, {"q_difference", a2}},
            {{"interleaved_0phi2", g2_b(f, false, order)}, {"r_product", product_route(r_rule(f), order)}}};
}

template <class T>
constexpr bool always_false = false;

} // namespace

std::string to_string(CaseLabel label) {
    for (const auto &[l, name] : kLabelNames) {
        if (l == label) {
            return std::string(name);
        }
    }
    return "Unclassified";
}

CaseLabel parse_case_label(std::string_view name) {
    for (const auto &[l, n] : kLabelNames) {
        if (n == name) {
            return l;
        }
    }
    throw ParseError("unknown case label: " + std::string(name));
}

std::string variant_name(const FamilySpec &spec) {
    static constexpr std::array<std::string_view, 8> names{"HermiteType",         "QAppellProduct", "ChiharaTypeQ3",
                                                           "B1312Family",         "LittleQLaguerreType",
                                                           "LaguerreType",        "SymmetricG1",    "SymmetricG2"};
    return std::string(names.at(spec.index()));
}

NamedScalars family_params(const FamilySpec &spec) {
    return std::visit(
        [](const auto &f) -> NamedScalars {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, HermiteType>) {
                return {{"c1", f.c1}, {"c2", f.c2}, {"c3", f.c3}, {"alpha", f.alpha}};
            } else if constexpr (std::is_same_v<T, QAppellProduct>) {
                return {{"rho", f.rho}, {"lambda", f.lambda}, {"mu", f.mu}, {"beta", f.beta}, {"q", f.q}};
            } else if constexpr (std::is_same_v<T, ChiharaTypeQ3>) {
                return {{"a1", f.a1}, {"q", f.q}, {"alpha", f.alpha}, {"beta", f.beta}, {"gamma", f.gamma}};
            } else if constexpr (std::is_same_v<T, B1312Family> || std::is_same_v<T, LittleQLaguerreType>) {
                return {{"a1", f.a1}, {"q", f.q}, {"alpha", f.alpha}, {"beta", f.beta}};
            } else if constexpr (std::is_same_v<T, LaguerreType>) {
                return {{"a1", f.a1}, {"lambda", f.lambda}, {"mu", f.mu}, {"gamma", f.gamma}};
            } else if constexpr (std::is_same_v<T, SymmetricG1>) {
                return {{"a11", f.a11}, {"r0", f.r0}, {"r1", f.r1}, {"v0", f.v0}, {"v1", f.v1}, {"v2", f.v2}};
            } else if constexpr (std::is_same_v<T, SymmetricG2>) {
                return {{"a11", f.a11}, {"q", f.q},   {"s0", f.s0}, {"s1", f.s1},
                        {"s2", f.s2},   {"t0", f.t0}, {"t1", f.t1}};
            } else {
                static_assert(always_false<T>);
            }
        },
        spec);
}

std::optional<std::string> family_sub(const FamilySpec &spec) {
    if (const auto *c = std::get_if<ChiharaTypeQ3>(&spec)) {
        return c->sub == ChiharaSub::A2Zero ? "a2_zero" : "a2_eq_a1sq";
    }
    if (const auto *b = std::get_if<B1312Family>(&spec)) {
        return b->sub == B1312Sub::I ? "i" : "ii";
    }
    return std::nullopt;
}

CaseLabel expected_label(const FamilySpec &spec) {
    return std::visit(
        [](const auto &f) -> CaseLabel {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, HermiteType>) {
                return f.c1.is_zero() ? CaseLabel::A2_Hermite : CaseLabel::B133_Appell;
            } else if constexpr (std::is_same_v<T, QAppellProduct>) {
                return (f.rho + f.lambda + f.mu).is_zero() ? CaseLabel::A3_QAppell : CaseLabel::B133_AlSalamCarlitz;
            } else if constexpr (std::is_same_v<T, ChiharaTypeQ3>) {
                return f.gamma.is_zero() ? CaseLabel::B1311_Chihara : CaseLabel::B111_Chihara;
            } else if constexpr (std::is_same_v<T, B1312Family>) {
                return f.sub == B1312Sub::I ? CaseLabel::B1312_i : CaseLabel::B1312_ii;
            } else if constexpr (std::is_same_v<T, LittleQLaguerreType>) {
                return CaseLabel::B1313_LittleQLaguerre;
            } else if constexpr (std::is_same_v<T, LaguerreType>) {
                return CaseLabel::B32_Laguerre;
            } else if constexpr (std::is_same_v<T, SymmetricG1>) {
                return CaseLabel::Sym3Fold_G1;
            } else if constexpr (std::is_same_v<T, SymmetricG2>) {
                return CaseLabel::Sym3Fold_G2;
            } else {
                static_assert(always_false<T>);
            }
        },
        spec);
}

std::vector<std::string> validate_params(const FamilySpec &spec, std::size_t order) {
    std::vector<std::string> v = std::visit([](const auto &f) { return violations(f); }, spec);
    if (!v.empty()) {
        return v;
    }
    const RFunc r = r_rule_any(spec, order);
    for (std::size_t n = 0; n < order; ++n) {
        if (r(n).is_zero()) {
            v.push_back("r_" + std::to_string(n) + " = 0");
        }
    }
    return v;
}

FamilyRoutes construct_routes(const FamilySpec &spec, std::size_t order) {
    const auto v = validate_params(spec, order);
    if (!v.empty()) {
        std::string msg = variant_name(spec) + ":";
        for (const auto &s : v) {
            msg += " " + s + ";";
        }
        throw InvalidParams(msg);
    }
    return std::visit([order](const auto &f) { return routes(f, order); }, spec);
}

BrenkeSet build_family(const FamilySpec &spec, std::size_t order) {
    const FamilyRoutes r = construct_routes(spec, order);
    const auto check = [&spec](const std::vector<Route> &rs, const char *which) {
        for (std::size_t i = 1; i < rs.size(); ++i) {
            if (!(rs[i].series == rs[0].series)) {
                throw ConstructionMismatch(variant_name(spec) + ": " + which + " route " + rs[i].name +
                                           " disagrees with " + rs[0].name);
            }
        }
    };
    check(r.a, "A");
    check(r.b, "B");
    return build_polynomials(r.a.front().series, r.b.front().series, order);
}

std::vector<ReadingReport> symmetric_readings(const FamilySpec &spec, std::size_t order) {
    const auto compare = [](const std::string &name, const PowerSeries &x, const PowerSeries &ref) {
        ReadingReport rep{name, true, std::nullopt};
        for (std::size_t k = 0; k <= ref.order(); ++k) {
            if (x[k] != ref[k]) {
                rep.matches = false;
                rep.first_mismatch = k;
                break;
            }
        }
        return rep;
    };
    if (const auto *g1 = std::get_if<SymmetricG1>(&spec)) {
        const PowerSeries ref = product_route(r_rule(*g1), order);
        return {compare("adopted", g1_b(*g1, false, order), ref), compare("display", g1_b(*g1, true, order), ref)};
    }
    if (const auto *g2 = std::get_if<SymmetricG2>(&spec)) {
        const PowerSeries ref = product_route(r_rule(*g2), order);
        return {compare("adopted", g2_b(*g2, false, order), ref), compare("display", g2_b(*g2, true, order), ref)};
    }
    return {};
}

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        const Scalar half(Rational(1, 2));
        const Scalar w = Scalar::omega();
        std::vector<std::pair<std::string, FamilySpec>> specs{
            {"hermite-a2", HermiteType{0, 1, 1, 1}},
            {"hermite-appell", HermiteType{1, 1, 1, 2}},
            {"q-appell-a3", QAppellProduct{1, 1, -2, 1, half}},
            {"q-appell-asc", QAppellProduct{1, -1, half, 1, half}},
            {"chihara-b111", ChiharaTypeQ3{1, half, 2, 1, 3, ChiharaSub::A2Zero}},
            {"chihara-b1311", ChiharaTypeQ3{1, half, 1, 2, 0, ChiharaSub::A2EqA1Sq}},
            {"chihara-b111-complex", ChiharaTypeQ3{1, half, 1, one() + w, -w, ChiharaSub::A2Zero}},
            {"b1312-i", B1312Family{1, half, 1, 1, B1312Sub::I}},
            {"b1312-ii", B1312Family{1, half, Scalar(Rational(3, 2)), Scalar(Rational(-7, 4)), B1312Sub::II}},
            {"little-q-laguerre", LittleQLaguerreType{1, half, 1, 1}},
            {"little-q-laguerre-k0", LittleQLaguerreType{1, half, 1, Scalar(Rational(-7, 4))}},
            {"laguerre", LaguerreType{1, 1, 2, 3}},
            {"sym-g1", SymmetricG1{1, 1, 2, 1, 1, 1}},
            {"sym-g2", SymmetricG2{1, half, 1, 2, 3, Scalar(Rational(1, 3)), Scalar(Rational(1, 5))}},
        };
        std::vector<CatalogEntry> out;
        out.reserve(specs.size());
        for (auto &[name, spec] : specs) {
            const CaseLabel label = expected_label(spec);
            out.push_back({name, std::move(spec), label});
        }
        return out;
    }();
    return entries;
}

const CatalogEntry &catalog_entry(std::string_view name) {
    for (const auto &e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw InvalidParams("unknown catalog sample: " + std::string(name));
}

} // namespace dops
