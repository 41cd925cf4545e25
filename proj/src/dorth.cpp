#include "dops/dorth.hpp"

#include "dops/errors.hpp"

namespace dops {

std::string to_string(FailureReason reason) {
    switch (reason) {
    case FailureReason::SupportTooWide:
        return "SupportTooWide";
    case FailureReason::RegularityZero:
        return "RegularityZero";
    case FailureReason::DeltaRelationViolated:
        return "DeltaRelationViolated";
    case FailureReason::ConsecutiveZeros:
        return "ConsecutiveZeros";
    }
    return "Unknown";
}

std::vector<Scalar> expand_in_basis(const BrenkeSet &s, const Polynomial &poly) {
    if (poly.empty()) {
        return {};
    }
    const std::size_t deg = poly.size() - 1;
    if (deg > s.order()) {
        throw OrderTooSmall("degree " + std::to_string(deg) + " exceeds table order " + std::to_string(s.order()));
    }
    Polynomial rest = poly;
    std::vector<Scalar> coords(deg + 1);
    for (std::size_t j = deg + 1; j-- > 0;) {
        if (rest[j].is_zero()) {
            continue;
        }
        const Polynomial &pj = s.poly(j);
        const Scalar c = rest[j] / pj[j];
        for (std::size_t k = 0; k <= j; ++k) {
            if (!pj[k].is_zero()) {
                rest[k] -= c * pj[k];
            }
        }
        coords[j] = c;
    }
    return coords;
}

namespace {

Polynomial shifted(const Polynomial &p, std::size_t m) {
    Polynomial out(p.size() + m);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + m] = p[k];
    }
    return out;
}

void require_d(int d) {
    if (d < 1) {
        throw InvalidParams("d must be at least 1");
    }
}

} // namespace

std::pair<RecurrenceData, Verdict> extract_recurrence(const BrenkeSet &s, int d, std::size_t n_max) {
    require_d(d);
    if (n_max + 1 > s.order()) {
        throw OrderTooSmall("extract_recurrence needs n_max + 1 <= N");
    }
    const auto ud = static_cast<std::size_t>(d);
    RecurrenceData data;
    data.d = d;
    data.n_max = n_max;
    std::optional<Witness> witness;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::vector<Scalar> coords = expand_in_basis(s, shifted(s.poly(n), 1));
        std::vector<Scalar> row(ud + 2);
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j].is_zero()) {
                continue;
            }
            support.push_back(j);
            if (j + ud < n || j > n + 1) {
                if (!witness) {
                    witness = Witness{n, FailureReason::SupportTooWide,
                                      "x P_" + std::to_string(n) + " has a P_" + std::to_string(j) + " component"};
                }
            } else {
                // gamma_k(n) multiplies P_{n-k}
                row[n + 1 - j] = coords[j];
            }
        }
        if (n >= ud && !witness && (row[ud + 1].is_zero() || row[0].is_zero())) {
            witness = Witness{n, FailureReason::RegularityZero,
                              "gamma_" + std::to_string(d) + "(n) * gamma_-1(n) = 0"};
        }
        data.gamma.push_back(std::move(row));
        data.residual_support.push_back(std::move(support));
    }
    Verdict v = witness ? Verdict::fail(d, n_max, *witness) : Verdict::pass(d, n_max);
    return {std::move(data), std::move(v)};
}

Verdict dual_functional_check(const BrenkeSet &s, int d, std::size_t m_max, std::size_t n_max) {
    require_d(d);
    const auto ud = static_cast<std::size_t>(d);
    if (m_max * ud + ud > n_max || n_max + m_max > s.order()) {
        throw OrderTooSmall("dual_functional_check needs m_max*d + d <= n_max <= N - m_max");
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t m = 0; m <= m_max; ++m) {
            const std::vector<Scalar> coords = expand_in_basis(s, shifted(s.poly(n), m));
            for (std::size_t k = 0; k < ud; ++k) {
                const bool zero = k >= coords.size() || coords[k].is_zero();
                const std::size_t edge = m * ud + k;
                if (n > edge && !zero) {
                    return Verdict::fail(d, n_max,
                                         {n, FailureReason::SupportTooWide,
                                          "<u_" + std::to_string(k) + ", x^" + std::to_string(m) + " P_" +
                                              std::to_string(n) + "> != 0"});
                }
                if (n == edge && zero) {
                    return Verdict::fail(d, n_max,
                                         {n, FailureReason::RegularityZero,
                                          "<u_" + std::to_string(k) + ", x^" + std::to_string(m) + " P_" +
                                              std::to_string(n) + "> = 0"});
                }
            }
        }
    }
    return Verdict::pass(d, n_max);
}

Scalar delta_weight(const PowerSeries &a, const PowerSeries &a_hat, std::size_t m, std::size_t i) {
    Scalar s;
    for (std::size_t j = i; j <= m; ++j) {
        s += a[j + 1] * a_hat[m - j];
    }
    return s;
}

Verdict theorem_delta_test(const BrenkeSet &s, int d, std::size_t n_max, IndexRange range) {
    require_d(d);
    if (n_max + 1 > s.order()) {
        throw OrderTooSmall("theorem_delta_test needs n_max <= N - 1");
    }
    const auto ud = static_cast<std::size_t>(d);
    const PowerSeries &a = s.a();
    const PowerSeries a_hat = reciprocal(a, s.order());
    const DeltaSeq seq = delta_sequence(s.b(), s.order());
    const auto &delta = seq.delta;

    std::size_t delta_zero_run = 0;
    std::size_t a_zero_run = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        delta_zero_run = delta[n].is_zero() ? delta_zero_run + 1 : 0;
        a_zero_run = a[n].is_zero() ? a_zero_run + 1 : 0;
        if (delta_zero_run > ud || a_zero_run > ud) {
            return Verdict::fail(d, n_max,
                                 {n, FailureReason::ConsecutiveZeros,
                                  std::string(delta_zero_run > ud ? "Delta" : "a") + " vanishes " +
                                      std::to_string(ud + 1) + " times in a row"});
        }
        if (n >= ud) {
            Scalar reg;
            for (std::size_t i = 0; i <= ud; ++i) {
                reg += delta_weight(a, a_hat, ud, i) * delta[n - i];
            }
            if (reg.is_zero()) {
                return Verdict::fail(d, n_max, {n, FailureReason::RegularityZero, "regularity sum vanishes"});
            }
        }
        if (n >= ud + 1) {
            const std::size_t m_last = range == IndexRange::Full ? n : ud + 1;
            for (std::size_t m = ud + 1; m <= m_last; ++m) {
                Scalar rel;
                for (std::size_t i = 0; i <= m; ++i) {
                    rel += delta_weight(a, a_hat, m, i) * delta[n - i];
                }
                if (!rel.is_zero()) {
                    return Verdict::fail(d, n_max,
                                         {n, FailureReason::DeltaRelationViolated,
                                          "relation m = " + std::to_string(m) + " fails"});
                }
            }
        }
    }
    return Verdict::pass(d, n_max);
}

Scalar expanded_relation_d2(const PowerSeries &a, const std::vector<Scalar> &delta, std::size_t n) {
    const Scalar &a1 = a[1];
    const Scalar &a2 = a[2];
    const Scalar &a3 = a[3];
    const Scalar &a4 = a[4];
    const Scalar a1sq = a1 * a1;
    const Scalar c0 = -(a1sq * a1sq) - Scalar(2) * a1 * a3 + Scalar(3) * a1sq * a2 - a2 * a2 + a4;
    const Scalar c1 = a1sq * a2 - a2 * a2 - a1 * a3 + a4;
    const Scalar c2 = a4 - a1 * a3;
    return c0 * delta[n] + c1 * delta[n - 1] + c2 * delta[n - 2] + a4 * delta[n - 3];
}

Scalar expanded_regularity_d2(const PowerSeries &a, const std::vector<Scalar> &delta, std::size_t n) {
    const Scalar &a1 = a[1];
    const Scalar &a2 = a[2];
    const Scalar &a3 = a[3];
    return (a1 * a1 * a1 - Scalar(2) * a1 * a2 + a3) * delta[n] + (a3 - a1 * a2) * delta[n - 1] + a3 * delta[n - 2];
}

NecessaryReport necessary_condition(const BrenkeSet &s, int d, std::size_t n_max) {
    require_d(d);
    const auto ud = static_cast<std::size_t>(d);
    if (n_max + 1 > s.order() || ud + 2 > s.order()) {
        throw OrderTooSmall("necessary_condition needs n_max <= N - 1 and d + 2 <= N");
    }
    const PowerSeries &a = s.a();
    const PowerSeries a_hat = reciprocal(a, s.order());
    const DeltaSeq seq = delta_sequence(s.b(), s.order());
    const auto &delta = seq.delta;

    NecessaryReport report;
    report.verdict = Verdict::pass(d, n_max);
    report.regularity_holds = true;
    for (std::size_t n = ud; n <= n_max; ++n) {
        Scalar reg;
        for (std::size_t i = 0; i <= ud; ++i) {
            reg += delta_weight(a, a_hat, ud, i) * delta[n - i];
        }
        if (d == 2 && reg != expanded_regularity_d2(a, delta, n)) {
            report.expanded_forms_agree = false;
        }
        if (reg.is_zero() && report.regularity_holds) {
            report.regularity_holds = false;
            report.regularity_failure = n;
        }
        if (n < ud + 1) {
            continue;
        }
        Scalar rel;
        for (std::size_t i = 0; i <= ud + 1; ++i) {
            rel += delta_weight(a, a_hat, ud + 1, i) * delta[n - i];
        }
        if (d == 2 && rel != expanded_relation_d2(a, delta, n)) {
            report.expanded_forms_agree = false;
        }
        if (!rel.is_zero() && report.verdict.is_d_orthogonal) {
            report.verdict = Verdict::fail(d, n_max, {n, FailureReason::DeltaRelationViolated, "m = d + 1 relation fails"});
        }
    }
    return report;
}

} // namespace dops
