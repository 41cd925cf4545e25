#include "dops/classify.hpp"

#include <algorithm>
#include <functional>

#include "dops/dorth.hpp"
#include "dops/errors.hpp"

namespace dops {

namespace {

using Row = std::vector<Scalar>;

// Above this many rational candidates the rational-root search is skipped.
constexpr std::size_t kMaxRationalCandidates = 20000;
// Integers above this bound are not factored for rational-root candidates.
const mpz_class kFactorBound("1000000000000");

/// Exact Gaussian elimination on an overdetermined system; free unknowns are set to zero.
std::optional<Row> solve(std::vector<Row> m, Row rhs, std::size_t unknowns) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < unknowns; ++j) {
            m[r][j] *= inv;
        }
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) {
                continue;
            }
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < unknowns; ++j) {
                m[i][j] -= f * m[r][j];
            }
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!rhs[i].is_zero()) {
            return std::nullopt;
        }
    }
    Row x(unknowns);
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = rhs[i];
    }
    return x;
}

std::vector<mpz_class> divisors(const mpz_class &n) {
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Candidates +-p/q for a polynomial with rational coefficients.
std::vector<Scalar> rational_candidates(const std::vector<Scalar> &poly) {
    mpz_class den = 1;
    for (const auto &c : poly) {
        if (!c.is_rational()) {
            return {};
        }
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.u().denominator().get_mpz_t());
    }
    const auto integral = [&den](const Scalar &c) {
        const mpq_class v = c.u().raw() * den;
        return mpz_class(abs(v.get_num()));
    };
    const mpz_class lead = integral(poly.front());
    const mpz_class last = integral(poly.back());
    if (last == 0 || lead > kFactorBound || last > kFactorBound) {
        return {};
    }
    const auto ps = divisors(last);
    const auto qs = divisors(lead);
    if (ps.size() * qs.size() > kMaxRationalCandidates) {
        return {};
    }
    std::vector<Scalar> out;
    for (const auto &p : ps) {
        for (const auto &q : qs) {
            const Rational x(p, q);
            out.emplace_back(x);
            out.emplace_back(-x);
        }
    }
    return out;
}

std::vector<Scalar> deflate(const std::vector<Scalar> &poly, const Scalar &root) {
    std::vector<Scalar> out(poly.size() - 1);
    Scalar acc;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        acc = acc * root + poly[i];
        out[i] = acc;
    }
    return out;
}

std::vector<Scalar> ratio_hints(const std::vector<Scalar> &delta) {
    std::vector<Scalar> hints;
    for (std::size_t n = 0; n + 1 < delta.size() && n < 12; ++n) {
        if (!delta[n].is_zero()) {
            hints.push_back(delta[n + 1] / delta[n]);
        }
    }
    return hints;
}

bool contains(const std::vector<RootMultiplicity> &roots, const Scalar &x) {
    return std::any_of(roots.begin(), roots.end(), [&x](const RootMultiplicity &r) { return r.root == x; });
}

/// Coefficients c_j with Delta_n = sum_j c_j basis_j(n), fitted on the first basis.size() terms.
std::optional<Row> fit(const std::vector<Scalar> &delta, const std::vector<std::function<Scalar(long)>> &basis) {
    const std::size_t k = basis.size();
    if (delta.size() < k) {
        return std::nullopt;
    }
    std::vector<Row> m(delta.size(), Row(k));
    for (std::size_t n = 0; n < delta.size(); ++n) {
        for (std::size_t j = 0; j < k; ++j) {
            m[n][j] = basis[j](static_cast<long>(n));
        }
    }
    return solve(std::move(m), delta, k);
}

std::function<Scalar(long)> geometric(const Scalar &x) {
    return [x](long n) { return x.pow(n); };
}

std::function<Scalar(long)> monomial(long power) {
    return [power](long n) { return Scalar(n).pow(power); };
}

bool same_prefix(const PowerSeries &x, const PowerSeries &y) {
    const std::size_t n = std::min(x.order(), y.order());
    for (std::size_t k = 0; k <= n; ++k) {
        if (x[k] != y[k]) {
            return false;
        }
    }
    return true;
}

/// The spec rebuilt from recovered parameters reproduces A and B on the whole table.
bool reproduces(const FamilySpec &spec, const BrenkeSet &s) {
    try {
        const FamilyRoutes r = construct_routes(spec, s.order());
        return same_prefix(r.a.front().series, s.a()) && same_prefix(r.b.front().series, s.b());
    } catch (const Error &) {
        return false;
    }
}

void classify_symmetric(const BrenkeSet &s, Classification &out) {
    if (s.order() < 6) {
        return;
    }
    const PowerSeries &a = s.a();
    const Scalar &a3 = a[3];
    const Scalar &a6 = a[6];
    if (a3.is_zero() || a6.is_zero()) {
        return;
    }
    const std::vector<Scalar> r = delta_sequence(s.b(), s.order()).r;
    std::optional<FamilySpec> spec;
    if (a6 == a3 * a3 / Scalar(2)) {
        spec = SymmetricG1{a3, r[0], r[1], r[3] - r[0], r[4] - r[1], r[2]};
        out.label = CaseLabel::Sym3Fold_G1;
    } else {
        const Scalar q = a3 * a3 / a6 - Scalar(1);
        if (q.is_zero() || q.is_one()) {
            return;
        }
        const Scalar qi = q.inverse();
        const Scalar s0 = (r[0] - r[3]) / (qi - Scalar(1));
        const Scalar s1 = (r[1] - r[4]) / (qi - Scalar(1));
        const Scalar s2 = r[2] / (Scalar(1) - qi);
        if (s0.is_zero() || s1.is_zero()) {
            return;
        }
        spec = SymmetricG2{a3, q, s0, s1, s2, (r[0] + s0) / s0, (r[1] + s1) / s1};
        out.label = CaseLabel::Sym3Fold_G2;
    }
    if (!reproduces(*spec, s)) {
        out.label = CaseLabel::Unclassified;
        return;
    }
    out.recovered = family_params(*spec);
}

/// Index of q when the roots are {q, wq, w^2 q}; a rational member is preferred.
std::optional<Scalar> cyclic_triple(const std::vector<RootMultiplicity> &roots) {
    std::optional<Scalar> best;
    for (const auto &r : roots) {
        const Scalar wq = r.root * Scalar::omega();
        const Scalar wbq = r.root * Scalar::omega_bar();
        if (contains(roots, wq) && contains(roots, wbq) && (!best || r.root.is_rational())) {
            best = r.root;
        }
    }
    return best;
}

NamedScalars hermite_logs(const PowerSeries &a) {
    const Scalar &a1 = a[1];
    const Scalar &a2 = a[2];
    const Scalar &a3 = a[3];
    return {{"c1", a1},
            {"c2", a2 - a1 * a1 / Scalar(2)},
            {"c3", a3 - a1 * a2 + a1 * a1 * a1 / Scalar(3)}};
}

/// Elementary symmetric functions of the q-Appell product factors, from A(t)/A(qt).
NamedScalars q_appell_factors(const PowerSeries &a, const Scalar &q) {
    const PowerSeries a3 = a.truncated(3);
    const PowerSeries c = mul(a3, reciprocal(transform_arg(a3, q, 1, 3), 3), 3);
    return {{"e1", -c[1]}, {"e2", c[2]}, {"e3", -c[3]}};
}

void classify_nonsymmetric(const BrenkeSet &s, const std::vector<Scalar> &delta, const Annihilator &ann,
                           Classification &out) {
    const PowerSeries &a = s.a();
    const Scalar &a1 = a[1];
    const Scalar &a2 = a[2];
    const auto &roots = ann.roots;
    const std::size_t k = ann.order();
    const auto append = [&out](NamedScalars more) {
        out.recovered.insert(out.recovered.end(), more.begin(), more.end());
    };
    const auto set = [&out](CaseLabel label, NamedScalars params) {
        out.label = label;
        out.recovered = std::move(params);
    };

    if (k == 1) {
        const Scalar &x = roots.front().root;
        if (x.is_one()) {
            set(a1.is_zero() ? CaseLabel::A2_Hermite : CaseLabel::B133_Appell, {{"alpha", delta[0]}});
            append(hermite_logs(a));
        } else {
            set(a1.is_zero() ? CaseLabel::A3_QAppell : CaseLabel::B133_AlSalamCarlitz,
                {{"q", x}, {"beta", delta[0]}});
            append(q_appell_factors(a, x));
        }
        return;
    }
    if (a1.is_zero()) {
        return;
    }
    const Scalar a1sq = a1 * a1;

    if (k == 3 && roots.size() == 1 && roots.front().root.is_one()) {
        const auto c = fit(delta, {monomial(0), monomial(1), monomial(2)});
        if (!c) {
            return;
        }
        const Scalar &alpha = (*c)[0];
        const Scalar &beta = (*c)[1];
        const Scalar &gamma = (*c)[2];
        set(CaseLabel::B32_Laguerre, {{"a1", a1}, {"alpha", alpha}, {"beta", beta}, {"gamma", gamma}});
        const Scalar sum = (Scalar(3) * beta + gamma) / (Scalar(2) * gamma);
        const Scalar prod = Scalar(3) * alpha / gamma;
        Scalar root;
        if (sqrt_in_field(sum * sum - Scalar(4) * prod, root)) {
            append({{"lambda", (sum - root) / Scalar(2)}, {"mu", (sum + root) / Scalar(2)}});
        } else {
            append({{"lambda+mu", sum}, {"lambda*mu", prod}});
        }
        return;
    }

    const bool chihara_a = a2.is_zero() || a2 == a1sq;
    if (k == 3 && roots.size() == 3) {
        const auto q = cyclic_triple(roots);
        if (!q || !chihara_a) {
            return;
        }
        const Scalar w = Scalar::omega();
        const auto c = fit(delta, {geometric(*q), geometric(w * *q), geometric(w * w * *q)});
        if (!c) {
            return;
        }
        set(CaseLabel::B111_Chihara,
            {{"a1", a1}, {"q", *q}, {"alpha", (*c)[0]}, {"beta", (*c)[1]}, {"gamma", (*c)[2]}});
        return;
    }
    if (k != 2 || roots.size() != 2) {
        return;
    }
    const Scalar &x = roots[0].root;
    const Scalar &y = roots[1].root;
    const auto fit2 = [&delta](const Scalar &u, const Scalar &v) { return fit(delta, {geometric(u), geometric(v)}); };

    for (const auto &[p, r] : {std::pair{x, y}, std::pair{y, x}}) {
        if (r == p * Scalar::omega() && chihara_a) {
            const auto c = fit2(p, r);
            if (c) {
                set(CaseLabel::B1311_Chihara,
                    {{"a1", a1}, {"q", p}, {"alpha", (*c)[0]}, {"beta", (*c)[1]}, {"gamma", Scalar(0)}});
            }
            return;
        }
    }
    for (const auto &[p, r] : {std::pair{x, y}, std::pair{y, x}}) {
        // p = q^2, r = q^3
        if (r * r == p * p * p && !p.is_zero()) {
            const Scalar q = r / p;
            const Scalar q2 = q * q;
            const Scalar q3 = q2 * q;
            const Scalar one(1);
            const Scalar sub_i = q / (q + one) * a1sq;
            const Scalar sub_ii = (one - q2 + q3) * q2 / ((one - q + q2) * (one + q3)) * a1sq;
            const auto c = fit2(p, r);
            if (!c) {
                return;
            }
            if (a2 == sub_i) {
                out.label = CaseLabel::B1312_i;
            } else if (a2 == sub_ii) {
                out.label = CaseLabel::B1312_ii;
            } else {
                return;
            }
            out.recovered = {{"a1", a1}, {"q", q}, {"alpha", (*c)[0]}, {"beta", (*c)[1]}};
            return;
        }
    }
    for (const auto &[p, r] : {std::pair{x, y}, std::pair{y, x}}) {
        // p = q, r = q^3
        if (r == p * p * p) {
            const auto c = fit2(p, r);
            if (c && a2 == p / (p + Scalar(1)) * a1sq) {
                set(CaseLabel::B1313_LittleQLaguerre, {{"a1", a1}, {"q", p}, {"alpha", (*c)[0]}, {"beta", (*c)[1]}});
            }
            return;
        }
    }
}

} // namespace

Scalar evaluate_descending(const std::vector<Scalar> &coeffs, const Scalar &x) {
    Scalar acc;
    for (const auto &c : coeffs) {
        acc = acc * x + c;
    }
    return acc;
}

std::optional<std::vector<RootMultiplicity>> factor_over_field(const std::vector<Scalar> &monic,
                                                                const std::vector<Scalar> &hints) {
    if (monic.empty() || !monic.front().is_one() || monic.size() > 4) {
        throw InvalidParams("factor_over_field expects a monic polynomial of degree <= 3");
    }
    std::vector<Scalar> p = monic;
    std::vector<Scalar> found;
    while (p.size() > 3) {
        std::vector<Scalar> cands{Scalar(0)};
        for (const auto &h : hints) {
            cands.push_back(h);
            cands.push_back(h * Scalar::omega());
            cands.push_back(h * Scalar::omega_bar());
        }
        for (const auto &c : rational_candidates(p)) {
            cands.push_back(c);
            cands.push_back(c * Scalar::omega());
            cands.push_back(c * Scalar::omega_bar());
        }
        const auto hit = std::find_if(cands.begin(), cands.end(),
                                      [&p](const Scalar &c) { return evaluate_descending(p, c).is_zero(); });
        if (hit == cands.end()) {
            return std::nullopt;
        }
        found.push_back(*hit);
        p = deflate(p, *hit);
    }
    if (p.size() == 3) {
        const Scalar disc = p[1] * p[1] - Scalar(4) * p[2];
        Scalar root;
        if (!sqrt_in_field(disc, root)) {
            return std::nullopt;
        }
        found.push_back((-p[1] + root) / Scalar(2));
        found.push_back((-p[1] - root) / Scalar(2));
    } else if (p.size() == 2) {
        found.push_back(-p[1]);
    }
    std::vector<RootMultiplicity> out;
    for (const auto &r : found) {
        auto it = std::find_if(out.begin(), out.end(), [&r](const RootMultiplicity &m) { return m.root == r; });
        if (it == out.end()) {
            out.push_back({r, 1});
        } else {
            ++it->multiplicity;
        }
    }
    return out;
}

Annihilator minimal_annihilator(const std::vector<Scalar> &delta, std::size_t max_order) {
    const std::size_t len = delta.size();
    if (len < 2 * max_order + 2) {
        throw OrderTooSmall("minimal_annihilator needs a window of at least 2*max_order + 2 terms");
    }
    if (std::all_of(delta.begin(), delta.end(), [](const Scalar &x) { return x.is_zero(); })) {
        return {{Scalar(1)}, {}, true};
    }
    for (std::size_t k = 1; k <= max_order; ++k) {
        std::vector<Row> m;
        Row rhs;
        for (std::size_t n = k; n < len; ++n) {
            Row row(k);
            for (std::size_t i = 1; i <= k; ++i) {
                row[i - 1] = delta[n - i];
            }
            m.push_back(std::move(row));
            rhs.push_back(-delta[n]);
        }
        const auto c = solve(std::move(m), std::move(rhs), k);
        if (!c) {
            continue;
        }
        Annihilator ann;
        ann.coeffs.push_back(Scalar(1));
        ann.coeffs.insert(ann.coeffs.end(), c->begin(), c->end());
        if (auto roots = factor_over_field(ann.coeffs, ratio_hints(delta))) {
            ann.roots = std::move(*roots);
            ann.resolved = true;
        }
        return ann;
    }
    throw NoAnnihilator("no constant-coefficient relation of order <= " + std::to_string(max_order));
}

Annihilator minimal_annihilator(const DeltaSeq &seq, std::size_t max_order) {
    return minimal_annihilator(seq.delta, max_order);
}

std::array<Scalar, 4> characteristic_cubic(const Scalar &a1, const Scalar &a2, const Scalar &a3, const Scalar &a4) {
    const Scalar a1sq = a1 * a1;
    return {-(a1sq * a1sq) - Scalar(2) * a1 * a3 + Scalar(3) * a1sq * a2 - a2 * a2 + a4,
            a1sq * a2 - a2 * a2 - a1 * a3 + a4, a4 - a1 * a3, a4};
}

Classification classify_case(const BrenkeSet &s, std::size_t n_max) {
    const auto [data, verdict] = extract_recurrence(s, 2, n_max);
    if (!verdict.is_d_orthogonal) {
        const Witness &w = *verdict.failure_witness;
        throw NotTwoOrthogonal("not 2-orthogonal: " + to_string(w.reason) + " at n = " + std::to_string(w.n));
    }
    Classification out;
    const PowerSeries &a = s.a();
    if (a[1].is_zero() && a[2].is_zero()) {
        classify_symmetric(s, out);
        return out;
    }
    const std::vector<Scalar> delta = delta_sequence(s.b(), n_max + 1).delta;
    try {
        out.annihilator = minimal_annihilator(delta, 3);
    } catch (const NoAnnihilator &) {
        return out;
    }
    if (out.annihilator->resolved) {
        classify_nonsymmetric(s, delta, *out.annihilator, out);
    }
    return out;
}

} // namespace dops
