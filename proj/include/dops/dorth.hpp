#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dops/brenke.hpp"

namespace dops {

enum class FailureReason { SupportTooWide, RegularityZero, DeltaRelationViolated, ConsecutiveZeros };

std::string to_string(FailureReason reason);

struct Witness {
    std::size_t n = 0;
    FailureReason reason = FailureReason::SupportTooWide;
    std::string detail;
};

/// Outcome of a d-orthogonality test. The claim covers the tested window [0, n_max] only.
struct Verdict {
    bool is_d_orthogonal = false;
    std::optional<Witness> failure_witness;
    int d = 0;
    std::size_t n_max = 0;

    static Verdict pass(int d, std::size_t n_max) { return {true, std::nullopt, d, n_max}; }
    static Verdict fail(int d, std::size_t n_max, Witness w) { return {false, std::move(w), d, n_max}; }
};

/// Coefficients gamma_k(n) of x P_n = sum_{k=-1}^{d} gamma_k(n) P_{n-k} and the full support of
/// each expansion.
struct RecurrenceData {
    int d = 0;
    std::size_t n_max = 0;
    /// gamma[n][k + 1] = gamma_k(n); entries with n - k < 0 are zero.
    std::vector<std::vector<Scalar>> gamma;
    /// Indices j with a nonzero coefficient of P_j in x P_n.
    std::vector<std::vector<std::size_t>> residual_support;

    [[nodiscard]] const Scalar &gamma_at(int k, std::size_t n) const {
        return gamma.at(n).at(static_cast<std::size_t>(k + 1));
    }
};

/// Which m enter the Delta-relation at a given n.
enum class IndexRange {
    /// d + 1 <= m <= n (every relation whose Delta indices exist).
    Full,
    /// m = d + 1 only.
    NextOnly,
};

/// Coordinates of a polynomial (degree <= N) in the graded basis {P_j}.
std::vector<Scalar> expand_in_basis(const BrenkeSet &s, const Polynomial &poly);

/// Definitional test: exact expansion of x P_n for n <= n_max. Needs n_max + 1 <= N.
std::pair<RecurrenceData, Verdict> extract_recurrence(const BrenkeSet &s, int d, std::size_t n_max);

/// Brute force over the dual functionals <u_k, x^m P_n>, read as the coefficient of P_k in
/// the expansion of x^m P_n. Needs m_max*d + d <= n_max <= N - m_max.
Verdict dual_functional_check(const BrenkeSet &s, int d, std::size_t m_max, std::size_t n_max);

/// Delta-relation and regularity condition of the Brenke characterization, plus the
/// "no d+1 consecutive zeros" conditions on Delta_n and a_n. Needs n_max <= N - 1.
Verdict theorem_delta_test(const BrenkeSet &s, int d, std::size_t n_max, IndexRange range = IndexRange::Full);

/// Sum_{j=i}^{m} a_{j+1} ahat_{m-j}, with ahat = 1/A.
Scalar delta_weight(const PowerSeries &a, const PowerSeries &a_hat, std::size_t m, std::size_t i);

struct NecessaryReport {
    /// The m = d + 1 relation alone, on n in [d+1, n_max].
    Verdict verdict;
    /// Regularity sum nonzero for every n in [d, n_max].
    bool regularity_holds = false;
    std::optional<std::size_t> regularity_failure;
    /// d = 2 only: the expanded a_1..a_4 forms equal the general sums at every n.
    bool expanded_forms_agree = true;
};

NecessaryReport necessary_condition(const BrenkeSet &s, int d, std::size_t n_max);

/// Left-hand side of the expanded d = 2 relation at n (n >= 3).
Scalar expanded_relation_d2(const PowerSeries &a, const std::vector<Scalar> &delta, std::size_t n);
/// Expanded d = 2 regularity sum at n (n >= 2).
Scalar expanded_regularity_d2(const PowerSeries &a, const std::vector<Scalar> &delta, std::size_t n);

} // namespace dops
