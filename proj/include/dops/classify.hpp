#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "dops/brenke.hpp"
#include "dops/families.hpp"

namespace dops {

struct RootMultiplicity {
    Scalar root;
    std::size_t multiplicity = 1;
};

/// Monic relation Delta_n + c_1 Delta_{n-1} + ... + c_k Delta_{n-k} = 0 on the whole window.
/// The coefficient vector doubles as the characteristic polynomial x^k + c_1 x^{k-1} + ... + c_k.
struct Annihilator {
    std::vector<Scalar> coeffs;
    /// Roots over Q(w); empty and unresolved when the polynomial does not split.
    std::vector<RootMultiplicity> roots;
    bool resolved = false;

    [[nodiscard]] std::size_t order() const { return coeffs.size() - 1; }
};

/// Smallest k <= max_order with an exact relation over the window. Needs
/// delta.size() >= 2*max_order + 2; throws NoAnnihilator when no relation exists.
Annihilator minimal_annihilator(const std::vector<Scalar> &delta, std::size_t max_order = 3);
Annihilator minimal_annihilator(const DeltaSeq &seq, std::size_t max_order = 3);

/// Coefficients of r^3, r^2, r, 1 in the characteristic cubic of the d = 2 relation.
std::array<Scalar, 4> characteristic_cubic(const Scalar &a1, const Scalar &a2, const Scalar &a3, const Scalar &a4);

/// Horner evaluation, highest degree first.
Scalar evaluate_descending(const std::vector<Scalar> &coeffs, const Scalar &x);

/// Splits a monic polynomial (highest degree first, degree <= 3) over Q(w). Extra root
/// candidates may be supplied; each candidate is verified by substitution.
std::optional<std::vector<RootMultiplicity>> factor_over_field(const std::vector<Scalar> &monic,
                                                                const std::vector<Scalar> &hints = {});

struct Classification {
    CaseLabel label = CaseLabel::Unclassified;
    std::optional<Annihilator> annihilator;
    NamedScalars recovered;
};

/// Case label of a 2-OPS read off A and the Delta-sequence on [0, n_max].
/// Throws NotTwoOrthogonal when extract_recurrence at d = 2 fails on the window.
Classification classify_case(const BrenkeSet &s, std::size_t n_max);

} // namespace dops
