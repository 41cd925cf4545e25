#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dops/brenke.hpp"

namespace dops {

enum class CaseLabel {
    Sym3Fold_G1,
    Sym3Fold_G2,
    A2_Hermite,
    A3_QAppell,
    B111_Chihara,
    B1311_Chihara,
    B1312_i,
    B1312_ii,
    B1313_LittleQLaguerre,
    B133_AlSalamCarlitz,
    B133_Appell,
    B32_Laguerre,
    Unclassified,
};

std::string to_string(CaseLabel label);
/// Throws ParseError on an unknown name.
CaseLabel parse_case_label(std::string_view name);

/// A = exp(c1 t + c2 t^2 + c3 t^3), B = exp(t / alpha).
struct HermiteType {
    Scalar c1, c2, c3, alpha;
};

/// A = (rho t;q)_inf (lambda t;q)_inf (mu t;q)_inf, B = e_q((1-q) t / beta).
struct QAppellProduct {
    Scalar rho, lambda, mu, beta, q;
};

enum class ChiharaSub { A2Zero, A2EqA1Sq };

/// Delta_n = alpha q^n + beta (wq)^n + gamma (w^2 q)^n.
struct ChiharaTypeQ3 {
    Scalar a1, q, alpha, beta, gamma;
    ChiharaSub sub = ChiharaSub::A2Zero;
};

enum class B1312Sub { I, II };

/// Delta_n = alpha q^{2n} + beta q^{3n}.
struct B1312Family {
    Scalar a1, q, alpha, beta;
    B1312Sub sub = B1312Sub::I;
};

/// Delta_n = alpha q^n + beta q^{3n}.
struct LittleQLaguerreType {
    Scalar a1, q, alpha, beta;
};

/// A = exp(a1 t), B = 0F2(-; lambda, mu; 3t/gamma).
struct LaguerreType {
    Scalar a1, lambda, mu, gamma;
};

/// A = exp(a11 t^3); r_{3n} = r0 + v0 n, r_{3n+1} = r1 + v1 n, r_{3n+2} = v2 (n+1).
struct SymmetricG1 {
    Scalar a11, r0, r1, v0, v1, v2;
};

/// A = e_q(a11 (1-q) t^3); r_{3n+i} = s_i (t_i q^n - 1) q^{-n} with t_2 = q.
struct SymmetricG2 {
    Scalar a11, q, s0, s1, s2, t0, t1;
};

using FamilySpec = std::variant<HermiteType, QAppellProduct, ChiharaTypeQ3, B1312Family, LittleQLaguerreType,
                                LaguerreType, SymmetricG1, SymmetricG2>;

using NamedScalars = std::vector<std::pair<std::string, Scalar>>;

std::string variant_name(const FamilySpec &spec);
/// Parameter names and values in declaration order (sub-variant tags excluded).
NamedScalars family_params(const FamilySpec &spec);
/// Sub-variant tag ("a2_zero", "a2_eq_a1sq", "i", "ii") if the variant has one.
std::optional<std::string> family_sub(const FamilySpec &spec);
CaseLabel expected_label(const FamilySpec &spec);

/// Constraint violations, empty iff the spec is admissible up to the given order
/// (r_n != 0 is checked by computing r_n).
std::vector<std::string> validate_params(const FamilySpec &spec, std::size_t order = 30);

struct Route {
    std::string name;
    PowerSeries series;
};

/// Every independent construction of A and of B, at a common order.
struct FamilyRoutes {
    std::vector<Route> a;
    std::vector<Route> b;
};

/// Computes all routes without comparing them. Throws InvalidParams when validation fails.
FamilyRoutes construct_routes(const FamilySpec &spec, std::size_t order);

/// Builds the Brenke set; every route of A (resp. B) must agree, else ConstructionMismatch.
BrenkeSet build_family(const FamilySpec &spec, std::size_t order);

/// A candidate closed-form reading of an interleaved B, compared with the r-product route.
struct ReadingReport {
    std::string reading;
    bool matches = false;
    std::optional<std::size_t> first_mismatch;
};

/// G1 and G2 only: the displayed parameter reading next to the adopted one. Empty for other variants.
std::vector<ReadingReport> symmetric_readings(const FamilySpec &spec, std::size_t order);

struct CatalogEntry {
    std::string name;
    FamilySpec spec;
    CaseLabel label;
};

const std::vector<CatalogEntry> &catalog();
/// Throws InvalidParams on an unknown sample name.
const CatalogEntry &catalog_entry(std::string_view name);

} // namespace dops
