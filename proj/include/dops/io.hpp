#pragma once

#include <string>

#include <json.hpp>

#include "dops/brenke.hpp"
#include "dops/classify.hpp"
#include "dops/dorth.hpp"
#include "dops/families.hpp"

namespace dops {

using Json = nlohmann::ordered_json;

Json to_json(const Rational &x);
/// {"u": "p/q", "v": "p/q"} for u + v w.
Json to_json(const Scalar &x);
/// {"order": N, "coeffs": [...]}.
Json to_json(const PowerSeries &s);
/// {"verdict", "d", "n_max", "witness"?, "gamma_table"?}.
Json to_json(const Verdict &v, const RecurrenceData *gamma = nullptr);
Json to_json(const NecessaryReport &r);
/// {"label", "roots", "multiplicities", "recovered_params"}.
Json to_json(const Classification &c);
/// {"variant", "params", "sub"?, "case_label"}.
Json family_descriptor(const FamilySpec &spec);

/// Accepts "p/q" / "u+vw" strings, integers, or {"u","v"} objects. Throws ParseError.
Scalar scalar_from_json(const Json &j);
/// Accepts {"coeffs": [...]} (with optional "order", which must match) or a bare array.
PowerSeries series_from_json(const Json &j);

/// Header "n,x^0,...,x^N"; row n lists the coefficients of P_n.
std::string poly_table_csv(const BrenkeSet &s);
/// Header "n,r,delta".
std::string delta_table_csv(const DeltaSeq &seq);
/// Header "n,gamma_-1,...,gamma_d".
std::string gamma_table_csv(const RecurrenceData &data);

} // namespace dops
