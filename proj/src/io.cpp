#include "dops/io.hpp"

#include <sstream>

#include "dops/errors.hpp"

namespace dops {

Json to_json(const Rational &x) { return x.to_string(); }

Json to_json(const Scalar &x) {
    Json j;
    j["u"] = x.u().to_string();
    j["v"] = x.v().to_string();
    return j;
}

Json to_json(const PowerSeries &s) {
    Json j;
    j["order"] = s.order();
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const Verdict &v, const RecurrenceData *gamma) {
    Json j;
    j["verdict"] = v.is_d_orthogonal ? "positive" : "negative";
    j["d"] = v.d;
    j["n_max"] = v.n_max;
    if (v.failure_witness) {
        j["witness"] = {{"n", v.failure_witness->n},
                        {"reason", to_string(v.failure_witness->reason)},
                        {"detail", v.failure_witness->detail}};
    }
    if (gamma != nullptr) {
        Json table = Json::array();
        for (const auto &row : gamma->gamma) {
            Json r = Json::array();
            for (const auto &g : row) {
                r.push_back(to_json(g));
            }
            table.push_back(std::move(r));
        }
        j["gamma_table"] = std::move(table);
    }
    return j;
}

Json to_json(const NecessaryReport &r) {
    Json j = to_json(r.verdict);
    j["regularity_holds"] = r.regularity_holds;
    if (r.regularity_failure) {
        j["regularity_failure"] = *r.regularity_failure;
    }
    j["expanded_forms_agree"] = r.expanded_forms_agree;
    return j;
}

Json to_json(const Classification &c) {
    Json j;
    j["label"] = to_string(c.label);
    Json roots = Json::array();
    Json mult = Json::array();
    if (c.annihilator) {
        for (const auto &r : c.annihilator->roots) {
            roots.push_back(to_json(r.root));
            mult.push_back(r.multiplicity);
        }
    }
    j["roots"] = std::move(roots);
    j["multiplicities"] = std::move(mult);
    Json params = Json::object();
    for (const auto &[name, value] : c.recovered) {
        params[name] = to_json(value);
    }
    j["recovered_params"] = std::move(params);
    return j;
}

Json family_descriptor(const FamilySpec &spec) {
    Json j;
    j["variant"] = variant_name(spec);
    Json params = Json::object();
    for (const auto &[name, value] : family_params(spec)) {
        params[name] = to_json(value);
    }
    j["params"] = std::move(params);
    if (auto sub = family_sub(spec)) {
        j["sub"] = *sub;
    }
    j["case_label"] = to_string(expected_label(spec));
    return j;
}

Scalar scalar_from_json(const Json &j) {
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Scalar(j.get<long>());
    }
    if (j.is_object() && j.contains("u")) {
        const Rational u = Rational::parse(j.at("u").get<std::string>());
        const Rational v = j.contains("v") ? Rational::parse(j.at("v").get<std::string>()) : Rational(0);
        return {u, v};
    }
    throw ParseError("expected a scalar, got " + j.dump());
}

PowerSeries series_from_json(const Json &j) {
    const Json *arr = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs")) {
            throw ParseError("series object lacks \"coeffs\"");
        }
        arr = &j.at("coeffs");
    }
    if (!arr->is_array() || arr->empty()) {
        throw ParseError("series coefficients must be a non-empty array");
    }
    std::vector<Scalar> coeffs;
    coeffs.reserve(arr->size());
    for (const auto &c : *arr) {
        coeffs.push_back(scalar_from_json(c));
    }
    if (j.is_object() && j.contains("order") && j.at("order").get<std::size_t>() + 1 != coeffs.size()) {
        throw ParseError("series \"order\" does not match the number of coefficients");
    }
    return PowerSeries(std::move(coeffs));
}

std::string poly_table_csv(const BrenkeSet &s) {
    std::ostringstream out;
    out << "n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out << ",x^" << k;
    }
    out << '\n';
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out << n;
        const Polynomial &p = s.poly(n);
        for (std::size_t k = 0; k <= s.order(); ++k) {
            out << ',';
            if (k < p.size()) {
                out << p[k].to_string();
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string delta_table_csv(const DeltaSeq &seq) {
    std::ostringstream out;
    out << "n,r,delta\n";
    for (std::size_t n = 0; n < seq.r.size(); ++n) {
        out << n << ',' << seq.r[n].to_string() << ',' << seq.delta[n].to_string() << '\n';
    }
    return out.str();
}

std::string gamma_table_csv(const RecurrenceData &data) {
    std::ostringstream out;
    out << "n";
    for (int k = -1; k <= data.d; ++k) {
        out << ",gamma_" << k;
    }
    out << '\n';
    for (std::size_t n = 0; n < data.gamma.size(); ++n) {
        out << n;
        for (const auto &g : data.gamma[n]) {
            out << ',' << g.to_string();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace dops
