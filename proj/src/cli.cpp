#include "dops/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dops/classify.hpp"
#include "dops/dorth.hpp"
#include "dops/errors.hpp"
#include "dops/families.hpp"
#include "dops/io.hpp"

namespace dops {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kParamFlags{"c1",  "c2", "c3",    "alpha", "rho", "lambda", "mu", "beta",
                                           "q",   "a1", "gamma", "a11",   "r0",  "r1",     "v0", "v1",
                                           "v2",  "s0", "s1",    "s2",    "t0",  "t1"};

const std::map<std::string, std::string> kFamilyDefaults{
    {"hermite", "hermite-a2"},
    {"q-appell", "q-appell-asc"},
    {"chihara", "chihara-b111"},
    {"b1312", "b1312-i"},
    {"little-q-laguerre", "little-q-laguerre"},
    {"laguerre", "laguerre"},
    {"sym-g1", "sym-g1"},
    {"sym-g2", "sym-g2"},
};

struct SourceOptions {
    std::string name;
    std::string sample;
    std::string a_file;
    std::string b_file;
    std::string sub;
    std::map<std::string, std::string> params;
};

struct Loaded {
    BrenkeSet set;
    std::optional<FamilySpec> spec;
};

void add_source(CLI::App *app, SourceOptions &s, bool allow_files) {
    std::string names;
    for (const auto &[n, sample] : kFamilyDefaults) {
        names += (names.empty() ? "" : "|") + n;
    }
    app->add_option("--name", s.name, "Family: " + names);
    app->add_option("--sample", s.sample, "Catalog sample (see family-list)");
    app->add_option("--sub", s.sub, "Sub-variant: a2_zero|a2_eq_a1sq (chihara), i|ii (b1312)");
    if (allow_files) {
        app->add_option("--a-file", s.a_file, "JSON power series for A");
        app->add_option("--b-file", s.b_file, "JSON power series for B");
    }
    for (const auto &p : kParamFlags) {
        app->add_option_function<std::string>(
               "--" + p, [&s, p](const std::string &v) { s.params[p] = v; }, "Family parameter")
            ->group("Family parameters");
    }
}

FamilySpec rebuild(const FamilySpec &base, const std::vector<Scalar> &v, const std::string &sub) {
    return std::visit(
        [&v, &sub](const auto &f) -> FamilySpec {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, HermiteType>) {
                return HermiteType{v[0], v[1], v[2], v[3]};
            } else if constexpr (std::is_same_v<T, QAppellProduct>) {
                return QAppellProduct{v[0], v[1], v[2], v[3], v[4]};
            } else if constexpr (std::is_same_v<T, ChiharaTypeQ3>) {
                ChiharaSub s = f.sub;
                if (sub == "a2_zero") {
                    s = ChiharaSub::A2Zero;
                } else if (sub == "a2_eq_a1sq") {
                    s = ChiharaSub::A2EqA1Sq;
                } else if (!sub.empty()) {
                    throw UsageError("--sub for chihara must be a2_zero or a2_eq_a1sq");
                }
                return ChiharaTypeQ3{v[0], v[1], v[2], v[3], v[4], s};
            } else if constexpr (std::is_same_v<T, B1312Family>) {
                B1312Sub s = f.sub;
                if (sub == "i") {
                    s = B1312Sub::I;
                } else if (sub == "ii") {
                    s = B1312Sub::II;
                } else if (!sub.empty()) {
                    throw UsageError("--sub for b1312 must be i or ii");
                }
                return B1312Family{v[0], v[1], v[2], v[3], s};
            } else if constexpr (std::is_same_v<T, LittleQLaguerreType>) {
                return LittleQLaguerreType{v[0], v[1], v[2], v[3]};
            } else if constexpr (std::is_same_v<T, LaguerreType>) {
                return LaguerreType{v[0], v[1], v[2], v[3]};
            } else if constexpr (std::is_same_v<T, SymmetricG1>) {
                return SymmetricG1{v[0], v[1], v[2], v[3], v[4], v[5]};
            } else {
                return SymmetricG2{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
            }
        },
        base);
}

std::optional<FamilySpec> resolve_spec(const SourceOptions &s) {
    const int sources = static_cast<int>(!s.name.empty()) + static_cast<int>(!s.sample.empty()) +
                        static_cast<int>(!s.a_file.empty() || !s.b_file.empty());
    if (sources != 1) {
        throw UsageError("give exactly one of --name, --sample, or --a-file/--b-file");
    }
    if (!s.a_file.empty() || !s.b_file.empty()) {
        if (!s.params.empty() || !s.sub.empty()) {
            throw UsageError("family parameters cannot be combined with --a-file/--b-file");
        }
        return std::nullopt;
    }
    if (!s.sample.empty()) {
        if (!s.params.empty() || !s.sub.empty()) {
            throw UsageError("family parameters cannot be combined with --sample; use --name");
        }
        try {
            return catalog_entry(s.sample).spec;
        } catch (const InvalidParams &e) {
            throw UsageError(e.what());
        }
    }
    const auto it = kFamilyDefaults.find(s.name);
    if (it == kFamilyDefaults.end()) {
        throw UsageError("unknown family name: " + s.name);
    }
    const FamilySpec &base = catalog_entry(it->second).spec;
    const NamedScalars defaults = family_params(base);
    std::vector<Scalar> values;
    for (const auto &[pname, value] : defaults) {
        const auto p = s.params.find(pname);
        values.push_back(p == s.params.end() ? value : Scalar::parse(p->second));
    }
    for (const auto &[pname, text] : s.params) {
        const bool known = std::any_of(defaults.begin(), defaults.end(),
                                       [&pname](const auto &d) { return d.first == pname; });
        if (!known) {
            throw UsageError("--" + pname + " does not apply to " + s.name);
        }
    }
    if (!s.sub.empty() && !family_sub(base)) {
        throw UsageError("--sub does not apply to " + s.name);
    }
    return rebuild(base, values, s.sub);
}

PowerSeries read_series(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    return series_from_json(Json::parse(in));
}

Loaded load(const SourceOptions &s, std::size_t order) {
    const auto spec = resolve_spec(s);
    if (!spec) {
        if (s.a_file.empty() || s.b_file.empty()) {
            throw UsageError("--a-file and --b-file must be given together");
        }
        return {build_polynomials(read_series(s.a_file), read_series(s.b_file), order), std::nullopt};
    }
    const auto violations = validate_params(*spec, order);
    if (!violations.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto &v : violations) {
            msg += " " + v + ";";
        }
        throw UsageError(msg);
    }
    return {build_family(*spec, order), spec};
}

std::size_t window(std::optional<std::size_t> n_max, std::size_t order) {
    if (order == 0) {
        throw UsageError("-N must be positive");
    }
    const std::size_t n = n_max.value_or(order - 1);
    if (n + 1 > order) {
        throw UsageError("--n-max must be at most N - 1");
    }
    return n;
}

std::string describe(const Verdict &v) {
    std::ostringstream s;
    s << (v.is_d_orthogonal ? "positive" : "negative") << " (d=" << v.d << ", n<=" << v.n_max << ")";
    if (v.failure_witness) {
        s << ": " << to_string(v.failure_witness->reason) << " at n=" << v.failure_witness->n << " ("
          << v.failure_witness->detail << ")";
    }
    return s.str();
}

Json tagged(const std::string &oracle, const Verdict &v) {
    Json j;
    j["oracle"] = oracle;
    const Json body = to_json(v);
    for (const auto &[key, value] : body.items()) {
        j[key] = value;
    }
    return j;
}

struct CheckOptions {
    SourceOptions source;
    std::size_t order = 20;
    int d = 2;
    std::optional<std::size_t> n_max;
    std::size_t m_max = 4;
    std::string oracle = "recurrence";
    std::string delta_range = "full";
    bool json = false;
};

int cmd_check(const CheckOptions &o, std::ostream &out) {
    const Loaded l = load(o.source, o.order);
    const std::size_t n_max = window(o.n_max, o.order);
    const auto ud = static_cast<std::size_t>(o.d);
    const auto dual = [&] {
        const std::size_t n_dual = std::min(n_max, o.order - std::min(o.order, o.m_max));
        if (o.m_max * ud + ud > n_dual) {
            throw UsageError("window too short for the dual oracle: need m_max*d + d <= min(n_max, N - m_max)");
        }
        return dual_functional_check(l.set, o.d, o.m_max, n_dual);
    };
    std::vector<std::pair<std::string, Verdict>> results;
    if (o.oracle == "recurrence" || o.oracle == "all") {
        results.emplace_back("recurrence", extract_recurrence(l.set, o.d, n_max).second);
    }
    if (o.oracle == "dual" || o.oracle == "all") {
        results.emplace_back("dual", dual());
    }
    if (o.oracle == "delta") {
        const IndexRange range = o.delta_range == "next" ? IndexRange::NextOnly : IndexRange::Full;
        results.emplace_back("delta", theorem_delta_test(l.set, o.d, n_max, range));
    }
    if (o.oracle == "all") {
        results.emplace_back("delta_full", theorem_delta_test(l.set, o.d, n_max, IndexRange::Full));
        results.emplace_back("delta_next", theorem_delta_test(l.set, o.d, n_max, IndexRange::NextOnly));
    }
    bool all_positive = true;
    bool agree = true;
    for (const auto &[name, v] : results) {
        all_positive = all_positive && v.is_d_orthogonal;
        agree = agree && v.is_d_orthogonal == results.front().second.is_d_orthogonal;
    }
    if (o.json) {
        if (results.size() == 1) {
            out << tagged(results.front().first, results.front().second).dump(2) << '\n';
        } else {
            Json j;
            Json all = Json::object();
            for (const auto &[name, v] : results) {
                all[name] = to_json(v);
            }
            j["oracles"] = std::move(all);
            j["agree"] = agree;
            out << j.dump(2) << '\n';
        }
    } else {
        for (const auto &[name, v] : results) {
            out << name << ": " << describe(v) << '\n';
        }
        if (results.size() > 1) {
            out << "agree: " << (agree ? "yes" : "no") << '\n';
        }
    }
    return all_positive ? kOk : kNegative;
}

struct RecurOptions {
    SourceOptions source;
    std::size_t order = 12;
    int d = 2;
    std::optional<std::size_t> n_max;
    bool json = false;
};

int cmd_recur(const RecurOptions &o, std::ostream &out) {
    const Loaded l = load(o.source, o.order);
    const auto [data, verdict] = extract_recurrence(l.set, o.d, window(o.n_max, o.order));
    if (o.json) {
        out << to_json(verdict, &data).dump(2) << '\n';
    } else {
        out << gamma_table_csv(data);
    }
    return verdict.is_d_orthogonal ? kOk : kNegative;
}

struct GenOptions {
    SourceOptions source;
    std::size_t order = 8;
    std::string table = "poly";
    bool json = false;
};

int cmd_gen(const GenOptions &o, std::ostream &out) {
    const Loaded l = load(o.source, o.order);
    if (o.table == "delta") {
        const DeltaSeq seq = delta_sequence(l.set.b(), o.order);
        if (o.json) {
            Json r = Json::array();
            Json d = Json::array();
            for (std::size_t n = 0; n < seq.r.size(); ++n) {
                r.push_back(to_json(seq.r[n]));
                d.push_back(to_json(seq.delta[n]));
            }
            out << Json{{"r", r}, {"delta", d}}.dump(2) << '\n';
        } else {
            out << delta_table_csv(seq);
        }
        return kOk;
    }
    if (o.json) {
        Json rows = Json::array();
        for (const auto &p : l.set.table()) {
            Json row = Json::array();
            for (const auto &c : p) {
                row.push_back(to_json(c));
            }
            rows.push_back(std::move(row));
        }
        Json j;
        j["order"] = o.order;
        j["P"] = std::move(rows);
        out << j.dump(2) << '\n';
    } else {
        out << poly_table_csv(l.set);
    }
    return kOk;
}

int cmd_family_list(bool json, std::ostream &out) {
    if (json) {
        Json all = Json::array();
        for (const auto &e : catalog()) {
            Json j;
            j["name"] = e.name;
            const Json descriptor = family_descriptor(e.spec);
            for (const auto &[key, value] : descriptor.items()) {
                j[key] = value;
            }
            all.push_back(std::move(j));
        }
        out << all.dump(2) << '\n';
        return kOk;
    }
    for (const auto &e : catalog()) {
        out << e.name << '\t' << variant_name(e.spec) << '\t' << to_string(e.label) << '\n';
    }
    return kOk;
}

struct FamilyBuildOptions {
    SourceOptions source;
    std::size_t order = 10;
    bool json = false;
};

int cmd_family_build(const FamilyBuildOptions &o, std::ostream &out) {
    const Loaded l = load(o.source, o.order);
    if (!o.json) {
        out << "k,a,b\n";
        for (std::size_t k = 0; k <= o.order; ++k) {
            out << k << ',' << l.set.a()[k].to_string() << ',' << l.set.b()[k].to_string() << '\n';
        }
        return kOk;
    }
    const FamilyRoutes routes = construct_routes(*l.spec, o.order);
    Json j = family_descriptor(*l.spec);
    j["order"] = o.order;
    j["A"] = to_json(l.set.a());
    j["B"] = to_json(l.set.b());
    Json names;
    for (const auto *side : {&routes.a, &routes.b}) {
        Json list = Json::array();
        for (const auto &r : *side) {
            list.push_back(r.name);
        }
        names[side == &routes.a ? "A" : "B"] = std::move(list);
    }
    j["routes"] = std::move(names);
    const auto readings = symmetric_readings(*l.spec, o.order);
    if (!readings.empty()) {
        Json list = Json::array();
        for (const auto &r : readings) {
            Json item;
            item["reading"] = r.reading;
            item["matches"] = r.matches;
            if (r.first_mismatch) {
                item["first_mismatch"] = *r.first_mismatch;
            }
            list.push_back(std::move(item));
        }
        j["readings"] = std::move(list);
    }
    out << j.dump(2) << '\n';
    return kOk;
}

struct ClassifyOptions {
    SourceOptions source;
    std::size_t order = 26;
    std::optional<std::size_t> n_max;
    bool json = false;
};

int cmd_classify(const ClassifyOptions &o, std::ostream &out) {
    const Loaded l = load(o.source, o.order);
    const Classification c = classify_case(l.set, window(o.n_max, o.order));
    if (o.json) {
        out << to_json(c).dump(2) << '\n';
        return kOk;
    }
    out << "label: " << to_string(c.label) << '\n';
    if (c.annihilator) {
        out << "roots:";
        for (const auto &r : c.annihilator->roots) {
            out << ' ' << r.root.to_string();
            if (r.multiplicity > 1) {
                out << " (x" << r.multiplicity << ')';
            }
        }
        out << '\n';
    }
    for (const auto &[name, value] : c.recovered) {
        out << name << " = " << value.to_string() << '\n';
    }
    return kOk;
}

void add_order(CLI::App *app, std::size_t &order) {
    app->add_option("-N,--order", order, "Truncation order")->capture_default_str();
}

void add_window(CLI::App *app, std::optional<std::size_t> &n_max) {
    app->add_option("--n-max", n_max, "Last tested index (default N - 1)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact d-orthogonality checks for Brenke polynomial sets", "dops"};
    app.require_subcommand(1);
    bool csv = false;

    GenOptions gen;
    auto *gen_cmd = app.add_subcommand("gen", "Print the P_n coefficient table or the r/Delta sequences");
    add_source(gen_cmd, gen.source, true);
    add_order(gen_cmd, gen.order);
    gen_cmd->add_option("--table", gen.table, "poly|delta")
        ->check(CLI::IsMember({"poly", "delta"}))
        ->capture_default_str();
    gen_cmd->add_flag("--json", gen.json, "JSON output");
    gen_cmd->add_flag("--csv", csv, "CSV output (default)");

    CheckOptions check;
    auto *check_cmd = app.add_subcommand("check", "Test d-orthogonality on a finite window");
    add_source(check_cmd, check.source, true);
    add_order(check_cmd, check.order);
    add_window(check_cmd, check.n_max);
    check_cmd->add_option("-d", check.d, "Orthogonality order")->check(CLI::Range(1, 3))->capture_default_str();
    check_cmd->add_option("--oracle", check.oracle, "recurrence|dual|delta|all")
        ->check(CLI::IsMember({"recurrence", "dual", "delta", "all"}))
        ->capture_default_str();
    check_cmd->add_option("--m-max", check.m_max, "Highest power x^m for the dual oracle")->capture_default_str();
    check_cmd->add_option("--delta-range", check.delta_range, "full|next: which m enter the Delta relation")
        ->check(CLI::IsMember({"full", "next"}))
        ->capture_default_str();
    check_cmd->add_flag("--json", check.json, "JSON output");

    RecurOptions recur;
    auto *recur_cmd = app.add_subcommand("recur", "Print gamma_k(n) of x P_n = sum gamma_k(n) P_{n-k}");
    add_source(recur_cmd, recur.source, true);
    add_order(recur_cmd, recur.order);
    add_window(recur_cmd, recur.n_max);
    recur_cmd->add_option("-d", recur.d, "Orthogonality order")->check(CLI::Range(1, 3))->capture_default_str();
    recur_cmd->add_flag("--json", recur.json, "JSON output");
    recur_cmd->add_flag("--csv", csv, "CSV output (default)");

    bool list_json = false;
    auto *list_cmd = app.add_subcommand("family-list", "List the catalog samples");
    list_cmd->add_flag("--json", list_json, "JSON output");

    FamilyBuildOptions build;
    auto *build_cmd = app.add_subcommand("family-build", "Build A and B of a family by every route");
    add_source(build_cmd, build.source, false);
    add_order(build_cmd, build.order);
    build_cmd->add_flag("--json", build.json, "JSON output");
    build_cmd->add_flag("--csv", csv, "CSV output (default)");

    ClassifyOptions cls;
    auto *cls_cmd = app.add_subcommand("classify", "Recover the case label of a 2-OPS");
    add_source(cls_cmd, cls.source, true);
    add_order(cls_cmd, cls.order);
    add_window(cls_cmd, cls.n_max);
    cls_cmd->add_flag("--json", cls.json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check, out);
        }
        if (recur_cmd->parsed()) {
            return cmd_recur(recur, out);
        }
        if (list_cmd->parsed()) {
            return cmd_family_list(list_json, out);
        }
        if (build_cmd->parsed()) {
            return cmd_family_build(build, out);
        }
        return cmd_classify(cls, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotTwoOrthogonal &e) {
        err << e.what() << '\n';
        return kNegative;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace dops
