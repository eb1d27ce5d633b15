#include "cli.hpp"

#include "verify.hpp"

#include "zetadyn/error.hpp"
#include "zetadyn/oracle.hpp"
#include "zetadyn/serialize.hpp"
#include "zetadyn/zeta.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace zetadyn::cli {

namespace {

constexpr const char* kCsvVersion = "# zetadyn-csv v1";

enum class Format { plain, json, csv };

struct Common {
    std::string format = "plain";
    int jobs = 1;
    Format fmt() const
    {
        if (format == "json")
            return Format::json;
        if (format == "csv")
            return Format::csv;
        return Format::plain;
    }
};

struct ActionArgs {
    std::string action = "full-shift";
    std::string group;
    long alphabet = 2;
    std::string config;
};

void add_action_options(CLI::App* cmd, ActionArgs& a)
{
    cmd->add_option("--action", a.action, "full-shift, projected, toral, pm-projected or trivial")
        ->check(CLI::IsMember({"full-shift", "projected", "toral", "pm-projected", "trivial"}));
    cmd->add_option("--group", a.group, "group as name or name:param");
    cmd->add_option("--alphabet", a.alphabet, "alphabet size")->check(CLI::PositiveNumber);
    cmd->add_option("--config", a.config, "JSON config for --action toral");
}

ActionModel make_action(const ActionArgs& a)
{
    if (a.action == "toral") {
        if (a.config.empty())
            throw Error("--action toral needs --config");
        ActionModel m = load_toral_config(a.config);
        if (!a.group.empty() && GroupModel::parse(a.group) != m.group())
            throw Error("--group " + a.group + " does not match the config group " + m.group().name());
        return m;
    }
    if (a.action == "pm-projected") {
        if (!a.group.empty() && GroupModel::parse(a.group) != GroupModel::pm())
            throw Error("pm-projected acts through pm only");
        return ActionModel::pm_projected(a.alphabet);
    }
    if (a.group.empty())
        throw Error("--action " + a.action + " needs --group");
    const GroupModel g = GroupModel::parse(a.group);
    if (a.action == "projected")
        return ActionModel::projected_shift(g, a.alphabet);
    if (a.action == "trivial")
        return ActionModel::full_shift(g, 1);
    return ActionModel::full_shift(g, a.alphabet);
}

int max_terms()
{
    if (const char* env = std::getenv("ZETADYN_MAX_TERMS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1)
                return v;
        } catch (const std::exception&) {
        }
        throw Error("ZETADYN_MAX_TERMS must be a positive integer");
    }
    return 200;
}

void check_terms(int terms)
{
    if (terms < 1)
        throw Error("--terms must be at least 1");
    const int cap = max_terms();
    if (terms > cap)
        throw Error("--terms " + std::to_string(terms) + " exceeds ZETADYN_MAX_TERMS (" + std::to_string(cap) + ")");
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ")
{
    std::string s;
    for (const auto& x : items)
        s += (s.empty() ? "" : sep) + x;
    return s;
}

std::vector<std::string> strings(std::span<const Rational> xs)
{
    std::vector<std::string> s;
    for (const auto& x : xs)
        s.push_back(to_string(x));
    return s;
}

std::string integrality_text(const IntegralityCheck& c, const std::function<Rational(int)>& value)
{
    if (c.integral)
        return "yes";
    return "no (first failure n=" + std::to_string(*c.first_failure) + ", value " + to_string(value(*c.first_failure)) + ")";
}

// ---- delta ---------------------------------------------------------------

int cmd_delta(const Common& common, const std::string& group, int terms, std::ostream& out)
{
    check_terms(terms);
    const GroupModel g = GroupModel::parse(group);
    const DirichletSeries b = delta_series(g, terms);
    const DirichletSeries a = counts_from_delta(b);
    const IntegralityCheck ib = is_integer_series(b);
    const IntegralityCheck ia = is_integer_series(a);
    switch (common.fmt()) {
    case Format::json: {
        Json j{{"group", g.name()}, {"delta", to_json(b)}, {"subgroup_counts", to_json(a)}};
        j["delta_integer"] = ib.integral;
        j["first_failure"] = ib.first_failure ? Json(*ib.first_failure) : Json(nullptr);
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << kCsvVersion << "\nn,b,a\n";
        for (int n = 1; n <= terms; ++n)
            out << n << "," << to_string(b(n)) << "," << to_string(a(n)) << "\n";
        break;
    case Format::plain:
        out << "group " << g.name() << "\n";
        out << "b: " << join(strings(b.coeffs())) << "\n";
        out << "a: " << join(strings(a.coeffs())) << "\n";
        out << "Delta integer: " << integrality_text(ib, [&](int n) { return b(n); }) << "\n";
        out << "a integer: " << (ia.integral ? "yes" : "no") << "\n";
        break;
    }
    return 0;
}

// ---- zeta ----------------------------------------------------------------

std::string first_disagreement(const std::vector<ZetaResult>& rs)
{
    for (std::size_t i = 1; i < rs.size(); ++i) {
        const auto& f = rs[0].series;
        const auto& g = rs[i].series;
        for (int k = 0; k <= std::min(f.order(), g.order()); ++k)
            if (f[k] != g[k])
                return method_name(rs[0].method) + " and " + method_name(rs[i].method) + " differ at coefficient " + std::to_string(k)
                       + " (" + to_string(f[k]) + " vs " + to_string(g[k]) + ")";
    }
    return {};
}

int cmd_zeta(const Common& common, const ActionArgs& args, int terms, const std::string& method, bool fit, std::ostream& out)
{
    check_terms(terms);
    const ActionModel a = make_action(args);
    const bool shift = a.kind() == ActionKind::full_shift;
    std::vector<ZetaMethod> methods;
    if (method == "all") {
        if (a.group().enumerable())
            methods = {ZetaMethod::definition, ZetaMethod::product_thm1, ZetaMethod::iso_class_product};
        if (shift)
            methods.push_back(ZetaMethod::full_shift_product);
    } else {
        methods.push_back(parse_method(method));
    }
    std::optional<LatticeSlice> slice;
    std::optional<FixTable> fix;
    std::vector<ZetaResult> results;
    for (ZetaMethod m : methods) {
        if (m == ZetaMethod::full_shift_product) {
            if (!shift)
                throw Error("method full-shift needs --action full-shift or trivial");
            results.push_back(zeta_full_shift(a.group(), a.alphabet(), terms));
            continue;
        }
        if (!a.group().enumerable())
            throw Error("method " + method_name(m) + " needs subgroup enumeration, unavailable for " + a.group().name()
                        + "; use --method full-shift");
        if (!slice) {
            slice.emplace(a.group(), terms);
            fix = fix_table(a, terms, common.jobs);
        }
        switch (m) {
        case ZetaMethod::definition: results.push_back(zeta_def(*slice, *fix, terms)); break;
        case ZetaMethod::product_thm1: results.push_back(zeta_product_thm1(*slice, *fix, terms)); break;
        default: results.push_back(zeta_iso_class_product(*slice, *fix, terms)); break;
        }
    }
    if (results.empty())
        throw Error("no applicable method for " + a.description());
    const std::string disagreement = first_disagreement(results);
    const bool checked = method == "all";
    std::optional<RationalFit> rf;
    if (fit)
        rf = rational_fit(results.front().series);

    switch (common.fmt()) {
    case Format::json: {
        Json j{{"action", a.description()}};
        Json rs = Json::array();
        for (const auto& r : results)
            rs.push_back(to_json(r));
        j["results"] = rs;
        if (checked)
            j["status"] = disagreement.empty() ? "PASS" : "FAIL";
        if (rf) {
            Json f{{"success", rf->success}};
            Json fs = Json::array();
            for (const auto& x : rf->factors)
                fs.push_back(Json{{"c", to_string(x.c)}, {"m", x.m}, {"e", to_string(x.e)}});
            f["factors"] = fs;
            j["rational_fit"] = f;
        }
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv: {
        out << kCsvVersion << "\nn";
        for (const auto& r : results)
            out << "," << method_name(r.method);
        out << "\n";
        for (int k = 0; k <= terms; ++k) {
            out << k;
            for (const auto& r : results)
                out << "," << to_string(r.series[k]);
            out << "\n";
        }
        break;
    }
    case Format::plain:
        out << a.description() << "\n";
        for (const auto& r : results) {
            out << method_name(r.method) << ": " << join(strings(r.series.coeffs())) << "\n";
            out << "  integer coefficients: " << (r.integer_coefficients ? "yes" : "no");
            if (!r.radius_estimate.empty())
                out << ", radius estimate " << r.radius_estimate;
            out << "\n";
        }
        if (rf)
            out << "rational fit: " << (rf->success ? rf->label : "none within budget") << "\n";
        if (checked)
            out << (disagreement.empty() ? "PASS" : "FAIL: " + disagreement) << "\n";
        break;
    }
    if (checked && !disagreement.empty()) {
        if (common.fmt() != Format::plain)
            throw Error(disagreement);
        return 1;
    }
    return 0;
}

// ---- fix / orbits / growth --------------------------------------------------

int cmd_fix(const Common& common, const ActionArgs& args, long max_index, std::ostream& out)
{
    const ActionModel a = make_action(args);
    if (!a.group().enumerable())
        throw Error("enumeration unavailable for " + a.group().name());
    const FixTable fix = fix_table(a, max_index, common.jobs);
    switch (common.fmt()) {
    case Format::json: {
        Json rows = Json::array();
        for (const auto& [L, F] : fix)
            rows.push_back(Json{{"subgroup", to_json(L)}, {"index", L.index()}, {"F", to_string(F)}});
        out << Json{{"action", a.description()}, {"fix", rows}}.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << kCsvVersion << "\nsubgroup,index,F\n";
        for (const auto& [L, F] : fix)
            out << csv_field(to_json(L).dump()) << "," << L.index() << "," << to_string(F) << "\n";
        break;
    case Format::plain:
        out << a.description() << "\n";
        for (const auto& [L, F] : fix)
            out << std::setw(4) << L.index() << "  " << std::left << std::setw(20) << L.label() << std::right << "  " << to_string(F) << "\n";
        break;
    }
    return 0;
}

int cmd_orbits(const Common& common, const ActionArgs& args, long N, std::ostream& out)
{
    const ActionModel a = make_action(args);
    if (!a.group().enumerable())
        throw Error("enumeration unavailable for " + a.group().name());
    const LatticeSlice slice(a.group(), N);
    const FixTable fix = fix_table(a, N, common.jobs);
    std::map<long, BigInt> by_size;
    for (const auto& oc : orbit_classes(slice, fix))
        by_size[oc.orbit_size] += oc.multiplicity;
    std::vector<MainTermReport> reports;
    for (long n = 1; n <= N; ++n)
        reports.push_back(main_term_diagnostic(slice, fix, n));
    const auto& last = reports.back();
    switch (common.fmt()) {
    case Format::json: {
        Json sizes = Json::object();
        for (const auto& [s, c] : by_size)
            sizes[std::to_string(s)] = to_string(c);
        Json pis = Json::array();
        for (const auto& r : reports)
            pis.push_back(Json{{"N", r.N}, {"pi", to_string(r.pi)}, {"main_term", to_string(r.main_term)}, {"ratio", to_decimal(r.ratio)}});
        Json j{{"action", a.description()}, {"orbit_sizes", sizes}, {"pi", pis}};
        j["diagnostic"] = Json{{"N", last.N},           {"f_N", to_string(last.f_N)}, {"f_half", to_string(last.f_half)},
                               {"s_G", last.s_G},        {"m_G", to_string(last.m_G)}, {"error_term", to_string(last.error_term)}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::csv:
        out << kCsvVersion << "\nN,pi,main_term,ratio\n";
        for (const auto& r : reports)
            out << r.N << "," << to_string(r.pi) << "," << to_string(r.main_term) << "," << to_decimal(r.ratio) << "\n";
        break;
    case Format::plain:
        out << a.description() << "\n";
        out << "size  orbits\n";
        for (long s = 1; s <= N; ++s)
            out << std::setw(4) << s << "  " << to_string(by_size.count(s) ? by_size.at(s) : BigInt(0)) << "\n";
        out << "pi(" << N << ") = " << to_string(last.pi) << "\n";
        out << "main term = " << to_string(last.main_term) << ", error/main = " << to_decimal(last.ratio) << "\n";
        out << "f(N) = " << to_string(last.f_N) << ", f(N/2) = " << to_string(last.f_half) << ", s_G = " << last.s_G
            << ", m_G = " << to_string(last.m_G) << "\n";
        break;
    }
    return 0;
}

int cmd_growth(const Common& common, const ActionArgs& args, long N, long window_lo, std::ostream& out)
{
    const ActionModel a = make_action(args);
    const FixTable fix = fix_table(a, N, common.jobs);
    const GrowthReport g = growth_estimate(fix, N, window_lo);
    const auto& h = a.declared_entropy();
    const std::string entropy = h ? to_string(*h) + " log " + std::to_string(a.alphabet()) : "undeclared";
    if (common.fmt() == Format::json) {
        Json j{{"action", a.description()}, {"window", Json::array({g.window_lo, g.window_hi})}, {"growth", g.estimate_text},
               {"radius", g.radius_text}};
        j["declared_entropy"] = h ? Json(to_string(*h)) : Json(nullptr);
        out << j.dump(2) << "\n";
    } else if (common.fmt() == Format::csv) {
        out << kCsvVersion << "\nwindow_lo,window_hi,growth,radius,declared_entropy\n";
        out << g.window_lo << "," << g.window_hi << "," << g.estimate_text << "," << g.radius_text << "," << (h ? to_string(*h) : "") << "\n";
    } else {
        out << a.description() << "\n";
        out << "growth estimate over [L] in [" << g.window_lo << ", " << g.window_hi << "]: " << g.estimate_text << "\n";
        out << "radius estimate: " << g.radius_text << "\n";
        out << "declared entropy: " << entropy << "\n";
    }
    return 0;
}

// ---- table1 / integrality / verify --------------------------------------------

int cmd_table1(const Common& common, const std::string& config, long D, const std::string& fixed_by, std::ostream& out)
{
    const ActionModel a = config.empty() ? builtin_dinf_torus() : load_toral_config(config);
    std::optional<SubgroupHandle> L;
    if (fixed_by == "default") {
        if (config.empty())
            L = SubgroupHandle(GroupModel::dinf(), DinfSubgroup{DinfSubgroup::Kind::dihedral, 6, 0});
    } else if (!fixed_by.empty() && fixed_by != "none") {
        try {
            L = handle_from_json(Json::parse(fixed_by));
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("--fixed-by: ") + e.what());
        }
    }
    const auto orbits = oracle::brute_toral_orbits(a, D);
    Json rows = Json::array();
    if (common.fmt() == Format::csv)
        out << kCsvVersion << "\norbit,point,stabilizer,block\n";
    std::size_t id = 0;
    for (const auto& orbit : orbits) {
        if (L) {
            bool meets = false;
            for (const auto& s : orbit.stabilizers)
                meets = meets || contains(*L, s);
            if (!meets)
                continue;
        }
        ++id;
        for (std::size_t i = 0; i < orbit.points.size(); ++i) {
            const std::string stab = to_json(orbit.stabilizers[i]).dump();
            switch (common.fmt()) {
            case Format::csv:
                out << id << "," << csv_field(orbit.points[i].to_string()) << "," << csv_field(stab) << "," << orbit.block[i] << "\n";
                break;
            case Format::json:
                rows.push_back(Json{{"orbit", id}, {"point", orbit.points[i].to_string()}, {"stabilizer", to_json(orbit.stabilizers[i])},
                                    {"block", orbit.block[i]}});
                break;
            case Format::plain:
                out << "Y" << id << "  block " << orbit.block[i] << "  (" << orbit.points[i].to_string() << ")  "
                    << orbit.stabilizers[i].label() << (L && contains(*L, orbit.stabilizers[i]) ? "  *" : "") << "\n";
                break;
            }
        }
    }
    if (common.fmt() == Format::json)
        out << Json{{"action", a.description()}, {"denominator", D}, {"orbits", rows}}.dump(2) << "\n";
    return 0;
}

int cmd_integrality(const Common& common, const std::string& group, int terms, std::ostream& out)
{
    check_terms(terms);
    const GroupModel g = GroupModel::parse(group);
    const IntegralityReport r = integrality_report(g, terms);
    const DirichletSeries b = delta_series(g, terms);
    const PowerSeries z = zeta_full_shift(g, 1, terms).series;
    if (common.fmt() == Format::json) {
        Json j{{"group", r.group}, {"delta_integer", r.delta.integral}};
        j["delta_first_failure"] = r.delta.first_failure ? Json(*r.delta.first_failure) : Json(nullptr);
        j["zeta_integer"] = r.zeta.integral;
        j["zeta_first_failure"] = r.zeta.first_failure ? Json(*r.zeta.first_failure) : Json(nullptr);
        out << j.dump(2) << "\n";
    } else if (common.fmt() == Format::csv) {
        auto failure = [](const IntegralityCheck& c) { return c.first_failure ? std::to_string(*c.first_failure) : std::string(); };
        out << kCsvVersion << "\ngroup,delta_integer,delta_first_failure,zeta_integer,zeta_first_failure\n";
        out << r.group << "," << r.delta.integral << "," << failure(r.delta) << "," << r.zeta.integral << "," << failure(r.zeta) << "\n";
    } else {
        out << "group " << r.group << "\n";
        out << "Delta integer: " << integrality_text(r.delta, [&](int n) { return b(n); }) << "\n";
        out << "zeta_tau integer: " << integrality_text(r.zeta, [&](int n) { return z[n]; }) << "\n";
    }
    return 0;
}

int cmd_verify(const Common& common, const std::string& suite, const std::string& only, const std::vector<std::string>& corrupt,
               std::ostream& out)
{
    if (suite != "paper-tables")
        throw Error("unknown suite '" + suite + "' (paper-tables)");
    VerifyOptions opts;
    if (!only.empty())
        opts.only = only;
    opts.corrupt.insert(corrupt.begin(), corrupt.end());
    const auto results = run_reference_suite(opts);
    bool all = true;
    Json rows = Json::array();
    if (common.fmt() == Format::csv)
        out << kCsvVersion << "\nid,status,detail\n";
    for (const auto& r : results) {
        all = all && r.pass;
        if (common.fmt() == Format::json)
            rows.push_back(Json{{"id", r.id}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
        else if (common.fmt() == Format::csv)
            out << r.id << "," << (r.pass ? "PASS" : "FAIL") << "," << csv_field(r.detail) << "\n";
        else
            out << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
    }
    if (common.fmt() == Format::json)
        out << Json{{"suite", suite}, {"fixtures", rows}, {"status", all ? "PASS" : "FAIL"}}.dump(2) << "\n";
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dynamical zeta functions of group actions", "zetadyn"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--jobs", common.jobs, "worker threads for fixed-point tables")->check(CLI::Range(1, 256));

    std::string group;
    int terms = 10;
    ActionArgs act;
    std::string method = "def";
    bool fit = false;
    long max_index = 12;
    long window_lo = 0;
    long denominator = 30;
    std::string config, fixed_by = "default", suite = "paper-tables", only;
    std::vector<std::string> corrupt;

    auto* delta = app.add_subcommand("delta", "Delta_G coefficients b(n) and subgroup counts a(n)");
    delta->add_option("--group", group, "group")->required();
    delta->add_option("--terms", terms, "number of coefficients");

    auto* zeta = app.add_subcommand("zeta", "zeta function coefficients");
    add_action_options(zeta, act);
    zeta->add_option("--terms", terms, "truncation order");
    zeta->add_option("--method", method, "def, product, full-shift, iso or all")
        ->check(CLI::IsMember({"def", "product", "full-shift", "iso", "all"}));
    zeta->add_flag("--fit", fit, "factor the result as a product of (1 - c z^m)^e");

    auto* fix = app.add_subcommand("fix", "fixed-point counts for every subgroup of index <= N");
    add_action_options(fix, act);
    fix->add_option("--max-index", max_index, "N")->check(CLI::PositiveNumber);

    auto* orbits = app.add_subcommand("orbits", "orbit counts by size and pi(N)");
    add_action_options(orbits, act);
    orbits->add_option("--max-size", max_index, "N")->check(CLI::PositiveNumber);

    auto* growth = app.add_subcommand("growth", "finite-N growth-rate estimate");
    add_action_options(growth, act);
    growth->add_option("--max-index", max_index, "N")->check(CLI::PositiveNumber);
    growth->add_option("--window-lo", window_lo, "smallest index in the window (default ceil(N/2))");

    auto* table1 = app.add_subcommand("table1", "torus orbits on the (1/D)-grid with stabilizers and blocks");
    table1->add_option("--config", config, "toral config (default: the D_inf example)");
    table1->add_option("--denominator", denominator, "D")->check(CLI::Range(1, 60));
    table1->add_option("--fixed-by", fixed_by, "subgroup JSON; keep orbits meeting its fixed set ('none' keeps all)");

    auto* integ = app.add_subcommand("integrality", "integrality of Delta_G and zeta_tau(G)");
    integ->add_option("--group", group, "group")->required();
    integ->add_option("--terms", terms, "number of coefficients");

    auto* verify = app.add_subcommand("verify", "run the reference fixtures");
    verify->add_option("--suite", suite, "suite name");
    verify->add_option("--only", only, "run a single fixture");
    verify->add_option("--corrupt", corrupt, "perturb a fixture's expected data")->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*delta)
            return cmd_delta(common, group, terms, out);
        if (*zeta)
            return cmd_zeta(common, act, terms, method, fit, out);
        if (*fix)
            return cmd_fix(common, act, max_index, out);
        if (*orbits)
            return cmd_orbits(common, act, max_index, out);
        if (*growth)
            return cmd_growth(common, act, max_index, window_lo, out);
        if (*table1)
            return cmd_table1(common, config, denominator, fixed_by, out);
        if (*integ)
            return cmd_integrality(common, group, terms, out);
        if (*verify)
            return cmd_verify(common, suite, only, corrupt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        // method disagreement is a failed check rather than bad input
        return std::string(e.what()).find(" differ at coefficient ") != std::string::npos ? 1 : 2;
    }
    return 2;
}

} // namespace zetadyn::cli
