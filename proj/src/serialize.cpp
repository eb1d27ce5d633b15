#include "zetadyn/serialize.hpp"

#include "zetadyn/error.hpp"

#include <fstream>

namespace zetadyn {

namespace {

std::string group_field(const Json& j)
{
    if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
        throw Error("subgroup JSON needs a \"group\" string");
    return j["group"].get<std::string>();
}

long int_field(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw Error(std::string("subgroup JSON needs integer field \"") + key + "\"");
    return j[key].get<long>();
}

std::string string_field(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_string())
        throw Error(std::string("JSON needs string field \"") + key + "\"");
    return j[key].get<std::string>();
}

std::vector<Rational> coeff_list(const Json& j)
{
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error("series JSON needs a \"coeffs\" array");
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"])
        c.push_back(rational_from_json(x));
    return c;
}

} // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw Error("rational must be a \"p/q\" string or an integer");
}

Json to_json(const PowerSeries& f)
{
    Json c = Json::array();
    for (const auto& x : f.coeffs())
        c.push_back(to_string(x));
    return Json{{"order", f.order()}, {"coeffs", c}};
}

PowerSeries power_series_from_json(const Json& j)
{
    auto c = coeff_list(j);
    const int order = j.contains("order") ? j["order"].get<int>() : static_cast<int>(c.size()) - 1;
    if (order < 0 || static_cast<int>(c.size()) != order + 1)
        throw Error("series JSON: \"order\" does not match the coefficient count");
    return PowerSeries(order, std::move(c));
}

Json to_json(const DirichletSeries& f)
{
    Json c = Json::array();
    for (const auto& x : f.coeffs())
        c.push_back(to_string(x));
    return Json{{"bound", f.bound()}, {"coeffs", c}};
}

DirichletSeries dirichlet_series_from_json(const Json& j)
{
    auto c = coeff_list(j);
    if (c.empty() || (j.contains("bound") && j["bound"].get<int>() != static_cast<int>(c.size())))
        throw Error("series JSON: \"bound\" does not match the coefficient count");
    return DirichletSeries(std::move(c));
}

Json to_json(const SubgroupHandle& L)
{
    Json j{{"group", L.group().name()}};
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ZSubgroup>) {
                j["n"] = s.n;
            } else if constexpr (std::is_same_v<T, ZdSubgroup>) {
                j["hnf"] = s.hnf;
            } else if constexpr (std::is_same_v<T, DinfSubgroup>) {
                if (s.kind == DinfSubgroup::Kind::cyclic) {
                    j["type"] = "cyclic";
                    j["n"] = s.n;
                } else {
                    j["type"] = "dihedral";
                    j["n"] = s.n;
                    j["k"] = s.k;
                }
            } else if constexpr (std::is_same_v<T, ZxCyclicSubgroup>) {
                if (s.kind == ZxCyclicSubgroup::Kind::diagonal) {
                    j["type"] = "diagonal";
                    j["n"] = s.n;
                } else {
                    j["type"] = "split";
                    j["n"] = s.n;
                    j["k"] = s.k;
                }
            } else {
                j["family"] = family_name(s.family);
                j["k"] = s.k;
                j["m"] = s.m;
                j["j"] = s.j;
            }
        },
        L.data());
    return j;
}

SubgroupHandle handle_from_json(const Json& j)
{
    const GroupModel g = GroupModel::parse(group_field(j));
    switch (g.family()) {
    case GroupFamily::z:
        return {g, ZSubgroup{int_field(j, "n")}};
    case GroupFamily::z_d: {
        if (!j.contains("hnf") || !j["hnf"].is_array())
            throw Error("z_d subgroup JSON needs an \"hnf\" array");
        return {g, ZdSubgroup{g.param(), j["hnf"].get<std::vector<long>>()}};
    }
    case GroupFamily::dinf: {
        const auto type = string_field(j, "type");
        if (type == "cyclic")
            return {g, DinfSubgroup{DinfSubgroup::Kind::cyclic, int_field(j, "n"), 0}};
        if (type == "dihedral")
            return {g, DinfSubgroup{DinfSubgroup::Kind::dihedral, int_field(j, "n"), int_field(j, "k")}};
        throw Error("dinf subgroup type must be cyclic or dihedral");
    }
    case GroupFamily::z_x_cyclic: {
        const auto type = string_field(j, "type");
        if (type == "diagonal")
            return {g, ZxCyclicSubgroup{ZxCyclicSubgroup::Kind::diagonal, int_field(j, "n"), 0}};
        if (type == "split")
            return {g, ZxCyclicSubgroup{ZxCyclicSubgroup::Kind::split, int_field(j, "n"), int_field(j, "k")}};
        throw Error("z_x_cyclic subgroup type must be split or diagonal");
    }
    case GroupFamily::pm:
        return {g, PmSubgroup{parse_pm_family(string_field(j, "family")), int_field(j, "k"), int_field(j, "m"),
                              j.contains("j") ? int_field(j, "j") : 0}};
    default:
        throw Error("no subgroup handles for " + g.name());
    }
}

Json to_json(const ZetaResult& r)
{
    Json j{{"method", method_name(r.method)}, {"order", r.series.order()}};
    j["coeffs"] = to_json(r.series)["coeffs"];
    j["integer"] = r.integer_coefficients;
    j["radius_estimate"] = r.radius_estimate.empty() ? Json(nullptr) : Json(r.radius_estimate);
    return j;
}

ActionModel toral_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error("toral config must be a JSON object");
    const GroupModel g = GroupModel::parse(string_field(j, "group"));
    if (!j.contains("matrices") || !j["matrices"].is_object())
        throw Error("toral config needs a \"matrices\" object");
    std::map<std::string, IntMatrix> mats;
    for (const auto& [name, rows] : j["matrices"].items()) {
        std::vector<std::vector<long>> r;
        try {
            r = rows.get<std::vector<std::vector<long>>>();
        } catch (const nlohmann::json::exception&) {
            throw Error("matrix \"" + name + "\" must be an array of integer rows");
        }
        std::vector<std::vector<BigInt>> big;
        for (const auto& row : r)
            big.emplace_back(row.begin(), row.end());
        mats.emplace(name, IntMatrix::from_rows(big));
    }
    return ActionModel::toral(g, std::move(mats));
}

ActionModel load_toral_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("config " + path + ": " + e.what());
    }
    return toral_from_json(j);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

} // namespace zetadyn
