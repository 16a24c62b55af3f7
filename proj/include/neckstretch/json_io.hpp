#pragma once

#include <string>

#include <json.hpp>

#include "neckstretch/building.hpp"
#include "neckstretch/rational.hpp"

namespace neckstretch {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

// Building file schema (version "1"):
// {"schema":"1",
//  "components":[{"level":int,"kind":"top|neck|bottom","degree":int,"e":int,
//                 "genus":int,"cover":int,
//                 "ends":[{"sign":"+|-","k":int,"l":int,"movable":bool}]}],
//  "matchings":[[ci,ei,cj,ej]]}
// The total class is the sum over top components and is recomputed on read.

inline json building_to_json(const BuildingSpec& b) {
    json out;
    out["schema"] = schema_version;
    out["components"] = json::array();
    for (const auto& c : b.components) {
        json jc;
        jc["level"] = c.level;
        jc["kind"] = level_kind_name(c.level_kind);
        jc["degree"] = c.degree;
        jc["e"] = c.exceptional;
        jc["genus"] = c.genus;
        jc["cover"] = c.cover_multiplicity;
        jc["ends"] = json::array();
        for (const auto& end : c.ends) {
            json je;
            je["sign"] = end.sign == Sign::positive ? "+" : "-";
            je["k"] = end.orbit.k;
            je["l"] = end.orbit.l;
            je["movable"] = end.movable;
            jc["ends"].push_back(std::move(je));
        }
        out["components"].push_back(std::move(jc));
    }
    out["matchings"] = json::array();
    for (const auto& m : b.matchings)
        out["matchings"].push_back({m.a.component, m.a.end, m.b.component, m.b.end});
    return out;
}

inline BuildingSpec building_from_json(const json& in) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("building json: " + what);
    };
    if (!in.is_object()) fail("not an object");
    if (!in.contains("schema") || in.at("schema") != schema_version) fail("missing or unknown schema");
    if (!in.contains("components") || !in.at("components").is_array()) fail("missing components array");
    if (!in.contains("matchings") || !in.at("matchings").is_array()) fail("missing matchings array");

    BuildingSpec b;
    for (const auto& jc : in.at("components")) {
        ComponentSpec c;
        const std::string kind = jc.at("kind").get<std::string>();
        if (kind == "top") c.level_kind = LevelKind::top;
        else if (kind == "neck") c.level_kind = LevelKind::neck;
        else if (kind == "bottom") c.level_kind = LevelKind::bottom;
        else fail("unknown component kind '" + kind + "'");
        c.level = jc.at("level").get<int>();
        c.degree = jc.at("degree").get<long long>();
        c.exceptional = jc.at("e").get<long long>();
        c.genus = jc.at("genus").get<int>();
        c.cover_multiplicity = jc.at("cover").get<long long>();
        for (const auto& je : jc.at("ends")) {
            PunctureEnd end;
            const std::string sign = je.at("sign").get<std::string>();
            if (sign == "+") end.sign = Sign::positive;
            else if (sign == "-") end.sign = Sign::negative;
            else fail("unknown end sign '" + sign + "'");
            end.orbit = {je.at("k").get<long long>(), je.at("l").get<long long>()};
            end.movable = je.at("movable").get<bool>();
            c.ends.push_back(end);
        }
        b.components.push_back(std::move(c));
    }
    for (const auto& jm : in.at("matchings")) {
        if (!jm.is_array() || jm.size() != 4) fail("matching is not [ci,ei,cj,ej]");
        b.matchings.push_back({{jm[0].get<int>(), jm[1].get<int>()}, {jm[2].get<int>(), jm[3].get<int>()}});
    }
    auto [d, e] = summed_class(b);
    b.total_degree = d;
    b.total_exceptional = e;
    return b;
}

inline json rational_to_json(const Rational& r) { return json(r.str()); }

} // namespace neckstretch
