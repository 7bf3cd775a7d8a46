// JSON import/export for the file formats and report types used by the CLI.

#pragma once

#include <json.hpp>

#include "vbraid/invariants.hpp"
#include "vbraid/link_groups.hpp"

namespace vbraid {

using json = nlohmann::json;

inline json to_json(const Presentation& p) {
    json rels = json::array();
    Presentation tmp = p;
    for (const auto& r : p.relators) {
        // reuse the plain-text word grammar
        std::ostringstream os;
        size_t i = 0;
        bool first = true;
        while (i < r.size()) {
            size_t j = i;
            while (j < r.size() && r[j] == r[i]) ++j;
            long long e = static_cast<long long>(j - i) * (r[i] > 0 ? 1 : -1);
            if (!first) os << ' ';
            first = false;
            os << p.generators[std::abs(r[i]) - 1];
            if (e != 1) os << '^' << e;
            i = j;
        }
        rels.push_back(first ? "1" : os.str());
    }
    return json{{"generators", p.generators}, {"relators", rels}};
}

inline Presentation presentation_from_json(const json& j) {
    if (!j.contains("generators") || !j.contains("relators"))
        throw error("presentation json: need 'generators' and 'relators'");
    Presentation p = make_presentation(j.at("generators").get<std::vector<std::string>>(), {});
    std::vector<FreeWord> rels;
    for (const auto& r : j.at("relators")) rels.push_back(parse_relator(p, r.get<std::string>()));
    return make_presentation(p.generators, std::move(rels));
}

inline json to_json(const Diagram& d) {
    json comps = json::object();
    for (const auto& [arc, c] : d.component) comps[arc] = c;
    json crossings = json::array();
    for (const auto& c : d.crossings) {
        json jc{{"kind", c.kind == Crossing::positive ? "positive"
                         : c.kind == Crossing::negative ? "negative" : "virtual"},
                {"a", c.a}, {"b", c.b}, {"c", c.c}};
        if (!c.d.empty()) jc["d"] = c.d;
        crossings.push_back(jc);
    }
    return json{{"arcs", d.arcs}, {"components", comps}, {"crossings", crossings}};
}

inline Diagram diagram_from_json(const json& j) {
    Diagram d;
    d.arcs = j.at("arcs").get<std::vector<std::string>>();
    if (j.contains("components"))
        for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it)
            d.component[it.key()] = it.value().get<int>();
    for (const auto& arc : d.arcs)
        if (!d.component.count(arc)) d.component[arc] = 1;
    for (const auto& jc : j.at("crossings")) {
        Crossing c;
        std::string kind = jc.at("kind").get<std::string>();
        if (kind == "positive") c.kind = Crossing::positive;
        else if (kind == "negative") c.kind = Crossing::negative;
        else if (kind == "virtual") c.kind = Crossing::virtual_crossing;
        else throw error("diagram json: bad crossing kind '" + kind + "'");
        c.a = jc.at("a").get<std::string>();
        c.b = jc.at("b").get<std::string>();
        c.c = jc.at("c").get<std::string>();
        if (jc.contains("d")) c.d = jc.at("d").get<std::string>();
        d.crossings.push_back(std::move(c));
    }
    return d;
}

inline json to_json(const AbelianInvariants& a) {
    json torsion = json::array();
    for (const auto& t : a.torsion) torsion.push_back(t.convert_to<long long>());
    return json{{"free_rank", a.free_rank}, {"torsion", torsion}};
}

inline json to_json(const InvariantReport& r) {
    return json{{"abelianization", to_json(r.abelianization)},
                {"gamma2_over_gamma3", to_json(r.gamma2_over_gamma3)},
                {"generator_count", r.generator_count},
                {"relator_count", r.relator_count}};
}

inline json to_json(const RelationReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"relation_family", e.family},
                               {"instance_indices", e.indices},
                               {"pass", e.pass},
                               {"witness_generator", e.witness_generator},
                               {"lhs_image", e.lhs_image},
                               {"rhs_image", e.rhs_image}});
    json out{{"kind", rep_kind_name(r.kind)},
             {"n", r.n},
             {"entries", entries},
             {"defining_ok", r.defining_ok},
             {"matches_expectations", r.matches_expectations()}};
    out["f1_holds"] = r.f1_holds ? json(*r.f1_holds) : json(nullptr);
    out["f2_holds"] = r.f2_holds ? json(*r.f2_holds) : json(nullptr);
    return out;
}

inline json image_table_json(const Endomorphism& e) {
    json out = json::array();
    for (Symbol s : e.alphabet()->symbols())
        out.push_back(json{{"generator", e.alphabet()->name(s)},
                           {"image", print_word(e.image(s))}});
    return out;
}

}  // namespace vbraid
