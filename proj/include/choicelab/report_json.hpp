#pragma once

// JSON rendering of verdicts, explanations, reports, census rows, and suite
// results.  All menus and orders are printed as labels, never indices; key
// order is insertion order so identical inputs serialize byte-identically.

#include <json.hpp>

#include "choicelab/classify.hpp"
#include "choicelab/oracle.hpp"

namespace choicelab {

using Json = nlohmann::ordered_json;

inline Json menu_to_json(const GroundSet& ground, ItemSet menu) {
    Json out = Json::array();
    for_each_item(menu, [&](int i) { out.push_back(ground.label(i)); });
    return out;
}

inline ItemSet menu_from_json(const GroundSet& ground, const Json& j) {
    ItemSet menu = 0;
    for (const auto& label : j) {
        auto idx = ground.find(label.get<std::string>());
        if (!idx) throw ParseError("unknown label '" + label.get<std::string>() + "' in JSON menu");
        menu |= item_bit(*idx);
    }
    return menu;
}

inline Json witness_to_json(const GroundSet& ground, const Witness& w) {
    Json out;
    for (const auto& [name, menu] : w.menus) out[name] = menu_to_json(ground, menu);
    for (const auto& [name, item] : w.items) out[name] = ground.label(item);
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

inline Json verdict_to_json(const GroundSet& ground, const AxiomVerdict& v) {
    Json out;
    out["holds"] = v.holds;
    if (v.counterexample) out["counterexample"] = witness_to_json(ground, *v.counterexample);
    return out;
}

inline Json relation_to_json(const BinaryRelation& r) {
    Json pairs = Json::array();
    for (auto [i, j] : r.pairs())
        pairs.push_back(Json::array({r.ground().label(i), r.ground().label(j)}));
    return pairs;
}

inline BinaryRelation relation_from_json(const GroundPtr& ground, const Json& j) {
    BinaryRelation r(ground);
    for (const auto& pair : j) {
        auto a = ground->find(pair.at(0).get<std::string>());
        auto b = ground->find(pair.at(1).get<std::string>());
        if (!a || !b) throw ParseError("unknown label in JSON relation");
        r.add(*a, *b);
    }
    return r;
}

inline Json properties_to_json(const RelationProperties& p) {
    Json out;
    out["asymmetric"] = p.asymmetric;
    out["transitive"] = p.transitive;
    out["complete"] = p.complete;
    out["irreflexive"] = p.irreflexive;
    out["acyclic_ge3"] = p.acyclic_ge3;
    out["extendable"] = p.extendable;
    return out;
}

inline Json correspondence_to_json(const ChoiceCorrespondence& g) {
    Json out;
    for (ItemSet menu = 1; menu <= g.full(); ++menu)
        out[g.ground().format(menu)] = menu_to_json(g.ground(), g.image(menu));
    return out;
}

inline ChoiceCorrespondence correspondence_from_json(const GroundPtr& ground, const Json& j) {
    std::vector<ItemSet> image(static_cast<std::size_t>(ground->full()) + 1, 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        ItemSet menu = 0;
        std::istringstream keys(it.key());
        std::string token;
        while (keys >> token) {
            auto idx = ground->find(token);
            if (!idx) throw ParseError("unknown label '" + token + "' in JSON filter");
            menu |= item_bit(*idx);
        }
        image[menu] = menu_from_json(*ground, it.value());
    }
    return ChoiceCorrespondence(ground, std::move(image));
}

inline Json explanation_to_json(const Explanation& e) {
    Json out;
    out["model"] = model_name(e.model);
    out["filter"] = correspondence_to_json(e.filter);
    if (const auto* order = std::get_if<LinearOrder>(&e.preference)) {
        Json ranking = Json::array();
        for (int i : order->ranking()) ranking.push_back(order->ground().label(i));
        out["preference"] = ranking;
    } else {
        out["preference_relation"] = relation_to_json(std::get<BinaryRelation>(e.preference));
    }
    if (e.shortlist) out["shortlist_relation"] = relation_to_json(*e.shortlist);
    if (e.model.id == ModelId::CapacitySl) out["capacity"] = e.model.capacity;
    return out;
}

inline Explanation explanation_from_json(const GroundPtr& ground, const Json& j) {
    auto model = parse_model(j.at("model").get<std::string>());
    if (!model) throw ParseError("unknown model name in JSON explanation");
    ChoiceCorrespondence filter = correspondence_from_json(ground, j.at("filter"));
    Preference pref = [&]() -> Preference {
        if (j.contains("preference")) {
            std::vector<int> ranking;
            for (const auto& label : j.at("preference")) {
                auto idx = ground->find(label.get<std::string>());
                if (!idx) throw ParseError("unknown label in JSON preference");
                ranking.push_back(*idx);
            }
            return LinearOrder(ground, std::move(ranking));
        }
        return relation_from_json(ground, j.at("preference_relation"));
    }();
    Explanation e{*model, std::move(filter), std::move(pref), std::nullopt};
    if (j.contains("shortlist_relation"))
        e.shortlist = relation_from_json(ground, j.at("shortlist_relation"));
    return e;
}

inline Json classification_to_json(const ChoiceFunction& c, const ClassificationReport& report) {
    Json models;
    for (const auto& row : report.results) {
        Json entry;
        if (row.note.rfind("skipped:", 0) == 0) {
            entry["skipped"] = row.note.substr(9);
        } else {
            entry["holds"] = row.verdict.holds;
            if (row.verdict.counterexample)
                entry["counterexample"] = witness_to_json(c.ground(), *row.verdict.counterexample);
            if (row.explanation) entry["certificate"] = explanation_to_json(*row.explanation);
            if (!row.note.empty()) entry["note"] = row.note;
        }
        models[model_name(row.spec)] = std::move(entry);
    }
    Json out;
    out["ground"] = menu_to_json(c.ground(), c.full());
    out["models"] = std::move(models);
    Json containments = Json::array();
    for (const auto& check : report.containments) {
        Json entry;
        entry["implication"] = check.name;
        entry["ok"] = check.ok;
        containments.push_back(std::move(entry));
    }
    out["containments"] = std::move(containments);
    return out;
}

inline Json switches_to_json(const ChoiceFunction& c, const SwitchIndex& sw) {
    Json out = Json::array();
    for (const Switch& s : sw.list()) {
        Json entry;
        entry["menu"] = menu_to_json(c.ground(), s.menu);
        entry["removed"] = c.ground().label(s.removed);
        entry["choice"] = c.ground().label(c.chosen(s.menu));
        entry["choice_after"] = c.ground().label(c.chosen(s.menu & ~item_bit(s.removed)));
        out.push_back(std::move(entry));
    }
    return out;
}

inline Json census_to_json(const std::vector<CensusRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json entry;
        entry["model"] = model_name(row.model);
        entry["count"] = row.count;
        entry["examined"] = row.sample_size;
        entry["n"] = row.n;
        entry["up_to_iso"] = row.up_to_iso;
        out.push_back(std::move(entry));
    }
    return out;
}

inline Json suite_to_json(const SuiteResult& r) {
    Json out;
    out["suite"] = r.name;
    out["n"] = r.n;
    out["passed"] = r.passed;
    out["checked"] = r.checked;
    if (!r.detail.empty()) out["detail"] = r.detail;
    if (!r.counterexamples.empty()) out["counterexamples"] = r.counterexamples;
    return out;
}

}  // namespace choicelab
