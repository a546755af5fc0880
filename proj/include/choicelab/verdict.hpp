#pragma once

// Pass/fail outcome of an axiom or model check, with a re-checkable
// counterexample on failure.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choicelab/core.hpp"

namespace choicelab {

// Named menus and items violating a check, e.g. {"A", mask}, {"x", index}.
struct Witness {
    std::vector<std::pair<std::string, ItemSet>> menus;
    std::vector<std::pair<std::string, int>> items;
    std::string note;

    Witness& menu(std::string name, ItemSet m) {
        menus.emplace_back(std::move(name), m);
        return *this;
    }
    Witness& item(std::string name, int i) {
        items.emplace_back(std::move(name), i);
        return *this;
    }
    Witness& with_note(std::string text) {
        note = std::move(text);
        return *this;
    }

    std::string render(const GroundSet& ground) const {
        std::string out;
        for (const auto& [name, m] : menus) {
            if (!out.empty()) out += ", ";
            out += name + "={" + ground.format(m) + "}";
        }
        for (const auto& [name, i] : items) {
            if (!out.empty()) out += ", ";
            out += name + "=" + ground.label(i);
        }
        if (!note.empty()) {
            if (!out.empty()) out += "; ";
            out += note;
        }
        return out;
    }
};

struct AxiomVerdict {
    bool holds = false;
    std::optional<Witness> counterexample;

    static AxiomVerdict pass() { return {true, std::nullopt}; }
    static AxiomVerdict fail(Witness w) { return {false, std::move(w)}; }

    explicit operator bool() const { return holds; }
};

}  // namespace choicelab
