#pragma once

// Per-model deciders and witness-explanation elicitation for the bounded
// rationality / limited consideration models.  Aliases resolve to a shared
// decision route:
//   CTC = LCC = WEAK_WARP (Weak WARP scan)   BRT = MBR (Rev asymmetry)
//   CER = GTR = CSLA (|= asymmetry)          LR = CCLA (F criterion)
//   SL = RLC (related-to criterion)          ALPHA, WARP, CSSLA (three routes)
//   ORT = MOR (Rev extendability)

#include <functional>
#include <variant>

#include "choicelab/axioms.hpp"
#include "choicelab/consideration.hpp"
#include "choicelab/core.hpp"
#include "choicelab/relations.hpp"
#include "choicelab/revealed.hpp"
#include "choicelab/verdict.hpp"

namespace choicelab {

// ---------------------------------------------------------------------------
// Model identifiers
// ---------------------------------------------------------------------------

enum class ModelId {
    Alpha, Warp, WeakWarp, Ctc, Cla, Brt, Ort, Lr, Sl, Overload, CapacitySl,
    Cer, Gtr, Lcc, Rlc, Csla, Cssla, Ccla, Cmla, Mbr, Mor, Mabr, Maor,
};

struct ModelSpec {
    ModelId id = ModelId::Alpha;
    int capacity = 0;  // CAPACITY_SL only

    bool operator==(const ModelSpec& other) const {
        return id == other.id && capacity == other.capacity;
    }
};

inline std::string model_name(const ModelSpec& m) {
    switch (m.id) {
        case ModelId::Alpha: return "ALPHA";
        case ModelId::Warp: return "WARP";
        case ModelId::WeakWarp: return "WEAK_WARP";
        case ModelId::Ctc: return "CTC";
        case ModelId::Cla: return "CLA";
        case ModelId::Brt: return "BRT";
        case ModelId::Ort: return "ORT";
        case ModelId::Lr: return "LR";
        case ModelId::Sl: return "SL";
        case ModelId::Overload: return "OVERLOAD";
        case ModelId::CapacitySl: return "CAPACITY_SL(" + std::to_string(m.capacity) + ")";
        case ModelId::Cer: return "CER";
        case ModelId::Gtr: return "GTR";
        case ModelId::Lcc: return "LCC";
        case ModelId::Rlc: return "RLC";
        case ModelId::Csla: return "CSLA";
        case ModelId::Cssla: return "CSSLA";
        case ModelId::Ccla: return "CCLA";
        case ModelId::Cmla: return "CMLA";
        case ModelId::Mbr: return "MBR";
        case ModelId::Mor: return "MOR";
        case ModelId::Mabr: return "MABR";
        case ModelId::Maor: return "MAOR";
    }
    return "?";
}

inline std::optional<ModelSpec> parse_model(std::string_view name) {
    static const std::pair<const char*, ModelId> plain[] = {
        {"ALPHA", ModelId::Alpha},   {"WARP", ModelId::Warp}, {"WEAK_WARP", ModelId::WeakWarp},
        {"CTC", ModelId::Ctc},       {"CLA", ModelId::Cla},   {"BRT", ModelId::Brt},
        {"ORT", ModelId::Ort},       {"LR", ModelId::Lr},     {"SL", ModelId::Sl},
        {"OVERLOAD", ModelId::Overload}, {"CER", ModelId::Cer}, {"GTR", ModelId::Gtr},
        {"LCC", ModelId::Lcc},       {"RLC", ModelId::Rlc},   {"CSLA", ModelId::Csla},
        {"CSSLA", ModelId::Cssla},   {"CCLA", ModelId::Ccla}, {"CMLA", ModelId::Cmla},
        {"MBR", ModelId::Mbr},       {"MOR", ModelId::Mor},   {"MABR", ModelId::Mabr},
        {"MAOR", ModelId::Maor},
    };
    for (auto [text, id] : plain)
        if (name == text) return ModelSpec{id, 0};
    if (name.rfind("CAPACITY_SL(", 0) == 0 && name.back() == ')') {
        auto digits = name.substr(12, name.size() - 13);
        if (digits.empty()) return std::nullopt;
        int k = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '9') return std::nullopt;
            k = k * 10 + (ch - '0');
        }
        if (k < 1) return std::nullopt;
        return ModelSpec{ModelId::CapacitySl, k};
    }
    return std::nullopt;
}

// Default classification battery; capacity models included while the
// definitional search is feasible (n <= 4).
inline std::vector<ModelSpec> default_models(int n) {
    std::vector<ModelSpec> out = {
        {ModelId::Alpha, 0},  {ModelId::Warp, 0}, {ModelId::WeakWarp, 0}, {ModelId::Ctc, 0},
        {ModelId::Cla, 0},    {ModelId::Brt, 0},  {ModelId::Ort, 0},      {ModelId::Lr, 0},
        {ModelId::Sl, 0},     {ModelId::Overload, 0},
    };
    if (n <= 4)
        for (int k = 1; k <= n; ++k) out.push_back({ModelId::CapacitySl, k});
    for (ModelId id : {ModelId::Cer, ModelId::Gtr, ModelId::Lcc, ModelId::Rlc, ModelId::Csla,
                       ModelId::Cssla, ModelId::Ccla, ModelId::Cmla, ModelId::Mbr, ModelId::Mor,
                       ModelId::Mabr, ModelId::Maor})
        out.push_back({id, 0});
    return out;
}

// ---------------------------------------------------------------------------
// Explanation
// ---------------------------------------------------------------------------

using Preference = std::variant<LinearOrder, BinaryRelation>;

struct Explanation {
    ModelSpec model;
    ChoiceCorrespondence filter;
    Preference preference;
    std::optional<BinaryRelation> shortlist;  // SL / CAPACITY_SL first stage
};

namespace detail {

inline ItemSet maxima_under(ItemSet menu, const Preference& pref) {
    if (const auto* order = std::get_if<LinearOrder>(&pref)) return item_bit(order->best_of(menu));
    return maximal_elements(menu, std::get<BinaryRelation>(pref));
}

inline AxiomVerdict check_explanation_max(const ChoiceFunction& c, const ChoiceCorrespondence& g,
                                          const Preference& pref) {
    for (ItemSet menu = 1; menu <= c.full(); ++menu)
        if (maxima_under(g.image(menu), pref) != c.chosen_bit(menu))
            return AxiomVerdict::fail(Witness{}.menu("A", menu).with_note(
                "max(filter(A), preference) differs from {c(A)}"));
    return AxiomVerdict::pass();
}

}  // namespace detail

// Re-verifies the explanation: the maximization condition plus the model's
// filter discipline.
inline AxiomVerdict verify_explanation(const ChoiceFunction& c, const Explanation& e) {
    const auto* order = std::get_if<LinearOrder>(&e.preference);
    switch (e.model.id) {
        case ModelId::Cla:
        case ModelId::Cmla:
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("attention models need a linear order"));
            return verify_attention_filter(e.filter, c, *order);
        case ModelId::Ccla:
        case ModelId::Lr:
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("competitive models need a linear order"));
            return verify_competitive_filter(e.filter, c, *order);
        case ModelId::Csla:
        case ModelId::Gtr:
        case ModelId::Cer:
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("salient models need a linear order"));
            return verify_salient_filter(e.filter, c, *order);
        case ModelId::Cssla:
        case ModelId::Alpha:
        case ModelId::Warp:
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("selective models need a linear order"));
            return verify_selective_filter(e.filter, c, *order);
        case ModelId::Sl:
        case ModelId::Rlc: {
            auto sen = check_alpha_gamma_delta(e.filter);
            if (!sen.alpha.holds) return sen.alpha;
            if (!sen.gamma.holds) return sen.gamma;
            if (!sen.delta.holds) return sen.delta;
            return detail::check_explanation_max(c, e.filter, e.preference);
        }
        case ModelId::CapacitySl: {
            if (!e.shortlist) return AxiomVerdict::fail(Witness{}.with_note("capacity model lacks its relation"));
            ChoiceCorrespondence expect = capacity_filter(*e.shortlist, e.model.capacity);
            if (!(expect == e.filter))
                return AxiomVerdict::fail(Witness{}.with_note("filter is not the capacity filter of the relation"));
            return detail::check_explanation_max(c, e.filter, e.preference);
        }
        default: {
            // Psychological-constraint models: the filter must satisfy Axiom alpha.
            auto alpha = check_alpha_cc(e.filter);
            if (!alpha.holds) return alpha;
            return detail::check_explanation_max(c, e.filter, e.preference);
        }
    }
}

// ---------------------------------------------------------------------------
// Relation-based verdicts
// ---------------------------------------------------------------------------

namespace detail {

inline AxiomVerdict asymmetry_verdict(const BinaryRelation& r, const std::string& relation_name) {
    for (int i = 0; i < r.n(); ++i) {
        ItemSet both = r.below_of(i) & r.dominators_of(i);
        if (r.holds(i, i)) both |= item_bit(i);
        if (both != 0) {
            int j = first_item(both);
            return AxiomVerdict::fail(Witness{}.item("x", i).item("y", j).with_note(
                relation_name + " has the symmetric pair (x, y)"));
        }
    }
    return AxiomVerdict::pass();
}

inline AxiomVerdict extendability_verdict(const BinaryRelation& r, const std::string& relation_name) {
    auto res = try_linear_extension(r);
    if (res.order) return AxiomVerdict::pass();
    const auto& f = *res.failure;
    if (f.symmetric_pair)
        return AxiomVerdict::fail(Witness{}
                                      .item("x", f.symmetric_pair->first)
                                      .item("y", f.symmetric_pair->second)
                                      .with_note(relation_name + " has the symmetric pair (x, y)"));
    Witness w;
    std::string cyc;
    for (std::size_t i = 0; i < f.cycle.size(); ++i) {
        w.item("c" + std::to_string(i + 1), f.cycle[i]);
        if (!cyc.empty()) cyc += " > ";
        cyc += r.ground().label(f.cycle[i]);
    }
    w.with_note(relation_name + " has the cycle " + cyc + " > " + r.ground().label(f.cycle.front()));
    return AxiomVerdict::fail(std::move(w));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual deciders
// ---------------------------------------------------------------------------

namespace detail {

// Pairwise tournament: x beats y when c(xy) = x.
inline BinaryRelation pair_tournament(const ChoiceFunction& c) {
    BinaryRelation t(c.ground_ptr());
    for (int x = 0; x < c.n(); ++x)
        for (int y = x + 1; y < c.n(); ++y) {
            if (c.chosen(item_bit(x) | item_bit(y)) == x)
                t.add(x, y);
            else
                t.add(y, x);
        }
    return t;
}

// Selective salient attention filter of the Lemma-7 shape: drop the globally
// worst item from every menu that is not its singleton.
inline ChoiceCorrespondence selective_filter_for(const ChoiceFunction& c, const LinearOrder& order) {
    const int global_worst = order.ranking().back();
    const ItemSet full = c.full();
    std::vector<ItemSet> image(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = 1; menu <= full; ++menu) {
        ItemSet trimmed = menu & ~item_bit(global_worst);
        image[menu] = trimmed == 0 ? menu : trimmed;
    }
    return ChoiceCorrespondence(c.ground_ptr(), std::move(image));
}

// CSSLA decided constructively: the pairwise tournament must be a linear
// order that, with the Lemma-7 filter, reproduces the choice.
inline AxiomVerdict decide_cssla(const ChoiceFunction& c) {
    auto tournament = pair_tournament(c);
    auto ext = try_linear_extension(tournament);
    if (!ext.order) return extendability_verdict(tournament, "the pairwise tournament");
    return verify_selective_filter(selective_filter_for(c, *ext.order), c, *ext.order);
}

// Theorem conditions for minimal limited attention: P extendable plus the
// two switch-propagation conditions.
inline AxiomVerdict decide_cmla(const ChoiceFunction& c, const SwitchIndex& sw) {
    if (auto v = extendability_verdict(relation_P(c), "the revealed preference P"); !v.holds) return v;
    const ItemSet full = c.full();
    for (ItemSet menu = 1; menu <= full; ++menu) {
        if (set_size(menu) < 2) continue;
        const int chosen = c.chosen(menu);
        const ItemSet s_menu = sw.switch_set(menu);
        AxiomVerdict bad = AxiomVerdict::pass();
        for_each_item(menu & ~item_bit(chosen), [&](int x) {
            if (!bad.holds || contains(s_menu, x)) return;  // (A \ x, A) must not be a switch
            const ItemSet s_sub = sw.switch_set(menu & ~item_bit(x));
            for_each_item(menu & ~item_bit(x), [&](int y) {
                if (!bad.holds) return;
                const bool switch_y = contains(s_menu, y);
                const bool switch_xy = contains(s_sub, y);
                if (!switch_xy && switch_y)
                    bad = AxiomVerdict::fail(Witness{}.menu("A", menu).item("x", x).item("y", y).with_note(
                        "condition (ii): (A \\ y, A) switches but neither (A \\ x, A) nor (A \\ xy, A \\ x) does"));
                else if (switch_xy && !switch_y)
                    bad = AxiomVerdict::fail(Witness{}.menu("A", menu).item("x", x).item("y", y).with_note(
                        "condition (iii): (A \\ xy, A \\ x) switches but neither (A \\ x, A) nor (A \\ y, A) does"));
            });
        });
        if (!bad.holds) return bad;
    }
    return AxiomVerdict::pass();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

inline AxiomVerdict decide(const ChoiceFunction& c, const ModelSpec& m);

namespace detail {

inline AxiomVerdict decide_capacity_sl(const ChoiceFunction& c, int k);

}  // namespace detail

inline AxiomVerdict decide(const ChoiceFunction& c, const ModelSpec& m) {
    switch (m.id) {
        case ModelId::Alpha: return check_alpha_cf(c);
        case ModelId::Warp: return check_warp(c);
        case ModelId::Cssla: return detail::decide_cssla(c);
        case ModelId::WeakWarp:
        case ModelId::Ctc:
        case ModelId::Lcc: return check_weak_warp(c);
        case ModelId::Overload: return check_overload_warp(c);
        case ModelId::Brt:
        case ModelId::Mbr:
            return detail::asymmetry_verdict(relation_rev(c, psi_min(c)), "the rationalization relation Rev");
        case ModelId::Cla: return detail::extendability_verdict(relation_P(c), "the revealed preference P");
        case ModelId::Lr:
        case ModelId::Ccla:
            return detail::extendability_verdict(relation_F(c), "the revealed-to-follow relation F");
        case ModelId::Sl:
        case ModelId::Rlc:
            return detail::extendability_verdict(relation_related_to(c), "the related-to relation");
        case ModelId::Cer:
        case ModelId::Gtr:
        case ModelId::Csla:
            return detail::asymmetry_verdict(relation_models(c), "the switch relation |=");
        case ModelId::Cmla: return detail::decide_cmla(c, SwitchIndex(c));
        case ModelId::Ort:
        case ModelId::Mor:
            return detail::extendability_verdict(relation_rev(c, psi_min(c)), "the rationalization relation Rev");
        case ModelId::Mabr: return detail::asymmetry_verdict(relation_R(c), "the relation R");
        case ModelId::Maor: return detail::extendability_verdict(relation_R(c), "the relation R");
        case ModelId::CapacitySl: return detail::decide_capacity_sl(c, m.capacity);
    }
    throw Error("decide: unknown model");
}

// ---------------------------------------------------------------------------
// Enumeration of relations and extensions (bounded searches)
// ---------------------------------------------------------------------------

namespace detail {

// All asymmetric relations over n items, by base-3 odometer over index pairs
// (digit 0: no edge, 1: i > j, 2: j > i), ascending.  fn returns true to stop.
template <typename Fn>
inline bool for_each_asymmetric_relation(const GroundPtr& ground, Fn&& fn) {
    const int n = ground->n();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> digits(pairs.size(), 0);
    while (true) {
        BinaryRelation r(ground);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (digits[p] == 1) r.add(pairs[p].first, pairs[p].second);
            if (digits[p] == 2) r.add(pairs[p].second, pairs[p].first);
        }
        if (fn(r)) return true;
        std::size_t p = 0;
        while (p < digits.size() && digits[p] == 2) digits[p++] = 0;
        if (p == digits.size()) return false;
        ++digits[p];
    }
}

inline bool is_transitive(const BinaryRelation& r) {
    for (int i = 0; i < r.n(); ++i) {
        ItemSet below = r.below_of(i);
        bool ok = true;
        for_each_item(below, [&](int j) {
            if ((r.below_of(j) & ~below) != 0) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// All linear extensions of `base`, lexicographically by ranking; fn returns
// true to stop.  Assumes base is extendable.
template <typename Fn>
inline bool for_each_extension(const BinaryRelation& base, Fn&& fn) {
    const int n = base.n();
    std::vector<int> ranking;
    ranking.reserve(static_cast<std::size_t>(n));
    ItemSet remaining = (ItemSet{1} << n) - 1;

    std::function<bool()> rec = [&]() -> bool {
        if (remaining == 0) return fn(LinearOrder(base.ground_ptr(), ranking));
        bool stop = false;
        for_each_item(remaining, [&](int i) {
            if (stop || (base.dominators_of(i) & remaining) != 0) return;
            ranking.push_back(i);
            remaining &= ~item_bit(i);
            stop = rec();
            remaining |= item_bit(i);
            ranking.pop_back();
        });
        return stop;
    };
    return rec();
}

// Shared second stage: given the per-menu shortlist, the order must rank the
// chosen item above the rest of the shortlist; those constraints alone decide
// whether a suitable order exists.
inline std::optional<LinearOrder> order_for_shortlists(const ChoiceFunction& c,
                                                       const std::vector<ItemSet>& shortlist) {
    BinaryRelation required(c.ground_ptr());
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        const int chosen = c.chosen(menu);
        if (!contains(shortlist[menu], chosen)) return std::nullopt;
        for_each_item(shortlist[menu] & ~item_bit(chosen), [&](int y) {
            if (!required.holds(chosen, y)) required.add(chosen, y);
        });
    }
    auto res = try_linear_extension(required);
    if (!res.order) return std::nullopt;
    return std::move(*res.order);
}

inline AxiomVerdict decide_capacity_sl(const ChoiceFunction& c, int k) {
    if (k < 1) throw Error("CAPACITY_SL: capacity must be at least 1");
    const int n = c.n();
    if (n > 4)
        throw UnsupportedSearchBound("CAPACITY_SL is decided by definitional search, supported for n <= 4");
    const bool transitive_only = (n == 4);
    bool found = false;
    for_each_asymmetric_relation(c.ground_ptr(), [&](const BinaryRelation& p) {
        if (transitive_only && !is_transitive(p)) return false;
        std::vector<ItemSet> shortlist(c.table().size(), 0);
        for (ItemSet menu = 1; menu <= c.full(); ++menu) {
            if (set_size(menu) <= k) {
                shortlist[menu] = menu;
            } else {
                ItemSet maxima = maximal_elements(menu, p);
                if (maxima == 0 || set_size(maxima) > k) return false;
                shortlist[menu] = maxima;
            }
        }
        if (order_for_shortlists(c, shortlist)) found = true;
        return found;
    });
    if (found) return AxiomVerdict::pass();
    return AxiomVerdict::fail(Witness{}.with_note(
        transitive_only ? "no (transitive relation, order) pair with capacity " + std::to_string(k) +
                              " reproduces the choice (search restricted to transitive relations at n = 4)"
                        : "no (asymmetric relation, order) pair with capacity " + std::to_string(k) +
                              " reproduces the choice"));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exhaustive explanation search (shared with the oracle module)
// ---------------------------------------------------------------------------

enum class SearchFamily { Attention, Competitive, Salient, Selective, Psychological };

inline SearchFamily family_of(const ModelSpec& m) {
    switch (m.id) {
        case ModelId::Cla:
        case ModelId::Cmla: return SearchFamily::Attention;
        case ModelId::Ccla:
        case ModelId::Lr: return SearchFamily::Competitive;
        case ModelId::Csla:
        case ModelId::Gtr:
        case ModelId::Cer: return SearchFamily::Salient;
        case ModelId::Cssla:
        case ModelId::Alpha:
        case ModelId::Warp: return SearchFamily::Selective;
        default: return SearchFamily::Psychological;
    }
}

namespace detail {

inline ModelSpec representative_of(SearchFamily family) {
    switch (family) {
        case SearchFamily::Attention: return {ModelId::Cla, 0};
        case SearchFamily::Competitive: return {ModelId::Ccla, 0};
        case SearchFamily::Salient: return {ModelId::Csla, 0};
        case SearchFamily::Selective: return {ModelId::Cssla, 0};
        case SearchFamily::Psychological: return {ModelId::Brt, 0};
    }
    return {ModelId::Cla, 0};
}

// Odometer over all choice correspondences (nonempty images, per menu of
// size >= 2; singletons forced), menus ascending, images ascending.
template <typename Fn>
inline bool for_each_correspondence(const GroundPtr& ground, Fn&& fn) {
    const ItemSet full = ground->full();
    std::vector<ItemSet> menus;
    for (ItemSet menu = 1; menu <= full; ++menu)
        if (set_size(menu) >= 2) menus.push_back(menu);

    std::vector<ItemSet> image(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = 1; menu <= full; ++menu)
        image[menu] = menu & (~menu + 1);  // lowest bit: first nonempty subset

    auto advance_menu = [&](ItemSet menu) -> bool {
        // next nonempty subset of `menu` after image[menu], ascending
        for (ItemSet s = image[menu] + 1; s <= menu; ++s) {
            if ((s & ~menu) == 0 && s != 0) {
                image[menu] = s;
                return true;
            }
        }
        image[menu] = menu & (~menu + 1);
        return false;
    };

    while (true) {
        if (fn(ChoiceCorrespondence(ground, image))) return true;
        std::size_t i = 0;
        while (i < menus.size() && !advance_menu(menus[i])) ++i;
        if (i == menus.size()) return false;
    }
}

template <typename Fn>
inline bool for_each_correspondence(const ChoiceFunction& c, Fn&& fn) {
    return for_each_correspondence(c.ground_ptr(), std::forward<Fn>(fn));
}

// Visits every (filter, preference) pair of the family that explains c.
template <typename Fn>
inline bool for_each_family_explanation(const ChoiceFunction& c, SearchFamily family, Fn&& fn) {
    const int n = c.n();
    if (n > 3) throw BoundExceeded("exhaustive explanation search is limited to n <= 3");

    if (family == SearchFamily::Psychological) {
        return for_each_correspondence(c, [&](const ChoiceCorrespondence& psi) {
            if (!check_alpha_cc(psi).holds) return false;
            bool stop = false;
            for_each_asymmetric_relation(c.ground_ptr(), [&](const BinaryRelation& pref) {
                bool ok = true;
                for (ItemSet menu = 1; menu <= c.full() && ok; ++menu)
                    if (maximal_elements(psi.image(menu), pref) != c.chosen_bit(menu)) ok = false;
                if (!ok) return false;
                stop = fn(Explanation{representative_of(family), psi, pref, std::nullopt});
                return stop;
            });
            return stop;
        });
    }

    auto verifier = [&](const ChoiceCorrespondence& g, const LinearOrder& order) {
        switch (family) {
            case SearchFamily::Attention: return verify_attention_filter(g, c, order).holds;
            case SearchFamily::Competitive: return verify_competitive_filter(g, c, order).holds;
            case SearchFamily::Salient: return verify_salient_filter(g, c, order).holds;
            case SearchFamily::Selective: return verify_selective_filter(g, c, order).holds;
            default: return false;
        }
    };

    return for_each_correspondence(c, [&](const ChoiceCorrespondence& g) {
        bool stop = false;
        detail::for_each_permutation(n, [&](const Permutation& perm) {
            if (stop) return;
            LinearOrder order(c.ground_ptr(), std::vector<int>(perm.begin(), perm.end()));
            if (verifier(g, order)) stop = fn(Explanation{representative_of(family), g, order, std::nullopt});
        });
        return stop;
    });
}

}  // namespace detail

// First explanation in the family's enumeration order, if any.  n <= 3.
inline std::optional<Explanation> exhaustive_explanation_search(const ChoiceFunction& c,
                                                                SearchFamily family) {
    std::optional<Explanation> found;
    detail::for_each_family_explanation(c, family, [&](const Explanation& e) {
        found = e;
        return true;
    });
    return found;
}

// ---------------------------------------------------------------------------
// elicit
// ---------------------------------------------------------------------------

namespace detail {

inline Explanation elicit_or_search(const ChoiceFunction& c, const ModelSpec& m,
                                    std::optional<Explanation> constructed) {
    if (constructed && verify_explanation(c, *constructed).holds) return std::move(*constructed);
    // Construction failed: brute-force fallback, feasible only at n <= 3.
    if (c.n() <= 3) {
        auto found = exhaustive_explanation_search(c, family_of(m));
        if (found) {
            found->model = m;
            return std::move(*found);
        }
        throw NotInModel("no explanation exists for " + model_name(m));
    }
    throw SearchExhausted("construction failed for " + model_name(m) +
                          " and exhaustive search is limited to n <= 3");
}

inline Explanation elicit_sl(const ChoiceFunction& c, const ModelSpec& m) {
    if (c.n() > 4)
        throw SearchExhausted("shortlist elicitation searches partial orders, supported for n <= 4");
    std::optional<Explanation> found;
    for_each_asymmetric_relation(c.ground_ptr(), [&](const BinaryRelation& p) {
        if (!is_transitive(p)) return false;
        std::vector<ItemSet> shortlist(c.table().size(), 0);
        for (ItemSet menu = 1; menu <= c.full(); ++menu) {
            shortlist[menu] = maximal_elements(menu, p);
            if (shortlist[menu] == 0) return false;
        }
        auto order = order_for_shortlists(c, shortlist);
        if (!order) return false;
        found = Explanation{m, ChoiceCorrespondence(c.ground_ptr(), std::move(shortlist)),
                            std::move(*order), p};
        return true;
    });
    if (!found) throw NotInModel("no (partial order, linear order) pair reproduces the choice");
    return std::move(*found);
}

inline Explanation elicit_capacity_sl(const ChoiceFunction& c, const ModelSpec& m) {
    const int n = c.n();
    if (n > 4) throw UnsupportedSearchBound("CAPACITY_SL elicitation is supported for n <= 4");
    const bool transitive_only = (n == 4);
    std::optional<Explanation> found;
    for_each_asymmetric_relation(c.ground_ptr(), [&](const BinaryRelation& p) {
        if (transitive_only && !is_transitive(p)) return false;
        std::vector<ItemSet> shortlist(c.table().size(), 0);
        for (ItemSet menu = 1; menu <= c.full(); ++menu) {
            if (set_size(menu) <= m.capacity) {
                shortlist[menu] = menu;
            } else {
                ItemSet maxima = maximal_elements(menu, p);
                if (maxima == 0 || set_size(maxima) > m.capacity) return false;
                shortlist[menu] = maxima;
            }
        }
        auto order = order_for_shortlists(c, shortlist);
        if (!order) return false;
        found = Explanation{m, ChoiceCorrespondence(c.ground_ptr(), std::move(shortlist)),
                            std::move(*order), p};
        return true;
    });
    if (!found) throw NotInModel("no relation explains the choice with capacity " + std::to_string(m.capacity));
    return std::move(*found);
}

// Preference-top elimination ladder: c(A) = c({c(A \ t), t}) on every menu.
inline bool ladder_holds(const ChoiceFunction& c, const LinearOrder& order) {
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        if (set_size(menu) < 2) continue;
        const int top = order.best_of(menu);
        const ItemSet rest = menu & ~item_bit(top);
        if (c.chosen(menu) != c.chosen(c.chosen_bit(rest) | item_bit(top))) return false;
    }
    return true;
}

// Competitive elicitation: find a linear extension of F whose elimination
// ladder reproduces the choice, then take its maximal filter; which
// extension works depends on the data.  Large ground sets get a bounded
// number of extension probes before the search is declared exhausted.
inline Explanation elicit_ccla(const ChoiceFunction& c, const ModelSpec& m) {
    auto f = relation_F(c);
    std::optional<LinearOrder> list;
    const std::uint64_t probe_cap = c.n() <= 8 ? UINT64_MAX : 20000;
    std::uint64_t probes = 0;
    for_each_extension(f, [&](const LinearOrder& order) {
        if (++probes > probe_cap) return true;
        if (!ladder_holds(c, order)) return false;
        list = order;
        return true;
    });
    if (!list && c.n() <= 8) {
        // No extension of F works; scan the remaining orders.
        for_each_permutation(c.n(), [&](const Permutation& perm) {
            if (list) return;
            LinearOrder order(c.ground_ptr(), std::vector<int>(perm.begin(), perm.end()));
            if (ladder_holds(c, order)) list = order;
        });
    }
    if (list) {
        Explanation e{m, gamma_order(c, *list), *list, std::nullopt};
        if (verify_competitive_filter(e.filter, c, *list).holds) return e;
    }
    if (probes > probe_cap)
        throw SearchExhausted("competitive elicitation probed " + std::to_string(probe_cap) +
                              " extensions of F without finding a list");
    return elicit_or_search(c, m, std::nullopt);
}

}  // namespace detail

inline Explanation elicit(const ChoiceFunction& c, const ModelSpec& m) {
    auto verdict = decide(c, m);
    if (!verdict.holds)
        throw NotInModel("dataset is not in " + model_name(m) +
                         (verdict.counterexample ? " (" + verdict.counterexample->render(c.ground()) + ")" : ""));

    switch (m.id) {
        case ModelId::Alpha:
        case ModelId::Warp: {
            auto order = linear_extension(detail::pair_tournament(c));
            return detail::elicit_or_search(
                c, m, Explanation{m, ChoiceCorrespondence::identity(c.ground_ptr()), order, std::nullopt});
        }
        case ModelId::Cssla: {
            auto order = linear_extension(detail::pair_tournament(c));
            return detail::elicit_or_search(
                c, m, Explanation{m, detail::selective_filter_for(c, order), order, std::nullopt});
        }
        case ModelId::WeakWarp:
        case ModelId::Ctc:
        case ModelId::Lcc:
        case ModelId::Brt:
        case ModelId::Mbr:
        case ModelId::Overload: {
            auto psi = psi_min(c);
            auto rev = relation_rev(c, psi);
            return detail::elicit_or_search(c, m, Explanation{m, std::move(psi), std::move(rev), std::nullopt});
        }
        case ModelId::Ort:
        case ModelId::Mor: {
            auto psi = psi_min(c);
            auto order = linear_extension(relation_rev(c, psi));
            return detail::elicit_or_search(c, m, Explanation{m, std::move(psi), std::move(order), std::nullopt});
        }
        case ModelId::Mabr: {
            SwitchIndex sw(c);
            auto psi = psi_min_star(c, sw);
            auto r = relation_rev(c, psi);
            return detail::elicit_or_search(c, m, Explanation{m, std::move(psi), std::move(r), std::nullopt});
        }
        case ModelId::Maor: {
            SwitchIndex sw(c);
            auto psi = psi_min_star(c, sw);
            auto order = linear_extension(relation_rev(c, psi));
            return detail::elicit_or_search(c, m, Explanation{m, std::move(psi), std::move(order), std::nullopt});
        }
        case ModelId::Cla: {
            auto order = linear_extension(relation_P(c));
            return detail::elicit_or_search(c, m,
                                            Explanation{m, gamma_order(c, order), order, std::nullopt});
        }
        case ModelId::Cmla: {
            SwitchIndex sw(c);
            auto order = linear_extension(relation_P(c));
            return detail::elicit_or_search(c, m, Explanation{m, gamma_min(c, sw), order, std::nullopt});
        }
        case ModelId::Lr:
        case ModelId::Ccla: return detail::elicit_ccla(c, m);
        case ModelId::Csla:
        case ModelId::Gtr:
        case ModelId::Cer: {
            // Preference: any extension of the converse of |= (switch items go
            // to the bottom); filter: the chosen item plus the menu minimum.
            SwitchIndex sw(c);
            BinaryRelation converse(c.ground_ptr());
            for (auto [x, y] : relation_models(c, sw).pairs())
                if (!converse.holds(y, x)) converse.add(y, x);
            auto ext = try_linear_extension(converse);
            if (!ext.order) return detail::elicit_or_search(c, m, std::nullopt);
            const LinearOrder& order = *ext.order;
            std::vector<ItemSet> image(c.table().size(), 0);
            for (ItemSet menu = 1; menu <= c.full(); ++menu)
                image[menu] = c.chosen_bit(menu) | item_bit(order.worst_of(menu));
            return detail::elicit_or_search(
                c, m,
                Explanation{m, ChoiceCorrespondence(c.ground_ptr(), std::move(image)), order, std::nullopt});
        }
        case ModelId::Sl:
        case ModelId::Rlc: return detail::elicit_sl(c, m);
        case ModelId::CapacitySl: return detail::elicit_capacity_sl(c, m);
    }
    throw Error("elicit: unknown model");
}

// ---------------------------------------------------------------------------
// audit_necessary_conditions
// ---------------------------------------------------------------------------

// Checks, switch by switch, the necessary conditions the paper derives for
// the elicited explanation of the model family.
inline AxiomVerdict audit_necessary_conditions(const ChoiceFunction& c, const Explanation& e) {
    SwitchIndex sw(c);
    const auto* order = std::get_if<LinearOrder>(&e.preference);

    auto fail = [&](const Switch& s, const std::string& what) {
        return AxiomVerdict::fail(
            Witness{}.menu("A", s.menu).item("x", s.removed).with_note(what));
    };

    switch (e.model.id) {
        case ModelId::Sl:
        case ModelId::Rlc: {
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("audit needs a linear order"));
            for (const Switch& s : sw.list()) {
                const int after = c.chosen(s.menu & ~item_bit(s.removed));
                const int before = c.chosen(s.menu);
                if (!order->prefers(after, before))
                    return fail(s, "expected c(A \\ x) above c(A) in the preference");
                if (contains(e.filter.image(s.menu), after))
                    return fail(s, "expected c(A \\ x) outside the consideration cost filter at A");
                if (set_size(e.filter.image(s.menu)) < 2)
                    return fail(s, "expected the filter at A to keep more than the chosen item");
            }
            return AxiomVerdict::pass();
        }
        case ModelId::Csla:
        case ModelId::Gtr:
        case ModelId::Cer: {
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("audit needs a linear order"));
            for (const Switch& s : sw.list()) {
                if (order->worst_of(s.menu) != s.removed)
                    return fail(s, "expected every other item of A above the switch item");
                if (!contains(e.filter.image(s.menu), s.removed))
                    return fail(s, "expected the switch item inside the salient filter at A");
                if (order->worst_of(e.filter.image(s.menu)) != s.removed)
                    return fail(s, "expected the switch item to be the worst considered item at A");
            }
            return AxiomVerdict::pass();
        }
        case ModelId::Ccla:
        case ModelId::Lr: {
            // The companion clause "switch item differs from the worst
            // considered item" fails on real 4-item lists, so only the two
            // provable conditions are audited.
            if (!order) return AxiomVerdict::fail(Witness{}.with_note("audit needs a linear order"));
            for (const Switch& s : sw.list()) {
                const int before = c.chosen(s.menu);
                if (!contains(e.filter.image(s.menu), s.removed))
                    return fail(s, "expected the switch item inside the competitive filter at A");
                if (!order->prefers(before, s.removed))
                    return fail(s, "expected c(A) above the switch item in the preference");
            }
            return AxiomVerdict::pass();
        }
        default:
            return AxiomVerdict{true, std::nullopt};
    }
}

// ---------------------------------------------------------------------------
// classify_all
// ---------------------------------------------------------------------------

struct ModelResult {
    ModelSpec spec;
    AxiomVerdict verdict;
    std::optional<Explanation> explanation;
    std::string note;
};

struct ContainmentCheck {
    std::string name;
    bool ok = false;
};

struct ClassificationReport {
    std::vector<ModelResult> results;
    std::vector<ContainmentCheck> containments;

    const ModelResult* find(const ModelSpec& spec) const {
        for (const auto& r : results)
            if (r.spec == spec) return &r;
        return nullptr;
    }
};

inline ClassificationReport classify_all(const ChoiceFunction& c,
                                         const std::vector<ModelSpec>& models) {
    ClassificationReport report;
    for (const ModelSpec& m : models) {
        ModelResult row;
        row.spec = m;
        try {
            row.verdict = decide(c, m);
            if (row.verdict.holds) {
                try {
                    row.explanation = elicit(c, m);
                } catch (const BoundExceeded& ex) {
                    row.note = ex.what();
                }
            }
        } catch (const UnsupportedSearchBound& ex) {
            row.verdict = AxiomVerdict{false, std::nullopt};
            row.note = std::string("skipped: ") + ex.what();
        }
        report.results.push_back(std::move(row));
    }

    auto holds = [&](ModelId id) -> std::optional<bool> {
        for (const auto& r : report.results)
            if (r.spec.id == id && r.note.rfind("skipped:", 0) != 0) return r.verdict.holds;
        return std::nullopt;
    };
    auto add_containment = [&](const std::string& name, std::optional<bool> lhs,
                               std::optional<bool> rhs) {
        if (!lhs || !rhs) return;
        report.containments.push_back({name, !*lhs || *rhs});
    };
    // ALPHA implies every listed model.
    if (auto alpha = holds(ModelId::Alpha); alpha && *alpha) {
        for (const auto& r : report.results) {
            if (r.spec.id == ModelId::Alpha || r.note.rfind("skipped:", 0) == 0) continue;
            report.containments.push_back({"ALPHA => " + model_name(r.spec), r.verdict.holds});
        }
    }
    add_containment("LR => CLA", holds(ModelId::Lr), holds(ModelId::Cla));
    add_containment("CMLA => CLA", holds(ModelId::Cmla), holds(ModelId::Cla));
    add_containment("MAOR => MABR", holds(ModelId::Maor), holds(ModelId::Mabr));
    add_containment("MOR => MBR", holds(ModelId::Mor), holds(ModelId::Mbr));
    return report;
}

inline ClassificationReport classify_all(const ChoiceFunction& c) {
    return classify_all(c, default_models(c.n()));
}

}  // namespace choicelab
