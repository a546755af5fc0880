#pragma once

// Decision procedures for the named choice axioms, for choice functions and
// correspondences.  Checkers return the first counterexample under a fixed
// deterministic scan order (menus by ascending bit pattern, items by index).

#include "choicelab/consideration.hpp"
#include "choicelab/core.hpp"
#include "choicelab/verdict.hpp"

namespace choicelab {

// ---------------------------------------------------------------------------
// Chernoff property (Axiom alpha) and WARP
// ---------------------------------------------------------------------------

// Axiom alpha via minimal pairs: every violation contains a violation with
// |B \ A| = 1, so scanning single removals suffices.
inline AxiomVerdict check_alpha_cf(const ChoiceFunction& c) {
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        if (set_size(menu) < 2) continue;
        const int chosen = c.chosen(menu);
        AxiomVerdict bad = AxiomVerdict::pass();
        for_each_item(menu, [&](int w) {
            if (!bad.holds || w == chosen) return;
            ItemSet sub = menu & ~item_bit(w);
            if (c.chosen(sub) != chosen)
                bad = AxiomVerdict::fail(
                    Witness{}.menu("A", sub).menu("B", menu).item("x", chosen).with_note(
                        "x = c(B) but c(A) = " + c.ground().label(c.chosen(sub))));
        });
        if (!bad.holds) return bad;
    }
    return AxiomVerdict::pass();
}

// WARP fails exactly when the chosen-over relation has a symmetric pair.
inline AxiomVerdict check_warp(const ChoiceFunction& c) {
    const int n = c.n();
    std::vector<ItemSet> chosen_over(static_cast<std::size_t>(n), 0);
    for (ItemSet menu = 1; menu <= c.full(); ++menu)
        chosen_over[static_cast<std::size_t>(c.chosen(menu))] |= menu & ~c.chosen_bit(menu);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (!contains(chosen_over[static_cast<std::size_t>(x)], y) ||
                !contains(chosen_over[static_cast<std::size_t>(y)], x))
                continue;
            auto first_menu = [&](int chosen, int other) {
                for (ItemSet menu = 1; menu <= c.full(); ++menu)
                    if (c.chosen(menu) == chosen && contains(menu, other)) return menu;
                return ItemSet{0};
            };
            return AxiomVerdict::fail(Witness{}
                                          .menu("A", first_menu(x, y))
                                          .menu("B", first_menu(y, x))
                                          .item("x", x)
                                          .item("y", y)
                                          .with_note("c(A) = x and c(B) = y with x, y in both menus"));
        }
    }
    return AxiomVerdict::pass();
}

// ---------------------------------------------------------------------------
// Weak WARP
// ---------------------------------------------------------------------------

inline AxiomVerdict check_weak_warp(const ChoiceFunction& c) {
    const ItemSet full = c.full();
    for (int x = 0; x < c.n(); ++x) {
        for (int y = 0; y < c.n(); ++y) {
            if (x == y) continue;
            ItemSet pair = item_bit(x) | item_bit(y);
            if (c.chosen(pair) != x) continue;
            // need A with {x,y} in A, c(A) = y, and some B above A with c(B) = x
            for (ItemSet menu_a = pair; menu_a <= full; ++menu_a) {
                if ((menu_a & pair) != pair || c.chosen(menu_a) != y) continue;
                for (ItemSet menu_b = menu_a;; menu_b = (menu_b + 1) | menu_a) {
                    if (c.chosen(menu_b) == x)
                        return AxiomVerdict::fail(Witness{}
                                                      .menu("A", menu_a)
                                                      .menu("B", menu_b)
                                                      .item("x", x)
                                                      .item("y", y)
                                                      .with_note("c(B) = c(xy) = x but c(A) = y"));
                    if (menu_b == full) break;
                }
            }
        }
    }
    return AxiomVerdict::pass();
}

// ---------------------------------------------------------------------------
// Axioms alpha, gamma, delta for correspondences
// ---------------------------------------------------------------------------

struct AlphaGammaDelta {
    AxiomVerdict alpha;
    AxiomVerdict gamma;
    AxiomVerdict delta;

    bool all() const { return alpha.holds && gamma.holds && delta.holds; }
};

inline AxiomVerdict check_alpha_cc(const ChoiceCorrespondence& g) {
    for (ItemSet menu = 1; menu <= g.full(); ++menu) {
        if (set_size(menu) < 2) continue;
        AxiomVerdict bad = AxiomVerdict::pass();
        for_each_item(menu, [&](int w) {
            if (!bad.holds) return;
            ItemSet sub = menu & ~item_bit(w);
            ItemSet lost = (g.image(menu) & sub) & ~g.image(sub);
            if (lost != 0)
                bad = AxiomVerdict::fail(
                    Witness{}.menu("A", sub).menu("B", menu).item("x", first_item(lost)).with_note(
                        "x in Gamma(B) and x in A but x not in Gamma(A)"));
        });
        if (!bad.holds) return bad;
    }
    return AxiomVerdict::pass();
}

inline AlphaGammaDelta check_alpha_gamma_delta(const ChoiceCorrespondence& g) {
    AlphaGammaDelta out{AxiomVerdict::pass(), AxiomVerdict::pass(), AxiomVerdict::pass()};
    out.alpha = check_alpha_cc(g);

    const ItemSet full = g.full();
    // gamma: kept in both menus means kept in their union
    for (ItemSet a = 1; a <= full && out.gamma.holds; ++a) {
        for (ItemSet b = a + 1; b <= full; ++b) {
            ItemSet kept = g.image(a) & g.image(b) & ~g.image(a | b);
            if (kept != 0) {
                out.gamma = AxiomVerdict::fail(
                    Witness{}.menu("A", a).menu("B", b).item("x", first_item(kept)).with_note(
                        "x in Gamma(A) and Gamma(B) but not in Gamma(A u B)"));
                break;
            }
        }
    }
    // delta: two items kept together are never collapsed to a singleton above
    for (ItemSet a = 1; a <= full && out.delta.holds; ++a) {
        if (set_size(g.image(a)) < 2) continue;
        for (ItemSet b = a;; b = (b + 1) | a) {
            ItemSet im = g.image(b);
            if (set_size(im) == 1 && (g.image(a) & im) != 0) {
                int x = first_item(im);
                int y = first_item(g.image(a) & ~im);
                out.delta = AxiomVerdict::fail(Witness{}.menu("A", a).menu("B", b).item("x", x).item("y", y).with_note(
                    "x, y in Gamma(A) but Gamma(B) = {x}"));
                break;
            }
            if (b == full) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Axiom of Revealed Temptation
// ---------------------------------------------------------------------------

// ART: every menu has an item that sits inside no switch pair of the menu.
// By the minimal-switch lemma it suffices to consider minimal switches, so
// bad[M] accumulates, over all C within M with a switch removal w, the items
// of C \ w.
inline AxiomVerdict check_art(const ChoiceFunction& c, const SwitchIndex& sw) {
    const ItemSet full = c.full();
    std::vector<ItemSet> bad(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = 1; menu <= full; ++menu) {
        ItemSet acc = 0;
        for_each_item(sw.switch_set(menu), [&](int w) { acc |= menu & ~item_bit(w); });
        for_each_item(menu, [&](int j) { acc |= bad[menu & ~item_bit(j)]; });
        bad[menu] = acc;
        if ((menu & ~acc) == 0)
            return AxiomVerdict::fail(Witness{}.menu("A", menu).with_note(
                "every item of A lies inside some switch pair within A"));
    }
    return AxiomVerdict::pass();
}

inline AxiomVerdict check_art(const ChoiceFunction& c) { return check_art(c, SwitchIndex(c)); }

// ---------------------------------------------------------------------------
// Single Reversal Axiom
// ---------------------------------------------------------------------------

inline AxiomVerdict check_single_reversal(const ChoiceFunction& c, const SwitchIndex& sw) {
    const ItemSet full = c.full();
    for (ItemSet s = 1; s <= full; ++s) {
        ItemSet removals = sw.switch_set(s);
        if (removals == 0) continue;
        AxiomVerdict bad = AxiomVerdict::pass();
        for_each_item(removals, [&](int x) {
            if (!bad.holds) return;
            for (ItemSet t = 1; t <= full && bad.holds; ++t) {
                if (!contains(t, x)) continue;
                for_each_item((s & t) & ~item_bit(x), [&](int y) {
                    if (!bad.holds) return;
                    if (c.chosen(t) == y) return;
                    if (c.chosen(t & ~item_bit(y)) == c.chosen(t)) return;
                    bad = AxiomVerdict::fail(Witness{}
                                                 .menu("S", s)
                                                 .menu("T", t)
                                                 .item("x", x)
                                                 .item("y", y)
                                                 .with_note("switch at (S \\ x, S) but T reverses on y as well"));
                });
            }
        });
        if (!bad.holds) return bad;
    }
    return AxiomVerdict::pass();
}

inline AxiomVerdict check_single_reversal(const ChoiceFunction& c) {
    return check_single_reversal(c, SwitchIndex(c));
}

// ---------------------------------------------------------------------------
// WARP under choice overload
// ---------------------------------------------------------------------------

namespace detail {

// strictly_above[B] = true when some proper superset of B chooses x.
inline std::vector<std::uint8_t> chosen_strictly_above(const ChoiceFunction& c, int x) {
    const ItemSet full = c.full();
    std::vector<std::uint8_t> table(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = full - 1; menu >= 1; --menu) {
        std::uint8_t hit = 0;
        for_each_item(full & ~menu, [&](int j) {
            ItemSet sup = menu | item_bit(j);
            if (c.chosen(sup) == x || table[sup]) hit = 1;
        });
        table[menu] = hit;
    }
    return table;
}

}  // namespace detail

// For every menu A there is x in A such that no expansion B of A has
// c(B) in A, c(B) != x, while some proper superset of B chooses x.  (B
// ranges over the menus containing A; the enumerated equivalence with Weak
// WARP over the full n <= 4 space pins this quantification.)
inline AxiomVerdict check_overload_warp(const ChoiceFunction& c) {
    const ItemSet full = c.full();
    const int n = c.n();
    std::vector<std::vector<std::uint8_t>> csa;
    csa.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) csa.push_back(detail::chosen_strictly_above(c, x));

    for (ItemSet menu_a = 1; menu_a <= full; ++menu_a) {
        bool witnessed = false;
        for_each_item(menu_a, [&](int x) {
            if (witnessed) return;
            bool ok = true;
            for (ItemSet b = menu_a; ok;) {
                if (contains(menu_a, c.chosen(b)) && c.chosen(b) != x && csa[static_cast<std::size_t>(x)][b])
                    ok = false;
                if (b == full) break;
                b = (b + 1) | menu_a;
            }
            if (ok) witnessed = true;
        });
        if (!witnessed)
            return AxiomVerdict::fail(Witness{}.menu("A", menu_a).with_note(
                "no item of A satisfies the overload condition over the expansions of A"));
    }
    return AxiomVerdict::pass();
}

// Literal quadruple-quantifier form of the same scan (the superset witness
// enumerated explicitly); used to guard the table-based version.
inline AxiomVerdict check_overload_warp_literal(const ChoiceFunction& c) {
    const ItemSet full = c.full();
    for (ItemSet menu_a = 1; menu_a <= full; ++menu_a) {
        bool witnessed = false;
        for_each_item(menu_a, [&](int x) {
            if (witnessed) return;
            bool ok = true;
            for (ItemSet b = menu_a; ok;) {
                if (contains(menu_a, c.chosen(b)) && c.chosen(b) != x) {
                    for (ItemSet sup = b;; sup = (sup + 1) | b) {
                        if (sup != b && c.chosen(sup) == x) {
                            ok = false;
                            break;
                        }
                        if (sup == full) break;
                    }
                }
                if (b == full) break;
                b = (b + 1) | menu_a;
            }
            if (ok) witnessed = true;
        });
        if (!witnessed)
            return AxiomVerdict::fail(Witness{}.menu("A", menu_a).with_note(
                "no item of A satisfies the overload condition over the expansions of A"));
    }
    return AxiomVerdict::pass();
}

}  // namespace choicelab
