#pragma once

// The six revealed relations driving the model characterizations:
//   P          limited attention           x = c(A) != c(A \ y)
//   F          revealed-to-follow          list rationality, three clauses
//   related-to shortlisting                three clauses
//   |=         salience switches           co-membership with a switch removal
//   Rev        rationalization             c(A) = x and y in psi(A) \ x
//   R          minimally attentive         chosen over a switch-or-chosen item
//
// All constructors are irreflexive by construction.

#include "choicelab/consideration.hpp"
#include "choicelab/core.hpp"
#include "choicelab/relations.hpp"

namespace choicelab {

// x P y  iff  x = c(A) and c(A \ y) != x for some menu A.
inline BinaryRelation relation_P(const ChoiceFunction& c) {
    BinaryRelation r(c.ground_ptr());
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        const int x = c.chosen(menu);
        for_each_item(menu & ~item_bit(x), [&](int y) {
            ItemSet rest = menu & ~item_bit(y);
            if (c.chosen(rest) != x) r.add(x, y);
        });
    }
    return r;
}

// x F y  iff for some menu A one of
//   (i)   x = c(A u y) and y = c(xy)
//   (ii)  x = c(A u y) and x != c(A)
//   (iii) x != c(A u y) and x = c(xy) and x = c(A)
inline BinaryRelation relation_F(const ChoiceFunction& c) {
    BinaryRelation r(c.ground_ptr());
    const ItemSet full = c.full();
    for (int x = 0; x < c.n(); ++x) {
        for (int y = 0; y < c.n(); ++y) {
            if (x == y) continue;
            const int pair_choice = c.chosen(item_bit(x) | item_bit(y));
            bool found = false;
            for (ItemSet a = 1; a <= full && !found; ++a) {
                ItemSet ay = a | item_bit(y);
                if (c.chosen(ay) == x && pair_choice == y) found = true;                       // (i)
                else if (c.chosen(ay) == x && c.chosen(a) != x) found = true;                  // (ii)
                else if (c.chosen(ay) != x && pair_choice == x && c.chosen(a) == x) found = true;  // (iii)
            }
            if (found) r.add(x, y);
        }
    }
    return r;
}

// x related to y  iff for some menu A one of
//   (1) x = c(A u y) and x != c(A)
//   (2) y = c(A u x) and x = c(xy)
//   (3) y != c(A u x) and y = c(A) and y = c(xy)
inline BinaryRelation relation_related_to(const ChoiceFunction& c) {
    BinaryRelation r(c.ground_ptr());
    const ItemSet full = c.full();
    for (int x = 0; x < c.n(); ++x) {
        for (int y = 0; y < c.n(); ++y) {
            if (x == y) continue;
            const int pair_choice = c.chosen(item_bit(x) | item_bit(y));
            bool found = false;
            for (ItemSet a = 1; a <= full && !found; ++a) {
                ItemSet ay = a | item_bit(y);
                ItemSet ax = a | item_bit(x);
                if (c.chosen(ay) == x && c.chosen(a) != x) found = true;                           // (1)
                else if (c.chosen(ax) == y && pair_choice == x) found = true;                      // (2)
                else if (c.chosen(ax) != y && c.chosen(a) == y && pair_choice == y) found = true;  // (3)
            }
            if (found) r.add(x, y);
        }
    }
    return r;
}

// x |= y  iff some menu contains both and removing x from it is a switch.
inline BinaryRelation relation_models(const ChoiceFunction& c, const SwitchIndex& sw) {
    BinaryRelation r(c.ground_ptr());
    for (const Switch& s : sw.list())
        for_each_item(s.menu & ~item_bit(s.removed), [&](int y) { r.add(s.removed, y); });
    return r;
}

inline BinaryRelation relation_models(const ChoiceFunction& c) {
    return relation_models(c, SwitchIndex(c));
}

// x Rev y (written >_{c,psi})  iff  c(A) = x and y in psi(A) \ x for some A.
inline BinaryRelation relation_rev(const ChoiceFunction& c, const ChoiceCorrespondence& psi) {
    BinaryRelation r(c.ground_ptr());
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        const int x = c.chosen(menu);
        for_each_item(psi.image(menu) & ~item_bit(x), [&](int y) { r.add(x, y); });
    }
    return r;
}

// x R y  iff x, y share a menu A with x = c(A) and some superset B of A has
// y = c(B) or y in S_B.  Equivalently Rev taken at psi^min_*.
inline BinaryRelation relation_R(const ChoiceFunction& c, const SwitchIndex& sw) {
    return relation_rev(c, psi_min_star(c, sw));
}

inline BinaryRelation relation_R(const ChoiceFunction& c) { return relation_R(c, SwitchIndex(c)); }

}  // namespace choicelab
