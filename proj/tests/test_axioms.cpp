#include <catch2/catch_amalgamated.hpp>

#include "choicelab/axioms.hpp"
#include "choicelab/oracle.hpp"
#include "test_util.hpp"

using namespace choicelab;
using namespace testutil;

namespace {

// The first Weak-WARP violator in enumeration order at n = 4, frozen from
// the oracle (index 8 of the n=4 space).
ChoiceFunction first_ww_violator() {
    return parse(
        "ground: x y z w\n"
        "x y -> x\nx z -> x\ny z -> y\nx y z -> y\n"
        "x w -> x\ny w -> y\nx y w -> x\n"
        "z w -> z\nx z w -> x\ny z w -> y\n"
        "x y z w -> x\n");
}

}  // namespace

TEST_CASE("contraction consistency (alpha)") {
    CHECK(check_alpha_cf(rational3()).holds);

    auto v = check_alpha_cf(e1());
    REQUIRE_FALSE(v.holds);
    // counterexample re-checks: x = c(B), x in A subset of B, c(A) != x
    REQUIRE(v.counterexample.has_value());
    ChoiceFunction c = e1();
    ItemSet a = v.counterexample->menus.at(0).second;
    ItemSet b = v.counterexample->menus.at(1).second;
    int x = v.counterexample->items.at(0).second;
    CHECK((a & ~b) == 0);
    CHECK(c.chosen(b) == x);
    CHECK(contains(a, x));
    CHECK(c.chosen(a) != x);

    CHECK_FALSE(check_alpha_cf(e2()).holds);
    // E2's only violation is the pair (xy, xyz)
    auto w = *check_alpha_cf(e2()).counterexample;
    CHECK(w.menus.at(0).second == m(0, 1));
    CHECK(w.menus.at(1).second == m(0, 1, 2));
}

TEST_CASE("WARP agrees with alpha and re-checks") {
    CHECK(check_warp(rational3()).holds);
    auto v = check_warp(e1());
    REQUIRE_FALSE(v.holds);
    ChoiceFunction c = e1();
    ItemSet a = v.counterexample->menus.at(0).second;
    ItemSet b = v.counterexample->menus.at(1).second;
    int x = v.counterexample->items.at(0).second;
    int y = v.counterexample->items.at(1).second;
    CHECK(contains(a & b, x));
    CHECK(contains(a & b, y));
    CHECK(c.chosen(a) == x);
    CHECK(c.chosen(b) == y);
    CHECK(a == m(0, 1, 2));
    CHECK(b == m(0, 1));

    for_each_choice_function(3, [](const ChoiceFunction& f) {
        CHECK(check_warp(f).holds == check_alpha_cf(f).holds);
    });
}

TEST_CASE("Weak WARP is vacuous at n=3 and bites at n=4") {
    for_each_choice_function(3,
                             [](const ChoiceFunction& f) { CHECK(check_weak_warp(f).holds); });
    CHECK(check_weak_warp(e4()).holds);

    auto violator = first_ww_violator();
    auto v = check_weak_warp(violator);
    REQUIRE_FALSE(v.holds);
    // counterexample re-checks: c(B) = c(xy) = x, c(A) = y, x,y in A subset of B
    ItemSet a = v.counterexample->menus.at(0).second;
    ItemSet b = v.counterexample->menus.at(1).second;
    int x = v.counterexample->items.at(0).second;
    int y = v.counterexample->items.at(1).second;
    CHECK((a & ~b) == 0);
    CHECK(contains(a, x));
    CHECK(contains(a, y));
    CHECK(violator.chosen(b) == x);
    CHECK(violator.chosen(item_bit(x) | item_bit(y)) == x);
    CHECK(violator.chosen(a) == y);
}

TEST_CASE("axioms alpha, gamma, delta for correspondences") {
    auto ground = std::make_shared<GroundSet>(GroundSet::with_default_labels(3));
    CHECK(check_alpha_gamma_delta(ChoiceCorrespondence::identity(ground)).all());
    CHECK(check_alpha_gamma_delta(max_correspondence(rel(ground, {{0, 2}}))).all());

    // Gamma(xyz) = {x}, Gamma(xy) = {x,y}, otherwise identity: delta fails
    std::vector<ItemSet> image(8, 0);
    for (ItemSet menu = 1; menu <= 7; ++menu) image[menu] = menu;
    image[m(0, 1, 2)] = m(0);
    ChoiceCorrespondence g(ground, image);
    auto agd = check_alpha_gamma_delta(g);
    CHECK_FALSE(agd.delta.holds);
    REQUIRE(agd.delta.counterexample.has_value());
    CHECK(agd.delta.counterexample->menus.at(0).second == m(0, 1));
    CHECK(agd.delta.counterexample->menus.at(1).second == m(0, 1, 2));
}

TEST_CASE("axiom of revealed temptation") {
    CHECK(check_art(rational3()).holds);
    CHECK_FALSE(check_art(e1()).holds);
    CHECK(check_art(e2()).holds);
}

TEST_CASE("single reversal axiom") {
    CHECK(check_single_reversal(rational3()).holds);
    CHECK_FALSE(check_single_reversal(e1()).holds);
    CHECK(check_single_reversal(e2()).holds);

    auto v = check_single_reversal(e1());
    REQUIRE(v.counterexample.has_value());
    // re-check: x switches in S, y reverses in T
    ChoiceFunction c = e1();
    ItemSet s = v.counterexample->menus.at(0).second;
    ItemSet t = v.counterexample->menus.at(1).second;
    int x = v.counterexample->items.at(0).second;
    int y = v.counterexample->items.at(1).second;
    CHECK(x != c.chosen(s));
    CHECK(c.chosen(s & ~item_bit(x)) != c.chosen(s));
    CHECK(contains(s & t, x));
    CHECK(contains(s & t, y));
    CHECK(c.chosen(t) != y);
    CHECK(c.chosen(t & ~item_bit(y)) != c.chosen(t));
}

TEST_CASE("WARP under choice overload equals Weak WARP at small n") {
    CHECK(check_overload_warp(rational3()).holds);
    for_each_choice_function(3, [](const ChoiceFunction& f) {
        CHECK(check_overload_warp(f).holds == check_weak_warp(f).holds);
        CHECK(check_overload_warp_literal(f).holds == check_overload_warp(f).holds);
    });
    CHECK_FALSE(check_overload_warp(first_ww_violator()).holds);
}
