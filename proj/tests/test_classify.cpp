#include <catch2/catch_amalgamated.hpp>

#include "choicelab/classify.hpp"
#include "choicelab/oracle.hpp"
#include "test_util.hpp"

using namespace choicelab;
using namespace testutil;

TEST_CASE("model names parse and print") {
    CHECK(model_name({ModelId::Cmla, 0}) == "CMLA");
    CHECK(model_name({ModelId::CapacitySl, 2}) == "CAPACITY_SL(2)");
    CHECK(parse_model("CAPACITY_SL(2)") == ModelSpec{ModelId::CapacitySl, 2});
    CHECK(parse_model("MAOR") == ModelSpec{ModelId::Maor, 0});
    CHECK_FALSE(parse_model("CAPACITY_SL(0)").has_value());
    CHECK_FALSE(parse_model("NOPE").has_value());
}

TEST_CASE("decide: paper examples") {
    CHECK(decide(e1(), {ModelId::Cmla, 0}).holds);
    CHECK(decide(e1(), {ModelId::Cla, 0}).holds);
    CHECK(decide(e1(), {ModelId::WeakWarp, 0}).holds);
    CHECK_FALSE(decide(e1(), {ModelId::Csla, 0}).holds);
    CHECK_FALSE(decide(e1(), {ModelId::Alpha, 0}).holds);
    CHECK_FALSE(decide(e1(), {ModelId::Lr, 0}).holds);

    auto v = decide(e2(), {ModelId::Cmla, 0});
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    // Theorem condition (ii) triple: A = xyz, x = y, y = z
    CHECK(v.counterexample->menus.at(0).second == m(0, 1, 2));
    CHECK(v.counterexample->items.at(0).second == 1);
    CHECK(v.counterexample->items.at(1).second == 2);

    CHECK(decide(e2(), {ModelId::Csla, 0}).holds);
    CHECK(decide(e2(), {ModelId::Cla, 0}).holds);
    CHECK_FALSE(decide(e2(), {ModelId::Lr, 0}).holds);
    CHECK(decide(e3(), {ModelId::Lr, 0}).holds);
    CHECK(decide(e4(), {ModelId::Sl, 0}).holds);

    for (const auto& spec : default_models(3)) CHECK(decide(rational3(), spec).holds);
}

TEST_CASE("elicit: minimal limited attention on E1") {
    Explanation e = elicit(e1(), {ModelId::Cmla, 0});
    CHECK(e.filter.image(m(0, 1, 2)) == m(0, 1, 2));
    CHECK(e.filter.image(m(0, 1)) == m(1));
    CHECK(e.filter.image(m(0, 2)) == m(2));
    CHECK(e.filter.image(m(1, 2)) == m(1));
    const auto& order = std::get<LinearOrder>(e.preference);
    CHECK(order.ranking() == std::vector<int>{0, 1, 2});
    CHECK(verify_explanation(e1(), e).holds);
}

TEST_CASE("elicit: shortlist on E4") {
    Explanation e = elicit(e4(), {ModelId::Sl, 0});
    REQUIRE(e.shortlist.has_value());
    CHECK(sorted_pairs(*e.shortlist) == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(std::get<LinearOrder>(e.preference).ranking() == std::vector<int>{2, 1, 0});
    CHECK(check_alpha_gamma_delta(e.filter).all());
    CHECK(verify_explanation(e4(), e).holds);
}

TEST_CASE("elicit: weak-warp family explanations re-verify") {
    for (const ChoiceFunction& c : {e1(), e2(), e3(), e4(), rational3()}) {
        for (ModelId id : {ModelId::Mbr, ModelId::Mor, ModelId::WeakWarp}) {
            Explanation e = elicit(c, {id, 0});
            CHECK(verify_explanation(c, e).holds);
            CHECK(check_alpha_cc(e.filter).holds);
        }
    }
}

TEST_CASE("elicit: salient attention on E2 passes its audit") {
    Explanation e = elicit(e2(), {ModelId::Csla, 0});
    CHECK(verify_explanation(e2(), e).holds);
    CHECK(audit_necessary_conditions(e2(), e).holds);
    // switch item z is the least considered item of xyz
    const auto& order = std::get<LinearOrder>(e.preference);
    CHECK(order.worst_of(e.filter.image(m(0, 1, 2))) == 2);
}

TEST_CASE("elicit refuses functions outside the model") {
    CHECK_THROWS_AS(elicit(e1(), {ModelId::Csla, 0}), NotInModel);
    CHECK_THROWS_AS(elicit(e2(), {ModelId::Cmla, 0}), NotInModel);
    CHECK_THROWS_AS(elicit(e1(), {ModelId::Alpha, 0}), NotInModel);
}

TEST_CASE("audits on the running examples") {
    Explanation rlc = elicit(e4(), {ModelId::Rlc, 0});
    CHECK(audit_necessary_conditions(e4(), rlc).holds);
    // the single switch (yz, xyz): c(A\x) = z lands above c(A) = y and
    // outside the filter, which keeps more than the chosen item
    const auto& order = std::get<LinearOrder>(rlc.preference);
    CHECK(order.prefers(2, 1));
    CHECK_FALSE(contains(rlc.filter.image(m(0, 1, 2)), 2));
    CHECK(set_size(rlc.filter.image(m(0, 1, 2))) > 1);

    Explanation ccla = elicit(e3(), {ModelId::Ccla, 0});
    CHECK(audit_necessary_conditions(e3(), ccla).holds);

    Explanation any = elicit(rational3(), {ModelId::Cla, 0});
    CHECK(audit_necessary_conditions(rational3(), any).holds);  // vacuous: no switches
}

TEST_CASE("classify_all attaches verified certificates and containments") {
    ClassificationReport report = classify_all(e1());
    const ModelResult* cmla = report.find({ModelId::Cmla, 0});
    REQUIRE(cmla != nullptr);
    CHECK(cmla->verdict.holds);
    REQUIRE(cmla->explanation.has_value());
    CHECK(verify_explanation(e1(), *cmla->explanation).holds);

    const ModelResult* csla = report.find({ModelId::Csla, 0});
    REQUIRE(csla != nullptr);
    CHECK_FALSE(csla->verdict.holds);
    CHECK(csla->verdict.counterexample.has_value());

    for (const auto& check : report.containments) CHECK(check.ok);

    ClassificationReport rat = classify_all(rational3());
    for (const auto& row : rat.results) {
        CHECK(row.verdict.holds);
        REQUIRE(row.explanation.has_value());
        CHECK(verify_explanation(rational3(), *row.explanation).holds);
    }
}

TEST_CASE("capacity shortlisting on the examples") {
    CHECK(decide(e1(), {ModelId::CapacitySl, 2}).holds);
    CHECK_FALSE(decide(e1(), {ModelId::CapacitySl, 1}).holds);
    CHECK_FALSE(decide(e1(), {ModelId::CapacitySl, 3}).holds);  // identity filter forces alpha

    Explanation e = elicit(e1(), {ModelId::CapacitySl, 2});
    CHECK(verify_explanation(e1(), e).holds);
    REQUIRE(e.shortlist.has_value());
    ChoiceCorrespondence expected = capacity_filter(*e.shortlist, 2);
    CHECK(expected == e.filter);
}

TEST_CASE("alias groups decide identically at n=3") {
    for_each_choice_function(3, [](const ChoiceFunction& c) {
        const bool ww = decide(c, {ModelId::WeakWarp, 0}).holds;
        for (ModelId id : {ModelId::Ctc, ModelId::Lcc}) CHECK(decide(c, {id, 0}).holds == ww);
        CHECK(decide(c, {ModelId::Brt, 0}).holds == decide(c, {ModelId::Mbr, 0}).holds);
        const bool csla = decide(c, {ModelId::Csla, 0}).holds;
        for (ModelId id : {ModelId::Cer, ModelId::Gtr}) CHECK(decide(c, {id, 0}).holds == csla);
        CHECK(decide(c, {ModelId::Lr, 0}).holds == decide(c, {ModelId::Ccla, 0}).holds);
        CHECK(decide(c, {ModelId::Sl, 0}).holds == decide(c, {ModelId::Rlc, 0}).holds);
        CHECK(decide(c, {ModelId::Ort, 0}).holds == decide(c, {ModelId::Mor, 0}).holds);
    });
}

TEST_CASE("capacity search bound is reported honestly") {
    auto ground5 = GroundSet::with_default_labels(5);
    ChoiceFunctionSpace space(5);
    ChoiceFunction c = space.at(0);
    CHECK_THROWS_AS(decide(c, {ModelId::CapacitySl, 2}), UnsupportedSearchBound);
}

TEST_CASE("exhaustive explanation search") {
    CHECK_FALSE(exhaustive_explanation_search(e2(), SearchFamily::Competitive).has_value());
    CHECK(exhaustive_explanation_search(e3(), SearchFamily::Competitive).has_value());
    for (SearchFamily family : {SearchFamily::Attention, SearchFamily::Competitive,
                                SearchFamily::Salient, SearchFamily::Selective,
                                SearchFamily::Psychological})
        CHECK(exhaustive_explanation_search(rational3(), family).has_value());

    ChoiceFunctionSpace space(4);
    CHECK_THROWS_AS(exhaustive_explanation_search(space.at(0), SearchFamily::Attention),
                    BoundExceeded);
}
