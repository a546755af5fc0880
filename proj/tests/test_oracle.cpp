#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "choicelab/oracle.hpp"
#include "test_util.hpp"

using namespace choicelab;
using namespace testutil;

TEST_CASE("enumeration counts match the closed form") {
    CHECK(ChoiceFunctionSpace(2).count() == 2);
    CHECK(ChoiceFunctionSpace(3).count() == 24);
    CHECK(ChoiceFunctionSpace(4).count() == 20736);

    std::uint64_t seen = 0;
    std::vector<std::vector<std::uint8_t>> tables;
    for_each_choice_function(3, [&](const ChoiceFunction& c) {
        ++seen;
        tables.push_back(c.table());
    });
    CHECK(seen == 24);
    std::sort(tables.begin(), tables.end());
    CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());  // exactly once

    CHECK_THROWS_AS(for_each_choice_function(5, [](const ChoiceFunction&) {}), BoundExceeded);
}

TEST_CASE("sampling is reproducible and uniform enough") {
    std::vector<std::string> run1, run2;
    sample_choice_functions(5, 1000, 42, [&](const ChoiceFunction& c) { run1.push_back(serialize_dataset(c)); });
    sample_choice_functions(5, 1000, 42, [&](const ChoiceFunction& c) { run2.push_back(serialize_dataset(c)); });
    CHECK(run1 == run2);

    std::uint64_t alpha = 0, total = 0;
    sample_choice_functions(3, 10000, 7, [&](const ChoiceFunction& c) {
        ++total;
        if (check_alpha_cf(c).holds) ++alpha;
    });
    REQUIRE(total == 10000);
    const double p = 6.0 / 24.0;
    const double sigma = std::sqrt(p * (1 - p) / 10000.0);
    CHECK(std::abs(static_cast<double>(alpha) / 10000.0 - p) <= 3 * sigma);

    std::uint64_t none = 0;
    sample_choice_functions(4, 0, 99, [&](const ChoiceFunction&) { ++none; });
    CHECK(none == 0);
}

TEST_CASE("census counts") {
    CensusOptions opt;
    opt.n = 3;
    opt.models = {{ModelId::Alpha, 0}, {ModelId::WeakWarp, 0}};
    auto rows = census(opt);
    CHECK(rows[0].count == 6);
    CHECK(rows[0].sample_size == 24);
    CHECK(rows[1].count == 24);

    opt.n = 4;
    opt.models = {{ModelId::Alpha, 0}};
    rows = census(opt);
    CHECK(rows[0].count == 24);
    CHECK(rows[0].sample_size == 20736);
}

TEST_CASE("census up to isomorphism") {
    CensusOptions opt;
    opt.n = 3;
    opt.up_to_iso = true;
    opt.models = {{ModelId::Alpha, 0}};
    auto rows = census(opt);
    CHECK(rows[0].sample_size == 4);  // 4 isomorphism classes at n=3
    CHECK(rows[0].count == 1);        // one rational class

    opt.sample_count = 10;
    CHECK_THROWS_AS(census(opt), Error);
}

TEST_CASE("parallel census equals serial census") {
    CensusOptions serial;
    serial.n = 4;
    serial.threads = 1;
    CensusOptions parallel = serial;
    parallel.threads = 4;
    auto a = census(serial);
    auto b = census(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].count == b[i].count);
        CHECK(a[i].sample_size == b[i].sample_size);
    }
}

TEST_CASE("census bounds") {
    CensusOptions opt;
    opt.n = 5;
    CHECK_THROWS_AS(census(opt), BoundExceeded);
    opt.sample_count = 50;  // sampling lifts the bound
    auto rows = census(opt);
    CHECK(rows[0].sample_size == 50);
}

TEST_CASE("suites pass at n=3 and reject unsupported sizes") {
    for (const auto& info : suite_registry()) {
        if (std::find(info.supported_n.begin(), info.supported_n.end(), 3) == info.supported_n.end())
            continue;
        SuiteResult r = run_suite(info.name, 3);
        INFO(info.name);
        CHECK(r.passed);
    }
    CHECK_THROWS_AS(run_suite("shortlist", 4), BoundExceeded);
    CHECK_THROWS_AS(run_suite("no-such-suite", 3), Error);
}

TEST_CASE("suites run identically with worker threads") {
    SuiteOptions serial;
    SuiteOptions pooled;
    pooled.threads = 4;
    for (const char* name : {"alpha-triple", "salience-triple", "lemma-1"}) {
        SuiteResult a = run_suite(name, 4, serial);
        SuiteResult b = run_suite(name, 4, pooled);
        CHECK(a.passed == b.passed);
        CHECK(a.checked == b.checked);
    }
}

TEST_CASE("a failing suite ships a reproducible counterexample") {
    // Wire a deliberately broken comparison through the suite plumbing by
    // re-running the weak-warp suite against a doctored function set is not
    // possible from outside; instead check the counterexample invariant on
    // the collector itself.
    detail::SuiteCollector collector("demo", 3);
    ChoiceFunction c = e1();
    collector.fail(c, "demo failure");
    SuiteResult r = collector.finish(1);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.counterexamples.size() == 1);
    const std::string& blob = r.counterexamples[0];
    auto newline = blob.find('\n');
    ChoiceFunction reparsed = parse_dataset(blob.substr(newline + 1));
    CHECK(reparsed == c);
}
