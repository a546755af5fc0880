#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "choicelab/relations.hpp"
#include "test_util.hpp"

using namespace choicelab;
using namespace testutil;

namespace {
GroundPtr g3() { return std::make_shared<GroundSet>(GroundSet::with_default_labels(3)); }
}  // namespace

TEST_CASE("property predicates on the three canonical relations") {
    auto ground = g3();

    BinaryRelation empty(ground);
    auto p = properties(empty);
    CHECK(p.asymmetric);
    CHECK(p.transitive);
    CHECK(p.irreflexive);
    CHECK(p.acyclic_ge3);
    CHECK(p.extendable);
    CHECK_FALSE(p.complete);

    auto two_cycle = rel(ground, {{0, 1}, {1, 0}});
    p = properties(two_cycle);
    CHECK_FALSE(p.asymmetric);
    CHECK(p.acyclic_ge3);  // a 2-cycle is not a cycle of length >= 3
    CHECK_FALSE(p.extendable);
    CHECK_FALSE(p.transitive);

    auto three_cycle = rel(ground, {{0, 1}, {1, 2}, {2, 0}});
    p = properties(three_cycle);
    CHECK(p.asymmetric);
    CHECK_FALSE(p.acyclic_ge3);
    CHECK_FALSE(p.extendable);
}

TEST_CASE("cycles of length >= 3 are detected through 2-cycle clutter") {
    // two overlapping 2-cycles but no longer simple cycle
    auto ground = g3();
    auto r = rel(ground, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(properties(r).acyclic_ge3);

    auto with_long = rel(ground, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    CHECK_FALSE(properties(with_long).acyclic_ge3);
}

namespace {

// Oracle: enumerate every arrangement of every subset of size >= 3 and look
// for a directed cycle along it.
bool has_cycle_ge3_naive(const BinaryRelation& r) {
    const int n = r.n();
    for (ItemSet subset = 1; subset < (ItemSet{1} << n); ++subset) {
        if (set_size(subset) < 3) continue;
        auto items = items_of(subset);
        std::sort(items.begin(), items.end());
        do {
            bool cycle = true;
            for (std::size_t i = 0; i < items.size() && cycle; ++i)
                if (!r.holds(items[i], items[(i + 1) % items.size()])) cycle = false;
            if (cycle) return true;
        } while (std::next_permutation(items.begin(), items.end()));
    }
    return false;
}

}  // namespace

TEST_CASE("cycle detection agrees with the arrangement oracle on random relations") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(gen() % 3);
        auto ground = std::make_shared<GroundSet>(GroundSet::with_default_labels(n));
        BinaryRelation r(ground);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && gen() % 3 == 0) r.add(i, j);
        CHECK(properties(r).acyclic_ge3 == !has_cycle_ge3_naive(r));
    }
}

TEST_CASE("maximal elements") {
    auto ground = g3();
    auto p = rel(ground, {{0, 1}, {0, 2}});  // x above y and z
    CHECK(maximal_elements(m(0, 1, 2), p) == m(0));
    CHECK(maximal_elements(m(1, 2), p) == m(1, 2));

    BinaryRelation empty(ground);
    CHECK(maximal_elements(m(0, 1, 2), empty) == m(0, 1, 2));

    auto cyc = rel(ground, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(maximal_elements(m(0, 1, 2), cyc) == 0);
}

TEST_CASE("maximal element of a linear order is its best element") {
    auto ground = g3();
    LinearOrder order(ground, {2, 0, 1});
    auto r = order.relation();
    for (ItemSet menu = 1; menu <= ground->full(); ++menu)
        CHECK(maximal_elements(menu, r) == item_bit(order.best_of(menu)));
}

TEST_CASE("linear extension is deterministic and contains its input") {
    auto ground = g3();
    CHECK(linear_extension(rel(ground, {{0, 1}, {0, 2}})).ranking() == std::vector<int>{0, 1, 2});
    CHECK(linear_extension(BinaryRelation(ground)).ranking() == std::vector<int>{0, 1, 2});

    try {
        linear_extension(rel(ground, {{0, 1}, {1, 0}}));
        FAIL("expected NotExtendable");
    } catch (const NotExtendable& ex) {
        CHECK(std::string(ex.what()).find("symmetric pair") != std::string::npos);
    }
    auto failure = try_linear_extension(rel(ground, {{0, 1}, {1, 2}, {2, 0}}));
    REQUIRE(failure.failure.has_value());
    CHECK(failure.failure->cycle.size() == 3);
}

TEST_CASE("random extendable relations are contained in their extension") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(gen() % 5);
        auto ground = std::make_shared<GroundSet>(GroundSet::with_default_labels(n));
        // random strict order restricted to a random subset of pairs: always extendable
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[gen() % (i + 1)]);
        BinaryRelation r(ground);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (gen() % 2) r.add(perm[a], perm[b]);
        LinearOrder ext = linear_extension(r);
        CHECK(ext.contains(r));
        Permutation as_perm(ext.ranking().begin(), ext.ranking().end());
        CHECK(is_permutation(as_perm, n));
    }
}

TEST_CASE("lower contours and open intervals") {
    auto ground = g3();
    LinearOrder order(ground, {0, 1, 2});  // x > y > z
    CHECK(lower_contour(0, order) == m(0, 1, 2));
    CHECK(lower_contour(2, order) == m(2));
    CHECK(lower_contour(1, order) == m(1, 2));

    CHECK(open_interval(2, 0, order) == m(1));  // strictly between z and x
    CHECK(open_interval(1, 0, order) == 0);     // adjacent
    CHECK(open_interval(0, 2, order) == 0);     // wrong orientation
    CHECK(unordered_interval(0, 2, order) == m(1));
    CHECK(unordered_interval(2, 0, order) == m(1));
}

TEST_CASE("max correspondence") {
    auto ground = g3();
    auto p = rel(ground, {{0, 2}});  // x above z
    ChoiceCorrespondence gamma = max_correspondence(p);
    CHECK(gamma.image(m(0, 1, 2)) == m(0, 1));
    CHECK(gamma.image(m(0, 2)) == m(0));
    CHECK(gamma.image(m(1, 2)) == m(1, 2));
    CHECK(gamma.image(m(0, 1)) == m(0, 1));

    CHECK(max_correspondence(BinaryRelation(ground)) == ChoiceCorrespondence::identity(ground));
    CHECK_THROWS_AS(max_correspondence(rel(ground, {{0, 1}, {1, 2}, {2, 0}})), EmptyMaxima);
}
