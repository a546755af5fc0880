#pragma once

// Binary-relation algebra: property predicates, maximal elements, interval
// sets, and deterministic Szpilrajn linear extension.

#include <optional>
#include <utility>
#include <variant>

#include "choicelab/core.hpp"

namespace choicelab {

// ---------------------------------------------------------------------------
// BinaryRelation
// ---------------------------------------------------------------------------

class BinaryRelation {
public:
    explicit BinaryRelation(GroundPtr ground)
        : ground_(std::move(ground)),
          above_(static_cast<std::size_t>(ground_->n()), 0),
          dominators_(static_cast<std::size_t>(ground_->n()), 0) {}

    const GroundSet& ground() const { return *ground_; }
    const GroundPtr& ground_ptr() const { return ground_; }
    int n() const { return ground_->n(); }

    bool holds(int i, int j) const { return contains(above_[static_cast<std::size_t>(i)], j); }
    void add(int i, int j) {
        above_[static_cast<std::size_t>(i)] |= item_bit(j);
        dominators_[static_cast<std::size_t>(j)] |= item_bit(i);
    }

    // {j : i > j}
    ItemSet below_of(int i) const { return above_[static_cast<std::size_t>(i)]; }
    // {i : i > j}
    ItemSet dominators_of(int j) const { return dominators_[static_cast<std::size_t>(j)]; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n(); ++i)
            for_each_item(above_[static_cast<std::size_t>(i)], [&](int j) { out.emplace_back(i, j); });
        return out;
    }

    std::size_t pair_count() const {
        std::size_t total = 0;
        for (ItemSet row : above_) total += static_cast<std::size_t>(set_size(row));
        return total;
    }

    bool operator==(const BinaryRelation& other) const {
        return ground() == other.ground() && above_ == other.above_;
    }

private:
    GroundPtr ground_;
    std::vector<ItemSet> above_;       // above_[i] = {j : i > j}
    std::vector<ItemSet> dominators_;  // dominators_[j] = {i : i > j}
};

// max(A, r) = { a in A : no b in A with b > a }; may be empty when r cycles
// inside A.
inline ItemSet maximal_elements(ItemSet menu, const BinaryRelation& r) {
    ItemSet out = 0;
    for_each_item(menu, [&](int a) {
        if ((r.dominators_of(a) & menu) == 0) out |= item_bit(a);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Property record
// ---------------------------------------------------------------------------

struct RelationProperties {
    bool asymmetric = false;
    bool transitive = false;
    bool complete = false;
    bool irreflexive = false;
    bool acyclic_ge3 = false;  // no directed cycle over >= 3 distinct items
    bool extendable = false;   // asymmetric and no directed cycle at all
};

namespace detail {

// True when the digraph has a directed cycle visiting >= 3 distinct vertices.
// 2-cycles do not count.  Subset DP per smallest cycle vertex: dp[mask] holds
// the endpoints of simple paths that start at s and then visit exactly the
// vertices in `mask` (a subset of {s+1, ..., n-1}, stored shifted by s+1).
inline bool has_cycle_ge3(const BinaryRelation& r) {
    const int n = r.n();
    for (int s = 0; s < n; ++s) {
        const int m = n - s - 1;
        std::vector<ItemSet> dp(std::size_t{1} << m, 0);
        dp[0] = item_bit(s);
        for (ItemSet mask = 0; mask < (ItemSet{1} << m); ++mask) {
            ItemSet ends = dp[mask];
            if (ends == 0) continue;
            if (set_size(mask) >= 2) {
                bool closes = false;
                for_each_item(ends, [&](int v) {
                    if (v != s && r.holds(v, s)) closes = true;
                });
                if (closes) return true;  // cycle s -> ... -> v -> s, >= 3 vertices
            }
            for_each_item(ends, [&](int v) {
                ItemSet fresh = r.below_of(v) >> (s + 1) & ~mask;  // unvisited successors > s
                for_each_item(fresh, [&](int w_local) {
                    dp[mask | item_bit(w_local)] |= item_bit(w_local + s + 1);
                });
            });
        }
    }
    return false;
}

// True when the digraph has any directed cycle (length >= 1 loops included).
inline bool has_any_cycle(const BinaryRelation& r) {
    const int n = r.n();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for_each_item(r.below_of(i), [&](int j) { ++indeg[static_cast<std::size_t>(j)]; });
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) stack.push_back(i);
    int removed = 0;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        ++removed;
        for_each_item(r.below_of(i), [&](int j) {
            if (--indeg[static_cast<std::size_t>(j)] == 0) stack.push_back(j);
        });
    }
    return removed != n;
}

}  // namespace detail

inline RelationProperties properties(const BinaryRelation& r) {
    const int n = r.n();
    RelationProperties p;
    p.irreflexive = true;
    p.asymmetric = true;
    p.transitive = true;
    p.complete = true;
    for (int i = 0; i < n; ++i) {
        if (r.holds(i, i)) p.irreflexive = false;
        for (int j = 0; j < n; ++j) {
            if (i != j && r.holds(i, j) && r.holds(j, i)) p.asymmetric = false;
            if (i != j && !r.holds(i, j) && !r.holds(j, i)) p.complete = false;
            if (r.holds(i, j)) {
                // i > j > k must imply i > k (k = i included: a 2-cycle
                // would need the loop i > i)
                if ((r.below_of(j) & ~r.below_of(i)) != 0) p.transitive = false;
            }
        }
        if (r.holds(i, i)) p.asymmetric = false;
    }
    p.acyclic_ge3 = !detail::has_cycle_ge3(r);
    p.extendable = p.asymmetric && !detail::has_any_cycle(r);
    return p;
}

// ---------------------------------------------------------------------------
// LinearOrder
// ---------------------------------------------------------------------------

// Strict total order given as a ranking, best element first.
class LinearOrder {
public:
    LinearOrder(GroundPtr ground, std::vector<int> ranking)
        : ground_(std::move(ground)), ranking_(std::move(ranking)), rank_(ranking_.size(), 0) {
        Permutation as_perm(ranking_.begin(), ranking_.end());
        if (!is_permutation(as_perm, ground_->n())) throw Error("LinearOrder: ranking is not a permutation");
        for (int pos = 0; pos < ground_->n(); ++pos)
            rank_[static_cast<std::size_t>(ranking_[static_cast<std::size_t>(pos)])] = pos;
    }

    static LinearOrder by_index(GroundPtr ground) {
        std::vector<int> ranking(static_cast<std::size_t>(ground->n()));
        std::iota(ranking.begin(), ranking.end(), 0);
        return LinearOrder(std::move(ground), std::move(ranking));
    }

    const GroundSet& ground() const { return *ground_; }
    const GroundPtr& ground_ptr() const { return ground_; }
    int n() const { return ground_->n(); }

    const std::vector<int>& ranking() const { return ranking_; }
    int rank(int item) const { return rank_[static_cast<std::size_t>(item)]; }
    bool prefers(int a, int b) const { return rank(a) < rank(b); }

    int best_of(ItemSet menu) const {
        int best = -1;
        for_each_item(menu, [&](int i) {
            if (best == -1 || rank(i) < rank(best)) best = i;
        });
        return best;
    }
    int worst_of(ItemSet menu) const {
        int worst = -1;
        for_each_item(menu, [&](int i) {
            if (worst == -1 || rank(i) > rank(worst)) worst = i;
        });
        return worst;
    }

    BinaryRelation relation() const {
        BinaryRelation r(ground_);
        for (int a = 0; a < n(); ++a)
            for (int b = 0; b < n(); ++b)
                if (prefers(a, b)) r.add(a, b);
        return r;
    }

    bool contains(const BinaryRelation& r) const {
        for (auto [i, j] : r.pairs())
            if (!prefers(i, j)) return false;
        return true;
    }

    bool operator==(const LinearOrder& other) const {
        return ground() == other.ground() && ranking_ == other.ranking_;
    }

private:
    GroundPtr ground_;
    std::vector<int> ranking_;  // best first
    std::vector<int> rank_;     // rank_[item] = position in ranking_
};

// {x} together with everything the order ranks below x.
inline ItemSet lower_contour(int x, const LinearOrder& order) {
    ItemSet out = item_bit(x);
    for (int i = 0; i < order.n(); ++i)
        if (order.prefers(x, i)) out |= item_bit(i);
    return out;
}

// { z : z > x and y > z }; empty unless y > x.  The unordered interval
// (xy)° is obtained by calling this with the two orderings of the pair.
inline ItemSet open_interval(int x, int y, const LinearOrder& order) {
    if (x == y) throw Error("open_interval: items must be distinct");
    ItemSet out = 0;
    for (int z = 0; z < order.n(); ++z)
        if (order.prefers(z, x) && order.prefers(y, z)) out |= item_bit(z);
    return out;
}

inline ItemSet unordered_interval(int x, int y, const LinearOrder& order) {
    return order.prefers(y, x) ? open_interval(x, y, order) : open_interval(y, x, order);
}

// ---------------------------------------------------------------------------
// Linear extension (Szpilrajn)
// ---------------------------------------------------------------------------

// Witness for a failed extension: a symmetric pair or a directed cycle.
struct ExtensionFailure {
    std::optional<std::pair<int, int>> symmetric_pair;
    std::vector<int> cycle;  // items of a directed cycle, in order
};

struct ExtensionResult {
    std::optional<LinearOrder> order;
    std::optional<ExtensionFailure> failure;
};

// Deterministic topological extension: at each step the lowest-index item
// not dominated by any remaining item is placed next.
inline ExtensionResult try_linear_extension(const BinaryRelation& r) {
    const int n = r.n();
    for (int i = 0; i < n; ++i) {
        ItemSet both = r.below_of(i) & r.dominators_of(i);
        if (r.holds(i, i)) both |= item_bit(i);
        if (both != 0) {
            ExtensionFailure f;
            f.symmetric_pair = std::make_pair(i, first_item(both));
            return {std::nullopt, f};
        }
    }

    std::vector<int> ranking;
    ranking.reserve(static_cast<std::size_t>(n));
    ItemSet remaining = (ItemSet{1} << n) - 1;
    while (remaining != 0) {
        int pick = -1;
        for_each_item(remaining, [&](int i) {
            if (pick == -1 && (r.dominators_of(i) & remaining) == 0) pick = i;
        });
        if (pick == -1) {
            // Cycle among the remaining items: walk lowest-index dominators.
            ExtensionFailure f;
            std::vector<int> path;
            ItemSet seen = 0;
            int v = first_item(remaining);
            while (!contains(seen, v)) {
                path.push_back(v);
                seen |= item_bit(v);
                v = first_item(r.dominators_of(v) & remaining);
            }
            auto start = std::find(path.begin(), path.end(), v);
            f.cycle.assign(start, path.end());
            std::reverse(f.cycle.begin(), f.cycle.end());  // report in > order
            return {std::nullopt, f};
        }
        ranking.push_back(pick);
        remaining &= ~item_bit(pick);
    }
    return {LinearOrder(r.ground_ptr(), std::move(ranking)), std::nullopt};
}

inline LinearOrder linear_extension(const BinaryRelation& r) {
    auto res = try_linear_extension(r);
    if (res.order) return std::move(*res.order);
    const auto& f = *res.failure;
    if (f.symmetric_pair)
        throw NotExtendable("relation has symmetric pair (" + r.ground().label(f.symmetric_pair->first) +
                            ", " + r.ground().label(f.symmetric_pair->second) + ")");
    std::string cyc;
    for (int v : f.cycle) {
        if (!cyc.empty()) cyc += " > ";
        cyc += r.ground().label(v);
    }
    throw NotExtendable("relation has cycle " + cyc + " > " + r.ground().label(f.cycle.front()));
}

// ---------------------------------------------------------------------------
// Maximization correspondence
// ---------------------------------------------------------------------------

// Gamma(A) = max(A, p) for every menu; the quasi-transitive rationalization
// of the correspondence when p is a strict partial order.
inline ChoiceCorrespondence max_correspondence(const BinaryRelation& p) {
    const ItemSet full = p.ground().full();
    std::vector<ItemSet> image(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = 1; menu <= full; ++menu) {
        image[menu] = maximal_elements(menu, p);
        if (image[menu] == 0)
            throw EmptyMaxima("menu {" + p.ground().format(menu) + "} has no maximal element");
    }
    return ChoiceCorrespondence(p.ground_ptr(), std::move(image));
}

}  // namespace choicelab
