#pragma once

// Shared fixtures for the unit tests: the four running example datasets and
// small mask helpers.

#include <string>

#include "choicelab/classify.hpp"

namespace testutil {

using namespace choicelab;

inline ChoiceFunction parse(const std::string& text) { return parse_dataset(text); }

// c(xyz)=x but both pairs through x reverse; minimal limited attention.
inline ChoiceFunction e1() {
    return parse("ground: x y z\nx y z -> x\nx y -> y\nx z -> z\ny z -> y\n");
}

// unique switch (xy, xyz); salient but not minimal limited attention.
inline ChoiceFunction e2() {
    return parse("ground: x y z\nx y z -> x\nx y -> y\nx z -> x\ny z -> y\n");
}

// list rational along x, y, z.
inline ChoiceFunction e3() {
    return parse("ground: x y z\nx y z -> z\nx y -> y\nx z -> x\ny z -> z\n");
}

// shortlisting with P = {(x,z)} and ranking z, y, x.
inline ChoiceFunction e4() {
    return parse("ground: x y z\nx y z -> y\nx y -> y\nx z -> x\ny z -> z\n");
}

// rationalizable by the ranking x, y, z.
inline ChoiceFunction rational3() {
    return parse("ground: x y z\nx y z -> x\nx y -> x\nx z -> x\ny z -> y\n");
}

// Menu mask from item indices.
template <typename... Ints>
inline ItemSet m(Ints... items) {
    ItemSet out = 0;
    ((out |= item_bit(items)), ...);
    return out;
}

inline BinaryRelation rel(const GroundPtr& ground, std::initializer_list<std::pair<int, int>> pairs) {
    BinaryRelation r(ground);
    for (auto [i, j] : pairs) r.add(i, j);
    return r;
}

inline std::vector<std::pair<int, int>> sorted_pairs(const BinaryRelation& r) {
    auto out = r.pairs();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testutil
