#pragma once

// Ground sets, menus, choice functions and correspondences.
//
// A menu is a bit-set over ground-set indices; the index of a menu in any
// full-domain table is its bit pattern.  Ground sets are capped at 16
// elements so that a complete choice function fits in one flat array.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace choicelab {

using ItemSet = std::uint32_t;  // bit i set  <=>  item with index i present

inline constexpr int kMaxGroundSize = 16;

inline int set_size(ItemSet s) { return std::popcount(s); }
inline int first_item(ItemSet s) { return std::countr_zero(s); }
inline bool contains(ItemSet s, int item) { return (s >> item) & 1u; }
inline ItemSet item_bit(int item) { return ItemSet{1} << item; }

// Visits the items of `s` in ascending index order.
template <typename Fn>
inline void for_each_item(ItemSet s, Fn&& fn) {
    while (s != 0) {
        int i = std::countr_zero(s);
        fn(i);
        s &= s - 1;
    }
}

inline std::vector<int> items_of(ItemSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_item(s, [&](int i) { out.push_back(i); });
    return out;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or ill-formed dataset (CLI exit code 3).
struct DatasetError : Error {
    using Error::Error;
};

struct ParseError : DatasetError {
    using DatasetError::DatasetError;
};
struct DuplicateMenu : DatasetError {
    using DatasetError::DatasetError;
};
struct MissingMenu : DatasetError {
    using DatasetError::DatasetError;
};
struct ChoiceOutsideMenu : DatasetError {
    using DatasetError::DatasetError;
};
struct GroundTooLarge : DatasetError {
    using DatasetError::DatasetError;
};

// Requested computation exceeds an enumeration bound (CLI exit code 4).
struct BoundExceeded : Error {
    using Error::Error;
};
struct UnsupportedSearchBound : BoundExceeded {
    using BoundExceeded::BoundExceeded;
};
struct SearchExhausted : BoundExceeded {
    using BoundExceeded::BoundExceeded;
};

// Infeasibility signals raised by individual operations.
struct NotExtendable : Error {
    using Error::Error;
};
struct EmptyMaxima : Error {
    using Error::Error;
};
struct CapacityViolated : Error {
    using Error::Error;
};
struct NotASwitch : Error {
    using Error::Error;
};
struct NotInModel : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// GroundSet
// ---------------------------------------------------------------------------

class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw ParseError("ground set must not be empty");
        if (static_cast<int>(labels_.size()) > kMaxGroundSize)
            throw GroundTooLarge("ground set has " + std::to_string(labels_.size()) +
                                 " elements; at most " + std::to_string(kMaxGroundSize) +
                                 " are supported");
        for (int i = 0; i < n(); ++i) {
            if (labels_[static_cast<std::size_t>(i)].empty())
                throw ParseError("empty label in ground set");
            auto [it, fresh] = index_.emplace(labels_[static_cast<std::size_t>(i)], i);
            if (!fresh) throw ParseError("duplicate label '" + labels_[static_cast<std::size_t>(i)] + "' in ground set");
        }
    }

    // Labels x, y, z, w, ... used for enumerated ground sets.
    static GroundSet with_default_labels(int n) {
        static const char* const names[kMaxGroundSize] = {"x", "y", "z", "w", "v", "u", "t", "s",
                                                          "p", "q", "r", "m", "k", "j", "h", "g"};
        if (n < 1 || n > kMaxGroundSize) throw GroundTooLarge("unsupported ground size " + std::to_string(n));
        std::vector<std::string> labels(names, names + n);
        return GroundSet(std::move(labels));
    }

    int n() const { return static_cast<int>(labels_.size()); }
    ItemSet full() const { return (ItemSet{1} << n()) - 1; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // Menu rendered as labels in index order, e.g. "x y z".
    std::string format(ItemSet menu) const {
        std::string out;
        for_each_item(menu, [&](int i) {
            if (!out.empty()) out += ' ';
            out += label(i);
        });
        return out;
    }

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

// ---------------------------------------------------------------------------
// ChoiceFunction
// ---------------------------------------------------------------------------

// Total choice function: one chosen element per nonempty menu.
class ChoiceFunction {
public:
    ChoiceFunction(GroundPtr ground, std::vector<std::uint8_t> table)
        : ground_(std::move(ground)), table_(std::move(table)) {
        const ItemSet full = ground_->full();
        if (table_.size() != static_cast<std::size_t>(full) + 1)
            throw DatasetError("choice table has wrong size");
        for (ItemSet menu = 1; menu <= full; ++menu) {
            int chosen = table_[menu];
            if (!contains(menu, chosen))
                throw ChoiceOutsideMenu("chosen item '" + ground_->label(chosen) +
                                        "' is not a member of menu {" + ground_->format(menu) + "}");
        }
    }

    const GroundSet& ground() const { return *ground_; }
    const GroundPtr& ground_ptr() const { return ground_; }
    int n() const { return ground_->n(); }
    ItemSet full() const { return ground_->full(); }

    int chosen(ItemSet menu) const { return table_[menu]; }
    ItemSet chosen_bit(ItemSet menu) const { return item_bit(table_[menu]); }
    const std::vector<std::uint8_t>& table() const { return table_; }

    bool operator==(const ChoiceFunction& other) const {
        return ground() == other.ground() && table_ == other.table_;
    }

private:
    GroundPtr ground_;
    std::vector<std::uint8_t> table_;  // indexed by menu bit pattern
};

// ---------------------------------------------------------------------------
// ChoiceCorrespondence
// ---------------------------------------------------------------------------

// Nonempty-valued correspondence: image(A) is a nonempty subset of A.
class ChoiceCorrespondence {
public:
    ChoiceCorrespondence(GroundPtr ground, std::vector<ItemSet> image)
        : ground_(std::move(ground)), image_(std::move(image)) {
        const ItemSet full = ground_->full();
        if (image_.size() != static_cast<std::size_t>(full) + 1)
            throw DatasetError("correspondence table has wrong size");
        for (ItemSet menu = 1; menu <= full; ++menu) {
            if (image_[menu] == 0)
                throw DatasetError("correspondence image of {" + ground_->format(menu) + "} is empty");
            if ((image_[menu] & ~menu) != 0)
                throw DatasetError("correspondence image of {" + ground_->format(menu) +
                                   "} is not a subset of the menu");
        }
    }

    static ChoiceCorrespondence identity(GroundPtr ground) {
        const ItemSet full = ground->full();
        std::vector<ItemSet> image(static_cast<std::size_t>(full) + 1, 0);
        for (ItemSet menu = 1; menu <= full; ++menu) image[menu] = menu;
        return ChoiceCorrespondence(std::move(ground), std::move(image));
    }

    const GroundSet& ground() const { return *ground_; }
    const GroundPtr& ground_ptr() const { return ground_; }
    int n() const { return ground_->n(); }
    ItemSet full() const { return ground_->full(); }

    ItemSet image(ItemSet menu) const { return image_[menu]; }
    const std::vector<ItemSet>& table() const { return image_; }

    bool operator==(const ChoiceCorrespondence& other) const {
        return ground() == other.ground() && image_ == other.image_;
    }

private:
    GroundPtr ground_;
    std::vector<ItemSet> image_;
};

// ---------------------------------------------------------------------------
// Switch
// ---------------------------------------------------------------------------

// The pair (menu \ removed, menu): removing `removed` changes the choice.
struct Switch {
    ItemSet menu = 0;
    int removed = -1;

    bool operator==(const Switch& other) const {
        return menu == other.menu && removed == other.removed;
    }
};

// ---------------------------------------------------------------------------
// Dataset parsing and serialization
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.emplace_back(line.substr(start, i - start));
    }
    return out;
}

inline std::string_view strip_comment(std::string_view line) {
    auto pos = line.find('#');
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

}  // namespace detail

// Parses the .cf dataset format:
//   ground: <label> <label> ...
//   <label> ... <label> -> <label>     (one line per menu of size >= 2)
// '#' starts a comment, blank lines are ignored, singletons are implied.
inline ChoiceFunction parse_dataset(std::string_view text) {
    std::optional<GroundSet> ground;
    std::vector<std::optional<int>> chosen_for;
    int lineno = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;

        std::string_view line = detail::strip_comment(raw);
        auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;

        if (!ground) {
            if (tokens[0] != "ground:")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'ground:' line first");
            ground.emplace(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
            chosen_for.assign(static_cast<std::size_t>(ground->full()) + 1, std::nullopt);
            continue;
        }

        // Menu line: everything before the last "->" token is the menu.
        auto arrow = std::find(tokens.rbegin(), tokens.rend(), "->");
        if (arrow == tokens.rend())
            throw ParseError("line " + std::to_string(lineno) + ": expected '<menu> -> <choice>'");
        auto arrow_fwd = arrow.base() - 1;  // iterator to the "->" token
        if (arrow_fwd == tokens.begin())
            throw ParseError("line " + std::to_string(lineno) + ": menu is empty");
        if (arrow_fwd + 2 != tokens.end())
            throw ParseError("line " + std::to_string(lineno) + ": expected exactly one chosen label");

        ItemSet menu = 0;
        for (auto it = tokens.begin(); it != arrow_fwd; ++it) {
            auto idx = ground->find(*it);
            if (!idx) throw ParseError("line " + std::to_string(lineno) + ": unknown label '" + *it + "'");
            if (contains(menu, *idx))
                throw ParseError("line " + std::to_string(lineno) + ": label '" + *it + "' repeated in menu");
            menu |= item_bit(*idx);
        }
        if (set_size(menu) < 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": menus of size 1 are implied and must not be listed");

        auto cidx = ground->find(tokens.back());
        if (!cidx) throw ParseError("line " + std::to_string(lineno) + ": unknown label '" + tokens.back() + "'");
        if (!contains(menu, *cidx))
            throw ChoiceOutsideMenu("line " + std::to_string(lineno) + ": chosen item '" + tokens.back() +
                                    "' is not in menu {" + ground->format(menu) + "}");
        if (chosen_for[menu])
            throw DuplicateMenu("line " + std::to_string(lineno) + ": menu {" + ground->format(menu) +
                                "} listed twice");
        chosen_for[menu] = *cidx;
    }

    if (!ground) throw ParseError("dataset has no 'ground:' line");

    const ItemSet full = ground->full();
    std::vector<std::uint8_t> table(static_cast<std::size_t>(full) + 1, 0);
    for (ItemSet menu = 1; menu <= full; ++menu) {
        if (set_size(menu) == 1) {
            table[menu] = static_cast<std::uint8_t>(first_item(menu));
        } else {
            if (!chosen_for[menu])
                throw MissingMenu("no line for menu {" + ground->format(menu) + "}");
            table[menu] = static_cast<std::uint8_t>(*chosen_for[menu]);
        }
    }
    return ChoiceFunction(std::make_shared<GroundSet>(std::move(*ground)), std::move(table));
}

// Inverse of parse_dataset; menus in ascending bit-pattern order.
inline std::string serialize_dataset(const ChoiceFunction& c) {
    std::ostringstream out;
    out << "ground:";
    for (const auto& label : c.ground().labels()) out << ' ' << label;
    out << '\n';
    for (ItemSet menu = 1; menu <= c.full(); ++menu) {
        if (set_size(menu) < 2) continue;
        out << c.ground().format(menu) << " -> " << c.ground().label(c.chosen(menu)) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Isomorphism and canonical form
// ---------------------------------------------------------------------------

using Permutation = std::vector<int>;  // sigma[i] = image of index i

inline ItemSet apply_permutation(ItemSet menu, const Permutation& sigma) {
    ItemSet out = 0;
    for_each_item(menu, [&](int i) { out |= item_bit(sigma[static_cast<std::size_t>(i)]); });
    return out;
}

inline bool is_permutation(const Permutation& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) return false;
    ItemSet seen = 0;
    for (int v : sigma) {
        if (v < 0 || v >= n || contains(seen, v)) return false;
        seen |= item_bit(v);
    }
    return true;
}

// Relabels the function: result c' satisfies c'(sigma(A)) = sigma(c(A)).
inline ChoiceFunction apply_isomorphism(const ChoiceFunction& c, const Permutation& sigma) {
    if (!is_permutation(sigma, c.n())) throw Error("apply_isomorphism: not a permutation");
    std::vector<std::uint8_t> table(c.table().size(), 0);
    for (ItemSet menu = 1; menu <= c.full(); ++menu)
        table[apply_permutation(menu, sigma)] =
            static_cast<std::uint8_t>(sigma[static_cast<std::size_t>(c.chosen(menu))]);
    return ChoiceFunction(c.ground_ptr(), std::move(table));
}

namespace detail {

template <typename Fn>
inline void for_each_permutation(int n, Fn&& fn) {
    Permutation sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        fn(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace detail

// Representative of the isomorphism class: the relabeling whose choice table
// (menus in ascending bit-pattern order) is lexicographically smallest.
inline ChoiceFunction canonical_form(const ChoiceFunction& c) {
    std::optional<std::vector<std::uint8_t>> best;
    detail::for_each_permutation(c.n(), [&](const Permutation& sigma) {
        std::vector<std::uint8_t> table(c.table().size(), 0);
        for (ItemSet menu = 1; menu <= c.full(); ++menu)
            table[apply_permutation(menu, sigma)] =
                static_cast<std::uint8_t>(sigma[static_cast<std::size_t>(c.chosen(menu))]);
        if (!best || table < *best) best = std::move(table);
    });
    return ChoiceFunction(c.ground_ptr(), std::move(*best));
}

}  // namespace choicelab
